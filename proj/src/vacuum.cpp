#include "sinhg/vacuum.hpp"

#include <cmath>

namespace sinhg {

Cplx zeta(Cplx lambda, SqrtBranch br) {
    if (lambda == Cplx(0.0)) throw std::domain_error("zeta: lambda = 0");
    Cplx s = sqrt_branch(lambda, br);
    return 0.25 * (s + 1.0 / s);
}

Cplx zeta_sq(Cplx lambda) {
    if (lambda == Cplx(0.0)) throw std::domain_error("zeta_sq: lambda = 0");
    Cplx p = lambda + 1.0;
    return p * p / (16.0 * lambda);
}

double weight_w(Cplx lambda) {
    Cplx z = zeta(lambda);
    return std::abs(std::cos(z)) + std::abs(std::sin(z));
}

double vacuum_lattice(int k) {
    if (k == 0) return -1.0;
    // For k < 0 use the exact reciprocal of the k > 0 value; the closed form
    // would cancel catastrophically there.
    int m = std::abs(k);
    double km = PI * m;
    double val = 8.0 * km * km + 4.0 * km * std::sqrt(4.0 * km * km - 1.0) - 1.0;
    return k > 0 ? val : 1.0 / val;
}

Mat2 vacuum_monodromy(Cplx lambda, SqrtBranch br) {
    return vacuum_frame(1.0, lambda, br);
}

Mat2 vacuum_frame(double x, Cplx lambda, SqrtBranch br) {
    if (lambda == Cplx(0.0)) throw std::domain_error("vacuum_frame: lambda = 0");
    Cplx s = sqrt_branch(lambda, br);
    Cplx z = 0.25 * (s + 1.0 / s);
    Cplx cz = std::cos(x * z), sz = std::sin(x * z);
    return {cz, -sz / s, s * sz, cz};
}

Cplx vacuum_c0(Cplx lambda) {
    Cplx s = std::sqrt(lambda);
    return s * std::sin(0.25 * (s + 1.0 / s));
}

Cplx vacuum_c0_prime(Cplx lambda) {
    // c0 = u sin(zeta), u = sqrt(lambda), zeta' = (u^2-1)/(8u^3)
    Cplx u = std::sqrt(lambda);
    Cplx z = 0.25 * (u + 1.0 / u);
    return std::sin(z) / (2.0 * u) + (u * u - 1.0) * std::cos(z) / (8.0 * u * u);
}

Cplx vacuum_c0_second(Cplx lambda) {
    Cplx u = std::sqrt(lambda);
    Cplx z = 0.25 * (u + 1.0 / u);
    Cplx cz = std::cos(z), sz = std::sin(z);
    Cplx u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u5 = u4 * u;
    Cplx g = u2 - 1.0;
    return g * cz / (16.0 * u4) - sz / (4.0 * u3) + cz / (8.0 * u2) -
           g * g * sz / (64.0 * u5) - g * cz / (8.0 * u4);
}

Cplx c0_div_lin(Cplx lambda, int k) {
    double lk = vacuum_lattice(k);
    Cplx h = lambda - lk;
    double scale = std::max(std::abs(lk), 1.0);
    if (std::abs(h) < 1e-7 * scale) {
        return vacuum_c0_prime(Cplx(lk)) + 0.5 * h * vacuum_c0_second(Cplx(lk));
    }
    return vacuum_c0(lambda) / h;
}

Cplx vacuum_trace(Cplx lambda) { return 2.0 * std::cos(zeta(lambda)); }

double lambda_scale(Cplx lambda) {
    double a = std::abs(lambda);
    double d = std::abs(lambda - 1.0);
    if (d < 0.1) d = 0.1;
    return std::min(a + 1.0, 8.0 * a * std::sqrt(a) / d);
}

Cplx zeta_canonical(Cplx lambda) {
    Cplx z = zeta(lambda);
    return z.real() >= 0 ? z : -z;
}

bool in_excluded_domain(Cplx lambda, int k, double delta) {
    Cplx z = zeta_canonical(lambda);
    if (k == 0) return std::abs(z) < delta;
    if (std::abs(z - PI * std::abs(k)) >= delta) return false;
    return k > 0 ? std::abs(lambda) > 1.0 : std::abs(lambda) < 1.0;
}

bool in_annulus(Cplx lambda, int k) {
    double az = std::abs(zeta(lambda));
    if (k == 0) return az <= 0.5 * PI;
    int m = std::abs(k);
    if (az < (m - 0.5) * PI || az > (m + 0.5) * PI) return false;
    return k > 0 ? std::abs(lambda) > 1.0 : std::abs(lambda) < 1.0;
}

Cplx lambda_from_zeta(Cplx z, int sheet) {
    // roots of s^2 - 4 z s + 1 = 0; they are reciprocal, |s+| >= 1 >= |s-|
    Cplx r = std::sqrt(4.0 * z * z - 1.0);
    Cplx s1 = 2.0 * z + r, s2 = 2.0 * z - r;
    Cplx s = (std::abs(s1) >= std::abs(s2)) ? s1 : s2;
    // polish against cancellation: s * s_other = 1
    Cplx lam = s * s;
    return sheet > 0 ? lam : 1.0 / lam;
}

std::vector<Cplx> excluded_domain_contour(int k, double delta, int n) {
    if (k == 0) throw std::invalid_argument("excluded_domain_contour: k = 0 has no zeta-circle parameterization");
    std::vector<Cplx> pts(n);
    int m = std::abs(k);
    for (int j = 0; j < n; ++j) {
        double th = 2.0 * PI * j / n;
        Cplx z = PI * m + delta * Cplx(std::cos(th), std::sin(th));
        pts[j] = lambda_from_zeta(z, k > 0 ? +1 : -1);
    }
    return pts;
}

std::vector<Cplx> annulus_samples(int k, double delta, int n_r, int n_phi) {
    std::vector<Cplx> out;
    int m = std::abs(k);
    double r0 = std::max(1e-3, (m - 0.5) * PI);
    double r1 = (m + 0.5) * PI;
    if (k == 0) {
        r0 = 0.02;
        r1 = 0.5 * PI;
    }
    for (int i = 0; i < n_r; ++i) {
        double r = r0 + (r1 - r0) * (i + 0.5) / n_r;
        for (int j = 0; j < n_phi; ++j) {
            double phi = PI * (j + 0.5) / n_phi;  // upper half; -zeta gives the same pair
            Cplx z = r * Cplx(std::cos(phi), std::sin(phi));
            // stay away from the excluded domain of this annulus and neighbors
            bool excluded = false;
            for (int kk = std::max(0, m - 1); kk <= m + 1 && !excluded; ++kk)
                if (std::abs(z - PI * kk) < 1.2 * delta) excluded = true;
            if (excluded) continue;
            out.push_back(lambda_from_zeta(z, k >= 0 ? +1 : -1));
        }
    }
    return out;
}

double seq_weight(int k, int n, int m) {
    if (k == 0) return 1.0;
    double a = std::abs(static_cast<double>(k));
    return k > 0 ? std::pow(a, n) : std::pow(a, m);
}

double seq_norm(const Window& a, int n, int m) {
    double s = 0.0;
    for (int k = -a.N; k <= a.N; ++k) {
        double w = seq_weight(k, n, m);
        s += std::norm(a.at(k)) * w * w;
    }
    return std::sqrt(s);
}

}  // namespace sinhg
