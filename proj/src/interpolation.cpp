#include "sinhg/interpolation.hpp"

#include <cmath>

namespace sinhg {

namespace {

// (lambda - z) / (lambda - lambda_{k,0}); identically 1 when z is the lattice
// point itself (bitwise), so vacuum windows stay exact.
inline Cplx dev_factor(Cplx lambda, Cplx z, double lk0) {
    if (z == Cplx(lk0)) return 1.0;
    return (lambda - z) / (lambda - lk0);
}

// index of the window lattice point nearest to lambda (relative distance)
int nearest_lattice(int N, Cplx lambda) {
    int best = -N;
    double dbest = std::numeric_limits<double>::infinity();
    for (int k = -N; k <= N; ++k) {
        double lk = vacuum_lattice(k);
        double d = std::abs(lambda - lk) / std::max(1.0, std::abs(lk));
        if (d < dbest) {
            dbest = d;
            best = k;
        }
    }
    return best;
}

// c0(lambda) * prod_k dev_k(lambda): the lattice pole of the deviation factor
// nearest to lambda is paired with the zero of c0 there.
Cplx stable_c0_times_dev(const Window& zeros, Cplx lambda) {
    int N = zeros.N;
    int j = nearest_lattice(N, lambda);
    Cplx p = c0_div_lin(lambda, j) * (lambda - zeros.at(j));
    for (int i = -N; i <= N; ++i) {
        if (i == j) continue;
        p *= dev_factor(lambda, zeros.at(i), vacuum_lattice(i));
    }
    return p;
}

}  // namespace

Cplx tau_from_zeros(const Window& zeros, int sign) {
    Cplx prod = 1.0;
    for (int k = -zeros.N; k <= zeros.N; ++k) {
        Cplx zk = zeros.at(k);
        if (zk == Cplx(0.0)) throw std::domain_error("tau_from_zeros: zero at lambda = 0");
        prod *= vacuum_lattice(k) / zk;
    }
    return static_cast<double>(sign) * std::sqrt(prod);
}

namespace {
// sum_{k > M} k^{-2} via Euler-Maclaurin
double psi1_tail(int M) {
    double m = M;
    return 1.0 / m - 1.0 / (2.0 * m * m) + 1.0 / (6.0 * m * m * m) -
           1.0 / (30.0 * m * m * m * m * m);
}
}  // namespace

ProductC::ProductC(Window zeros, int sign, bool extrapolate_tail)
    : zeros_(std::move(zeros)), refine_(extrapolate_tail) {
    tau_ = tau_from_zeros(zeros_, sign);
    if (!refine_) return;

    const int N = zeros_.N;
    tail_m_ = N + 400;
    // The relative deviations pair reciprocally: rel_{-k} = -rel_k + O(k^-4)
    // (the window product for tau is then already accurate).  Fit the
    // antisymmetric coefficient chat of rel_{+-k} = +-chat/k^2 from the outer
    // window.
    int fit = std::min(3, std::max(1, N / 3));
    Cplx acc = 0.0;
    int cnt = 0;
    for (int k = N - fit + 1; k <= N; ++k) {
        double xp = vacuum_lattice(k), xm = vacuum_lattice(-k);
        Cplx rel_p = (zeros_.at(k) - xp) / xp;
        Cplx rel_m = (zeros_.at(-k) - xm) / xm;
        acc += 0.5 * (rel_p - rel_m) * static_cast<double>(k) * static_cast<double>(k);
        ++cnt;
    }
    chat_ = acc / static_cast<double>(cnt);

    // tau correction prod sqrt(x/ext) over the modelled tail (second order in
    // chat because the two sides nearly cancel)
    Cplx logsum = 0.0;
    for (int k = N + 1; k <= tail_m_; ++k) {
        Cplx q = chat_ / (static_cast<double>(k) * k);
        logsum += std::log(1.0 + q) + std::log(1.0 - q);
    }
    tau_ *= std::exp(-0.5 * logsum);
}

Cplx ProductC::tail_factor(Cplx lambda) const {
    if (!refine_) return 1.0;
    const int N = zeros_.N;
    // log prod_{|k|>N} (lambda - x_k(1 +- chat/k^2)) / (lambda - x_k)
    Cplx logsum = 0.0;
    for (int k = N + 1; k <= tail_m_; ++k) {
        Cplx q = chat_ / (static_cast<double>(k) * k);
        double xp = vacuum_lattice(k), xm = vacuum_lattice(-k);
        logsum += std::log(1.0 - q * xp / (lambda - xp));
        logsum += std::log(1.0 + q * xm / (lambda - xm));
    }
    // remainder beyond tail_m_: the plus side contributes
    // -delta_k/(lambda-x_k) -> +chat/k^2, the minus side O(x_{-k}/lambda k^2)
    logsum += chat_ * psi1_tail(tail_m_);
    return std::exp(logsum);
}

Cplx ProductC::deviation_product(Cplx lambda) const {
    Cplx p = 1.0;
    for (int k = -zeros_.N; k <= zeros_.N; ++k)
        p *= dev_factor(lambda, zeros_.at(k), vacuum_lattice(k));
    return p;
}

Cplx ProductC::operator()(Cplx lambda) const {
    if (lambda == Cplx(0.0)) throw std::domain_error("ProductC: lambda = 0");
    Cplx v = tau_ * stable_c0_times_dev(zeros_, lambda);
    return refine_ ? v * tail_factor(lambda) : v;
}

Cplx ProductC::over_lin(int k, Cplx lambda) const {
    if (lambda == Cplx(0.0)) throw std::domain_error("ProductC: lambda = 0");
    // c(lambda)/(lambda - lambda_k): drop the k-th deviation factor and pair
    // the zero of c0 with whichever lattice pole sits closest to lambda.
    const int N = zeros_.N;
    int j = nearest_lattice(N, lambda);
    Cplx p;
    if (j == k) {
        p = tau_ * c0_div_lin(lambda, k);
    } else {
        p = tau_ * c0_div_lin(lambda, j) * (lambda - zeros_.at(j)) / (lambda - vacuum_lattice(k));
    }
    for (int i = -N; i <= N; ++i) {
        if (i == k || i == j) continue;
        p *= dev_factor(lambda, zeros_.at(i), vacuum_lattice(i));
    }
    return refine_ ? p * tail_factor(lambda) : p;
}

Cplx ProductC::prime_at_node(int k) const { return over_lin(k, zeros_.at(k)); }

ValueInterpolation::ValueInterpolation(Window nodes, Window values, Cplx tail_gamma,
                                       double tame_tol)
    : nodes_(std::move(nodes)),
      values_(std::move(values)),
      gamma_(tail_gamma),
      c_(nodes_, +1) {
    const int N = nodes_.N;
    if (values_.N != N) throw std::invalid_argument("ValueInterpolation: window mismatch");
    for (int k = -N; k <= N; ++k)
        for (int j = k + 1; j <= N; ++j)
            if (std::abs(nodes_.at(k) - nodes_.at(j)) <=
                tame_tol * (1.0 + std::abs(nodes_.at(k))))
                throw NumericError("ValueInterpolation: coinciding nodes (non-tame input)");

    inv_cprime_.resize(2 * N + 1);
    for (int k = -N; k <= N; ++k) {
        Cplx cp = c_.prime_at_node(k);
        double scale = std::abs(vacuum_c0_prime(Cplx(vacuum_lattice(k))));
        if (std::abs(cp) < 1e-10 * scale)
            throw NumericError("ValueInterpolation: c'(lambda_k) below threshold at k=" +
                               std::to_string(k) + " (effectively non-tame)");
        inv_cprime_[static_cast<size_t>(k + N)] = 1.0 / cp;
    }

    // Residue weights of the resummed tail: for each window index j,
    //   W_j = [prod_{i != j} 1/dev_i(lambda_j)] * c0'(lambda_j) / c0_div_lin(lambda_j, j),
    // the (stable) residue of 1/P at the node times the log-derivative of c0.
    res_w_.resize(2 * N + 1);
    for (int j = -N; j <= N; ++j) {
        Cplx w = vacuum_c0_prime(nodes_.at(j)) / c0_div_lin(nodes_.at(j), j);
        for (int i = -N; i <= N; ++i) {
            if (i == j) continue;
            w /= dev_factor(nodes_.at(j), nodes_.at(i), vacuum_lattice(i));
        }
        res_w_[static_cast<size_t>(j + N)] = w;
    }

    // boundary term at lambda = 1 (spurious pole of the rational extension of
    // the node weights): L(1)/P(1) and the Taylor data of its numerator
    Cplx P1 = c_.deviation_product(Cplx(1.0));
    l1_over_p1_ = vacuum_c0_prime(Cplx(1.0)) / vacuum_c0(Cplx(1.0)) / P1;
    auto num = [&](double lam) {
        return Cplx(lam) * vacuum_c0_prime(Cplx(lam)) -
               l1_over_p1_ * stable_c0_times_dev(nodes_, Cplx(lam));
    };
    double h = 1e-3;
    Cplx nm2 = num(1.0 - 2 * h), nm1 = num(1.0 - h), n0 = num(1.0), np1 = num(1.0 + h),
         np2 = num(1.0 + 2 * h);
    g1_d1_ = (nm2 - 8.0 * nm1 + 8.0 * np1 - np2) / (12.0 * h);
    g1_d2_ = (-nm2 + 16.0 * nm1 - 30.0 * n0 + 16.0 * np1 - np2) / (12.0 * h * h);
}

Cplx ValueInterpolation::operator()(Cplx lambda) const {
    const int N = nodes_.N;
    // window part: sum v_k [c(lambda)/(lambda-lambda_k)] / c'(lambda_k)
    Cplx acc = 0.0;
    for (int k = -N; k <= N; ++k)
        acc += values_.at(k) * c_.over_lin(k, lambda) * inv_cprime_[static_cast<size_t>(k + N)];

    // resummed vacuum tail
    Cplx g1;
    if (std::abs(lambda - 1.0) < 1e-5) {
        g1 = g1_d1_ + 0.5 * g1_d2_ * (lambda - 1.0);
    } else {
        Cplx num = lambda * vacuum_c0_prime(lambda) -
                   l1_over_p1_ * stable_c0_times_dev(nodes_, lambda);
        g1 = num / (lambda - 1.0);
    }
    Cplx tail = 8.0 * g1;
    for (int j = -N; j <= N; ++j) {
        Cplx nj = nodes_.at(j);
        // c(lambda)/(lambda - lambda_j) without the tau factor
        Cplx olj = c_.over_lin(j, lambda) / c_.tau();
        tail -= 8.0 * (nj / (nj - 1.0)) * res_w_[static_cast<size_t>(j + N)] * olj;
    }
    return acc + gamma_ * tail;
}

Cplx product_discriminant(const SpectralCurveModel& curve, Cplx lambda) {
    if (lambda == Cplx(0.0)) throw std::domain_error("product_discriminant: lambda = 0");
    // Delta0^2 - 4 = -4 sin^2(zeta) = 2 cos(2 zeta) - 2, single-valued
    Cplx base = 2.0 * std::cos(2.0 * zeta(lambda)) - 2.0;
    Cplx p = 1.0;
    for (int k = -curve.N; k <= curve.N; ++k) {
        double lk0 = vacuum_lattice(k);
        p *= dev_factor(lambda, curve.k1(k), lk0) * dev_factor(lambda, curve.k2(k), lk0);
    }
    return base * p;
}

Cplx discriminant_factor(const SpectralCurveModel& curve, int k, Cplx lambda) {
    if (lambda == Cplx(0.0)) throw std::domain_error("discriminant_factor: lambda = 0");
    Cplx q = c0_div_lin(lambda, k);
    Cplx r = -4.0 * q * q / lambda;
    for (int j = -curve.N; j <= curve.N; ++j) {
        if (j == k) continue;
        double lj0 = vacuum_lattice(j);
        r *= dev_factor(lambda, curve.k1(j), lj0) * dev_factor(lambda, curve.k2(j), lj0);
    }
    return r;
}

Cplx inf_product(const std::vector<Cplx>& a) {
    Cplx p = 1.0;
    for (Cplx ak : a) {
        Cplx f = 1.0 + ak;
        if (f == Cplx(0.0)) throw NumericError("inf_product: vanishing factor");
        p *= f;
    }
    return p;
}

double inf_sum_bound(const std::vector<Cplx>& a) {
    double s = 0.0;
    for (Cplx ak : a) s += std::abs(ak);
    return std::expm1(s);
}

}  // namespace sinhg
