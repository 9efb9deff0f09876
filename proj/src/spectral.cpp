#include "sinhg/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sinhg {

Window Divisor::lambda_window() const {
    Window w(N);
    for (int k = -N; k <= N; ++k) w.at(k) = at(k).lambda;
    return w;
}

Window Divisor::mu_window() const {
    Window w(N);
    for (int k = -N; k <= N; ++k) w.at(k) = at(k).mu;
    return w;
}

Divisor vacuum_divisor(int N, double delta) {
    Divisor D;
    D.N = N;
    D.delta = delta;
    D.points.resize(2 * N + 1);
    for (int k = -N; k <= N; ++k)
        D.at(k) = {k, Cplx(vacuum_lattice(k)), Cplx((k % 2 == 0) ? 1.0 : -1.0)};
    return D;
}

int count_zeros_contour(const std::function<Cplx(Cplx)>& f, const std::vector<Cplx>& contour,
                        double min_mod) {
    const size_t n = contour.size();
    if (n < 8) throw std::invalid_argument("count_zeros_contour: contour too coarse");
    std::vector<Cplx> vals(n);
    for (size_t i = 0; i < n; ++i) {
        vals[i] = f(contour[i]);
        if (std::abs(vals[i]) < min_mod)
            throw NumericError("count_zeros_contour: contour too close to a zero (|f|=" +
                               std::to_string(std::abs(vals[i])) + ")");
    }
    double total = 0.0;
    for (size_t i = 0; i < n; ++i) {
        Cplx ratio = vals[(i + 1) % n] / vals[i];
        double darg = std::arg(ratio);
        if (std::abs(darg) > 0.5 * PI)
            throw NumericError("count_zeros_contour: unresolved phase step, refine contour");
        total += darg;
    }
    double winding = total / (2.0 * PI);
    long rounded = std::lround(winding);
    if (std::abs(winding - rounded) > 0.1)
        throw NumericError("count_zeros_contour: non-integer winding " + std::to_string(winding));
    return static_cast<int>(std::labs(rounded));
}

namespace {

std::vector<Cplx> circle_contour(Cplx center, double radius, int n) {
    std::vector<Cplx> pts(n);
    for (int i = 0; i < n; ++i) {
        double th = 2.0 * PI * i / n;
        pts[i] = center + radius * Cplx(std::cos(th), std::sin(th));
    }
    return pts;
}

// Newton polish that tolerates a noise floor: keeps the best iterate seen and
// stops when the step stalls instead of throwing.
template <class F>
Cplx newton_soft(const F& f, Cplx z0, double step_tol, int max_iter = 50) {
    Cplx z = z0, best = z0;
    double fbest = std::abs(f(z0));
    int stalled = 0;
    for (int it = 0; it < max_iter; ++it) {
        double h = 1e-6 * lambda_scale(z);
        Cplx fz = f(z);
        Cplx fp = (f(z + h) - f(z - h)) / (2.0 * h);
        if (fp == Cplx(0.0)) break;
        Cplx step = fz / fp;
        z -= step;
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw NumericError("newton_soft: diverged");
        double fv = std::abs(f(z));
        if (fv < fbest) {
            fbest = fv;
            best = z;
            stalled = 0;
        } else if (++stalled >= 3) {
            break;
        }
        if (std::abs(step) <= step_tol * lambda_scale(z)) return z;
    }
    return best;
}

}  // namespace

Divisor find_divisor(const MonodromyFn& M, int N, const ExtractOptions& opt) {
    Divisor D;
    D.N = N;
    D.delta = opt.delta;
    D.points.resize(2 * N + 1);
    std::vector<std::string> failures(2 * N + 1);

    parallel_for(2 * N + 1, [&](int idx) {
        int k = idx - N;
        try {
            auto c_of = [&](Cplx lam) { return M(lam).c; };
            NewtonOptions nopt;
            nopt.tol = std::min(1e-12, opt.tol * 1e-2);
            Cplx lam = newton(c_of, Cplx(vacuum_lattice(k)), nopt);
            if (k != 0 && !in_excluded_domain(lam, k, opt.delta))
                throw NumericError("divisor zero escaped U_{k,delta} at k=" + std::to_string(k));
            if (opt.validate_counts) {
                std::vector<Cplx> contour =
                    (k == 0) ? circle_contour(Cplx(-1.0), opt.k0_radius, opt.contour_n)
                             : excluded_domain_contour(k, opt.delta, opt.contour_n);
                int cnt = count_zeros_contour(c_of, contour);
                if (cnt != 1)
                    throw NumericError("count mismatch for c at k=" + std::to_string(k) +
                                       ": expected 1, got " + std::to_string(cnt));
            }
            D.points[static_cast<size_t>(idx)] = {k, lam, M(lam).a};
        } catch (const std::exception& e) {
            failures[static_cast<size_t>(idx)] = e.what();
        }
    });
    for (const auto& msg : failures)
        if (!msg.empty()) throw NumericError("find_divisor: " + msg);
    return D;
}

SpectralCurveModel find_branch_points(const std::function<Cplx(Cplx)>& Delta, int N,
                                      const ExtractOptions& opt) {
    SpectralCurveModel curve;
    curve.N = N;
    curve.delta = opt.delta;
    curve.trace = Delta;
    curve.kappa1.resize(2 * N + 1);
    curve.kappa2.resize(2 * N + 1);
    curve.eta.resize(2 * N + 1);
    std::vector<std::string> failures(2 * N + 1);

    parallel_for(2 * N + 1, [&](int idx) {
        int k = idx - N;
        try {
            auto dDelta = [&](Cplx lam) {
                double h = 1e-6 * lambda_scale(lam);
                return (Delta(lam + h) - Delta(lam - h)) / (2.0 * h);
            };
            Cplx eta = newton_soft(dDelta, Cplx(vacuum_lattice(k)), 1e-11);
            curve.eta[static_cast<size_t>(idx)] = eta;

            double h2 = 1e-4 * lambda_scale(eta);
            Cplx d2 = (Delta(eta + h2) - 2.0 * Delta(eta) + Delta(eta - h2)) / (h2 * h2);
            double sign = (k % 2 == 0) ? 1.0 : -1.0;
            Cplx target = 2.0 * sign;
            Cplx off = std::sqrt(2.0 * (target - Delta(eta)) / d2);

            double closed_tol = std::max(1e-9, 1e-6 * std::abs(eta));
            Cplx ka, kb;
            if (std::abs(off) <= 0.5 * closed_tol) {
                ka = kb = eta;  // double point
            } else {
                auto g = [&](Cplx lam) { return Delta(lam) - target; };
                ka = newton_soft(g, eta + off, 1e-12);
                kb = newton_soft(g, eta - off, 1e-12);
                if (std::abs(ka - kb) <= std::max(1e-9, 1e-6 * std::abs(0.5 * (ka + kb))))
                    ka = kb = eta;  // refined roots merged: treat as closed
            }
            // order the pair by real part (relabeling within a domain is free)
            if (ka.real() > kb.real() || (ka.real() == kb.real() && ka.imag() > kb.imag()))
                std::swap(ka, kb);
            curve.kappa1[static_cast<size_t>(idx)] = ka;
            curve.kappa2[static_cast<size_t>(idx)] = kb;

            if (opt.validate_counts && k != 0) {
                auto disc = [&](Cplx lam) {
                    Cplx t = Delta(lam);
                    return t * t - 4.0;
                };
                int cnt = count_zeros_contour(
                    disc, excluded_domain_contour(k, opt.delta, opt.contour_n));
                if (cnt != 2)
                    throw NumericError("count mismatch for Delta^2-4 at k=" + std::to_string(k) +
                                       ": expected 2, got " + std::to_string(cnt) +
                                       (cnt >= 3 ? " (cluster of three?)" : ""));
            }
        } catch (const std::exception& e) {
            failures[static_cast<size_t>(idx)] = e.what();
        }
    });
    for (const auto& msg : failures)
        if (!msg.empty()) throw NumericError("find_branch_points: " + msg);
    return curve;
}

double divisor_distance(const Divisor& D1, const Divisor& D2, int compact_K) {
    if (D1.N != D2.N) throw std::invalid_argument("divisor_distance: windows differ");
    const int N = D1.N;
    compact_K = std::min(compact_K, N);

    // identity pairing outside the compact part
    double outer = 0.0;
    for (int k = -N; k <= N; ++k) {
        if (std::abs(k) <= compact_K) continue;
        double wl = seq_weight(k, -1, 3);
        outer += wl * wl * std::norm(D1.at(k).lambda - D2.at(k).lambda) +
                 std::norm(D1.at(k).mu - D2.at(k).mu);
    }

    // brute-force permutations of the compact block
    std::vector<int> idx;
    for (int k = -compact_K; k <= compact_K; ++k) idx.push_back(k);
    std::vector<int> perm = idx;
    double best = std::numeric_limits<double>::infinity();
    do {
        double s = 0.0;
        for (size_t i = 0; i < idx.size() && s < best; ++i) {
            int k = idx[i], kp = perm[i];
            double wl = seq_weight(k, -1, 3);
            s += wl * wl * std::norm(D1.at(kp).lambda - D2.at(k).lambda) +
                 std::norm(D1.at(kp).mu - D2.at(k).mu);
        }
        best = std::min(best, s);
    } while (std::next_permutation(perm.begin(), perm.end()));

    return std::sqrt(outer + best);
}

bool is_tame(const Divisor& D, double tol) {
    for (int k = -D.N; k <= D.N; ++k)
        for (int l = k + 1; l <= D.N; ++l)
            if (std::abs(D.at(k).lambda - D.at(l).lambda) <= tol) return false;
    return true;
}

Mat2 fourier_remainder(const PotentialModel& p, int k, double tol) {
    if (k == 0) throw std::invalid_argument("fourier_remainder: |k| >= 1 required");
    int m = std::abs(k);
    double lk = vacuum_lattice(k);
    double sq = std::sqrt(lk);  // lattice points are positive reals
    Cplx tau = std::exp(-0.25 * (p.u(0.0) + p.u(1.0)));
    double sign = (m % 2 == 0) ? 1.0 : -1.0;  // (-1)^k with the |k| convention
    Mat2 M = monodromy(p, Cplx(lk), tol) * sign;

    Cplx a_k, b_k;
    if (k > 0) {
        a_k = 0.5 * (p.coeff_uz(m) + p.coeff_uz(-m));
        b_k = 0.5 * I_UNIT * (p.coeff_uz(m) - p.coeff_uz(-m));
    } else {
        a_k = -0.5 * (p.coeff_uzbar(m) + p.coeff_uzbar(-m));
        b_k = -0.5 * I_UNIT * (p.coeff_uzbar(m) - p.coeff_uzbar(-m));
    }
    // periodic data: upsilon = 1; for k < 0 the roles of tau and 1/tau swap.
    // The b-entry carries +tau^{-1} b_k / 2: the printed statement has a minus
    // there, but the variation of the monodromy at the vacuum (and a direct
    // first-order computation) give the b and c coefficients the same sign,
    // and only this sign leaves a quadratically small remainder.
    Cplx tb = (k > 0) ? b_k / tau : b_k * tau;
    Cplx tc = (k > 0) ? b_k * tau : b_k / tau;
    Mat2 fourier{-0.5 * a_k, 0.5 / sq * tb, 0.5 * sq * tc, 0.5 * a_k};
    Mat2 r = M - Mat2::identity() - fourier;
    r.b *= sq;  // unscale to the remainder coefficients of the expansion
    r.c /= sq;
    return r;
}

AsymptoticReport asymptotic_report(const std::function<Cplx(Cplx)>& f,
                                   const std::function<Cplx(Cplx)>& f0, double s, int n, int m,
                                   int N, double delta, int samples_r, int samples_phi) {
    AsymptoticReport rep;
    rep.sup = Window(N);
    parallel_for(2 * N + 1, [&](int idx) {
        int k = idx - N;
        double a = 0.0;
        for (Cplx lam : annulus_samples(k, delta, samples_r, samples_phi)) {
            double w = std::pow(weight_w(lam), s);
            a = std::max(a, std::abs(f(lam) - f0(lam)) / w);
        }
        rep.sup.v[static_cast<size_t>(idx)] = a;
    });
    rep.norm = seq_norm(rep.sup, n, m);
    return rep;
}

}  // namespace sinhg
