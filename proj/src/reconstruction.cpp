#include "sinhg/reconstruction.hpp"

#include <cmath>

namespace sinhg {

namespace {
Window divisor_trace_values(const Divisor& D) {
    Window v(D.N);
    for (int k = -D.N; k <= D.N; ++k) {
        Cplx mu = D.at(k).mu;
        if (mu == Cplx(0.0)) throw NumericError("trace_from_divisor: mu_k = 0");
        v.at(k) = mu + 1.0 / mu;
    }
    return v;
}

Window divisor_d_values(const Divisor& D) {
    Window v(D.N);
    for (int k = -D.N; k <= D.N; ++k) v.at(k) = 1.0 / D.at(k).mu;
    return v;
}
}  // namespace

ValueInterpolation trace_from_divisor(const Divisor& D) {
    return {D.lambda_window(), divisor_trace_values(D), Cplx(2.0)};
}

ReconstructedMonodromy::ReconstructedMonodromy(const Divisor& D, int sign, bool refine_tail)
    : D_(D),
      c_(D.lambda_window(), sign, refine_tail),
      delta_(D.lambda_window(), divisor_trace_values(D), Cplx(2.0)),
      dfun_(D.lambda_window(), divisor_d_values(D), Cplx(1.0)) {
    const int N = D_.N;
    b_node_.resize(2 * N + 1);
    b_slope_.resize(2 * N + 1);
    b_radius_.resize(2 * N + 1);
    for (int k = -N; k <= N; ++k) {
        // local quadratic model of b = (ad-1)/c around the removable
        // singularity at lambda_k: both numerator and denominator have simple
        // zeros there.  The local length scale is the lambda-image of a
        // zeta-ball of radius delta: |dlambda/dzeta| = 8 |lambda|^{3/2} / |lambda-1|.
        Cplx lk = D_.at(k).lambda;
        double r_loc = 8.0 * D_.delta * std::pow(std::abs(lk), 1.5) / std::abs(lk - 1.0);
        double r = 1e-3 * r_loc;
        b_radius_[static_cast<size_t>(k + N)] = r;
        double h = 0.02 * r_loc;
        auto g = [&](Cplx lam) {
            return (delta_(lam) - dfun_(lam)) * dfun_(lam) - 1.0;
        };
        Cplx g1 = (g(lk + h) - g(lk - h)) / (2.0 * h);
        Cplx g2 = (g(lk + h) - 2.0 * g(lk) + g(lk - h)) / (h * h);
        Cplx c1 = c_.prime_at_node(k);
        // c''(lambda_k) from the product by finite differences of c/(lambda-lambda_k)
        Cplx q1 = (c_.over_lin(k, lk + h) - c_.over_lin(k, lk - h)) / (2.0 * h);
        Cplx c2 = 2.0 * q1;
        Cplx bk = g1 / c1;
        b_node_[static_cast<size_t>(k + N)] = bk;
        b_slope_[static_cast<size_t>(k + N)] = (g2 * c1 - g1 * c2) / (2.0 * c1 * c1);
        // consistency: (ad-1)(lambda_k) must vanish
        double scale = std::abs(delta_(lk)) + std::abs(dfun_(lk)) + 1.0;
        if (std::abs(g(lk)) > 1e-7 * scale * scale)
            throw NumericError("ReconstructedMonodromy: (ad-1)(lambda_k) fails to vanish at k=" +
                               std::to_string(k) + " (inconsistent divisor)");
    }
}

Cplx ReconstructedMonodromy::a(Cplx lambda) const { return delta_(lambda) - dfun_(lambda); }
Cplx ReconstructedMonodromy::d(Cplx lambda) const { return dfun_(lambda); }
Cplx ReconstructedMonodromy::c(Cplx lambda) const { return c_(lambda); }
Cplx ReconstructedMonodromy::trace(Cplx lambda) const { return delta_(lambda); }

Cplx ReconstructedMonodromy::b_raw(Cplx lambda) const {
    Cplx aa = a(lambda), dd = dfun_(lambda);
    return (aa * dd - 1.0) / c_(lambda);
}

Cplx ReconstructedMonodromy::b(Cplx lambda) const {
    const int N = D_.N;
    for (int k = -N; k <= N; ++k) {
        Cplx lk = D_.at(k).lambda;
        double r = b_radius_[static_cast<size_t>(k + N)];
        if (std::abs(lambda - lk) < r)
            return b_node_[static_cast<size_t>(k + N)] +
                   b_slope_[static_cast<size_t>(k + N)] * (lambda - lk);
    }
    return b_raw(lambda);
}

Mat2 ReconstructedMonodromy::eval(Cplx lambda) const {
    Cplx dd = dfun_(lambda), tr = delta_(lambda);
    return {tr - dd, b(lambda), c_(lambda), dd};
}

MonodromyFn ReconstructedMonodromy::as_monodromy() const {
    auto self = std::make_shared<ReconstructedMonodromy>(*this);
    MonodromyFn fn;
    fn.eval = [self](Cplx lambda) { return self->eval(lambda); };
    return fn;
}

double trace_formula_check(const PotentialModel& p, const Divisor& D) {
    Cplx lhs = std::exp(0.5 * (p.u(0.0) + p.u(1.0)));
    Cplx prod = 1.0;
    for (int k = -D.N; k <= D.N; ++k) prod *= D.at(k).lambda / vacuum_lattice(k);
    return std::abs(lhs - prod);
}

}  // namespace sinhg
