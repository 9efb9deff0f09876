#include "sinhg/monodromy.hpp"

#include <algorithm>
#include <cmath>

namespace sinhg {

FrameSolution extended_frame(const PotentialModel& p, Cplx lambda, double tol,
                             std::vector<double> record) {
    if (lambda == Cplx(0.0)) throw std::domain_error("extended_frame: lambda = 0");
    if (tol <= 0.0) throw std::invalid_argument("extended_frame: tol must be positive");
    record.push_back(0.0);
    record.push_back(1.0);
    std::sort(record.begin(), record.end());
    record.erase(std::unique(record.begin(), record.end()), record.end());

    auto rhs = [&](double x, const Mat2& F) { return eval_alpha_x(p, x, lambda) * F; };

    FrameSolution out;
    out.lambda = lambda;
    out.xs = record;
    out.samples.reserve(record.size());
    Mat2 F = Mat2::identity();
    int total_steps = 0;
    double x = 0.0;
    for (double xr : record) {
        if (xr > x) {
            auto res = ode45<Mat2>(rhs, F, x, xr, tol);
            F = res.y;
            total_steps += res.steps;
            x = xr;
        }
        out.samples.push_back(F);
    }
    out.M = out.samples.back();
    out.steps = total_steps;
    return out;
}

Mat2 monodromy(const PotentialModel& p, Cplx lambda, double tol) {
    return extended_frame(p, lambda, tol).M;
}

MonodromyFn make_ode_monodromy(const PotentialModel& p, double tol) {
    MonodromyFn fn;
    fn.tol = tol;
    fn.eval = [p, tol](Cplx lambda) { return monodromy(p, lambda, tol); };
    return fn;
}

Cplx constant_xi_sq(Cplx tau, Cplx lambda) {
    Cplx t2 = tau * tau;
    return (t2 + 1.0 / t2 + lambda + 1.0 / lambda) / 16.0;
}

Mat2 constant_monodromy_closed_form(Cplx tau, Cplx lambda) {
    if (tau == Cplx(0.0) || lambda == Cplx(0.0))
        throw std::domain_error("constant_monodromy_closed_form: tau, lambda must be nonzero");
    // alpha = (1/4) [[0, -(1/tau + tau/lambda)], [1/tau + lambda tau, 0]],
    // alpha^2 = -xi^2 Id, exp(alpha) = cos(xi) Id + sinc(xi) alpha.
    Cplx xi2 = constant_xi_sq(tau, lambda);
    Cplx xi = std::sqrt(xi2);
    Cplx cosx = std::cos(xi);
    Cplx sinc = (std::abs(xi) < 1e-6)
                    ? 1.0 - xi2 / 6.0 + xi2 * xi2 / 120.0
                    : std::sin(xi) / xi;
    Cplx off1 = -0.25 * (1.0 / tau + tau / lambda);
    Cplx off2 = 0.25 * (1.0 / tau + lambda * tau);
    return {cosx, sinc * off1, sinc * off2, cosx};
}

Cplx constant_c_zero(Cplx tau, int k) {
    if (k == 0) return -1.0 / (tau * tau);
    double km = PI * std::abs(k);
    Cplx s = 16.0 * km * km - tau * tau - 1.0 / (tau * tau);
    Cplx r = std::sqrt(s * s - 4.0);
    Cplx lp = 0.5 * (s + r);
    return k > 0 ? lp : 1.0 / lp;  // the two roots are reciprocal
}

Cplx trace_delta(const MonodromyFn& M, Cplx lambda) { return M(lambda).trace(); }

}  // namespace sinhg
