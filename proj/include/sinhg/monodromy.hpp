// Extended-frame integration F' = alpha(x; lambda) F on [0,1] and the
// monodromy M(lambda) = F(1, lambda), plus the closed form for constant
// potentials used as a cross-check oracle.
#pragma once

#include <functional>
#include <map>

#include "sinhg/potential.hpp"

namespace sinhg {

/// Solution of the frame ODE at one lambda; samples are recorded at the
/// x-values requested by the caller.
struct FrameSolution {
    Cplx lambda;
    std::vector<double> xs;
    std::vector<Mat2> samples;  // F(xs[i], lambda)
    Mat2 M;                     // F(1, lambda)
    int steps = 0;
};

/// A monodromy as a function lambda -> SL(2,C), plus evaluation metadata.
struct MonodromyFn {
    std::function<Mat2(Cplx)> eval;
    double tol = 0.0;
    Mat2 operator()(Cplx lambda) const { return eval(lambda); }
};

/// Integrate F' = alpha_x(x; lambda) F, F(0) = 1, recording samples at the
/// sorted x-values in `record` (0 and 1 are always included).
FrameSolution extended_frame(const PotentialModel& p, Cplx lambda, double tol,
                             std::vector<double> record = {});

/// M(lambda) = F(1, lambda).
Mat2 monodromy(const PotentialModel& p, Cplx lambda, double tol);

/// Monodromy as a reusable evaluator.
MonodromyFn make_ode_monodromy(const PotentialModel& p, double tol);

/// Closed form exp(alpha) for the constant potential u = -2 ln tau:
/// trace 2 cos xi with xi^2 = (lambda tau + 1/tau)(tau/lambda + 1/tau)/16.
/// Branch-free (only even functions of xi are used).
Mat2 constant_monodromy_closed_form(Cplx tau, Cplx lambda);

/// xi(lambda)^2 for the constant potential (entire in lambda, 1/lambda).
Cplx constant_xi_sq(Cplx tau, Cplx lambda);

/// Zeros of the lower-left entry of the constant-potential monodromy:
/// index 0 gives -1/tau^2, index +-k the two roots of
/// lambda^2 - (16 pi^2 k^2 - tau^2 - tau^{-2}) lambda + 1 = 0.
Cplx constant_c_zero(Cplx tau, int k);

/// Delta(lambda) = tr M(lambda).
Cplx trace_delta(const MonodromyFn& M, Cplx lambda);

}  // namespace sinhg
