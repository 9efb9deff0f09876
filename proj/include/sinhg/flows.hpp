// Translation flows of tame divisors in x and y, and the symplectic pairing
// with the Darboux vector system used to validate them.
//
// The flow is integrated in the variables (lambda_k, sigma_k) with
// sigma = mu - 1/mu: on the fixed curve sigma^2 = Delta^2 - 4, and
//   dlambda_k = -alpha21(lambda_k) sigma_k / c'(lambda_k)
//   dsigma_k  = -Delta(lambda_k) Delta'(lambda_k) alpha21(lambda_k) / c'(lambda_k),
// which keeps sigma^2 - (Delta^2 - 4) exactly conserved, stays regular at
// double points (sigma = 0 is a fixed point of the pair), and needs no root
// selection for the sheet: mu = (Delta + sigma)/2 throughout.
#pragma once

#include "sinhg/reconstruction.hpp"

namespace sinhg {

enum class FlowDirection { X, Y };

struct FlowState {
    double t = 0.0;
    Divisor D;
    double curve_drift = 0.0;  // max |sigma^2 - (Delta^2-4)| seen at accepted steps
    int steps = 0;
};

struct FlowOptions {
    double tol = 1e-10;
    int sign = +1;             // initial sign branch of tau
    bool refine_tail = true;   // tail-extrapolated products for c' and tau
    double collision_rel = 1e-8;
};

/// dlambda_k/dt for every window index, from the intrinsic formula
/// -alpha21(lambda_k) (mu_k - 1/mu_k) / c'(lambda_k) with
/// alpha21^x = (lambda tau + 1/tau)/4, alpha21^y = i(-lambda tau + 1/tau)/4
/// and tau recomputed from the window zeros.
Window divisor_velocity(const Divisor& D, FlowDirection dir, int sign = +1,
                        bool refine_tail = true);

/// Integrate the translation flow; the trace function of the initial divisor
/// is held fixed (the spectral curve does not move).
FlowState integrate_flow(const Divisor& D0, FlowDirection dir, double t_end,
                         const FlowOptions& opt = {});

// --- symplectic structure --------------------------------------------------

/// Quadrature grid on [0,1] shared by all tangent-space objects.
struct XGrid {
    Quadrature q;
    explicit XGrid(int n = 96) : q(gauss_legendre01(n)) {}
    size_t size() const { return q.x.size(); }
};

/// Tangent vector (delta u, delta u_y) sampled on an XGrid.
struct TangentVec {
    std::vector<Cplx> du, duy;
};

/// Omega(d1, d2) = int_0^1 (du1 duy2 - du2 duy1) dx on the shared grid.
Cplx symplectic_form_omega(const TangentVec& d1, const TangentVec& d2, const XGrid& grid);

/// The symplectic pair (v_k, w_k) built from the extended frame at a divisor
/// point lambda_k, and the pairing constants theta_k (with its companion
/// theta~_k).  Vacuum values: theta_k = (lambda_{k,0}+1)/2 for k != 0,
/// theta~_k = 0.
struct DarbouxVectors {
    int k = 0;
    TangentVec v, w;
    Cplx theta, theta_tilde;
};

DarbouxVectors darboux_vectors(const PotentialModel& p, int k, Cplx lambda_k, const XGrid& grid,
                               double tol = 1e-11);

}  // namespace sinhg
