// Projection of a tame divisor onto a finite-type divisor: the fixed-point
// iteration on the trace values at the zeros of Delta' that closes all gaps
// beyond a prescribed window.
#pragma once

#include "sinhg/reconstruction.hpp"

namespace sinhg {

/// Zeros of Delta' (one per excluded domain) plus the extra zero nearest to
/// lambda = 1.
struct CriticalPoints {
    int K = 0;
    std::vector<Cplx> eta;  // index k+K
    Cplx eta_star;

    Cplx at(int k) const { return eta[static_cast<size_t>(k + K)]; }
};

/// Newton on Delta' seeded at the vacuum lattice per excluded domain; the
/// extra zero eta_* is searched near lambda = 1.
CriticalPoints critical_points_eta(const std::function<Cplx(Cplx)>& Delta, int K,
                                   double delta = 0.5, double tol = 1e-10);

struct FiniteTypeResult {
    Divisor projected;          // D*: window preserved up to N_fix, gaps closed beyond
    int iterations = 0;
    double residual = 0.0;      // sup |z_new - z| at exit
    double contraction = 0.0;   // last observed ratio of successive updates
};

struct FiniteTypeOptions {
    double tol = 1e-11;
    int max_iter = 60;
    double no_contraction_ratio = 1.0;  // error when three sweeps stay above this
};

/// Banach fixed point on the trace offsets z_k (N_fix < |k| <= N): each sweep
/// rebuilds Delta from nodes lambda_k with targets mu_k + 1/mu_k (|k| <= N_fix)
/// and 2(-1)^k + z_k (beyond), finds the zeros eta_k of Delta', and updates
/// z_k <- Delta(lambda_k) - Delta(eta_k).  At the fixed point the curve has
/// double points in every outer excluded domain; the projected divisor keeps
/// the window and sits on those double points outside it.
FiniteTypeResult finite_type_project(const Divisor& D, int N_fix, const FiniteTypeOptions& opt = {});

}  // namespace sinhg
