// Closed-form reference objects for the vacuum solution u = 0: the spectral
// parameter map zeta, the weight w, the lattice of double points lambda_{k,0},
// the vacuum monodromy, and the lambda-plane geometry (excluded domains and
// annuli) together with the weighted sequence norms measured against it.
#pragma once

#include <vector>

#include "sinhg/numerics.hpp"

namespace sinhg {

/// Which branch of sqrt(lambda) to use; Principal is the standard branch on
/// the plane slit along the negative reals, Second is its negative.
enum class SqrtBranch { Principal, Second };

inline Cplx sqrt_branch(Cplx z, SqrtBranch br) {
    Cplx s = std::sqrt(z);
    return br == SqrtBranch::Principal ? s : -s;
}

/// zeta(lambda) = (sqrt(lambda) + 1/sqrt(lambda)) / 4.  Domain error at 0.
Cplx zeta(Cplx lambda, SqrtBranch br = SqrtBranch::Principal);

/// zeta(lambda)^2 = (lambda+1)^2 / (16 lambda); branch-free.
Cplx zeta_sq(Cplx lambda);

/// w(lambda) = |cos zeta| + |sin zeta| (branch independent).
double weight_w(Cplx lambda);

/// Vacuum lattice point lambda_{k,0}; lambda_{0,0} = -1 and
/// lambda_{-k,0} = 1 / lambda_{k,0}.
double vacuum_lattice(int k);

/// Vacuum monodromy M0(lambda) = [[cos z, -lambda^{-1/2} sin z],
/// [lambda^{1/2} sin z, cos z]] with z = zeta(lambda).  All entries are even
/// in sqrt(lambda), so the value does not depend on the branch.
Mat2 vacuum_monodromy(Cplx lambda, SqrtBranch br = SqrtBranch::Principal);

/// Vacuum extended frame F0(x, lambda) (same matrix with z -> x z).
Mat2 vacuum_frame(double x, Cplx lambda, SqrtBranch br = SqrtBranch::Principal);

/// c0(lambda) = sqrt(lambda) sin(zeta); single-valued on C*.
Cplx vacuum_c0(Cplx lambda);
/// c0'(lambda).
Cplx vacuum_c0_prime(Cplx lambda);
/// c0''(lambda).
Cplx vacuum_c0_second(Cplx lambda);
/// c0(lambda) / (lambda - lambda_{k,0}), with the removable singularity at
/// lambda_{k,0} filled by a Taylor step (the ratio is smooth there).
Cplx c0_div_lin(Cplx lambda, int k);

/// Delta0(lambda) = 2 cos(zeta).
Cplx vacuum_trace(Cplx lambda);

/// Local length scale in the lambda plane: the image of a unit zeta-ball,
/// |dlambda/dzeta| = 8 |lambda|^{3/2} / |lambda - 1|, capped by |lambda| + 1.
/// Governs finite-difference steps and neighborhood radii near the lattice.
double lambda_scale(Cplx lambda);

/// Fourth-order derivative of a holomorphic evaluator with steps scaled by
/// the local lambda geometry.
template <class F>
Cplx d_dlambda(const F& f, Cplx lam, double rel_h = 1e-3) {
    double h = rel_h * lambda_scale(lam);
    return (f(lam - 2.0 * h) - 8.0 * f(lam - h) + 8.0 * f(lam + h) - f(lam + 2.0 * h)) /
           (12.0 * h);
}

// --- lambda-plane geometry ------------------------------------------------

/// The canonical zeta-representative with Re >= 0 (lambda -> zeta is defined
/// up to sign; the lattice sits at |k| pi > 0).
Cplx zeta_canonical(Cplx lambda);

/// Membership test for the excluded domain U_{k,delta}:
/// |zeta - |k| pi| < delta together with |lambda| > 1 (k > 0) resp.
/// |lambda| < 1 (k < 0); for k = 0 just |zeta| < delta.
bool in_excluded_domain(Cplx lambda, int k, double delta);

/// Membership test for the annulus S_k: (|k|-1/2) pi <= |zeta| <= (|k|+1/2) pi
/// with the same modulus condition; S_0 is |zeta| <= pi/2.
bool in_annulus(Cplx lambda, int k);

/// lambda with zeta-representative z and |lambda| > 1 (sheet=+1) resp.
/// |lambda| < 1 (sheet=-1): inverts the Joukowski-type map.
Cplx lambda_from_zeta(Cplx z, int sheet);

/// Positively oriented boundary of U_{k,delta} for k != 0, sampled at n
/// points (used for winding-number zero counts).
std::vector<Cplx> excluded_domain_contour(int k, double delta, int n);

/// Deterministic sample cloud of S_k intersected with V_delta
/// (the complement of all excluded domains).
std::vector<Cplx> annulus_samples(int k, double delta, int n_r, int n_phi);

// --- weighted sequence norms -----------------------------------------------

/// A window of complex values indexed k = -N..N.
struct Window {
    int N = 0;
    std::vector<Cplx> v;  // size 2N+1, index k+N

    Window() = default;
    explicit Window(int N_) : N(N_), v(2 * N_ + 1) {}
    Cplx& at(int k) { return v[static_cast<size_t>(k + N)]; }
    const Cplx& at(int k) const { return v[static_cast<size_t>(k + N)]; }
};

/// l^2_{n,m} norm of a window:
/// sqrt( sum_{k>0} |k^n a_k|^2 + |a_0|^2 + sum_{k>0} |k^m a_{-k}|^2 ).
double seq_norm(const Window& a, int n, int m);

/// The l^2_{n,m} weight attached to index k (k^n for k>0, 1 for k=0,
/// |k|^m for k<0).
double seq_weight(int k, int n, int m);

}  // namespace sinhg
