// Extraction of spectral data from a monodromy: divisor points (zeros of c),
// branch points (zeros of Delta^2 - 4), winding-number zero counts, the
// divisor distance, tameness, and asymptotic diagnostic reports.
#pragma once

#include <functional>
#include <optional>

#include "sinhg/monodromy.hpp"
#include "sinhg/vacuum.hpp"

namespace sinhg {

struct DivisorPoint {
    int k = 0;
    Cplx lambda;
    Cplx mu;
};

/// Indexed window of divisor points; outside |k| <= N the divisor follows the
/// vacuum tail (lambda_{k,0}, (-1)^k).
struct Divisor {
    int N = 0;
    double delta = 0.5;
    std::vector<DivisorPoint> points;  // k = -N..N in order

    const DivisorPoint& at(int k) const { return points[static_cast<size_t>(k + N)]; }
    DivisorPoint& at(int k) { return points[static_cast<size_t>(k + N)]; }

    Window lambda_window() const;
    Window mu_window() const;
};

/// Vacuum divisor of window N.
Divisor vacuum_divisor(int N, double delta = 0.5);

/// Trace evaluator plus the branch/singular points kappa_{k,1}, kappa_{k,2}.
struct SpectralCurveModel {
    int N = 0;
    double delta = 0.5;
    std::function<Cplx(Cplx)> trace;  // Delta(lambda)
    std::vector<Cplx> kappa1, kappa2;  // index k+N
    std::vector<Cplx> eta;             // zero of Delta' per excluded domain

    Cplx k1(int k) const { return kappa1[static_cast<size_t>(k + N)]; }
    Cplx k2(int k) const { return kappa2[static_cast<size_t>(k + N)]; }
    Cplx eta_at(int k) const { return eta[static_cast<size_t>(k + N)]; }
    Cplx kappa_star(int k) const { return 0.5 * (k1(k) + k2(k)); }
    double gap(int k) const { return std::abs(k1(k) - k2(k)); }
};

/// Winding-number count of zeros of f inside a closed sampled contour:
/// round((1/2 pi i) contour-integral of f'/f) evaluated by summing the phase
/// increments of f between consecutive samples.  Orientation-insensitive
/// (returns the absolute count).  Throws when |f| on the contour falls below
/// min_mod (contour too close to a zero) or a phase step is unresolved.
int count_zeros_contour(const std::function<Cplx(Cplx)>& f, const std::vector<Cplx>& contour,
                        double min_mod = 1e-11);

struct ExtractOptions {
    double delta = 0.5;
    double tol = 1e-9;          // Newton tolerance (relative)
    int contour_n = 96;         // samples per validation contour
    bool validate_counts = true;
    double k0_radius = 0.6;     // lambda-plane validation circle around -1 for k = 0
};

/// Locate the divisor: for each |k| <= N the zero of c in U_{k,delta}
/// (Newton from lambda_{k,0}, validated by a winding count of 1) and
/// mu_k = a(lambda_k).
Divisor find_divisor(const MonodromyFn& M, int N, const ExtractOptions& opt = {});

/// Locate branch points: per excluded domain the zero eta_k of Delta', then
/// the two zeros of Delta^2 - 4 resolved from the local quadratic model and
/// polished by Newton.  Gaps below max(1e-9, 1e-6 |kappa_*|) are classified
/// closed and snapped to the double point.
SpectralCurveModel find_branch_points(const std::function<Cplx(Cplx)>& Delta, int N,
                                      const ExtractOptions& opt = {});

/// Distance on divisor space: sqrt(||dlambda||^2_{l2,-1,3} + ||dmu||^2_{l2,0,0})
/// minimized over permutations of the compact indices |k| <= compact_K.
double divisor_distance(const Divisor& D1, const Divisor& D2, int compact_K = 2);

/// True iff all pairwise |lambda_k - lambda_l| > tol.
bool is_tame(const Divisor& D, double tol = 1e-9);

/// Fourier-asymptotics remainder at index k (k != 0): the 2x2 matrix r with
/// (-1)^k M(lambda_{k,0}) = Id + (1/2) F_k + [[r11, r12 lam^-1/2],
/// [r21 lam^1/2, r22]], where F_k is built from the Fourier coefficients of
/// u_z (k > 0) resp. -u_zbar (k < 0).
Mat2 fourier_remainder(const PotentialModel& p, int k, double tol = 1e-11);

/// Per-annulus sup of |f - f0| / w^s over sampled S_k intersect V_delta for
/// |k| <= N, returned as a window together with its l2_{n,m} norm.
struct AsymptoticReport {
    Window sup;   // a_k
    double norm;  // ||a||_{l2_{n,m}}
};
AsymptoticReport asymptotic_report(const std::function<Cplx(Cplx)>& f,
                                   const std::function<Cplx(Cplx)>& f0, double s, int n, int m,
                                   int N, double delta, int samples_r = 3, int samples_phi = 8);

}  // namespace sinhg
