// Reconstruction of holomorphic functions on C* from zeros (infinite products)
// and from values at those zeros (infinite partial-fraction sums), truncated to
// a finite window with the vacuum tail folded into closed forms. The window
// deviation factors (lambda - lambda_k) / (lambda - lambda_{k,0}) multiply the
// closed-form vacuum objects, which keeps the vacuum case exact and avoids the
// huge partial products of the raw formulas.
#pragma once

#include "sinhg/spectral.hpp"

namespace sinhg {

/// tau = sign * sqrt(prod_{|k|<=N} lambda_{k,0} / lambda_k); the square root is
/// principal, the overall sign is the caller's choice (the product determines
/// tau only up to sign).
Cplx tau_from_zeros(const Window& zeros, int sign = +1);

/// c(lambda) with zeros at the window points (vacuum tail beyond):
/// c = tau * c0(lambda) * prod_k (lambda - lambda_k)/(lambda - lambda_{k,0}).
///
/// With extrapolate_tail the window truncation is refined: the relative
/// deviations (lambda_k - lambda_{k,0})/lambda_{k,0} of a spectral divisor
/// decay like chat/k^2 with a potential-dependent constant (the trace formula
/// forces a nonzero sum), so the tail zeros are modelled as
/// lambda_{k,0} (1 + chat/k^2) with chat fitted from the outer window; the
/// resulting correction factor is folded in analytically.  This reduces the
/// truncation error of c from O(1/N) to the next order.
class ProductC {
public:
    ProductC(Window zeros, int sign = +1, bool extrapolate_tail = false);

    Cplx operator()(Cplx lambda) const;
    /// c(lambda) / (lambda - lambda_k); smooth across both lambda_k and
    /// lambda_{k,0} (the k-th deviation factor is folded analytically).
    Cplx over_lin(int k, Cplx lambda) const;
    /// c'(lambda_k) evaluated analytically from the product.
    Cplx prime_at_node(int k) const;
    /// The deviation product P(lambda) = prod_k dev_k(lambda) (no tau factor).
    Cplx deviation_product(Cplx lambda) const;

    Cplx tau() const { return tau_; }
    int window() const { return zeros_.N; }
    const Window& zeros() const { return zeros_; }
    Cplx tail_coefficient() const { return chat_; }

private:
    Window zeros_;
    Cplx tau_;
    bool refine_ = false;
    Cplx chat_ = 0.0;
    int tail_m_ = 0;

    Cplx tail_factor(Cplx lambda) const;  // prod over |k| > N of (lambda-ext)/(lambda-lattice)
};

/// Interpolation by values at pairwise distinct nodes lambda_k (|k| <= N) with
/// the vacuum tail: nodes lambda_{k,0} and values gamma (-1)^k for |k| > N.
/// Evaluates
///   a(lambda) = sum_k v_k c(lambda) / (c'(lambda_k) (lambda - lambda_k)),
/// where the tail of the sum is resummed through the partial-fraction
/// expansion of the cotangent (which reproduces gamma cos(zeta) exactly for
/// vacuum data), plus an explicit correction sum over tail_terms extra
/// indices for the window's influence on tail node weights.
/// The tail of the sum (over nodes lambda_{k,0}, |k| > N) is evaluated in
/// closed form: summing the rational summand against the poles of c0'/c0 by
/// residue calculus collapses it to one term per window index plus boundary
/// terms at lambda and at 1 (the spurious pole of the rational extension of
/// 1/c0'(lambda_{k,0})).
class ValueInterpolation {
public:
    ValueInterpolation(Window nodes, Window values, Cplx tail_gamma, double tame_tol = 1e-12);

    Cplx operator()(Cplx lambda) const;

    const Window& nodes() const { return nodes_; }
    const Window& values() const { return values_; }
    Cplx tail_gamma() const { return gamma_; }

private:
    Window nodes_, values_;
    Cplx gamma_;
    ProductC c_;                    // the product with the node zeros
    std::vector<Cplx> inv_cprime_;  // 1 / c'(lambda_k), index k+N
    std::vector<Cplx> res_w_;       // folded residue weights per window index
    Cplx l1_over_p1_;               // L(1) / P(1)
    Cplx g1_d1_, g1_d2_;            // Taylor data of the lambda=1 boundary term
};

/// Delta^2 - 4 from the branch points of a curve model, vacuum tail beyond
/// the window:
/// (Delta0^2-4)(lambda) * prod_k prod_nu (lambda - kappa_{k,nu})/(lambda - lambda_{k,0}).
Cplx product_discriminant(const SpectralCurveModel& curve, Cplx lambda);

/// As product_discriminant but omitting the two factors of gap k and the
/// double zero of Delta0^2-4 there, i.e.
/// R_k(lambda) = (Delta^2-4)(lambda) / ((lambda-kappa_{k,1})(lambda-kappa_{k,2})).
/// Holomorphic and nonvanishing near gap k.
Cplx discriminant_factor(const SpectralCurveModel& curve, int k, Cplx lambda);

/// prod (1 + a_k); throws on a vanishing factor.
Cplx inf_product(const std::vector<Cplx>& a);
/// The bound exp(||a||_{l1}) - 1 for |prod(1+a_k) - 1|.
double inf_sum_bound(const std::vector<Cplx>& a);

}  // namespace sinhg
