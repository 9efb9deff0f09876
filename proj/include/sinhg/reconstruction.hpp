// The inverse problem for tame divisors: rebuild (Delta, c, d, a, b) from the
// divisor alone, plus trace-formula and round-trip diagnostics.
#pragma once

#include <memory>

#include "sinhg/interpolation.hpp"

namespace sinhg {

/// Trace function of the unique curve through a tame divisor:
/// interpolation with nodes lambda_k, values mu_k + 1/mu_k, vacuum tail 2(-1)^k.
ValueInterpolation trace_from_divisor(const Divisor& D);

/// Monodromy rebuilt from a tame divisor; det = 1 identically by construction
/// (b is defined as (ad-1)/c with the removable singularities at the nodes
/// filled by local quadratic expansions).
class ReconstructedMonodromy {
public:
    /// refine_tail extends the zero model beyond the window by the k^-2
    /// deviation law (see ProductC); it sharpens c and b, while a and d are
    /// insensitive to the tail node positions.
    ReconstructedMonodromy(const Divisor& D, int sign = +1, bool refine_tail = true);

    Cplx a(Cplx lambda) const;
    Cplx b(Cplx lambda) const;
    Cplx c(Cplx lambda) const;
    Cplx d(Cplx lambda) const;
    Cplx trace(Cplx lambda) const;
    Mat2 eval(Cplx lambda) const;

    Cplx tau() const { return c_.tau(); }
    const Divisor& divisor() const { return D_; }
    /// evaluator handle for use as a MonodromyFn
    MonodromyFn as_monodromy() const;

private:
    Divisor D_;
    ProductC c_;
    ValueInterpolation delta_, dfun_;
    std::vector<Cplx> b_node_, b_slope_;  // local data of b at each node
    std::vector<double> b_radius_;

    Cplx b_raw(Cplx lambda) const;
};

/// |e^{(u(0)+u(1))/2} - prod_{|k|<=N} lambda_k / lambda_{k,0}| for a divisor
/// extracted from p.
double trace_formula_check(const PotentialModel& p, const Divisor& D);

}  // namespace sinhg
