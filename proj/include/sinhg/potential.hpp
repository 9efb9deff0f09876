// Periodic Cauchy data (u, u_y) on [0,1] stored as finite Fourier windows,
// evaluation of u and its derivatives, the flat-connection coefficient
// matrices, and the Parseval norm.
#pragma once

#include <vector>

#include "sinhg/numerics.hpp"

namespace sinhg {

/// Trigonometric-polynomial model of Cauchy data:
/// u(x) = sum_{|j|<=J} u_hat[j] e^{2 pi i j x}, and likewise u_y.
/// Periodicity u(0) = u(1) is automatic.
class PotentialModel {
public:
    PotentialModel() = default;
    PotentialModel(int J, std::vector<Cplx> fourier_u, std::vector<Cplx> fourier_uy);

    int J() const { return J_; }
    const std::vector<Cplx>& fourier_u() const { return cu_; }
    const std::vector<Cplx>& fourier_uy() const { return cy_; }
    Cplx coeff_u(int j) const { return cu_[static_cast<size_t>(j + J_)]; }
    Cplx coeff_uy(int j) const { return cy_[static_cast<size_t>(j + J_)]; }

    Cplx u(double x) const;
    Cplx u_x(double x) const;
    Cplx u_y(double x) const;
    Cplx u_z(double x) const;     // (u_x - i u_y)/2
    Cplx u_zbar(double x) const;  // (u_x + i u_y)/2

    /// Fourier coefficient of u_z at frequency j (exact from the windows).
    Cplx coeff_uz(int j) const;
    /// Fourier coefficient of u_zbar at frequency j.
    Cplx coeff_uzbar(int j) const;

    /// x -> u(x + t), coefficientwise phase shift.
    PotentialModel translate(double t) const;
    /// (u, u_y) -> (-u, u_y); the partner potential of the lambda -> 1/lambda
    /// monodromy symmetry.
    PotentialModel reflect_negate() const;
    /// Complex conjugate data (conjugate of the function, not of the coefficients).
    PotentialModel conjugate() const;

private:
    int J_ = 0;
    std::vector<Cplx> cu_{Cplx(0.0)}, cy_{Cplx(0.0)};
};

/// Constant potential u = -2 ln(tau), u_y = 0 (principal log). tau != 0.
PotentialModel make_constant_potential(Cplx tau);

/// Convenience: real trig data u(x) = sum_j c_j cos(2 pi j x) + s_j sin(2 pi j x).
PotentialModel make_cos_potential(const std::vector<double>& cos_coeffs,
                                  const std::vector<double>& sin_coeffs = {});

/// dx-part of the flat connection:
/// (1/4) [[i u_y, -e^{u/2} - e^{-u/2}/lambda], [e^{u/2} + lambda e^{-u/2}, -i u_y]].
Mat2 eval_alpha_x(const PotentialModel& p, double x, Cplx lambda);

/// dy-part: (i/4) [[-u_x, e^{u/2} - e^{-u/2}/lambda], [e^{u/2} - lambda e^{-u/2}, u_x]].
Mat2 eval_alpha_y(const PotentialModel& p, double x, Cplx lambda);

/// Parseval evaluation of sqrt(||u||_{W^{1,2}}^2 + ||u_y||_{L^2}^2).
double pot_norm(const PotentialModel& p);

}  // namespace sinhg
