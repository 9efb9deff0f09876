#include "sinhg/potential.hpp"

#include <cmath>

namespace sinhg {

PotentialModel::PotentialModel(int J, std::vector<Cplx> fourier_u, std::vector<Cplx> fourier_uy)
    : J_(J), cu_(std::move(fourier_u)), cy_(std::move(fourier_uy)) {
    if (J_ < 0 || cu_.size() != static_cast<size_t>(2 * J_ + 1) ||
        cy_.size() != static_cast<size_t>(2 * J_ + 1))
        throw std::invalid_argument("PotentialModel: window sizes must be 2J+1");
}

namespace {
Cplx eval_window(const std::vector<Cplx>& c, int J, double x, int deriv) {
    Cplx s = 0.0;
    for (int j = -J; j <= J; ++j) {
        Cplx term = c[static_cast<size_t>(j + J)];
        Cplx f = 2.0 * PI * I_UNIT * static_cast<double>(j);
        for (int d = 0; d < deriv; ++d) term *= f;
        s += term * std::exp(f * x);
    }
    return s;
}
}  // namespace

Cplx PotentialModel::u(double x) const { return eval_window(cu_, J_, x, 0); }
Cplx PotentialModel::u_x(double x) const { return eval_window(cu_, J_, x, 1); }
Cplx PotentialModel::u_y(double x) const { return eval_window(cy_, J_, x, 0); }
Cplx PotentialModel::u_z(double x) const { return 0.5 * (u_x(x) - I_UNIT * u_y(x)); }
Cplx PotentialModel::u_zbar(double x) const { return 0.5 * (u_x(x) + I_UNIT * u_y(x)); }

Cplx PotentialModel::coeff_uz(int j) const {
    if (std::abs(j) > J_) return 0.0;
    return 0.5 * (2.0 * PI * I_UNIT * static_cast<double>(j) * coeff_u(j) - I_UNIT * coeff_uy(j));
}

Cplx PotentialModel::coeff_uzbar(int j) const {
    if (std::abs(j) > J_) return 0.0;
    return 0.5 * (2.0 * PI * I_UNIT * static_cast<double>(j) * coeff_u(j) + I_UNIT * coeff_uy(j));
}

PotentialModel PotentialModel::translate(double t) const {
    std::vector<Cplx> cu(cu_.size()), cy(cy_.size());
    for (int j = -J_; j <= J_; ++j) {
        Cplx ph = std::exp(2.0 * PI * I_UNIT * static_cast<double>(j) * t);
        cu[static_cast<size_t>(j + J_)] = coeff_u(j) * ph;
        cy[static_cast<size_t>(j + J_)] = coeff_uy(j) * ph;
    }
    return {J_, std::move(cu), std::move(cy)};
}

PotentialModel PotentialModel::reflect_negate() const {
    std::vector<Cplx> cu(cu_.size()), cy(cy_);
    for (size_t i = 0; i < cu_.size(); ++i) cu[i] = -cu_[i];
    return {J_, std::move(cu), std::move(cy)};
}

PotentialModel PotentialModel::conjugate() const {
    // conj(sum c_j e^{2pi i j x}) = sum conj(c_{-j}) e^{2pi i j x}
    std::vector<Cplx> cu(cu_.size()), cy(cy_.size());
    for (int j = -J_; j <= J_; ++j) {
        cu[static_cast<size_t>(j + J_)] = std::conj(coeff_u(-j));
        cy[static_cast<size_t>(j + J_)] = std::conj(coeff_uy(-j));
    }
    return {J_, std::move(cu), std::move(cy)};
}

PotentialModel make_constant_potential(Cplx tau) {
    if (tau == Cplx(0.0)) throw std::domain_error("make_constant_potential: tau = 0");
    return {0, {-2.0 * std::log(tau)}, {Cplx(0.0)}};
}

PotentialModel make_cos_potential(const std::vector<double>& cos_coeffs,
                                  const std::vector<double>& sin_coeffs) {
    int J = static_cast<int>(std::max(cos_coeffs.size(), sin_coeffs.size()));
    std::vector<Cplx> cu(2 * J + 1, Cplx(0.0)), cy(2 * J + 1, Cplx(0.0));
    for (size_t j = 1; j <= static_cast<size_t>(J); ++j) {
        Cplx c = j <= cos_coeffs.size() ? Cplx(0.5 * cos_coeffs[j - 1]) : Cplx(0.0);
        Cplx s = j <= sin_coeffs.size() ? Cplx(0.0, -0.5 * sin_coeffs[j - 1]) : Cplx(0.0);
        cu[J + j] = c + s;
        cu[J - j] = c - s;
    }
    return {J, std::move(cu), std::move(cy)};
}

Mat2 eval_alpha_x(const PotentialModel& p, double x, Cplx lambda) {
    if (lambda == Cplx(0.0)) throw std::domain_error("eval_alpha_x: lambda = 0");
    Cplx eu = std::exp(0.5 * p.u(x));
    Cplx em = 1.0 / eu;
    Cplx uy = p.u_y(x);
    return Mat2{I_UNIT * uy, -(eu + em / lambda), eu + lambda * em, -I_UNIT * uy} * 0.25;
}

Mat2 eval_alpha_y(const PotentialModel& p, double x, Cplx lambda) {
    if (lambda == Cplx(0.0)) throw std::domain_error("eval_alpha_y: lambda = 0");
    Cplx eu = std::exp(0.5 * p.u(x));
    Cplx em = 1.0 / eu;
    Cplx ux = p.u_x(x);
    return Mat2{-ux, eu - em / lambda, eu - lambda * em, ux} * (0.25 * I_UNIT);
}

double pot_norm(const PotentialModel& p) {
    double s = 0.0;
    for (int j = -p.J(); j <= p.J(); ++j) {
        double f = 2.0 * PI * j;
        s += (1.0 + f * f) * std::norm(p.coeff_u(j)) + std::norm(p.coeff_uy(j));
    }
    return std::sqrt(s);
}

}  // namespace sinhg
