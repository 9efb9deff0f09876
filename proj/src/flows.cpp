#include "sinhg/flows.hpp"

#include <cmath>
#include <memory>

namespace sinhg {

namespace {

Cplx alpha21(FlowDirection dir, Cplx lambda, Cplx tau) {
    if (dir == FlowDirection::X) return 0.25 * (lambda * tau + 1.0 / tau);
    return 0.25 * I_UNIT * (-lambda * tau + 1.0 / tau);
}

// tau from the current window zeros, sign-aligned with the anchor
Cplx aligned_tau(const ProductC& c, Cplx& anchor) {
    Cplx t = c.tau();
    if (std::abs(t - anchor) > std::abs(t + anchor)) t = -t;
    anchor = t;
    return t;
}

void check_cprime(Cplx cp, int k) {
    double scale = std::abs(vacuum_c0_prime(Cplx(vacuum_lattice(k))));
    if (std::abs(cp) < 1e-10 * scale)
        throw NumericError("flow: degenerate c'(lambda_k) at k=" + std::to_string(k));
}

}  // namespace

Window divisor_velocity(const Divisor& D, FlowDirection dir, int sign, bool refine_tail) {
    if (!is_tame(D)) throw NumericError("divisor_velocity: divisor is not tame");
    ProductC c(D.lambda_window(), sign, refine_tail);
    Window vel(D.N);
    for (int k = -D.N; k <= D.N; ++k) {
        Cplx cp = c.prime_at_node(k);
        check_cprime(cp, k);
        Cplx mu = D.at(k).mu;
        vel.at(k) = -alpha21(dir, D.at(k).lambda, c.tau()) * (mu - 1.0 / mu) / cp;
    }
    return vel;
}

FlowState integrate_flow(const Divisor& D0, FlowDirection dir, double t_end,
                         const FlowOptions& opt) {
    if (!is_tame(D0)) throw NumericError("integrate_flow: divisor is not tame");
    const int N = D0.N;
    const int n = 2 * N + 1;

    auto Delta = std::make_shared<ValueInterpolation>(trace_from_divisor(D0));
    auto dDelta = [Delta](Cplx lam) {
        return d_dlambda([&](Cplx l) { return (*Delta)(l); }, lam);
    };

    // points that start exactly on a double point of the curve never move;
    // freezing them keeps the vacuum and projected tails stationary to the
    // last bit instead of to derivative-noise accuracy
    std::vector<bool> frozen(static_cast<size_t>(2 * N + 1), false);
    for (int k = -N; k <= N; ++k) {
        Cplx mu = D0.at(k).mu;
        frozen[static_cast<size_t>(k + N)] = std::abs(mu - 1.0 / mu) <= 1e-12;
    }

    CVec y0;
    y0.v.resize(2 * static_cast<size_t>(n));
    for (int k = -N; k <= N; ++k) {
        Cplx mu = D0.at(k).mu;
        y0.v[static_cast<size_t>(k + N)] = D0.at(k).lambda;
        y0.v[static_cast<size_t>(k + N + n)] = mu - 1.0 / mu;
    }

    auto anchor = std::make_shared<Cplx>(tau_from_zeros(D0.lambda_window(), opt.sign));
    auto rhs = [&, anchor](double, const CVec& y) {
        Window zeros(N);
        for (int k = -N; k <= N; ++k) zeros.at(k) = y.v[static_cast<size_t>(k + N)];
        // collision watch: the divisor must stay tame along the path
        for (int k = -N; k <= N; ++k)
            for (int l = k + 1; l <= N; ++l)
                if (std::abs(zeros.at(k) - zeros.at(l)) <
                    opt.collision_rel * lambda_scale(zeros.at(k)))
                    throw NumericError("integrate_flow: divisor points collide (non-tame)");
        ProductC c(zeros, +1, opt.refine_tail);
        Cplx tau = aligned_tau(c, *anchor);
        CVec dy;
        dy.v.assign(2 * static_cast<size_t>(n), Cplx(0.0));
        for (int k = -N; k <= N; ++k) {
            if (frozen[static_cast<size_t>(k + N)]) continue;
            Cplx lam = y.v[static_cast<size_t>(k + N)];
            Cplx sig = y.v[static_cast<size_t>(k + N + n)];
            Cplx cp = c.prime_at_node(k);
            check_cprime(cp, k);
            Cplx factor = -alpha21(dir, lam, tau) / cp;
            dy.v[static_cast<size_t>(k + N)] = factor * sig;
            dy.v[static_cast<size_t>(k + N + n)] = factor * (*Delta)(lam)*dDelta(lam);
        }
        return dy;
    };

    double drift = 0.0;
    auto observer = [&](double, const CVec& y) {
        for (int k = -N; k <= N; ++k) {
            Cplx lam = y.v[static_cast<size_t>(k + N)];
            Cplx sig = y.v[static_cast<size_t>(k + N + n)];
            Cplx tr = (*Delta)(lam);
            drift = std::max(drift, std::abs(sig * sig - (tr * tr - 4.0)));
        }
    };

    auto res = ode45<CVec>(rhs, y0, 0.0, t_end, opt.tol, observer);

    FlowState out;
    out.t = t_end;
    out.steps = res.steps;
    out.curve_drift = drift;
    out.D = D0;
    for (int k = -N; k <= N; ++k) {
        Cplx lam = res.y.v[static_cast<size_t>(k + N)];
        Cplx sig = res.y.v[static_cast<size_t>(k + N + n)];
        out.D.at(k).lambda = lam;
        out.D.at(k).mu = 0.5 * ((*Delta)(lam) + sig);
    }
    return out;
}

Cplx symplectic_form_omega(const TangentVec& d1, const TangentVec& d2, const XGrid& grid) {
    if (d1.du.size() != grid.size() || d2.du.size() != grid.size())
        throw std::invalid_argument("symplectic_form_omega: grid mismatch");
    Cplx s = 0.0;
    for (size_t i = 0; i < grid.size(); ++i)
        s += grid.q.w[i] * (d1.du[i] * d2.duy[i] - d2.du[i] * d1.duy[i]);
    return s;
}

DarbouxVectors darboux_vectors(const PotentialModel& p, int k, Cplx lambda_k, const XGrid& grid,
                               double tol) {
    DarbouxVectors out;
    out.k = k;
    auto sol = extended_frame(p, lambda_k, tol, grid.q.x);
    // locate the recorded samples of the grid nodes (0 and 1 were inserted)
    std::vector<Mat2> F(grid.size());
    {
        size_t j = 0;
        for (size_t i = 0; i < sol.xs.size(); ++i) {
            if (j < grid.size() && sol.xs[i] == grid.q.x[j]) F[j++] = sol.samples[i];
        }
        if (j != grid.size()) throw NumericError("darboux_vectors: sample bookkeeping failed");
    }

    out.v.du.resize(grid.size());
    out.v.duy.resize(grid.size());
    out.w.du.resize(grid.size());
    out.w.duy.resize(grid.size());
    Cplx theta = 0.0, theta_t = 0.0;
    for (size_t i = 0; i < grid.size(); ++i) {
        Cplx eu = std::exp(0.5 * p.u(grid.q.x[i]));
        Cplx em = 1.0 / eu;
        Cplx fa = F[i].a, fb = F[i].b, fc = F[i].c, fd = F[i].d;
        out.v.du[i] = fa * fc;
        out.v.duy[i] =
            0.25 * I_UNIT * ((eu - lambda_k * em) * fa * fa + (eu - em / lambda_k) * fc * fc);
        out.w.du[i] = fa * fd + fb * fc;
        out.w.duy[i] =
            0.5 * I_UNIT * ((eu - lambda_k * em) * fa * fb + (eu - em / lambda_k) * fc * fd);
        theta += grid.q.w[i] * (lambda_k * fa * fa + fc * fc / lambda_k) * eu;
        theta_t += grid.q.w[i] * (lambda_k * fa * fb + fc * fd / lambda_k) * eu;
    }
    out.theta = theta;
    out.theta_tilde = theta_t;
    return out;
}

}  // namespace sinhg
