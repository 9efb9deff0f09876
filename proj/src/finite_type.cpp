#include "sinhg/finite_type.hpp"

#include <cmath>

namespace sinhg {

namespace {

// soft Newton with lambda-adapted steps (tolerates the interpolation noise floor)
template <class F>
Cplx polish(const F& f, Cplx z0, double step_tol, int max_iter = 40) {
    Cplx z = z0, best = z0;
    double fbest = std::abs(f(z0));
    int stalled = 0;
    for (int it = 0; it < max_iter; ++it) {
        double h = 1e-6 * lambda_scale(z);
        Cplx fz = f(z);
        Cplx fp = (f(z + h) - f(z - h)) / (2.0 * h);
        if (fp == Cplx(0.0)) break;
        Cplx step = fz / fp;
        z -= step;
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw NumericError("finite_type: Newton diverged");
        double fv = std::abs(f(z));
        if (fv < fbest) {
            fbest = fv;
            best = z;
            stalled = 0;
        } else if (++stalled >= 3) {
            break;
        }
        if (std::abs(step) <= step_tol * lambda_scale(z)) return z;
    }
    return best;
}

}  // namespace

CriticalPoints critical_points_eta(const std::function<Cplx(Cplx)>& Delta, int K, double delta,
                                   double tol) {
    CriticalPoints cp;
    cp.K = K;
    cp.eta.resize(2 * K + 1);
    auto dDelta = [&](Cplx lam) {
        double h = 1e-6 * lambda_scale(lam);
        return (Delta(lam + h) - Delta(lam - h)) / (2.0 * h);
    };
    std::vector<std::string> failures(2 * K + 1);
    parallel_for(2 * K + 1, [&](int idx) {
        int k = idx - K;
        try {
            Cplx eta = polish(dDelta, Cplx(vacuum_lattice(k)), tol);
            if (k != 0 && !in_excluded_domain(eta, k, delta))
                throw NumericError("critical point escaped U_{k,delta} at k=" + std::to_string(k));
            cp.eta[static_cast<size_t>(idx)] = eta;
        } catch (const std::exception& e) {
            failures[static_cast<size_t>(idx)] = e.what();
        }
    });
    for (const auto& m : failures)
        if (!m.empty()) throw NumericError("critical_points_eta: " + m);
    // the additional zero: search from a small seed grid around lambda = 1
    Cplx best = 0.0;
    double dbest = std::numeric_limits<double>::infinity();
    for (Cplx seed : {Cplx(1.0), Cplx(1.2, 0.2), Cplx(0.8, -0.2), Cplx(1.0, 0.4), Cplx(1.0, -0.4)}) {
        try {
            Cplx eta = polish(dDelta, seed, tol);
            double d = std::abs(eta - 1.0);
            if (d < dbest) {
                dbest = d;
                best = eta;
            }
        } catch (const NumericError&) {
        }
    }
    if (!std::isfinite(dbest)) throw NumericError("critical_points_eta: eta_* search failed");
    cp.eta_star = best;
    return cp;
}

FiniteTypeResult finite_type_project(const Divisor& D, int N_fix, const FiniteTypeOptions& opt) {
    const int N = D.N;
    if (N_fix < 0 || N_fix > N)
        throw std::invalid_argument("finite_type_project: need 0 <= N_fix <= N");
    if (!is_tame(D)) throw NumericError("finite_type_project: divisor is not tame");

    Window nodes = D.lambda_window();
    auto outer = [&](int k) { return std::abs(k) > N_fix; };

    // trace targets: divisor data inside the window, double-point values +
    // offsets z_k outside
    std::vector<Cplx> z(2 * N + 1, Cplx(0.0));
    std::vector<Cplx> eta(2 * N + 1);
    for (int k = -N; k <= N; ++k) eta[static_cast<size_t>(k + N)] = nodes.at(k);

    FiniteTypeResult out;
    double prev_res = -1.0;
    int above = 0;
    for (int it = 1; it <= opt.max_iter; ++it) {
        Window vals(N);
        for (int k = -N; k <= N; ++k) {
            double sign = (k % 2 == 0) ? 1.0 : -1.0;
            if (outer(k))
                vals.at(k) = 2.0 * sign + z[static_cast<size_t>(k + N)];
            else
                vals.at(k) = D.at(k).mu + 1.0 / D.at(k).mu;
        }
        ValueInterpolation Delta(nodes, vals, Cplx(2.0));
        auto dDelta = [&](Cplx lam) {
            double h = 1e-6 * lambda_scale(lam);
            return (Delta(lam + h) - Delta(lam - h)) / (2.0 * h);
        };

        double res = 0.0;
        std::vector<Cplx> znew = z;
        std::vector<std::string> failures(2 * N + 1);
        parallel_for(2 * N + 1, [&](int idx) {
            int k = idx - N;
            if (!outer(k)) return;
            try {
                Cplx e = polish(dDelta, eta[static_cast<size_t>(idx)], 1e-12);
                eta[static_cast<size_t>(idx)] = e;
                double sign = (k % 2 == 0) ? 1.0 : -1.0;
                znew[static_cast<size_t>(idx)] =
                    z[static_cast<size_t>(idx)] - (Delta(e) - 2.0 * sign);
            } catch (const std::exception& ex) {
                failures[static_cast<size_t>(idx)] = ex.what();
            }
        });
        for (const auto& m : failures)
            if (!m.empty()) throw NumericError("finite_type_project: " + m);
        for (int idx = 0; idx <= 2 * N; ++idx)
            res = std::max(res, std::abs(znew[static_cast<size_t>(idx)] -
                                         z[static_cast<size_t>(idx)]));
        z = znew;
        out.iterations = it;
        out.residual = res;
        if (prev_res > 0.0) {
            out.contraction = res / prev_res;
            if (out.contraction >= opt.no_contraction_ratio && res > opt.tol) {
                if (++above >= 3)
                    throw NumericError(
                        "finite_type_project: no contraction observed (raise N_fix); ratio=" +
                        std::to_string(out.contraction));
            } else {
                above = 0;
            }
        }
        prev_res = res;
        if (res <= opt.tol) break;
    }
    if (out.residual > opt.tol)
        throw NumericError("finite_type_project: fixed point did not converge, residual=" +
                           std::to_string(out.residual));

    out.projected = D;
    for (int k = -N; k <= N; ++k) {
        if (!outer(k)) continue;
        double sign = (k % 2 == 0) ? 1.0 : -1.0;
        out.projected.at(k).lambda = eta[static_cast<size_t>(k + N)];
        out.projected.at(k).mu = sign;
    }
    return out;
}

}  // namespace sinhg
