#include "doctest.h"
#include "sinhg/spectral.hpp"

using namespace sinhg;

namespace {
MonodromyFn closed_form_fn(Cplx tau) {
    MonodromyFn fn;
    fn.eval = [tau](Cplx lam) { return constant_monodromy_closed_form(tau, lam); };
    return fn;
}
}  // namespace

TEST_CASE("winding counts against the vacuum closed forms") {
    auto c0 = [](Cplx lam) { return vacuum_c0(lam); };
    auto disc0 = [](Cplx lam) {
        Cplx t = vacuum_trace(lam);
        return t * t - 4.0;
    };
    for (int k : {-6, -2, -1, 1, 2, 6}) {
        CHECK(count_zeros_contour(c0, excluded_domain_contour(k, 0.5, 128)) == 1);
        CHECK(count_zeros_contour(disc0, excluded_domain_contour(k, 0.5, 128)) == 2);
    }
    // a contour inside V_delta enclosing no lattice point
    std::vector<Cplx> small;
    for (int i = 0; i < 64; ++i) {
        double th = 2.0 * PI * i / 64;
        small.push_back(Cplx(40.0, 18.0) + 2.0 * Cplx(std::cos(th), std::sin(th)));
    }
    CHECK(count_zeros_contour(c0, small) == 0);
    CHECK_THROWS_AS(count_zeros_contour(c0, std::vector<Cplx>(4, Cplx(1.0))),
                    std::invalid_argument);
}

TEST_CASE("vacuum divisor extraction") {
    auto M = closed_form_fn(Cplx(1.0));
    Divisor D = find_divisor(M, 5);
    for (int k = -5; k <= 5; ++k) {
        double lk = vacuum_lattice(k);
        CHECK(std::abs(D.at(k).lambda - lk) < 1e-10 * std::max(1.0, std::abs(lk)));
        double sign = (k % 2 == 0) ? 1.0 : -1.0;
        CHECK(std::abs(D.at(k).mu - sign) < 1e-10);
    }
    CHECK(is_tame(D));
}

TEST_CASE("constant potential divisor matches the closed-form zeros") {
    Cplx tau = std::exp(Cplx(-0.1));
    auto M = closed_form_fn(tau);
    Divisor D = find_divisor(M, 5);
    for (int k = -5; k <= 5; ++k) {
        Cplx ref = constant_c_zero(tau, k);
        CHECK(std::abs(D.at(k).lambda - ref) < 1e-8 * std::max(1.0, std::abs(ref)));
        // eigenvalue consistency a d = 1 at a zero of c
        Mat2 m = M(D.at(k).lambda);
        CHECK(std::abs(m.a * m.d - 1.0) < 1e-8);
        // trace consistency Delta = mu + 1/mu
        CHECK(std::abs(m.trace() - D.at(k).mu - 1.0 / D.at(k).mu) < 1e-8);
    }
    CHECK(is_tame(D));
}

TEST_CASE("vacuum branch points are double points at the lattice") {
    auto Delta = [](Cplx lam) { return vacuum_trace(lam); };
    SpectralCurveModel curve = find_branch_points(Delta, 5);
    for (int k = -5; k <= 5; ++k) {
        CHECK(curve.gap(k) <= 1e-10);
        double lk = vacuum_lattice(k);
        CHECK(std::abs(curve.kappa_star(k) - lk) < 1e-8 * std::max(1.0, std::abs(lk)));
    }
}

TEST_CASE("constant potential: closed gaps except k = 0") {
    Cplx tau = std::exp(Cplx(-0.1));
    auto Delta = [tau](Cplx lam) { return constant_monodromy_closed_form(tau, lam).trace(); };
    SpectralCurveModel curve = find_branch_points(Delta, 5);
    for (int k = -5; k <= 5; ++k) {
        if (k == 0) continue;
        CHECK(curve.gap(k) <= 1e-7 * std::abs(curve.kappa_star(k)));
        CHECK(std::abs(curve.kappa_star(k) - constant_c_zero(tau, k)) <
              1e-6 * std::max(1.0, std::abs(constant_c_zero(tau, k))));
    }
    // the k = 0 gap is open with endpoints {-1/tau^2, -tau^2}
    Cplx t2 = tau * tau;
    CHECK(std::abs(curve.k1(0) - (-1.0 / t2)) < 1e-8);
    CHECK(std::abs(curve.k2(0) - (-t2)) < 1e-8);
    // eta_0 = -1 and eta_* would be +1 for this family
    CHECK(std::abs(curve.eta_at(0) - Cplx(-1.0)) < 1e-8);
}

TEST_CASE("divisor distance") {
    Divisor D = vacuum_divisor(6);
    CHECK(divisor_distance(D, D) == 0.0);

    // single perturbed point at k = 1: weight 1^{-1} = 1
    Divisor D2 = D;
    double h = 1e-3;
    D2.at(1).lambda += h;
    CHECK(divisor_distance(D, D2) == doctest::Approx(h).epsilon(1e-12));

    // swapping two compact-part points is free
    Divisor D3 = D;
    std::swap(D3.at(0).lambda, D3.at(1).lambda);
    std::swap(D3.at(0).mu, D3.at(1).mu);
    CHECK(divisor_distance(D, D3, 2) < 1e-14);

    // mismatched windows are rejected
    CHECK_THROWS_AS(divisor_distance(D, vacuum_divisor(4)), std::invalid_argument);
}

TEST_CASE("tameness detection") {
    Divisor D = vacuum_divisor(4);
    CHECK(is_tame(D));
    D.at(2).lambda = D.at(1).lambda;
    CHECK_FALSE(is_tame(D));
}

TEST_CASE("fourier remainder: vacuum vanishes, quadratic scaling in the size") {
    auto vac = make_constant_potential(Cplx(1.0));
    for (int k : {1, -1, 3}) CHECK(fourier_remainder(vac, k).norm() < 1e-9);

    double eps = 0.05;
    auto p1 = make_cos_potential({eps});
    auto p2 = make_cos_potential({2.0 * eps});
    for (int k : {1, 2, -1}) {
        double r1 = fourier_remainder(p1, k).frob();
        double r2 = fourier_remainder(p2, k).frob();
        double ratio = r2 / r1;
        CHECK(ratio > 3.5);
        CHECK(ratio < 4.5);
    }
    CHECK_THROWS_AS(fourier_remainder(p1, 0), std::invalid_argument);
}

TEST_CASE("asymptotic report") {
    auto f = [](Cplx lam) { return vacuum_trace(lam); };
    auto rep = asymptotic_report(f, f, 1.0, 0, 0, 4, 0.5);
    CHECK(rep.norm == 0.0);
    for (auto v : rep.sup.v) CHECK(std::abs(v) == 0.0);

    // Delta of a small potential vs Delta0: finite norm, decreasing with the size
    auto p1 = make_cos_potential({0.2});
    auto p2 = make_cos_potential({0.1});
    auto mk = [](const PotentialModel& p) {
        return [p](Cplx lam) { return monodromy(p, lam, 1e-9).trace(); };
    };
    auto r1 = asymptotic_report(mk(p1), f, 1.0, 0, 0, 3, 0.5, 2, 6);
    auto r2 = asymptotic_report(mk(p2), f, 1.0, 0, 0, 3, 0.5, 2, 6);
    CHECK(r1.norm > 0.0);
    CHECK(std::isfinite(r1.norm));
    CHECK(r2.norm < r1.norm);
}

TEST_CASE("divisor extraction from the ODE monodromy of a trig potential") {
    auto p = make_cos_potential({0.3});
    auto M = make_ode_monodromy(p, 1e-11);
    Divisor D = find_divisor(M, 3);
    CHECK(is_tame(D));
    for (int k = -3; k <= 3; ++k) {
        Mat2 m = M(D.at(k).lambda);
        CHECK(std::abs(m.c) < 1e-8 * (1.0 + m.norm()));
        CHECK(std::abs(m.a * m.d - 1.0) < 1e-8);
        bool located = (k == 0) || in_excluded_domain(D.at(k).lambda, k, 0.55);
        CHECK(located);
    }
    // window norms of the deviation shrink as the potential is scaled down
    auto p_half = make_cos_potential({0.15});
    Divisor Dh = find_divisor(make_ode_monodromy(p_half, 1e-11), 3);
    auto dev_norm = [](const Divisor& D) {
        Window w(D.N);
        for (int k = -D.N; k <= D.N; ++k) w.at(k) = D.at(k).lambda - vacuum_lattice(k);
        return seq_norm(w, -1, 3);
    };
    CHECK(dev_norm(Dh) < dev_norm(D));
}
