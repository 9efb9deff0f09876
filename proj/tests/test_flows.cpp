#include "doctest.h"
#include "sinhg/flows.hpp"

using namespace sinhg;

TEST_CASE("vacuum divisor is stationary") {
    Divisor D = vacuum_divisor(5);
    Window v = divisor_velocity(D, FlowDirection::X);
    for (int k = -5; k <= 5; ++k) CHECK(std::abs(v.at(k)) < 1e-12);

    FlowState fs = integrate_flow(D, FlowDirection::X, 0.4);
    CHECK(divisor_distance(D, fs.D) == 0.0);  // double points are exactly frozen
    CHECK(fs.curve_drift < 1e-12);
}

TEST_CASE("hyperelliptic involution negates the velocities") {
    auto p = make_cos_potential({0.3});
    Divisor D = find_divisor(make_ode_monodromy(p, 1e-11), 5);
    Divisor Dt = D;
    for (auto& pt : Dt.points) pt.mu = 1.0 / pt.mu;
    Window v = divisor_velocity(D, FlowDirection::X);
    Window vt = divisor_velocity(Dt, FlowDirection::X);
    for (int k = -5; k <= 5; ++k)
        CHECK(std::abs(v.at(k) + vt.at(k)) < 1e-10 * (1.0 + std::abs(v.at(k))));
    // and in the y direction
    Window w = divisor_velocity(D, FlowDirection::Y);
    Window wt = divisor_velocity(Dt, FlowDirection::Y);
    for (int k = -5; k <= 5; ++k)
        CHECK(std::abs(w.at(k) + wt.at(k)) < 1e-10 * (1.0 + std::abs(w.at(k))));
}

TEST_CASE("velocity matches the translation derivative of the extraction") {
    // shift the base point first: an even potential starts at a turning point
    // of every orbit, where all velocities vanish
    auto p = make_cos_potential({0.15}).translate(0.1);
    int N = 5;
    Divisor D = find_divisor(make_ode_monodromy(p, 1e-12), N);
    Window v = divisor_velocity(D, FlowDirection::X);
    double h = 1e-4;
    Divisor Dp = find_divisor(make_ode_monodromy(p.translate(h), 1e-12), N);
    Divisor Dm = find_divisor(make_ode_monodromy(p.translate(-h), 1e-12), N);
    for (int k = -N; k <= N; ++k) {
        Cplx fd = (Dp.at(k).lambda - Dm.at(k).lambda) / (2.0 * h);
        double scale = std::abs(fd) + 1e-5 * lambda_scale(D.at(k).lambda);
        CHECK(std::abs(v.at(k) - fd) < 1e-3 * scale);
    }
}

TEST_CASE("x-flow matches the extraction of the translated potential") {
    auto p = make_cos_potential({0.15});
    int N = 6;
    Divisor D0 = find_divisor(make_ode_monodromy(p, 1e-11), N);
    double t = 0.15;
    FlowState fs = integrate_flow(D0, FlowDirection::X, t);
    CHECK(fs.curve_drift < 1e-7);
    Divisor Dref = find_divisor(make_ode_monodromy(p.translate(t), 1e-11), N);
    CHECK(divisor_distance(fs.D, Dref) < 2e-4);
}

TEST_CASE("y-flow stays on the curve") {
    auto p = make_cos_potential({0.15});
    Divisor D0 = find_divisor(make_ode_monodromy(p, 1e-11), 4);
    FlowState fs = integrate_flow(D0, FlowDirection::Y, 0.05);
    CHECK(fs.curve_drift < 1e-7);
    auto Delta = trace_from_divisor(D0);
    for (int k = -4; k <= 4; ++k) {
        Cplx mu = fs.D.at(k).mu;
        CHECK(std::abs(Delta(fs.D.at(k).lambda) - mu - 1.0 / mu) < 1e-7);
    }
}

TEST_CASE("symplectic form basics") {
    XGrid grid(64);
    TangentVec d1, d2;
    d1.du.resize(grid.size());
    d1.duy.resize(grid.size());
    d2 = d1;
    for (size_t i = 0; i < grid.size(); ++i) {
        double x = grid.q.x[i];
        d1.du[i] = std::cos(2.0 * PI * x);
        d1.duy[i] = 0.0;
        d2.du[i] = 0.0;
        d2.duy[i] = std::cos(2.0 * PI * x);
    }
    // int cos^2 = 1/2
    CHECK(std::abs(symplectic_form_omega(d1, d2, grid) - 0.5) < 1e-12);
    CHECK(std::abs(symplectic_form_omega(d1, d1, grid)) < 1e-14);
    // bilinearity
    TangentVec d3 = d1;
    for (auto& z : d3.du) z *= 2.0;
    for (auto& z : d3.duy) z *= 2.0;
    CHECK(std::abs(symplectic_form_omega(d3, d2, grid) -
                   2.0 * symplectic_form_omega(d1, d2, grid)) < 1e-13);

    TangentVec bad;
    CHECK_THROWS_AS(symplectic_form_omega(bad, d1, grid), std::invalid_argument);
}

TEST_CASE("vacuum values of theta") {
    auto vac = make_constant_potential(Cplx(1.0));
    XGrid grid(96);
    for (int k : {-3, -1, 1, 2}) {
        auto dv = darboux_vectors(vac, k, Cplx(vacuum_lattice(k)), grid);
        CHECK(std::abs(dv.theta - 0.5 * (vacuum_lattice(k) + 1.0)) < 1e-8);
        CHECK(std::abs(dv.theta_tilde) < 1e-9);
    }
    // at k = 0 the squared cosine integrates to 1, not 1/2
    auto d0 = darboux_vectors(vac, 0, Cplx(-1.0), grid);
    CHECK(std::abs(d0.theta - Cplx(-1.0)) < 1e-9);
}

TEST_CASE("symplectic relations of the Darboux system") {
    auto p = make_cos_potential({0.3});
    int K = 2;
    Divisor D = find_divisor(make_ode_monodromy(p, 1e-11), K);
    XGrid grid(96);
    std::vector<DarbouxVectors> sys;
    for (int k = -K; k <= K; ++k)
        sys.push_back(darboux_vectors(p, k, D.at(k).lambda, grid));
    for (const auto& a : sys) {
        for (const auto& b : sys) {
            Cplx vv = symplectic_form_omega(a.v, b.v, grid);
            Cplx ww = symplectic_form_omega(a.w, b.w, grid);
            Cplx vw = symplectic_form_omega(a.v, b.w, grid);
            double scale = std::abs(a.theta);
            CHECK(std::abs(vv) < 1e-6 * scale);
            CHECK(std::abs(ww) < 1e-6 * scale);
            Cplx expect = (a.k == b.k) ? a.theta : 0.0;
            CHECK(std::abs(vw - expect) < 1e-6 * scale);
        }
    }
}
