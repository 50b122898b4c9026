#include <doctest.h>

#include <cmath>
#include <vector>

#include "hdg/scenarios.hpp"
#include "hdg/time_integration.hpp"

using namespace hdg;

TEST_CASE("cfl_dt examples") {
    Mesh m = build_uniform(10.0, 100); // h = 0.1
    CHECK(cfl_dt(m, 2, 0.5) == doctest::Approx(0.02).epsilon(1e-12));
    CHECK(cfl_dt(m, 0, 0.5) == doctest::Approx(0.1).epsilon(1e-12));
    CHECK(cfl_dt(m, 3, 1.0) == doctest::Approx(0.1 / 3.5).epsilon(1e-12));
}

TEST_CASE("rk4 step preserves trivial states") {
    SUBCASE("vacuum stays identically zero") {
        Mesh m = build_uniform(10.0, 10);
        PolyField u = zero_field(m, 2);
        PolyField v = rk4_step(u, 0.0, 0.05, [](double) { return 0.0; });
        for (double c : v.coeffs) CHECK(c == 0.0);
    }
    SUBCASE("constant drift stays at roundoff over 100 steps") {
        Mesh m = build_uniform(10.0, 20);
        PolyField u = project_field(m, 2, [](double) { return 0.9; });
        PolyField u0 = u;
        double t = 0.0, dt = 0.02;
        for (int s = 0; s < 100; ++s) {
            u = rk4_step(u, t, dt, [](double) { return 0.9; });
            t += dt;
        }
        double drift = 0.0;
        for (size_t j = 0; j < u.coeffs.size(); ++j)
            drift = std::max(drift, std::abs(u.coeffs[j] - u0.coeffs[j]));
        CHECK(drift < 1e-13);
    }
}

TEST_CASE("integrate lands snapshots and the final time exactly") {
    Scenario sc = example1();
    Mesh m = build_uniform(sc.b, 20);
    PolyField u = initial_data(sc, m, 1);

    TimeConfig cfg;
    cfg.T_final = 0.3;
    cfg.dt = 0.02;
    cfg.snapshot_times = {0.13, 0.2501, 0.0};

    std::vector<double> seen;
    RunRecord rec = integrate(u, cfg, sc.Ub, {},
                              [&](double t, const PolyField&, const TraceSet&,
                                  const ReconstructedState&, const DiagnosticsRecord&) {
                                  seen.push_back(t);
                              });
    REQUIRE(seen.size() == 4);
    CHECK(seen[0] == 0.0);
    CHECK(seen[1] == doctest::Approx(0.13).epsilon(1e-14));
    CHECK(seen[2] == doctest::Approx(0.2501).epsilon(1e-14));
    CHECK(seen[3] == doctest::Approx(0.3).epsilon(1e-14));

    REQUIRE(!rec.history.empty());
    CHECK(rec.history.front().t == 0.0);
    CHECK(rec.history.back().t == doctest::Approx(0.3).epsilon(1e-14));
    for (size_t j = 1; j < rec.history.size(); ++j)
        CHECK(rec.history[j].t > rec.history[j - 1].t);
}

TEST_CASE("integrate with T = 0 emits a single snapshot") {
    Scenario sc = vacuum();
    Mesh m = build_uniform(sc.b, 8);
    PolyField u = initial_data(sc, m, 1);
    TimeConfig cfg;
    cfg.T_final = 0.0;
    int count = 0;
    RunRecord rec = integrate(u, cfg, sc.Ub, {},
                              [&](double t, const PolyField&, const TraceSet&,
                                  const ReconstructedState&, const DiagnosticsRecord&) {
                                  ++count;
                                  CHECK(t == 0.0);
                              });
    CHECK(count == 1);
    CHECK(rec.history.size() == 1);
    CHECK(rec.energy_budget_residual == 0.0);
}

TEST_CASE("vacuum run has zero energy-budget residual") {
    Scenario sc = vacuum();
    Mesh m = build_uniform(sc.b, 16);
    PolyField u = initial_data(sc, m, 2);
    TimeConfig cfg;
    cfg.T_final = 1.0;
    RunRecord rec = integrate(u, cfg, sc.Ub);
    CHECK(rec.energy_budget_residual < 1e-14);
    CHECK(!rec.deep_collapse);
    for (double c : rec.final_state.coeffs) CHECK(c == 0.0);
}

TEST_CASE("fourth-order temporal convergence on a smooth run") {
    Scenario sc = example1();
    Mesh m = build_uniform(sc.b, 20);
    PolyField u0 = initial_data(sc, m, 1);

    auto solve = [&](double dt) {
        TimeConfig cfg;
        cfg.T_final = 0.5;
        cfg.dt = dt;
        return integrate(u0, cfg, sc.Ub).final_state;
    };
    PolyField ref = solve(0.003125);
    auto err = [&](const PolyField& v) {
        double e = 0.0;
        for (size_t j = 0; j < v.coeffs.size(); ++j)
            e += (v.coeffs[j] - ref.coeffs[j]) * (v.coeffs[j] - ref.coeffs[j]);
        return std::sqrt(e);
    };
    double e1 = err(solve(0.05));
    double e2 = err(solve(0.025));
    double ratio = e1 / e2;
    CHECK(ratio > 10.0);
    CHECK(ratio < 24.0);
}
