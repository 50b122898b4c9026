#include <doctest.h>

#include <cmath>
#include <random>

#include "hdg/reconstruction.hpp"
#include "hdg/scenarios.hpp"

using namespace hdg;

namespace {

PolyField make_linear(const Mesh& mesh, int k, double slope) {
    return project_field(mesh, k, [slope](double r) { return slope * r; });
}

} // namespace

TEST_CASE("sweep_w") {
    SUBCASE("zero field") {
        Mesh m = build_uniform(10.0, 5);
        PolyField u = zero_field(m, 2);
        auto st = sweep_w(u);
        for (double w : st.what) CHECK(w == 0.0);
        CHECK(st.eval_w(3.3) == 0.0);
    }
    SUBCASE("constant field") {
        Mesh m = build_uniform(10.0, 4);
        PolyField u = project_field(m, 1, [](double) { return 2.5; });
        auto st = sweep_w(u);
        for (int i = 0; i <= 4; ++i)
            CHECK(st.what[i] == doctest::Approx(2.5 * m.nodes[i]).epsilon(1e-13));
        CHECK(st.eval_w(7.1) == doctest::Approx(2.5 * 7.1).epsilon(1e-13));
    }
    SUBCASE("u = 2r on [0,1], N=4") {
        Mesh m = build_uniform(1.0, 4);
        PolyField u = make_linear(m, 1, 2.0);
        auto st = sweep_w(u);
        CHECK(st.what[0] == 0.0);
        CHECK(st.what[1] == doctest::Approx(1.0 / 16).epsilon(1e-14));
        CHECK(st.what[2] == doctest::Approx(4.0 / 16).epsilon(1e-14));
        CHECK(st.what[3] == doctest::Approx(9.0 / 16).epsilon(1e-14));
    }
    SUBCASE("(w_h)_r = u_h as a polynomial identity") {
        Mesh m = build_uniform(2.0, 3);
        std::mt19937 rng(5);
        std::uniform_real_distribution<double> U(-1.0, 1.0);
        PolyField u = zero_field(m, 3);
        for (double& c : u.coeffs) c = U(rng);
        auto st = sweep_w(u);
        for (int trial = 0; trial < 40; ++trial) {
            double r = 2.0 * (trial + 0.5) / 40.0;
            double d = 1e-6;
            int i = m.find_element(r);
            Interval e = m.element(i);
            double lo = std::max(e.a, r - d), hi = std::min(e.b, r + d);
            double fd = (st.eval_w(hi) - st.eval_w(lo)) / (hi - lo);
            CHECK(fd == doctest::Approx(field_eval(u, (lo + hi) / 2)).epsilon(1e-6).scale(1.0));
        }
    }
}

TEST_CASE("tilde_u_values") {
    SUBCASE("constant") {
        Mesh m = build_uniform(10.0, 6);
        PolyField u = project_field(m, 2, [](double) { return 1.7; });
        auto st = reconstruct(u, 1.7);
        for (int i = 0; i < m.N; ++i)
            for (double v : st.elems[i].utilde_s)
                CHECK(v == doctest::Approx(1.7).epsilon(1e-13));
    }
    SUBCASE("u = 2r gives utilde = r") {
        Mesh m = build_uniform(1.0, 4);
        PolyField u = make_linear(m, 1, 2.0);
        auto st = reconstruct(u, 2.0);
        for (double r : {0.05, 0.3, 0.52, 0.97})
            CHECK(st.eval_utilde(r) == doctest::Approx(r).epsilon(1e-12));
    }
    SUBCASE("example 1 initial data: utilde vanishes at the tanh center") {
        Scenario sc = example1();
        Mesh m = build_uniform(sc.b, 160);
        PolyField u = initial_data(sc, m, 2);
        auto st = reconstruct(u, sc.Ub(0.0));
        CHECK(std::abs(st.eval_utilde(5.0)) < 1e-4); // within projection error
    }
}

TEST_CASE("phi_samples") {
    SUBCASE("constant gives zero") {
        Mesh m = build_uniform(10.0, 4);
        PolyField u = project_field(m, 2, [](double) { return 3.0; });
        auto st = reconstruct(u, 3.0);
        for (const auto& el : st.elems) {
            CHECK(std::abs(el.phi_full) < 1e-25);
            for (double p : el.phi_s) CHECK(std::abs(p) < 1e-26);
        }
    }
    SUBCASE("u = 2r: analytic Phi = s") {
        Mesh m = build_uniform(2.0, 2); // elements (0,1), (1,2)
        PolyField u = make_linear(m, 1, 2.0);
        auto st = reconstruct(u, 4.0);
        CHECK(st.elems[0].phi_full == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(st.elems[1].phi_full == doctest::Approx(1.5).epsilon(1e-12));
        const auto& rule = gauss_rule(st.q_rec);
        for (int j = 0; j < st.q_rec; ++j) {
            double s0 = m.element(0).to_r(rule.nodes[j]);
            CHECK(st.elems[0].phi_s[j] == doctest::Approx(s0).epsilon(1e-12));
            double s1 = m.element(1).to_r(rule.nodes[j]);
            CHECK(st.elems[1].phi_s[j] == doctest::Approx(s1).epsilon(1e-12));
        }
        for (double p : st.elems[0].phi_s) CHECK(p >= 0.0);
    }
}

TEST_CASE("sweep_g and g_values") {
    SUBCASE("vacuum gives g = 1") {
        Mesh m = build_uniform(10.0, 5);
        auto st = reconstruct(zero_field(m, 2), 0.0);
        for (double g : st.ghat) CHECK(g == 1.0);
        CHECK(st.g0 == 1.0);
        for (const auto& el : st.elems)
            for (double g : el.g_s) CHECK(g == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("u = 2r single element: analytic exponential") {
        Mesh m = build_uniform(1.0, 1);
        PolyField u = make_linear(m, 1, 2.0);
        auto st = reconstruct(u, 2.0);
        CHECK(st.ghat[0] == doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
        CHECK(st.g0 == doctest::Approx(std::exp(-0.5)).epsilon(1e-12));
        const auto& rule = gauss_rule(st.q_rec);
        for (int j = 0; j < st.q_rec; ++j) {
            double s = m.element(0).to_r(rule.nodes[j]);
            CHECK(st.elems[0].g_s[j] ==
                  doctest::Approx(std::exp(-(1.0 - s * s) / 2.0)).epsilon(1e-12));
        }
    }
    SUBCASE("exponent additivity across elements") {
        Mesh m1 = build_uniform(1.0, 1);
        Mesh m2 = build_uniform(1.0, 2);
        auto s1 = reconstruct(make_linear(m1, 2, 2.0), 2.0);
        auto s2 = reconstruct(make_linear(m2, 2, 2.0), 2.0);
        CHECK(s1.g0 == doctest::Approx(s2.g0).epsilon(1e-14));
    }
    SUBCASE("endpoint consistency: g at r_i equals g_hat(r_i)") {
        Scenario sc = example1();
        Mesh m = build_uniform(sc.b, 20);
        PolyField u = initial_data(sc, m, 2);
        auto st = reconstruct(u, sc.Ub(0.0));
        for (int i = 0; i < m.N; ++i)
            CHECK(st.eval_g_at(i, 1.0) == doctest::Approx(st.ghat[i + 1]).epsilon(1e-13));
    }
}

TEST_CASE("sweep_z_tilde_g") {
    SUBCASE("g = 1 gives z = r, gtilde = 1, (gtilde)_r = 0") {
        Mesh m = build_uniform(10.0, 5);
        PolyField u = project_field(m, 2, [](double) { return 0.8; });
        auto st = reconstruct(u, 0.8);
        for (int i = 0; i <= 5; ++i)
            CHECK(st.zhat[i] == doctest::Approx(m.nodes[i]).epsilon(1e-13));
        for (const auto& el : st.elems) {
            for (double gt : el.gtilde_s) CHECK(gt == doctest::Approx(1.0).epsilon(1e-13));
            for (double gr : el.gtilde_r_s) CHECK(std::abs(gr) < 1e-13);
        }
        CHECK(st.eval_z(7.3) == doctest::Approx(7.3).epsilon(1e-13));
    }
    SUBCASE("synthetic linear g input") {
        // Overwrite the g stage with g(s) = s on a single element [0,1] and
        // resweep: z = r^2/2, gtilde = r/2, (gtilde)_r = 1/2.
        Mesh m = build_uniform(1.0, 1);
        PolyField u = project_field(m, 2, [](double) { return 1.0; });
        auto st = reconstruct(u, 1.0);
        const auto& rule = gauss_rule(st.q_rec);
        auto& el = st.elems[0];
        for (int j = 0; j < st.q_rec; ++j) el.g_s[j] = m.element(0).to_r(rule.nodes[j]);
        std::vector<double> lin_modal = {0.5, 0.5}; // s = (x+1)/2 on [0,1]
        el.g_prim = primitive_modal(lin_modal);
        el.int_g = 0.5;
        sweep_z_tilde_g(st);
        CHECK(st.zhat[1] == doctest::Approx(0.5).epsilon(1e-14));
        for (int j = 0; j < st.q_rec; ++j) {
            double s = m.element(0).to_r(rule.nodes[j]);
            CHECK(el.z_s[j] == doctest::Approx(0.5 * s * s).epsilon(1e-13));
            CHECK(el.gtilde_s[j] == doctest::Approx(0.5 * s).epsilon(1e-13));
            CHECK(el.gtilde_r_s[j] == doctest::Approx(0.5).epsilon(1e-13));
        }
    }
    SUBCASE("z_hat strictly increasing") {
        Scenario sc = example1();
        Mesh m = build_uniform(sc.b, 40);
        auto st = reconstruct(initial_data(sc, m, 2), sc.Ub(0.0));
        for (int i = 0; i < m.N; ++i) CHECK(st.zhat[i + 1] > st.zhat[i]);
    }
}

TEST_CASE("u_hat_values") {
    Mesh m = build_uniform(5.0, 5);
    SUBCASE("constant") {
        PolyField u = project_field(m, 1, [](double) { return 2.0; });
        auto st = reconstruct(u, 2.0);
        for (int i = 1; i <= 5; ++i) CHECK(st.uhat[i] == doctest::Approx(2.0).epsilon(1e-13));
    }
    SUBCASE("elementwise-constant read-off") {
        PolyField u = zero_field(m, 1);
        for (int i = 0; i < 5; ++i) {
            // orthonormal constant mode: value c has coefficient c*sqrt(h)
            u.elem(i)[0] = static_cast<double>(i + 1) * std::sqrt(1.0);
        }
        auto st = reconstruct(u, 9.0);
        for (int i = 1; i < 5; ++i)
            CHECK(st.uhat[i] == doctest::Approx(static_cast<double>(i + 1)).epsilon(1e-13));
        CHECK(st.uhat[5] == 9.0);
    }
}

TEST_CASE("full reconstruction invariants") {
    Scenario sc = example1();
    Mesh m = build_uniform(sc.b, 80);
    PolyField u = initial_data(sc, m, 2);
    auto st = reconstruct(u, sc.Ub(0.0));

    SUBCASE("metric bounds at all samples") {
        for (const auto& el : st.elems)
            for (int j = 0; j < st.q_rec; ++j) {
                CHECK(el.g_s[j] > 0.0);
                CHECK(el.g_s[j] <= 1.0);
                CHECK(el.gtilde_s[j] > 0.0);
                CHECK(el.gtilde_s[j] <= el.g_s[j] + 1e-13);
                CHECK(el.gtilde_r_s[j] >= -1e-13);
            }
    }
    SUBCASE("g_hat monotone, anchored at 1") {
        CHECK(st.ghat[m.N] == 1.0);
        for (int i = 0; i < m.N; ++i) CHECK(st.ghat[i] <= st.ghat[i + 1]);
    }
    SUBCASE("single-valuedness of w, z, g at interior nodes") {
        for (int i = 0; i + 1 < m.N; ++i) {
            CHECK(st.eval_w_at(i, 1.0) ==
                  doctest::Approx(st.eval_w_at(i + 1, -1.0)).epsilon(1e-12).scale(1.0));
            CHECK(st.eval_z_at(i, 1.0) ==
                  doctest::Approx(st.eval_z_at(i + 1, -1.0)).epsilon(1e-12).scale(1.0));
            CHECK(st.eval_g_at(i, 1.0) ==
                  doctest::Approx(st.eval_g_at(i + 1, -1.0)).epsilon(1e-12).scale(1.0));
        }
    }
    SUBCASE("traces view matches full arrays") {
        TraceSet t = st.traces();
        CHECK(t.w_hat[0] == 0.0);
        CHECK(t.z_hat[0] == 0.0);
        CHECK(t.g_hat.back() == 1.0);
        CHECK(t.u_hat.back() == sc.Ub(0.0));
        for (double g : t.g_hat) {
            CHECK(g > 0.0);
            CHECK(g <= 1.0);
        }
    }
}

TEST_CASE("g0 against a composite-Simpson oracle of the continuum formula") {
    // Same functional, independent discretization: w by cumulative Simpson,
    // then g(0) = exp(-int_0^b (u-w/r)^2 / r dr) on a dense grid.
    Scenario sc = example1();
    Mesh m = build_uniform(sc.b, 160);
    PolyField u = initial_data(sc, m, 2);
    auto st = reconstruct(u, sc.Ub(0.0));

    const int M = 1'000'000; // even
    double dr = sc.b / M;
    std::vector<double> uv(M + 1);
    for (int j = 0; j <= M; ++j) {
        double r = j * dr;
        uv[j] = (j == M) ? field_eval(u, r, Side::Left) : field_eval(u, r, Side::Right);
    }
    // Cumulative Simpson for w on pairs of intervals.
    std::vector<double> wv(M + 1, 0.0);
    for (int j = 2; j <= M; j += 2)
        wv[j] = wv[j - 2] + dr / 3.0 * (uv[j - 2] + 4.0 * uv[j - 1] + uv[j]);
    for (int j = 1; j <= M; j += 2)
        wv[j] = wv[j - 1] + dr / 12.0 * (5.0 * uv[j - 1] + 8.0 * uv[j] - uv[j + 1 <= M ? j + 1 : j]);
    auto phi = [&](int j) {
        if (j == 0) return 0.0;
        double r = j * dr;
        double d = uv[j] - wv[j] / r;
        return d * d / r;
    };
    double integral = 0.0;
    for (int j = 2; j <= M; j += 2)
        integral += dr / 3.0 * (phi(j - 2) + 4.0 * phi(j - 1) + phi(j));
    double g0_oracle = std::exp(-integral);
    CHECK(st.g0 == doctest::Approx(g0_oracle).epsilon(1e-6));
}

TEST_CASE("reconstruction consistency as q_rec refines") {
    Scenario sc = example1();
    Mesh m = build_uniform(sc.b, 40);
    PolyField u = initial_data(sc, m, 2);
    double ref = reconstruct(u, sc.Ub(0.0), {21, ExecPolicy::Serial}).g0;
    double e_prev = 0.0;
    for (int q : {5, 9, 13}) {
        double g0 = reconstruct(u, sc.Ub(0.0), {q, ExecPolicy::Serial}).g0;
        double e = std::abs(g0 - ref);
        if (e_prev > 0.0) CHECK(e <= e_prev);
        e_prev = e;
    }
    CHECK(e_prev < 1e-10);
}

TEST_CASE("serial and parallel reconstruction agree bitwise") {
    Scenario sc = example2();
    Mesh m = build_uniform(sc.b, 64);
    PolyField u = initial_data(sc, m, 3);
    auto a = reconstruct(u, sc.Ub(0.0), {0, ExecPolicy::Serial});
    auto b = reconstruct(u, sc.Ub(0.0), {0, ExecPolicy::Parallel});
    CHECK(a.g0 == b.g0);
    for (int i = 0; i <= m.N; ++i) {
        CHECK(a.what[i] == b.what[i]);
        CHECK(a.zhat[i] == b.zhat[i]);
        CHECK(a.ghat[i] == b.ghat[i]);
    }
    for (int i = 0; i < m.N; ++i)
        for (int j = 0; j < a.q_rec; ++j) {
            CHECK(a.elems[i].g_s[j] == b.elems[i].g_s[j]);
            CHECK(a.elems[i].gtilde_s[j] == b.elems[i].gtilde_s[j]);
        }
}

TEST_CASE("deep-collapse guard") {
    // Large-amplitude linear data drives the exponent past the underflow
    // threshold; g must stay positive and finite with the flag raised.
    Mesh m = build_uniform(10.0, 20);
    PolyField u = project_field(m, 2, [](double r) { return 10.0 * r; });
    auto st = reconstruct(u, 100.0);
    CHECK(st.deep_collapse);
    CHECK(st.g0 > 0.0);
    CHECK(std::isfinite(st.g0));
    for (const auto& el : st.elems)
        for (double g : el.g_s) {
            CHECK(g > 0.0);
            CHECK(std::isfinite(g));
        }
}
