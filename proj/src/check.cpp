#include "hdg/check.hpp"

#include <cmath>

namespace hdg {

CheckResult validate_state(const ReconstructedState& state, double tol) {
    const Mesh& mesh = *state.mesh;
    for (int i = 0; i < mesh.N; ++i) {
        const auto& el = state.elems[i];
        for (int j = 0; j < state.q_rec; ++j) {
            double g = el.g_s[j];
            double gt = el.gtilde_s[j];
            if (!(g > 0.0) || g > 1.0)
                return {false, "metric-bounds", "g sample outside (0,1]", -1, i};
            if (!(gt > 0.0) || gt > g + tol)
                return {false, "metric-bounds", "gtilde sample outside (0,g]", -1, i};
            if (el.gtilde_r_s[j] < -10.0 * tol)
                return {false, "gtilde-derivative-sign", "(gtilde)_r negative", -1, i};
        }
    }
    for (int i = 0; i < mesh.N; ++i) {
        if (state.ghat[i] > state.ghat[i + 1])
            return {false, "trace-monotonicity", "g_hat decreasing", -1, i};
        if (!(state.zhat[i + 1] > state.zhat[i]) && state.elems[i].int_g > 0.0)
            return {false, "trace-monotonicity", "z_hat not increasing", -1, i};
    }
    return {};
}

CheckResult run_check(const Scenario& scenario, const CheckOptions& opt) {
    Mesh mesh = build_uniform(scenario.b, opt.N);
    PolyField u = initial_data(scenario, mesh, opt.k);

    double T = opt.time.T_final > 0.0 ? opt.time.T_final : scenario.default_T;
    double dt = opt.time.dt ? *opt.time.dt : cfl_dt(mesh, opt.k, opt.time.cfl);

    std::vector<DiagnosticsRecord> history;
    double t = 0.0;
    int step = 0;
    const double eps = 1e-12 * std::max(1.0, T);

    auto audit = [&]() -> CheckResult {
        ReconstructedState state = reconstruct(u, scenario.Ub(t), {opt.rhs.q_rec, opt.rhs.exec});
        if (opt.corrupt) opt.corrupt(state);
        CheckResult r = validate_state(state, opt.metric_tol);
        if (!r.ok) {
            r.step = step;
            return r;
        }
        history.push_back(make_record(t, u, state, scenario.Ub(t)));
        return {};
    };

    CheckResult r = audit();
    if (!r.ok) return r;
    while (t < T - eps) {
        double step_dt = std::min(dt, T - t);
        u = rk4_step(u, t, step_dt, scenario.Ub, opt.rhs);
        t += step_dt;
        ++step;
        r = audit();
        if (!r.ok) return r;
    }

    double residual = energy_budget_residual(history);
    if (residual > opt.energy_tol)
        return {false, "energy-budget", "integrated residual " + std::to_string(residual),
                step, -1};
    return {};
}

} // namespace hdg
