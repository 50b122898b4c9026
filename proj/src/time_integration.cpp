#include "hdg/time_integration.hpp"

#include <algorithm>
#include <cmath>

#include "hdg/errors.hpp"

namespace hdg {

double cfl_dt(const Mesh& mesh, int k, double cfl) {
    return cfl * mesh.h_min / (0.5 * (2.0 * k + 1.0));
}

PolyField rk4_step(const PolyField& u, double t, double dt,
                   const std::function<double(double)>& U_b, const RhsOptions& opt) {
    if (dt <= 0.0) throw ConfigError("rk4_step: dt must be positive");
    size_t n = u.coeffs.size();
    auto k1 = assemble_rhs(u, t, U_b, opt);

    PolyField stage = u;
    for (size_t j = 0; j < n; ++j) stage.coeffs[j] = u.coeffs[j] + 0.5 * dt * k1.coeffs[j];
    auto k2 = assemble_rhs(stage, t + 0.5 * dt, U_b, opt);

    for (size_t j = 0; j < n; ++j) stage.coeffs[j] = u.coeffs[j] + 0.5 * dt * k2.coeffs[j];
    auto k3 = assemble_rhs(stage, t + 0.5 * dt, U_b, opt);

    for (size_t j = 0; j < n; ++j) stage.coeffs[j] = u.coeffs[j] + dt * k3.coeffs[j];
    auto k4 = assemble_rhs(stage, t + dt, U_b, opt);

    PolyField out = u;
    for (size_t j = 0; j < n; ++j)
        out.coeffs[j] = u.coeffs[j] + dt / 6.0 * (k1.coeffs[j] + 2.0 * k2.coeffs[j] +
                                                  2.0 * k3.coeffs[j] + k4.coeffs[j]);
    for (size_t j = 0; j < n; ++j)
        if (!std::isfinite(out.coeffs[j]))
            throw BlowupError(t, static_cast<int>(j) / (u.k + 1), "non-finite state after step");
    return out;
}

RunRecord integrate(const PolyField& u0, const TimeConfig& cfg,
                    const std::function<double(double)>& U_b, const RhsOptions& opt,
                    const Observer& on_snapshot) {
    if (cfg.T_final < 0.0) throw ConfigError("integrate: negative final time");
    double dt0 = cfg.dt ? *cfg.dt : cfl_dt(*u0.mesh, u0.k, cfg.cfl);
    if (dt0 <= 0.0) throw ConfigError("integrate: nonpositive step");

    std::vector<double> marks = cfg.snapshot_times;
    std::sort(marks.begin(), marks.end());
    marks.erase(std::unique(marks.begin(), marks.end()), marks.end());

    RunRecord rec;
    PolyField u = u0;
    double t = 0.0;

    auto observe = [&](bool snapshot) {
        ReconstructedState state = reconstruct(u, U_b(t), {opt.q_rec, opt.exec});
        DiagnosticsRecord d = make_record(t, u, state, U_b(t));
        rec.history.push_back(d);
        rec.deep_collapse = rec.deep_collapse || state.deep_collapse;
        if (snapshot && on_snapshot) on_snapshot(t, u, state.traces(), state, d);
    };

    auto is_mark = [&](double tt) {
        return std::any_of(marks.begin(), marks.end(), [&](double m) { return m == tt; });
    };

    observe(is_mark(0.0) || marks.empty() || cfg.T_final == 0.0);
    size_t next_mark = 0;
    while (next_mark < marks.size() && marks[next_mark] <= 0.0) ++next_mark;

    const double eps = 1e-12 * std::max(1.0, cfg.T_final);
    while (t < cfg.T_final - eps) {
        double dt = dt0;
        double target = cfg.T_final;
        if (next_mark < marks.size() && marks[next_mark] < target) target = marks[next_mark];
        bool hit = false;
        if (t + dt >= target - eps) {
            dt = target - t;
            hit = true;
        }
        u = rk4_step(u, t, dt, U_b, opt);
        t = hit ? target : t + dt;
        bool snapshot = false;
        if (hit && next_mark < marks.size() && marks[next_mark] == target) {
            snapshot = true;
            ++next_mark;
        }
        observe(snapshot || (t >= cfg.T_final - eps));
    }

    rec.energy_budget_residual = energy_budget_residual(rec.history);
    if (!rec.history.empty())
        rec.history.back().energy_budget_residual = rec.energy_budget_residual;
    rec.final_state = std::move(u);
    return rec;
}

} // namespace hdg
