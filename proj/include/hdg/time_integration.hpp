#pragma once

#include <functional>
#include <optional>

#include "hdg/diagnostics.hpp"
#include "hdg/operator.hpp"

namespace hdg {

struct TimeConfig {
    double T_final = 0.0;
    std::optional<double> dt;       // explicit step; overrides cfl
    double cfl = 0.5;               // used when dt is absent
    std::vector<double> snapshot_times;
};

/// dt = cfl * h_min / ((1/2)(2k+1)); characteristic speed bound 1/2.
double cfl_dt(const Mesh& mesh, int k, double cfl);

/// One classical RK4 step; the boundary function is sampled at stage times.
PolyField rk4_step(const PolyField& u, double t, double dt,
                   const std::function<double(double)>& U_b, const RhsOptions& opt = {});

/// Read-only per-snapshot callback.
using Observer = std::function<void(double t, const PolyField&, const TraceSet&,
                                    const ReconstructedState&, const DiagnosticsRecord&)>;

struct RunRecord {
    std::vector<DiagnosticsRecord> history; // one entry per accepted step (incl. t = 0)
    double energy_budget_residual = 0.0;
    bool deep_collapse = false;
    PolyField final_state;
};

/// Marches u0 to T_final, landing exactly on every snapshot time and on
/// T_final by step clipping.
RunRecord integrate(const PolyField& u0, const TimeConfig& cfg,
                    const std::function<double(double)>& U_b, const RhsOptions& opt = {},
                    const Observer& on_snapshot = {});

} // namespace hdg
