#include "hdg/converge.hpp"

#include <algorithm>
#include <cmath>

#include "hdg/errors.hpp"

namespace hdg {

ConvergeResult run_convergence(const Scenario& scenario, ConvergeOptions opt) {
    if (opt.degrees.empty() || opt.Ns.empty())
        throw ConfigError("run_convergence: empty study");
    int maxN = *std::max_element(opt.Ns.begin(), opt.Ns.end());
    int maxk = *std::max_element(opt.degrees.begin(), opt.degrees.end());
    if (opt.N_ref == 0) opt.N_ref = 4 * maxN;
    if (opt.k_ref == 0) opt.k_ref = maxk + 2;
    for (int N : opt.Ns) {
        if (N >= opt.N_ref || opt.N_ref % N != 0)
            throw ConfigError("run_convergence: study mesh N=" + std::to_string(N) +
                              " does not nest in N_ref=" + std::to_string(opt.N_ref));
    }

    ConvergeResult result;
    result.N_ref = opt.N_ref;
    result.k_ref = opt.k_ref;

    Mesh ref_mesh = build_uniform(scenario.b, opt.N_ref);
    double safe = cfl_dt(ref_mesh, opt.k_ref, 0.9);
    result.dt_ref = opt.dt_ref > 0.0 ? opt.dt_ref
                    : (opt.dt > 0.0 ? std::min(opt.dt, safe) : safe);

    TimeConfig ref_cfg;
    ref_cfg.T_final = opt.T;
    ref_cfg.dt = result.dt_ref;
    PolyField ref0 = initial_data(scenario, ref_mesh, opt.k_ref);
    RunRecord ref_run = integrate(ref0, ref_cfg, scenario.Ub, opt.rhs);
    const PolyField& ref_u = ref_run.final_state;
    ReconstructedState ref_state =
        reconstruct(ref_u, scenario.Ub(opt.T), {opt.rhs.q_rec, opt.rhs.exec});
    result.M_ref = bondi_mass(ref_state);

    for (int k : opt.degrees) {
        std::vector<ConvergeRow> rows;
        for (int N : opt.Ns) {
            Mesh mesh = build_uniform(scenario.b, N);
            TimeConfig cfg;
            cfg.T_final = opt.T;
            if (opt.dt > 0.0) cfg.dt = opt.dt;
            PolyField u0 = initial_data(scenario, mesh, k);
            RunRecord run = integrate(u0, cfg, scenario.Ub, opt.rhs);
            ReconstructedState state =
                reconstruct(run.final_state, scenario.Ub(opt.T), {opt.rhs.q_rec, opt.rhs.exec});
            ConvergeRow row;
            row.N = N;
            row.h = mesh.h_max;
            row.Eu = l2_error(run.final_state, ref_u);
            row.Eg = l2_error_g(state, ref_state);
            row.Em = std::abs(bondi_mass(state) - result.M_ref);
            if (!rows.empty()) {
                const auto& prev = rows.back();
                double lg = std::log2(row.h > 0 ? prev.h / row.h : 2.0);
                row.rate_u = std::log2(prev.Eu / row.Eu) / lg;
                row.rate_g = std::log2(prev.Eg / row.Eg) / lg;
                row.rate_m = std::log2(prev.Em / row.Em) / lg;
            }
            rows.push_back(row);
        }
        result.tables[k] = std::move(rows);
    }
    return result;
}

} // namespace hdg
