#pragma once

#include <map>
#include <vector>

#include "hdg/scenarios.hpp"
#include "hdg/time_integration.hpp"

namespace hdg {

struct ConvergeOptions {
    std::vector<int> degrees = {1, 2, 3};
    std::vector<int> Ns = {40, 80, 160, 320};
    double T = 0.5;
    double dt = 0.01;   // study meshes; <= 0 -> per-mesh CFL step
    int N_ref = 0;      // 0 -> 4x finest study mesh
    int k_ref = 0;      // 0 -> max degree + 2
    double dt_ref = 0;  // 0 -> min(dt, CFL-safe step for the reference)
    RhsOptions rhs;
};

struct ConvergeRow {
    int N = 0;
    double h = 0.0;
    double Eu = 0.0, rate_u = 0.0;
    double Eg = 0.0, rate_g = 0.0;
    double Em = 0.0, rate_m = 0.0; // Bondi-mass error at T
};

struct ConvergeResult {
    std::map<int, std::vector<ConvergeRow>> tables; // keyed by degree
    int N_ref = 0, k_ref = 0;
    double dt_ref = 0.0;
    double M_ref = 0.0;
};

/// Computes the fine-mesh reference once, then errors and observed rates
/// for every (k, N) in the study. All study meshes must divide N_ref.
ConvergeResult run_convergence(const Scenario& scenario, ConvergeOptions opt);

} // namespace hdg
