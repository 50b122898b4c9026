#pragma once

#include <functional>
#include <string>

#include "hdg/scenarios.hpp"
#include "hdg/time_integration.hpp"

namespace hdg {

struct CheckOptions {
    int N = 160;
    int k = 2;
    RhsOptions rhs;
    TimeConfig time;            // T_final <= 0 -> scenario default
    double energy_tol = 1e-6;
    double metric_tol = 1e-13;
    // Test hook: mutates the reconstructed state before validation.
    std::function<void(ReconstructedState&)> corrupt;
};

struct CheckResult {
    bool ok = true;
    std::string tag;    // violated invariant family, empty on success
    std::string detail;
    int step = -1;
    int element = -1;
};

/// Runs the scenario while asserting the reconstruction and energy
/// invariants after every accepted step.
CheckResult run_check(const Scenario& scenario, const CheckOptions& opt);

/// Validates one reconstructed state; shared by run_check and tests.
CheckResult validate_state(const ReconstructedState& state, double metric_tol);

} // namespace hdg
