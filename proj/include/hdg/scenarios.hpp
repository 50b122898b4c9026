#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hdg/field.hpp"

namespace hdg {

/// Named initial/boundary data preset.
struct Scenario {
    std::string name;
    double b = 0.0;
    std::function<double(double)> u0;      // evolution variable u = (r utilde)_r
    std::function<double(double)> utilde0; // scalar field profile
    std::function<double(double)> Ub;
    double default_T = 0.0;
    std::vector<double> default_snapshots;
    std::string notes;
};

/// Steep tanh profile on [0,10]; rapid collapse benchmark.
Scenario example1();
/// Shallower tanh profile on [0,10]; slow collapse.
Scenario example2();
/// Weak Gaussian pulse on [0,20] with zero inflow.
Scenario example3();

Scenario vacuum();
Scenario constant(double c);

/// Lookup by CLI name: example1 | example2 | example3 | vacuum | constant.
Scenario make_scenario(const std::string& name, double constant_value = 0.0);

/// Initial coefficients by elementwise Gauss-Radau projection.
PolyField initial_data(const Scenario& s, const Mesh& mesh, int k);

} // namespace hdg
