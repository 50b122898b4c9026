#include "hdg/scenarios.hpp"

#include <cmath>

#include "hdg/errors.hpp"

namespace hdg {

namespace {
double sech2(double x) {
    double c = std::cosh(x);
    return 1.0 / (c * c);
}
} // namespace

Scenario example1() {
    Scenario s;
    s.name = "example1";
    s.b = 10.0;
    s.utilde0 = [](double r) { return 0.45 * std::tanh(3.0 * (r - 5.0)); };
    s.u0 = [](double r) {
        return 0.45 * std::tanh(3.0 * (r - 5.0)) + 1.35 * r * sech2(3.0 * (r - 5.0));
    };
    double ub = s.u0(s.b);
    s.Ub = [ub](double) { return ub; };
    s.default_T = 5.0;
    s.default_snapshots = {0.0, 0.5, 2.0, 5.0};
    s.notes = "steep tanh data; rapid transition to a collapsed metric profile";
    return s;
}

Scenario example2() {
    Scenario s;
    s.name = "example2";
    s.b = 10.0;
    const double m = 1.0 / 5.1, rc = 6.0;
    s.utilde0 = [=](double r) { return std::tanh(m * (r - rc)); };
    s.u0 = [=](double r) { return std::tanh(m * (r - rc)) + m * r * sech2(m * (r - rc)); };
    double ub = s.u0(s.b);
    s.Ub = [ub](double) { return ub; };
    s.default_T = 40.0;
    s.default_snapshots = {0.0, 10.0, 20.0, 40.0};
    s.notes = "lower-energy tanh data; slow collapse";
    return s;
}

Scenario example3() {
    Scenario s;
    s.name = "example3";
    s.b = 20.0;
    const double A = 8e-3, r0 = 8.0, sigma = 1.5;
    s.utilde0 = [=](double r) {
        double d = (r - r0) / sigma;
        return A * r * r * std::exp(-d * d);
    };
    s.u0 = [=](double r) {
        double d = (r - r0) / sigma;
        return A * std::exp(-d * d) * (3.0 * r * r - 2.0 * r * r * r * (r - r0) / (sigma * sigma));
    };
    s.Ub = [](double) { return 0.0; };
    s.default_T = 60.0;
    s.default_snapshots = {0.0, 20.0, 60.0};
    s.notes = "smooth weak-field pulse, zero inflow";
    return s;
}

Scenario vacuum() {
    Scenario s;
    s.name = "vacuum";
    s.b = 10.0;
    s.utilde0 = [](double) { return 0.0; };
    s.u0 = [](double) { return 0.0; };
    s.Ub = [](double) { return 0.0; };
    s.default_T = 1.0;
    s.default_snapshots = {0.0, 1.0};
    return s;
}

Scenario constant(double c) {
    Scenario s;
    s.name = "constant";
    s.b = 10.0;
    s.utilde0 = [c](double) { return c; };
    s.u0 = [c](double) { return c; };
    s.Ub = [c](double) { return c; };
    s.default_T = 1.0;
    s.default_snapshots = {0.0, 1.0};
    return s;
}

Scenario make_scenario(const std::string& name, double constant_value) {
    if (name == "example1") return example1();
    if (name == "example2") return example2();
    if (name == "example3") return example3();
    if (name == "vacuum") return vacuum();
    if (name == "constant") return constant(constant_value);
    throw ConfigError("unknown scenario: " + name);
}

PolyField initial_data(const Scenario& s, const Mesh& mesh, int k) {
    return project_field(mesh, k, s.u0);
}

} // namespace hdg
