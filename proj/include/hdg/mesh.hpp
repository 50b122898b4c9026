#pragma once

#include <vector>

#include "hdg/poly.hpp"

namespace hdg {

/// Partition 0 = r_0 < r_1 < ... < r_N = b of the radial domain.
struct Mesh {
    double b = 0.0;
    int N = 0;
    std::vector<double> nodes;  // size N+1
    std::vector<double> widths; // size N
    double h_max = 0.0;
    double h_min = 0.0;

    Interval element(int i) const { return {nodes[i], nodes[i + 1]}; }
    /// Index of the element containing r (ties resolve to the left element
    /// except at r = 0).
    int find_element(double r) const;
};

Mesh build_uniform(double b, int N);

} // namespace hdg
