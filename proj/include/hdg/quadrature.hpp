#pragma once

#include <span>
#include <vector>

namespace hdg {

/// Gauss-Legendre rule on the reference interval [-1,1].
/// Weights sum to 2; exact for polynomials of degree <= 2q-1.
struct QuadRule {
    int q = 0;
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Nodes by Newton iteration on the Legendre roots, seeded with the
/// Chebyshev angles. Deterministic for fixed q. Valid for 1 <= q <= 64.
const QuadRule& gauss_rule(int q);

/// Legendre polynomial P_n(x) by the three-term recurrence.
double legendre(int n, double x);

/// Fills out[0..max_deg] with P_0(x)..P_max_deg(x).
void legendre_all(double x, int max_deg, double* out);

/// Derivative P_n'(x).
double legendre_deriv(int n, double x);

/// Row-major table P_m(x_j), m = 0..max_deg, j = 0..q-1.
std::vector<double> legendre_table(const QuadRule& rule, int max_deg);

} // namespace hdg
