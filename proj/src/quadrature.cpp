#include "hdg/quadrature.hpp"

#include <array>
#include <cmath>
#include <mutex>

#include "hdg/errors.hpp"

namespace hdg {

double legendre(int n, double x) {
    if (n == 0) return 1.0;
    double pm1 = 1.0, p = x;
    for (int m = 1; m < n; ++m) {
        double pp1 = ((2 * m + 1) * x * p - m * pm1) / (m + 1);
        pm1 = p;
        p = pp1;
    }
    return p;
}

void legendre_all(double x, int max_deg, double* out) {
    out[0] = 1.0;
    if (max_deg == 0) return;
    out[1] = x;
    for (int m = 1; m < max_deg; ++m)
        out[m + 1] = ((2 * m + 1) * x * out[m] - m * out[m - 1]) / (m + 1);
}

double legendre_deriv(int n, double x) {
    if (n == 0) return 0.0;
    // (1-x^2) P_n' = n (P_{n-1} - x P_n); endpoints by the closed form.
    if (std::abs(1.0 - x * x) < 1e-14) {
        double sign = (x > 0 || n % 2 == 1) ? 1.0 : -1.0;
        return sign * 0.5 * n * (n + 1);
    }
    return n * (legendre(n - 1, x) - x * legendre(n, x)) / (1.0 - x * x);
}

std::vector<double> legendre_table(const QuadRule& rule, int max_deg) {
    std::vector<double> tab(static_cast<size_t>(max_deg + 1) * rule.q);
    std::vector<double> col(max_deg + 1);
    for (int j = 0; j < rule.q; ++j) {
        legendre_all(rule.nodes[j], max_deg, col.data());
        for (int m = 0; m <= max_deg; ++m)
            tab[static_cast<size_t>(m) * rule.q + j] = col[m];
    }
    return tab;
}

namespace {

QuadRule compute_rule(int q) {
    QuadRule r;
    r.q = q;
    r.nodes.assign(q, 0.0);
    r.weights.assign(q, 0.0);
    const double pi = 3.14159265358979323846;
    int half = (q + 1) / 2;
    for (int j = 0; j < half; ++j) {
        double x = -std::cos(pi * (j + 0.75) / (q + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p = legendre(q, x);
            dp = legendre_deriv(q, x);
            double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        dp = legendre_deriv(q, x);
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        r.nodes[j] = x;
        r.weights[j] = w;
        r.nodes[q - 1 - j] = -x;
        r.weights[q - 1 - j] = w;
    }
    if (q % 2 == 1) r.nodes[q / 2] = 0.0;
    return r;
}

} // namespace

const QuadRule& gauss_rule(int q) {
    if (q < 1 || q > 64)
        throw ConfigError("gauss_rule: order must be in [1,64], got " + std::to_string(q));
    static std::array<QuadRule, 65> cache;
    static std::array<std::once_flag, 65> flags;
    std::call_once(flags[q], [q] { cache[q] = compute_rule(q); });
    return cache[q];
}

} // namespace hdg
