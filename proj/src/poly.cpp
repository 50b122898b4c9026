#include "hdg/poly.hpp"

#include <algorithm>
#include <cmath>

#include "hdg/errors.hpp"

namespace hdg {

double eval_modal(std::span<const double> c, double x) {
    // Clenshaw-free backward summation via the explicit recurrence; the
    // degrees involved are small.
    double pm1 = 1.0, p = x, acc = c[0];
    if (c.size() > 1) acc += c[1] * x;
    for (size_t m = 1; m + 1 < c.size(); ++m) {
        double pp1 = ((2.0 * m + 1.0) * x * p - m * pm1) / (m + 1.0);
        pm1 = p;
        p = pp1;
        acc += c[m + 1] * p;
    }
    return acc;
}

std::vector<double> primitive_modal(std::span<const double> c) {
    std::vector<double> C(c.size() + 1, 0.0);
    if (!c.empty()) {
        // int P_0 = P_1 + P_0, int P_m = (P_{m+1} - P_{m-1})/(2m+1); each
        // term vanishes at x = -1.
        C[0] += c[0];
        C[1] += c[0];
        for (size_t m = 1; m < c.size(); ++m) {
            double f = c[m] / (2.0 * m + 1.0);
            C[m + 1] += f;
            C[m - 1] -= f;
        }
    }
    return C;
}

std::vector<double> modal_to_mono(std::span<const double> c) {
    // Monomial expansions of P_m(2t-1) by recurrence.
    size_t n = c.size();
    std::vector<std::vector<double>> P(n);
    P[0] = {1.0};
    if (n > 1) P[1] = {-1.0, 2.0};
    for (size_t m = 1; m + 1 < n; ++m) {
        std::vector<double> next(m + 2, 0.0);
        // (m+1) P_{m+1} = (2m+1)(2t-1) P_m - m P_{m-1}
        for (size_t j = 0; j <= m; ++j) {
            next[j + 1] += (2.0 * m + 1.0) * 2.0 * P[m][j];
            next[j] -= (2.0 * m + 1.0) * P[m][j];
        }
        for (size_t j = 0; j < P[m - 1].size(); ++j) next[j] -= m * P[m - 1][j];
        for (double& v : next) v /= (m + 1.0);
        P[m + 1] = std::move(next);
    }
    std::vector<double> mono(n, 0.0);
    for (size_t m = 0; m < n; ++m)
        for (size_t j = 0; j < P[m].size(); ++j) mono[j] += c[m] * P[m][j];
    return mono;
}

double eval_mono(std::span<const double> c, double t) {
    double acc = 0.0;
    for (size_t j = c.size(); j-- > 0;) acc = acc * t + c[j];
    return acc;
}

std::vector<double> ortho_to_modal(std::span<const double> u, double h) {
    std::vector<double> c(u.size());
    for (size_t m = 0; m < u.size(); ++m) c[m] = u[m] * std::sqrt((2.0 * m + 1.0) / h);
    return c;
}

std::vector<double> modal_to_ortho(std::span<const double> c, double h) {
    std::vector<double> u(c.size());
    for (size_t m = 0; m < c.size(); ++m) u[m] = c[m] * std::sqrt(h / (2.0 * m + 1.0));
    return u;
}

double poly_eval(const PolyCoeffs& p, double r) {
    auto c = ortho_to_modal(p.coeffs, p.elem.h());
    return eval_modal(c, p.elem.to_x(r));
}

PolyCoeffs poly_antiderivative(const PolyCoeffs& p) {
    double h = p.elem.h();
    auto c = ortho_to_modal(p.coeffs, h);
    auto C = primitive_modal(c);
    for (double& v : C) v *= 0.5 * h; // dr = (h/2) dx
    PolyCoeffs out;
    out.degree = p.degree + 1;
    out.elem = p.elem;
    out.coeffs = modal_to_ortho(C, h);
    return out;
}

PolyCoeffs radau_project(const std::function<double(double)>& f, Interval elem, int k,
                         int q_proj) {
    if (k < 0) throw ConfigError("radau_project: negative degree");
    if (q_proj <= 0) q_proj = std::min(64, k + 12);
    const QuadRule& rule = gauss_rule(q_proj);
    auto tab = legendre_table(rule, k);
    double h = elem.h();

    PolyCoeffs out;
    out.degree = k;
    out.elem = elem;
    out.coeffs.assign(k + 1, 0.0);
    // Moments against the orthonormal modes 0..k-1.
    for (int j = 0; j < rule.q; ++j) {
        double fr = f(elem.to_r(rule.nodes[j]));
        double wj = 0.5 * h * rule.weights[j];
        for (int m = 0; m < k; ++m)
            out.coeffs[m] += wj * fr * std::sqrt((2.0 * m + 1.0) / h) * tab[static_cast<size_t>(m) * rule.q + j];
    }
    // Top mode fixes the left endpoint value.
    double residual = f(elem.a);
    for (int m = 0; m < k; ++m) {
        double phi_left = std::sqrt((2.0 * m + 1.0) / h) * ((m % 2 == 0) ? 1.0 : -1.0);
        residual -= out.coeffs[m] * phi_left;
    }
    double phik_left = std::sqrt((2.0 * k + 1.0) / h) * ((k % 2 == 0) ? 1.0 : -1.0);
    out.coeffs[k] = residual / phik_left;
    return out;
}

} // namespace hdg
