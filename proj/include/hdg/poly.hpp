#pragma once

#include <functional>
#include <span>
#include <vector>

#include "hdg/quadrature.hpp"

namespace hdg {

struct Interval {
    double a = 0.0;
    double b = 1.0;
    double h() const { return b - a; }
    /// Physical coordinate of reference point x in [-1,1].
    double to_r(double x) const { return a + 0.5 * h() * (x + 1.0); }
    /// Reference coordinate of r in [a,b].
    double to_x(double r) const { return 2.0 * (r - a) / h() - 1.0; }
};

/// Polynomial on one element, stored in the orthonormal Legendre basis
/// phi_m(r) = sqrt((2m+1)/h) P_m(x(r)), so the element L2 norm is the
/// Euclidean norm of the coefficients.
struct PolyCoeffs {
    int degree = 0;
    Interval elem;
    std::vector<double> coeffs; // size degree+1
};

double poly_eval(const PolyCoeffs& p, double r);

/// Antiderivative P with P(elem.a) = 0 and P' == p as polynomials.
PolyCoeffs poly_antiderivative(const PolyCoeffs& p);

/// Left-endpoint-matching projection onto P^k: the residual is orthogonal
/// to P^{k-1} and the value at elem.a is matched exactly.
PolyCoeffs radau_project(const std::function<double(double)>& f, Interval elem, int k,
                         int q_proj = 0);

// --- modal helpers on the reference interval --------------------------------
// "Modal" means plain Legendre coefficients c with v(x) = sum c_m P_m(x).

double eval_modal(std::span<const double> c, double x);

/// Primitive C with C(-1) = 0 and C' = v (one extra mode).
std::vector<double> primitive_modal(std::span<const double> c);

/// Monomial coefficients in t = (x+1)/2 in [0,1].
std::vector<double> modal_to_mono(std::span<const double> c);

double eval_mono(std::span<const double> c, double t);

/// Orthonormal element coefficients -> modal reference coefficients.
std::vector<double> ortho_to_modal(std::span<const double> u, double h);

std::vector<double> modal_to_ortho(std::span<const double> c, double h);

} // namespace hdg
