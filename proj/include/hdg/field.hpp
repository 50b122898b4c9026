#pragma once

#include <functional>
#include <span>
#include <vector>

#include "hdg/mesh.hpp"

namespace hdg {

enum class Side { Left, Right };

/// Broken polynomial field: one orthonormal-Legendre coefficient block per
/// element, stored contiguously so the time integrator sees one flat array.
struct PolyField {
    const Mesh* mesh = nullptr;
    int k = 0;
    std::vector<double> coeffs; // N*(k+1)

    int block_size() const { return k + 1; }
    std::span<double> elem(int i) {
        return {coeffs.data() + static_cast<size_t>(i) * (k + 1), static_cast<size_t>(k + 1)};
    }
    std::span<const double> elem(int i) const {
        return {coeffs.data() + static_cast<size_t>(i) * (k + 1), static_cast<size_t>(k + 1)};
    }
};

PolyField zero_field(const Mesh& mesh, int k);

/// Elementwise Gauss-Radau projection of f.
PolyField project_field(const Mesh& mesh, int k, const std::function<double(double)>& f);

/// Value at r; at interior mesh nodes the side picks the element.
double field_eval(const PolyField& u, double r, Side side = Side::Left);

/// Broken L2 norm; equals the flat coefficient norm by orthonormality.
double l2_norm(const PolyField& u);

} // namespace hdg
