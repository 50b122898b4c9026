#include "hdg/field.hpp"

#include <cmath>

#include "hdg/errors.hpp"

namespace hdg {

PolyField zero_field(const Mesh& mesh, int k) {
    PolyField u;
    u.mesh = &mesh;
    u.k = k;
    u.coeffs.assign(static_cast<size_t>(mesh.N) * (k + 1), 0.0);
    return u;
}

PolyField project_field(const Mesh& mesh, int k, const std::function<double(double)>& f) {
    PolyField u = zero_field(mesh, k);
    for (int i = 0; i < mesh.N; ++i) {
        PolyCoeffs p = radau_project(f, mesh.element(i), k);
        auto blk = u.elem(i);
        for (int m = 0; m <= k; ++m) blk[m] = p.coeffs[m];
    }
    return u;
}

double field_eval(const PolyField& u, double r, Side side) {
    const Mesh& mesh = *u.mesh;
    if (r < 0.0 || r > mesh.b) throw ConfigError("field_eval: r outside [0,b]");
    int i = mesh.find_element(r);
    // Side selection matters only when r sits exactly on an interior node.
    if (side == Side::Right && i + 1 < mesh.N && r == mesh.nodes[i + 1]) i += 1;
    if (side == Side::Left && i > 0 && r == mesh.nodes[i]) i -= 1;
    Interval e = mesh.element(i);
    auto c = ortho_to_modal(u.elem(i), e.h());
    return eval_modal(c, e.to_x(r));
}

double l2_norm(const PolyField& u) {
    double s = 0.0;
    for (double c : u.coeffs) s += c * c;
    return std::sqrt(s);
}

} // namespace hdg
