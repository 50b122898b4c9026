#include "hdg/operator.hpp"

#include <cmath>

#include "hdg/errors.hpp"

namespace hdg {

double numerical_flux(const ReconstructedState& state, int i, Side side) {
    if (side == Side::Right) {
        // uhat at the right face; at r = b this is U_b.
        return 0.5 * state.gtilde_hat[i + 1] * state.uhat[i + 1];
    }
    // Left face uses the element's own trace of u_h; at r = 0 the weight
    // gtilde_hat[0] is g_h(0).
    return 0.5 * state.gtilde_hat[i] * state.u_left[i];
}

Residual assemble_rhs(const PolyField& u, double t, const std::function<double(double)>& U_b,
                      const RhsOptions& opt, ReconstructedState* out_state) {
    const Mesh& mesh = *u.mesh;
    int k = u.k;
    int q_vol = opt.q_vol > 0 ? opt.q_vol : k + 3;
    if (q_vol < 1 || q_vol > 64) throw ConfigError("assemble_rhs: q_vol out of range");

    ReconstructedState state = reconstruct(u, U_b(t), {opt.q_rec, opt.exec});

    const QuadRule& rule = gauss_rule(q_vol);
    auto tab = legendre_table(rule, k);
    std::vector<double> dtab(static_cast<size_t>(k + 1) * q_vol);
    for (int m = 0; m <= k; ++m)
        for (int j = 0; j < q_vol; ++j)
            dtab[static_cast<size_t>(m) * q_vol + j] = legendre_deriv(m, rule.nodes[j]);

    Residual res;
    res.coeffs.assign(u.coeffs.size(), 0.0);
    int blowup_elem = -1;

    auto body = [&](int i) {
        Interval e = mesh.element(i);
        double h = e.h();
        double* out = res.coeffs.data() + static_cast<size_t>(i) * (k + 1);
        for (int j = 0; j < q_vol; ++j) {
            double x = rule.nodes[j];
            double s = e.to_r(x);
            double uv = state.eval_u_at(i, x);
            double gt = state.eval_gtilde_at(i, x);
            double g = state.eval_g_at(i, x);
            double ut = state.eval_utilde_at(i, x);
            double gtr = (g - gt) / s;
            double w = rule.weights[j];
            // (1/2 gtilde u, phi_r): the dr and d/dr Jacobians cancel.
            double f1 = w * 0.5 * gt * uv;
            // (1/2 (gtilde)_r utilde, phi) with the dr Jacobian.
            double f2 = 0.5 * h * w * 0.5 * gtr * ut;
            for (int m = 0; m <= k; ++m) {
                double nm = std::sqrt((2.0 * m + 1.0) / h);
                out[m] += -f1 * nm * dtab[static_cast<size_t>(m) * q_vol + j]
                          - f2 * nm * tab[static_cast<size_t>(m) * q_vol + j];
            }
        }
        double flux_r = numerical_flux(state, i, Side::Right);
        double flux_l = numerical_flux(state, i, Side::Left);
        for (int m = 0; m <= k; ++m) {
            double nm = std::sqrt((2.0 * m + 1.0) / h);
            double sign_l = (m % 2 == 0) ? 1.0 : -1.0;
            out[m] += flux_r * nm - flux_l * nm * sign_l;
        }
        for (int m = 0; m <= k; ++m)
            if (!std::isfinite(out[m])) blowup_elem = i;
    };

    if (opt.exec == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < mesh.N; ++i) body(i);
    } else {
        for (int i = 0; i < mesh.N; ++i) body(i);
    }

    if (blowup_elem >= 0)
        throw BlowupError(t, blowup_elem,
                          "non-finite residual in element " + std::to_string(blowup_elem));
    if (out_state) *out_state = std::move(state);
    return res;
}

} // namespace hdg
