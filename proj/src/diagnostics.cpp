#include "hdg/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "hdg/errors.hpp"

namespace hdg {

double dissipation(const PolyField& u, const ReconstructedState& state, double U_b) {
    const Mesh& mesh = *u.mesh;
    int N = mesh.N;
    double center = 0.25 * state.g0 * state.u_left[0] * state.u_left[0];
    double ub_jump = state.u_right[N - 1] - U_b;
    double outer = 0.25 * state.gtilde_hat[N] * ub_jump * ub_jump;
    double interior = 0.0;
    for (int i = 1; i < N; ++i) {
        double jump = state.u_right[i - 1] - state.uhat[i];
        interior += 0.25 * state.gtilde_hat[i] * jump * jump;
    }
    return center + outer + interior;
}

double mass_aspect(const ReconstructedState& state, double r) {
    return state.mass_aspect(r);
}

double bondi_mass(const ReconstructedState& state) {
    const Mesh& mesh = *state.mesh;
    return 0.5 * mesh.b * (1.0 - state.gtilde_hat[mesh.N]);
}

double l2_error(const PolyField& u, const PolyField& reference) {
    const Mesh& fine = *reference.mesh;
    int q = std::max(u.k, reference.k) + 3;
    const QuadRule& rule = gauss_rule(q);
    double acc = 0.0;
    for (int i = 0; i < fine.N; ++i) {
        Interval e = fine.element(i);
        auto cref = ortho_to_modal(reference.elem(i), e.h());
        // Pick the coarse element once per fine element via the midpoint.
        int ic = u.mesh->find_element(0.5 * (e.a + e.b));
        Interval ec = u.mesh->element(ic);
        auto cc = ortho_to_modal(u.elem(ic), ec.h());
        for (int j = 0; j < q; ++j) {
            double r = e.to_r(rule.nodes[j]);
            double d = eval_modal(cc, ec.to_x(r)) - eval_modal(cref, rule.nodes[j]);
            acc += 0.5 * e.h() * rule.weights[j] * d * d;
        }
    }
    return std::sqrt(acc);
}

double l2_error_g(const ReconstructedState& state, const ReconstructedState& reference) {
    const Mesh& fine = *reference.mesh;
    int q = std::max(state.q_rec, reference.q_rec);
    const QuadRule& rule = gauss_rule(q);
    double acc = 0.0;
    for (int i = 0; i < fine.N; ++i) {
        Interval e = fine.element(i);
        int ic = state.mesh->find_element(0.5 * (e.a + e.b));
        Interval ec = state.mesh->element(ic);
        for (int j = 0; j < q; ++j) {
            double r = e.to_r(rule.nodes[j]);
            double d = state.eval_g_at(ic, ec.to_x(r)) - reference.eval_g_at(i, rule.nodes[j]);
            acc += 0.5 * e.h() * rule.weights[j] * d * d;
        }
    }
    return std::sqrt(acc);
}

DiagnosticsRecord make_record(double t, const PolyField& u, const ReconstructedState& state,
                              double U_b) {
    DiagnosticsRecord rec;
    rec.t = t;
    rec.l2_u = l2_norm(u);
    rec.g0 = state.g0;
    rec.dissipation = dissipation(u, state, U_b);
    rec.bondi_mass = bondi_mass(state);
    rec.ub = U_b;
    rec.deep_collapse = state.deep_collapse;
    return rec;
}

double energy_budget_residual(std::span<const DiagnosticsRecord> history) {
    double worst = 0.0;
    for (size_t n = 0; n + 1 < history.size(); ++n) {
        const auto& a = history[n];
        const auto& b = history[n + 1];
        double dt = b.t - a.t;
        if (dt <= 0.0) continue;
        double de = 0.5 * (b.l2_u * b.l2_u - a.l2_u * a.l2_u) / dt;
        double diss = 0.5 * (a.dissipation + b.dissipation);
        double budget = 0.5 * (0.25 * a.ub * a.ub + 0.25 * (1.0 - a.g0) +
                               0.25 * b.ub * b.ub + 0.25 * (1.0 - b.g0));
        worst = std::max(worst, de + diss - budget);
    }
    return worst;
}

} // namespace hdg
