#include "hdg/reconstruction.hpp"

#include <cmath>
#include <limits>

#include "hdg/errors.hpp"

namespace hdg {

namespace {

constexpr double kLogMinNormal = -708.3964185322641; // log(DBL_MIN)
constexpr double kCollapseThreshold = -700.0;

template <typename F>
void par_for(int n, ExecPolicy exec, F&& body) {
    if (exec == ExecPolicy::Parallel) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < n; ++i) body(i);
    } else {
        for (int i = 0; i < n; ++i) body(i);
    }
}

double clamped_exp(double e) {
    return std::exp(e < kLogMinNormal ? kLogMinNormal : e);
}

/// Modal coefficients of the degree q-1 interpolant through samples at the
/// Gauss nodes; the discrete transform is exact for the interpolant.
std::vector<double> interpolant_modal(const QuadRule& rule, const std::vector<double>& tab,
                                      std::span<const double> samples) {
    std::vector<double> a(rule.q, 0.0);
    for (int m = 0; m < rule.q; ++m) {
        double s = 0.0;
        for (int j = 0; j < rule.q; ++j)
            s += rule.weights[j] * samples[j] * tab[static_cast<size_t>(m) * rule.q + j];
        a[m] = (2.0 * m + 1.0) / 2.0 * s;
    }
    return a;
}

struct ReconScratch {
    const QuadRule* rule = nullptr;
    std::vector<double> tab; // P_m(x_j) for m = 0..q_rec-1
    ExecPolicy exec = ExecPolicy::Serial;
};

ReconScratch make_scratch(int k, const ReconOptions& opt) {
    ReconScratch s;
    int q = opt.q_rec > 0 ? opt.q_rec : 2 * k + 3;
    if (q < 1 || q > 64) throw ConfigError("reconstruct: q_rec out of range");
    s.rule = &gauss_rule(q);
    s.tab = legendre_table(*s.rule, q - 1);
    s.exec = opt.exec;
    return s;
}

ReconstructedState init_state(const PolyField& u, const ReconOptions& opt) {
    ReconstructedState st;
    st.mesh = u.mesh;
    st.k = u.k;
    st.q_rec = opt.q_rec > 0 ? opt.q_rec : 2 * u.k + 3;
    int N = u.mesh->N;
    st.what.assign(N + 1, 0.0);
    st.zhat.assign(N + 1, 0.0);
    st.log_ghat.assign(N + 1, 0.0);
    st.ghat.assign(N + 1, 1.0);
    st.uhat.assign(N + 1, 0.0);
    st.gtilde_hat.assign(N + 1, 1.0);
    st.u_left.assign(N, 0.0);
    st.u_right.assign(N, 0.0);
    st.elems.resize(N);
    return st;
}

} // namespace

// --- staged pipeline --------------------------------------------------------

namespace detail {

void stage_w(const PolyField& u, ReconstructedState& st, const ReconScratch& sc) {
    const Mesh& mesh = *u.mesh;
    int N = mesh.N;
    std::vector<double> int_u(N);
    par_for(N, sc.exec, [&](int i) {
        double h = mesh.widths[i];
        auto c = ortho_to_modal(u.elem(i), h);
        auto& el = st.elems[i];
        el.u_mod = c;
        el.w_mod = primitive_modal(c);
        for (double& v : el.w_mod) v *= 0.5 * h;
        int_u[i] = h * c[0]; // exact element integral of u_h
        el.u_s.resize(sc.rule->q);
        for (int j = 0; j < sc.rule->q; ++j) el.u_s[j] = eval_modal(c, sc.rule->nodes[j]);
        st.u_left[i] = eval_modal(c, -1.0);
        st.u_right[i] = eval_modal(c, 1.0);
    });
    st.what[0] = 0.0;
    for (int i = 0; i < N; ++i) st.what[i + 1] = st.what[i] + int_u[i];
    par_for(N, sc.exec, [&](int i) {
        auto& el = st.elems[i];
        el.w_mod[0] += st.what[i];
        el.w_s.resize(sc.rule->q);
        for (int j = 0; j < sc.rule->q; ++j) el.w_s[j] = eval_modal(el.w_mod, sc.rule->nodes[j]);
    });
}

void stage_utilde(const PolyField& u, ReconstructedState& st, const ReconScratch& sc) {
    const Mesh& mesh = *u.mesh;
    par_for(mesh.N, sc.exec, [&](int i) {
        auto& el = st.elems[i];
        el.utilde_s.resize(sc.rule->q);
        Interval e = mesh.element(i);
        if (i == 0) {
            // w_h(0) = 0, so w_h = r p_h by exact synthetic division in the
            // scaled variable t = r/h.
            double h = e.h();
            auto W = modal_to_mono(el.w_mod);
            el.p_mono.assign(el.w_mod.size() - 1, 0.0);
            for (size_t j = 0; j + 1 < W.size(); ++j) el.p_mono[j] = W[j + 1] / h;
            auto c = ortho_to_modal(u.elem(0), h);
            auto U = modal_to_mono(c);
            // u_h - p_h vanishes at r = 0; divide once more.
            el.q_mono.assign(U.size() > 1 ? U.size() - 1 : 1, 0.0);
            for (size_t j = 0; j + 1 < U.size(); ++j) {
                double d = U[j + 1] - (j + 1 < el.p_mono.size() ? el.p_mono[j + 1] : 0.0);
                el.q_mono[j] = d / h;
            }
            for (int j = 0; j < sc.rule->q; ++j) {
                double t = 0.5 * (sc.rule->nodes[j] + 1.0);
                el.utilde_s[j] = eval_mono(el.p_mono, t);
            }
        } else {
            for (int j = 0; j < sc.rule->q; ++j) {
                double s = e.to_r(sc.rule->nodes[j]);
                el.utilde_s[j] = el.w_s[j] / s;
            }
        }
    });
}

void stage_phi(ReconstructedState& st, const ReconScratch& sc) {
    const Mesh& mesh = *st.mesh;
    par_for(mesh.N, sc.exec, [&](int i) {
        auto& el = st.elems[i];
        Interval e = mesh.element(i);
        double h = e.h();
        el.phi_s.resize(sc.rule->q);
        for (int j = 0; j < sc.rule->q; ++j) {
            double s = e.to_r(sc.rule->nodes[j]);
            if (i == 0) {
                double t = 0.5 * (sc.rule->nodes[j] + 1.0);
                double q = eval_mono(el.q_mono, t);
                el.phi_s[j] = s * q * q;
            } else {
                double d = el.u_s[j] - el.utilde_s[j];
                el.phi_s[j] = d * d / s;
            }
        }
        auto a = interpolant_modal(*sc.rule, sc.tab, el.phi_s);
        el.phi_prim = primitive_modal(a);
        double sum = 0.0;
        for (int j = 0; j < sc.rule->q; ++j) sum += sc.rule->weights[j] * el.phi_s[j];
        el.phi_full = 0.5 * h * sum;
    });
}

void stage_g_sweep(ReconstructedState& st) {
    int N = st.mesh->N;
    st.log_ghat[N] = 0.0;
    for (int i = N; i-- > 0;) st.log_ghat[i] = st.log_ghat[i + 1] - st.elems[i].phi_full;
    bool deep = false;
    for (int i = 0; i <= N; ++i) {
        if (st.log_ghat[i] < kCollapseThreshold) deep = true;
        st.ghat[i] = clamped_exp(st.log_ghat[i]);
    }
    st.deep_collapse = st.deep_collapse || deep;
}

void stage_g_values(ReconstructedState& st, const ReconScratch& sc) {
    const Mesh& mesh = *st.mesh;
    par_for(mesh.N, sc.exec, [&](int i) {
        auto& el = st.elems[i];
        double h = mesh.widths[i];
        el.g_s.resize(sc.rule->q);
        for (int j = 0; j < sc.rule->q; ++j) {
            double tail = el.phi_full - 0.5 * h * eval_modal(el.phi_prim, sc.rule->nodes[j]);
            if (tail < 0.0) tail = 0.0;
            el.g_s[j] = clamped_exp(st.log_ghat[i + 1] - tail);
        }
        auto b = interpolant_modal(*sc.rule, sc.tab, el.g_s);
        el.g_prim = primitive_modal(b);
        double sum = 0.0;
        for (int j = 0; j < sc.rule->q; ++j) sum += sc.rule->weights[j] * el.g_s[j];
        el.int_g = 0.5 * h * sum;
    });
    st.g0 = clamped_exp(st.log_ghat[0]);
}

void stage_z_tilde_g(ReconstructedState& st, const ReconScratch& sc) {
    const Mesh& mesh = *st.mesh;
    int N = mesh.N;
    st.zhat[0] = 0.0;
    for (int i = 0; i < N; ++i) st.zhat[i + 1] = st.zhat[i] + st.elems[i].int_g;
    st.gtilde_hat[0] = st.g0;
    for (int i = 1; i <= N; ++i) st.gtilde_hat[i] = st.zhat[i] / mesh.nodes[i];
    par_for(N, sc.exec, [&](int i) {
        auto& el = st.elems[i];
        Interval e = mesh.element(i);
        double h = e.h();
        int q = sc.rule->q;
        el.z_s.resize(q);
        el.gtilde_s.resize(q);
        el.gtilde_r_s.resize(q);
        for (int j = 0; j < q; ++j) {
            double s = e.to_r(sc.rule->nodes[j]);
            el.z_s[j] = st.zhat[i] + 0.5 * h * eval_modal(el.g_prim, sc.rule->nodes[j]);
            el.gtilde_s[j] = el.z_s[j] / s;
            el.gtilde_r_s[j] = (el.g_s[j] - el.gtilde_s[j]) / s;
        }
    });
}

void stage_uhat(const PolyField& u, double U_b, ReconstructedState& st) {
    int N = u.mesh->N;
    for (int i = 1; i < N; ++i) st.uhat[i] = st.u_left[i]; // right element's left trace
    st.uhat[N] = U_b;
    st.U_b = U_b;
}

} // namespace detail

ReconstructedState reconstruct(const PolyField& u, double U_b, const ReconOptions& opt) {
    ReconScratch sc = make_scratch(u.k, opt);
    ReconstructedState st = init_state(u, opt);
    detail::stage_w(u, st, sc);
    detail::stage_utilde(u, st, sc);
    detail::stage_phi(st, sc);
    detail::stage_g_sweep(st);
    detail::stage_g_values(st, sc);
    detail::stage_z_tilde_g(st, sc);
    detail::stage_uhat(u, U_b, st);
    return st;
}

ReconstructedState sweep_w(const PolyField& u, const ReconOptions& opt) {
    ReconScratch sc = make_scratch(u.k, opt);
    ReconstructedState st = init_state(u, opt);
    detail::stage_w(u, st, sc);
    return st;
}

void tilde_u_values(const PolyField& u, ReconstructedState& st) {
    ReconScratch sc = make_scratch(u.k, {st.q_rec, ExecPolicy::Serial});
    detail::stage_utilde(u, st, sc);
}

void phi_samples(const PolyField& u, ReconstructedState& st) {
    ReconScratch sc = make_scratch(u.k, {st.q_rec, ExecPolicy::Serial});
    if (st.elems[0].utilde_s.empty()) detail::stage_utilde(u, st, sc);
    detail::stage_phi(st, sc);
}

void sweep_g(ReconstructedState& st) { detail::stage_g_sweep(st); }

void g_values(ReconstructedState& st) {
    ReconScratch sc = make_scratch(st.k, {st.q_rec, ExecPolicy::Serial});
    detail::stage_g_values(st, sc);
}

void sweep_z_tilde_g(ReconstructedState& st) {
    ReconScratch sc = make_scratch(st.k, {st.q_rec, ExecPolicy::Serial});
    detail::stage_z_tilde_g(st, sc);
}

void u_hat_values(const PolyField& u, double U_b, ReconstructedState& st) {
    detail::stage_uhat(u, U_b, st);
}

// --- accessors --------------------------------------------------------------

TraceSet ReconstructedState::traces() const {
    int N = mesh->N;
    TraceSet t;
    t.w_hat.assign(what.begin(), what.begin() + N);
    t.z_hat.assign(zhat.begin(), zhat.begin() + N);
    t.g_hat.assign(ghat.begin() + 1, ghat.end());
    t.u_hat.assign(uhat.begin() + 1, uhat.end());
    return t;
}

double ReconstructedState::eval_u_at(int i, double x) const {
    return eval_modal(elems[i].u_mod, x);
}

double ReconstructedState::eval_u(double r) const {
    int i = mesh->find_element(r);
    return eval_u_at(i, mesh->element(i).to_x(r));
}

double ReconstructedState::eval_w_at(int i, double x) const {
    return eval_modal(elems[i].w_mod, x);
}

double ReconstructedState::eval_utilde_at(int i, double x) const {
    if (i == 0) return eval_mono(elems[0].p_mono, 0.5 * (x + 1.0));
    double r = mesh->element(i).to_r(x);
    return eval_w_at(i, x) / r;
}

double ReconstructedState::eval_g_at(int i, double x) const {
    const auto& el = elems[i];
    double h = mesh->widths[i];
    double tail = el.phi_full - 0.5 * h * eval_modal(el.phi_prim, x);
    if (tail < 0.0) tail = 0.0;
    return clamped_exp(log_ghat[i + 1] - tail);
}

double ReconstructedState::eval_z_at(int i, double x) const {
    return zhat[i] + 0.5 * mesh->widths[i] * eval_modal(elems[i].g_prim, x);
}

double ReconstructedState::eval_gtilde_at(int i, double x) const {
    double r = mesh->element(i).to_r(x);
    if (r == 0.0) return g0;
    return eval_z_at(i, x) / r;
}

double ReconstructedState::eval_w(double r) const {
    int i = mesh->find_element(r);
    return eval_w_at(i, mesh->element(i).to_x(r));
}

double ReconstructedState::eval_utilde(double r) const {
    if (r == 0.0) return u_left[0];
    int i = mesh->find_element(r);
    return eval_utilde_at(i, mesh->element(i).to_x(r));
}

double ReconstructedState::eval_g(double r) const {
    int i = mesh->find_element(r);
    return eval_g_at(i, mesh->element(i).to_x(r));
}

double ReconstructedState::eval_z(double r) const {
    int i = mesh->find_element(r);
    return eval_z_at(i, mesh->element(i).to_x(r));
}

double ReconstructedState::eval_gtilde(double r) const {
    if (r == 0.0) return g0;
    int i = mesh->find_element(r);
    return eval_gtilde_at(i, mesh->element(i).to_x(r));
}

double ReconstructedState::mass_aspect(double r) const {
    if (r == 0.0) return 0.0;
    return 0.5 * r * (1.0 - eval_gtilde(r) / eval_g(r));
}

} // namespace hdg
