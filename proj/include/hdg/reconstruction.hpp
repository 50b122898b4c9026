#pragma once

#include <vector>

#include "hdg/field.hpp"

namespace hdg {

enum class ExecPolicy { Serial, Parallel };

struct ReconOptions {
    int q_rec = 0; // 0 -> 2k+3
    ExecPolicy exec = ExecPolicy::Parallel;
};

/// Skeleton unknowns. w_hat/z_hat live at r_0..r_{N-1}, g_hat/u_hat at
/// r_1..r_N; index j addresses node r_j in the full array and the unused
/// slot is kept so both families share the node numbering.
struct TraceSet {
    std::vector<double> w_hat; // w_hat[i] = value at r_i, i = 0..N-1
    std::vector<double> z_hat;
    std::vector<double> g_hat; // g_hat[i] = value at r_{i+1}, i = 0..N-1
    std::vector<double> u_hat;
};

/// Per-element reconstruction data. Polynomials are stored as modal Legendre
/// coefficients on the reference interval; sample arrays hold values at the
/// q_rec Gauss nodes.
struct ElementRecon {
    std::vector<double> u_mod;    // u_h on the element, modal reference coefficients
    std::vector<double> w_mod;    // w_h, degree k+1, includes the w_hat offset
    std::vector<double> phi_prim; // primitive of the Phi interpolant, zero at x=-1
    double phi_full = 0.0;        // integral of Phi over the element
    std::vector<double> g_prim;   // primitive of the g_h interpolant
    double int_g = 0.0;           // integral of g_h over the element
    // First element only: monomial-in-t coefficients of p_h = w_h/r and
    // q_h = (u_h - p_h)/r from exact synthetic division.
    std::vector<double> p_mono;
    std::vector<double> q_mono;

    std::vector<double> u_s, w_s, utilde_s, phi_s, g_s, z_s, gtilde_s, gtilde_r_s;
};

struct ReconstructedState {
    const Mesh* mesh = nullptr;
    int k = 0;
    int q_rec = 0;
    double U_b = 0.0;

    std::vector<double> what;     // size N+1, w_hat at every node (what[N] is w_h(b))
    std::vector<double> zhat;     // size N+1
    std::vector<double> log_ghat; // size N+1, log of g_hat (log_ghat[N] = 0)
    std::vector<double> ghat;     // size N+1
    std::vector<double> uhat;     // size N+1; uhat[i] for i>=1, uhat[0] unused
    std::vector<double> gtilde_hat; // size N+1; gtilde_hat[0] = g0
    std::vector<double> u_left;   // u_h|_{I_i}(r_{i-1}) per element
    std::vector<double> u_right;  // u_h|_{I_i}(r_i) per element
    double g0 = 1.0;              // g_h(t,0)
    bool deep_collapse = false;

    std::vector<ElementRecon> elems;

    TraceSet traces() const;

    // Pointwise evaluation anywhere in [0,b] (left-limits at interior nodes).
    double eval_u(double r) const;
    double eval_w(double r) const;
    double eval_utilde(double r) const;
    double eval_g(double r) const;
    double eval_z(double r) const;
    double eval_gtilde(double r) const;
    double mass_aspect(double r) const;

    // Evaluation in element-local reference coordinates.
    double eval_u_at(int i, double x) const;
    double eval_w_at(int i, double x) const;
    double eval_utilde_at(int i, double x) const;
    double eval_g_at(int i, double x) const;
    double eval_z_at(int i, double x) const;
    double eval_gtilde_at(int i, double x) const;
};

/// Runs all trace recursions and local reconstructions for the given u_h and
/// outer boundary value. Pure function of its arguments.
ReconstructedState reconstruct(const PolyField& u, double U_b, const ReconOptions& opt = {});

// Staged entry points (each runs its prerequisites on a fresh state); the
// full pipeline above is what the solver uses.
ReconstructedState sweep_w(const PolyField& u, const ReconOptions& opt = {});
void tilde_u_values(const PolyField& u, ReconstructedState& st);
void phi_samples(const PolyField& u, ReconstructedState& st);
void sweep_g(ReconstructedState& st);
void g_values(ReconstructedState& st);
void sweep_z_tilde_g(ReconstructedState& st);
void u_hat_values(const PolyField& u, double U_b, ReconstructedState& st);

} // namespace hdg
