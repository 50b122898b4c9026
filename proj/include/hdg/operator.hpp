#pragma once

#include <functional>

#include "hdg/reconstruction.hpp"

namespace hdg {

struct RhsOptions {
    int q_vol = 0; // 0 -> k+3
    int q_rec = 0; // 0 -> 2k+3
    ExecPolicy exec = ExecPolicy::Parallel;
};

/// Time-derivative coefficients, same flat layout as PolyField::coeffs.
struct Residual {
    std::vector<double> coeffs;
};

/// Face value of the numerical flux on element i.
/// Right face: (1/2) gtilde(r_{i+1}) uhat(r_{i+1}); left face:
/// (1/2) gtilde(r_i) u_h|_{I_i}(r_i); at r = 0 the weight is g_h(0).
double numerical_flux(const ReconstructedState& state, int i, Side side);

/// Assembles dU/dt for the semidiscrete scheme. The orthonormal basis makes
/// the mass matrix the identity, so the weak-form right-hand side is the
/// derivative directly. Reconstructs internally; the state used is returned
/// through out_state when requested.
Residual assemble_rhs(const PolyField& u, double t, const std::function<double(double)>& U_b,
                      const RhsOptions& opt = {}, ReconstructedState* out_state = nullptr);

} // namespace hdg
