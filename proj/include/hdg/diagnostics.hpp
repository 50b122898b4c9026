#pragma once

#include <span>
#include <vector>

#include "hdg/reconstruction.hpp"

namespace hdg {

struct DiagnosticsRecord {
    double t = 0.0;
    double l2_u = 0.0;
    double g0 = 1.0;
    double dissipation = 0.0;
    double bondi_mass = 0.0;
    double ub = 0.0;
    double energy_budget_residual = 0.0;
    bool deep_collapse = false;
};

/// Jump/boundary dissipation functional; nonnegative by construction.
double dissipation(const PolyField& u, const ReconstructedState& state, double U_b);

/// m(t,r) = (r/2)(1 - gtilde/g); zero at r = 0.
double mass_aspect(const ReconstructedState& state, double r);

/// Bondi mass M_h(t) = (b/2)(1 - gtilde(b)) using g(b) = 1.
double bondi_mass(const ReconstructedState& state);

/// Broken L2 distance, integrated by quadrature on the reference field's
/// (finer) mesh, evaluating the coarse field pointwise.
double l2_error(const PolyField& u, const PolyField& reference);

/// L2 distance of the reconstructed metric g_h against a reference
/// reconstruction, integrated on the reference mesh.
double l2_error_g(const ReconstructedState& state, const ReconstructedState& reference);

DiagnosticsRecord make_record(double t, const PolyField& u, const ReconstructedState& state,
                              double U_b);

/// Worst violation of the integrated energy inequality over the recorded
/// steps, clipped below at zero.
double energy_budget_residual(std::span<const DiagnosticsRecord> history);

} // namespace hdg
