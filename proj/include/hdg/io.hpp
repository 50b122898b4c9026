#pragma once

#include <string>

#include "hdg/converge.hpp"
#include "hdg/diagnostics.hpp"

namespace hdg {

/// Shortest decimal string that round-trips a 64-bit float (17 significant
/// digits).
std::string fmt17(double v);

/// Compact time tag for snapshot filenames.
std::string time_tag(double t);

/// Header: r,u,u_tilde,g,g_tilde,w,z,mass_aspect. Uniform plot grid with
/// pts_per_elem points per element; interior nodes resolved as left limits.
void write_snapshot_csv(const std::string& path, const PolyField& u,
                        const ReconstructedState& state, int pts_per_elem = 20);

/// Header: t,l2_u,g0,dissipation,bondi_mass,energy_budget_residual; the
/// residual column is the running worst violation up to that row.
void write_timeseries_csv(const std::string& path,
                          std::span<const DiagnosticsRecord> history);

void write_convergence_csv(const std::string& path, const std::vector<ConvergeRow>& rows,
                           const ConvergeResult& meta);

/// Gnuplot stub for the emitted CSVs.
void write_plot_stub(const std::string& path);

} // namespace hdg
