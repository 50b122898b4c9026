#include "hdg/io.hpp"

#include <cstdio>
#include <fstream>

#include "hdg/errors.hpp"

namespace hdg {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string time_tag(double t) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", t);
    return buf;
}

namespace {
std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot open output file: " + path);
    return out;
}
} // namespace

void write_snapshot_csv(const std::string& path, const PolyField& u,
                        const ReconstructedState& state, int pts_per_elem) {
    const Mesh& mesh = *u.mesh;
    std::ofstream out = open_out(path);
    out << "r,u,u_tilde,g,g_tilde,w,z,mass_aspect\n";
    int total = mesh.N * pts_per_elem;
    for (int j = 0; j <= total; ++j) {
        double r = j * mesh.b / total;
        int i = (j == 0) ? 0 : (j - 1) / pts_per_elem; // left limit at nodes
        double x = mesh.element(i).to_x(r);
        double g = state.eval_g_at(i, x);
        double gt = (r == 0.0) ? state.g0 : state.eval_gtilde_at(i, x);
        double mass = (r == 0.0) ? 0.0 : 0.5 * r * (1.0 - gt / g);
        out << fmt17(r) << ',' << fmt17(state.eval_u_at(i, x)) << ','
            << fmt17(r == 0.0 ? state.u_left[0] : state.eval_utilde_at(i, x)) << ','
            << fmt17(g) << ',' << fmt17(gt) << ',' << fmt17(state.eval_w_at(i, x)) << ','
            << fmt17(state.eval_z_at(i, x)) << ',' << fmt17(mass) << '\n';
    }
}

void write_timeseries_csv(const std::string& path,
                          std::span<const DiagnosticsRecord> history) {
    std::ofstream out = open_out(path);
    out << "t,l2_u,g0,dissipation,bondi_mass,energy_budget_residual\n";
    double worst = 0.0;
    for (size_t n = 0; n < history.size(); ++n) {
        if (n > 0) {
            double r = energy_budget_residual(history.subspan(n - 1, 2));
            if (r > worst) worst = r;
        }
        const auto& d = history[n];
        out << fmt17(d.t) << ',' << fmt17(d.l2_u) << ',' << fmt17(d.g0) << ','
            << fmt17(d.dissipation) << ',' << fmt17(d.bondi_mass) << ',' << fmt17(worst)
            << '\n';
    }
}

void write_convergence_csv(const std::string& path, const std::vector<ConvergeRow>& rows,
                           const ConvergeResult& meta) {
    std::ofstream out = open_out(path);
    out << "# reference: N=" << meta.N_ref << " k=" << meta.k_ref
        << " dt=" << fmt17(meta.dt_ref) << '\n';
    out << "N,h,E_u,rate_u,E_g,rate_g,E_mass,rate_mass\n";
    for (size_t n = 0; n < rows.size(); ++n) {
        const auto& r = rows[n];
        auto rate = [&](double v) { return n == 0 ? std::string() : fmt17(v); };
        out << r.N << ',' << fmt17(r.h) << ',' << fmt17(r.Eu) << ',' << rate(r.rate_u) << ','
            << fmt17(r.Eg) << ',' << rate(r.rate_g) << ',' << fmt17(r.Em) << ','
            << rate(r.rate_m) << '\n';
    }
}

void write_plot_stub(const std::string& path) {
    std::ofstream out = open_out(path);
    out << "# gnuplot stub for the emitted CSV files\n"
           "set datafile separator ','\n"
           "set key autotitle columnhead\n"
           "# profiles:   plot 'snap_t0.csv' using 1:2 with lines\n"
           "# timeseries: plot 'timeseries.csv' using 1:5 with lines\n";
}

} // namespace hdg
