// Radial HDG solver for the Bondi-gauge Einstein-scalar system.
// Subcommands: run (time evolution + CSV output), converge (mesh-refinement
// study against a fine reference), check (per-step invariant audit).

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hdg/check.hpp"
#include "hdg/converge.hpp"
#include "hdg/errors.hpp"
#include "hdg/io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CommonCfg {
    std::string scenario = "example1";
    double constant_value = 0.0;
    int N = 160;
    int k = 2;
    int q_vol = 0;
    int q_rec = 0;
    double dt = 0.0; // 0 -> CFL
    double cfl = 0.5;
    double T = -1.0; // <0 -> scenario default
    std::string out = ".";
    std::vector<double> snapshots;
    bool serial = false;

    hdg::RhsOptions rhs() const {
        return {q_vol, q_rec, serial ? hdg::ExecPolicy::Serial : hdg::ExecPolicy::Parallel};
    }
};

void apply_json(CommonCfg& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw hdg::ConfigError("cannot read config file: " + path);
    json j = json::parse(in);
    if (j.contains("scenario")) cfg.scenario = j["scenario"].get<std::string>();
    if (j.contains("constant")) cfg.constant_value = j["constant"].get<double>();
    if (j.contains("N")) cfg.N = j["N"].get<int>();
    if (j.contains("k")) cfg.k = j["k"].get<int>();
    if (j.contains("qvol")) cfg.q_vol = j["qvol"].get<int>();
    if (j.contains("qrec")) cfg.q_rec = j["qrec"].get<int>();
    if (j.contains("dt")) cfg.dt = j["dt"].get<double>();
    if (j.contains("cfl")) cfg.cfl = j["cfl"].get<double>();
    if (j.contains("T")) cfg.T = j["T"].get<double>();
    if (j.contains("out")) cfg.out = j["out"].get<std::string>();
    if (j.contains("snapshots")) cfg.snapshots = j["snapshots"].get<std::vector<double>>();
}

void add_common_flags(CLI::App* app, CommonCfg& cfg) {
    app->add_option("--scenario", cfg.scenario,
                    "example1 | example2 | example3 | vacuum | constant");
    app->add_option("--constant", cfg.constant_value, "value for the constant scenario");
    app->add_option("--N", cfg.N, "element count");
    app->add_option("--k", cfg.k, "polynomial degree");
    app->add_option("--qvol", cfg.q_vol, "volume quadrature nodes (default k+3)");
    app->add_option("--qrec", cfg.q_rec, "reconstruction quadrature nodes (default 2k+3)");
    app->add_option("--dt", cfg.dt, "explicit time step (overrides --cfl)");
    app->add_option("--cfl", cfg.cfl, "CFL number in (0,1]");
    app->add_option("--T", cfg.T, "final time (default per scenario)");
    app->add_option("--out", cfg.out, "output directory");
    app->add_flag("--serial", cfg.serial, "disable OpenMP element loops");
}

void warn_cfl(const CommonCfg& cfg, const hdg::Mesh& mesh) {
    if (cfg.dt > 0.0) {
        double limit = hdg::cfl_dt(mesh, cfg.k, 1.0);
        if (cfg.dt > limit)
            std::cerr << "warning: dt=" << cfg.dt << " exceeds the CFL-stable step "
                      << limit << " (cfl-equivalent " << cfg.dt / limit << ")\n";
    }
}

int cmd_run(const CommonCfg& cfg) {
    hdg::Scenario sc = hdg::make_scenario(cfg.scenario, cfg.constant_value);
    hdg::Mesh mesh = hdg::build_uniform(sc.b, cfg.N);
    warn_cfl(cfg, mesh);

    hdg::TimeConfig tc;
    tc.T_final = cfg.T >= 0.0 ? cfg.T : sc.default_T;
    if (cfg.dt > 0.0) tc.dt = cfg.dt;
    tc.cfl = cfg.cfl;
    tc.snapshot_times = cfg.snapshots.empty() ? sc.default_snapshots : cfg.snapshots;

    fs::create_directories(cfg.out);
    hdg::PolyField u0 = hdg::initial_data(sc, mesh, cfg.k);
    auto on_snapshot = [&](double t, const hdg::PolyField& u, const hdg::TraceSet&,
                           const hdg::ReconstructedState& state, const hdg::DiagnosticsRecord&) {
        fs::path p = fs::path(cfg.out) / ("snap_t" + hdg::time_tag(t) + ".csv");
        hdg::write_snapshot_csv(p.string(), u, state);
    };
    hdg::RunRecord rec = hdg::integrate(u0, tc, sc.Ub, cfg.rhs(), on_snapshot);
    hdg::write_timeseries_csv((fs::path(cfg.out) / "timeseries.csv").string(), rec.history);
    hdg::write_plot_stub((fs::path(cfg.out) / "plot.gp").string());
    if (rec.deep_collapse)
        std::cerr << "note: deep-collapse regime reached (metric underflow guarded)\n";
    return 0;
}

int cmd_converge(const CommonCfg& cfg, std::vector<int> degrees, std::vector<int> Ns,
                 int N_ref, int k_ref) {
    hdg::Scenario sc = hdg::make_scenario(cfg.scenario, cfg.constant_value);
    hdg::ConvergeOptions opt;
    if (!degrees.empty()) opt.degrees = degrees;
    if (!Ns.empty()) opt.Ns = Ns;
    opt.T = cfg.T >= 0.0 ? cfg.T : 0.5;
    opt.dt = cfg.dt > 0.0 ? cfg.dt : 0.01;
    opt.N_ref = N_ref;
    opt.k_ref = k_ref;
    opt.rhs = cfg.rhs();

    hdg::ConvergeResult res = hdg::run_convergence(sc, opt);
    fs::create_directories(cfg.out);
    for (const auto& [k, rows] : res.tables) {
        fs::path p = fs::path(cfg.out) / ("convergence_k" + std::to_string(k) + ".csv");
        hdg::write_convergence_csv(p.string(), rows, res);
        std::printf("k=%d\n  %6s %12s %8s %12s %8s\n", k, "N", "E_u", "rate", "E_g", "rate");
        for (size_t n = 0; n < rows.size(); ++n) {
            const auto& r = rows[n];
            if (n == 0)
                std::printf("  %6d %12.4e %8s %12.4e %8s\n", r.N, r.Eu, "-", r.Eg, "-");
            else
                std::printf("  %6d %12.4e %8.2f %12.4e %8.2f\n", r.N, r.Eu, r.rate_u, r.Eg,
                            r.rate_g);
        }
    }
    return 0;
}

int cmd_check(const CommonCfg& cfg, double energy_tol) {
    hdg::Scenario sc = hdg::make_scenario(cfg.scenario, cfg.constant_value);
    hdg::CheckOptions opt;
    opt.N = cfg.N;
    opt.k = cfg.k;
    opt.rhs = cfg.rhs();
    opt.time.T_final = cfg.T >= 0.0 ? cfg.T : 0.0;
    if (cfg.dt > 0.0) opt.time.dt = cfg.dt;
    opt.time.cfl = cfg.cfl;
    opt.energy_tol = energy_tol;

    hdg::CheckResult r = hdg::run_check(sc, opt);
    if (r.ok) {
        std::printf("check passed: %s N=%d k=%d\n", sc.name.c_str(), cfg.N, cfg.k);
        return 0;
    }
    std::fprintf(stderr, "check FAILED [%s] step=%d element=%d: %s\n", r.tag.c_str(), r.step,
                 r.element, r.detail.c_str());
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Radial HDG solver for spherically symmetric scalar-field collapse"};
    app.require_subcommand(1);

    CommonCfg cfg;
    // Config file first, flags override.
    for (int i = 1; i + 1 < argc; ++i)
        if (std::string(argv[i]) == "--config") {
            try {
                apply_json(cfg, argv[i + 1]);
            } catch (const std::exception& e) {
                std::cerr << "error: " << e.what() << '\n';
                return 2;
            }
        }
    std::string config_path;

    auto* run = app.add_subcommand("run", "evolve a scenario and emit CSV output");
    add_common_flags(run, cfg);
    run->add_option("--config", config_path, "JSON config file (flags override)");
    run->add_option("--snapshots", cfg.snapshots, "snapshot times");

    std::vector<int> degrees, Ns;
    int N_ref = 0, k_ref = 0;
    auto* conv = app.add_subcommand("converge", "mesh-refinement study");
    add_common_flags(conv, cfg);
    conv->add_option("--config", config_path, "JSON config file (flags override)");
    conv->add_option("--degrees", degrees, "polynomial degrees to study");
    conv->add_option("--N-list", Ns, "study element counts (must divide --Nref)");
    conv->add_option("--Nref", N_ref, "reference elements (default 4x finest)");
    conv->add_option("--kref", k_ref, "reference degree (default max k + 2)");

    double energy_tol = 1e-6;
    auto* check = app.add_subcommand("check", "run while auditing every invariant");
    add_common_flags(check, cfg);
    check->add_option("--config", config_path, "JSON config file (flags override)");
    check->add_option("--energy-tol", energy_tol, "integrated energy budget tolerance");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(cfg);
        if (conv->parsed()) return cmd_converge(cfg, degrees, Ns, N_ref, k_ref);
        if (check->parsed()) return cmd_check(cfg, energy_tol);
    } catch (const hdg::BlowupError& e) {
        std::cerr << "numerical failure at t=" << e.time << ": " << e.what() << '\n';
        return 1;
    } catch (const hdg::ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
