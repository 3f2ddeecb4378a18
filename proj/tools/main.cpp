#include <CLI11.hpp>

#include <cstdio>
#include <cstring>
#include <filesystem>
#include <iostream>

#include "apflow/driver.hpp"
#include "apflow/stability.hpp"

namespace fs = std::filesystem;
using namespace apflow;

namespace {

constexpr const char* kUsage =
    "usage: apflow <subcommand> [options]\n"
    "\n"
    "subcommands:\n"
    "  run        advance the solver, write field snapshots and a time series\n"
    "  sweep-eps  re-run the configured case across a list of eps values\n"
    "  stability  amplification-matrix report for the linear wave system\n"
    "\n"
    "run 'apflow <subcommand> --help' for the options.\n";

int do_run(const RunConfig& cfg) {
    fs::create_directories(cfg.output_dir);
    const StepObserver observer = [&cfg](const ConservedField& s, double /*t*/, int step) {
        char name[64];
        std::snprintf(name, sizeof(name), "fields_%06d.csv", step);
        write_fields_csv(s, cfg.output_dir + "/" + name);
    };
    const RunResult res = run_case(cfg, observer);
    write_timeseries_csv(res.series, cfg.output_dir + "/timeseries.csv");

    const ApObservables& fin = res.series.back();
    std::cout << "preset " << cfg.preset << ": eps=" << cfg.eps << " alpha=" << cfg.alpha
              << " grid " << cfg.nx << "x" << cfg.ny << ", " << res.steps << " steps to t="
              << cfg.t_final << "\n";
    std::cout << "final: mass=" << fin.mass << " rho_dev_inf=" << fin.rho_dev_inf
              << " div_inf=" << fin.div_inf << " div_l2=" << fin.div_l2 << " umax=" << fin.umax
              << "\n";
    std::cout << "wrote " << cfg.output_dir << "/timeseries.csv and " << res.series.size()
              << " field snapshots\n";
    return 0;
}

int do_sweep(const RunConfig& cfg, const std::vector<double>& eps_list, bool parallel) {
    fs::create_directories(cfg.output_dir);
    const std::vector<SweepRow> rows = sweep_eps(cfg, eps_list, parallel);
    write_sweep_summary_csv(rows, cfg.output_dir + "/sweep_summary.csv");
    std::printf("%10s %8s %14s %14s %12s %12s\n", "eps", "steps", "rho_dev_inf", "div_inf",
                "umax(0)", "umax(T)");
    for (const auto& r : rows) {
        std::printf("%10.4g %8d %14.6g %14.6g %12.6g %12.6g\n", r.eps, r.steps, r.rho_dev_inf,
                    r.div_inf, r.umax_initial, r.umax_final);
    }
    std::cout << "wrote " << cfg.output_dir << "/sweep_summary.csv\n";
    return 0;
}

int do_stability(const LinearizationState& lin, int lattice_radius,
                 const std::vector<double>& ladder, const std::string& output_dir) {
    const StabilityReport rep = stability_report(lin, lattice_radius, ladder);
    fs::create_directories(output_dir);
    write_stability_csv(rep, output_dir + "/stability.csv");
    std::cout << format_stability_table(rep);
    std::cout << "wrote " << output_dir << "/stability.csv (" << rep.rows.size() << " rows)\n";
    return 0;
}

int main_run(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"advance the solver, write field snapshots and a time series", "apflow run"};
    app.set_config("--config", "", "key=value configuration file");
    app.allow_config_extras(false);
    register_run_options(app, cfg);
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    finalize_run_config(app, cfg);
    return do_run(cfg);
}

int main_sweep(int argc, char** argv) {
    RunConfig cfg;
    std::vector<double> eps_list;
    bool parallel = false;
    CLI::App app{"re-run the configured case across a list of eps values", "apflow sweep-eps"};
    app.set_config("--config", "", "key=value configuration file");
    app.allow_config_extras(false);
    register_run_options(app, cfg);
    app.add_option("eps_list", eps_list, "comma-separated eps values")
        ->required()
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    app.add_flag("--parallel", parallel, "run the eps values concurrently");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    finalize_run_config(app, cfg);
    return do_sweep(cfg, eps_list, parallel);
}

int main_stability(int argc, char** argv) {
    LinearizationState lin;
    int lattice_radius = 8;
    std::vector<double> ladder{0.1, 0.05, 0.025, 0.0125};
    std::string outdir = "out";
    CLI::App app{"amplification-matrix report for the linear wave system", "apflow stability"};
    app.add_option("--N", lattice_radius, "lattice radius: xi = 2*pi*k, k in [-N,N]^2")
        ->check(CLI::Range(0, 128))
        ->capture_default_str();
    app.add_option("--dt", ladder, "decreasing dt ladder (comma separated)")
        ->delimiter(',')
        ->capture_default_str();
    app.add_option("--rho_bar", lin.rho_bar, "linearisation density")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--a_bar", lin.a_bar, "linearisation sound speed")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--u_bar", lin.u_bar, "linearisation velocity (two values)")
        ->delimiter(',')
        ->capture_default_str();
    app.add_option("--eps", lin.eps, "Mach number")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--output_dir", outdir, "directory for the CSV report")
        ->envname("APFLOW_OUTPUT_DIR")
        ->capture_default_str();
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }
    return do_stability(lin, lattice_radius, ladder, outdir);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2 || std::strcmp(argv[1], "--help") == 0 || std::strcmp(argv[1], "-h") == 0) {
        std::fputs(kUsage, argc < 2 ? stderr : stdout);
        return argc < 2 ? 2 : 0;
    }
    const std::string sub = argv[1];
    try {
        if (sub == "run") return main_run(argc - 1, argv + 1);
        if (sub == "sweep-eps") return main_sweep(argc - 1, argv + 1);
        if (sub == "stability") return main_stability(argc - 1, argv + 1);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "apflow: unknown subcommand '" << sub << "'\n\n" << kUsage;
    return 2;
}
