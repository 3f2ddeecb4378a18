#include "apflow/run_config.hpp"

#include <CLI11.hpp>

#include <set>
#include <sstream>

#include "apflow/errors.hpp"

namespace apflow {

RunConfig low_mach_preset() { return RunConfig{}; }

RunConfig boussinesq_preset() {
    RunConfig cfg;
    cfg.alpha = 1;
    cfg.preset = "boussinesq";
    return cfg;
}

void register_run_options(CLI::App& app, RunConfig& cfg) {
    app.add_option("--eps", cfg.eps, "Mach number (Ma = eps)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--alpha", cfg.alpha, "0 = low-Mach, 1 = Boussinesq (Fr = eps^(alpha/2))")
        ->check(CLI::Range(0, 1))
        ->capture_default_str();
    app.add_option("--gamma_eos", cfg.gamma_eos, "isentropic exponent in P(rho) = rho^gamma")
        ->check(CLI::Range(std::nextafter(1.0, 2.0), 1e6))
        ->capture_default_str();
    app.add_flag("--gravity_on,!--gravity_off", cfg.gravity_on, "include the gravity source")
        ->capture_default_str();
    app.add_option("--nx", cfg.nx, "cells along x1")->check(CLI::Range(4, 100000))->capture_default_str();
    app.add_option("--ny", cfg.ny, "cells along x2")->check(CLI::Range(4, 100000))->capture_default_str();
    app.add_option("--cfl", cfg.cfl, "Courant number")
        ->check(CLI::Range(std::nextafter(0.0, 1.0), std::nextafter(1.0, 0.0)))
        ->capture_default_str();
    app.add_option("--dt_max", cfg.dt_max, "time-step cap for degenerate velocity fields")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--t_final", cfg.t_final, "final time")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--newton_tol", cfg.newton_tol, "elliptic solver tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--newton_max", cfg.newton_max, "Newton iteration budget")
        ->check(CLI::Range(1, 100000))
        ->capture_default_str();
    app.add_option("--output_dir", cfg.output_dir, "directory for CSV output")
        ->envname("APFLOW_OUTPUT_DIR")
        ->capture_default_str();
    app.add_option("--output_every", cfg.output_every, "steps between recorded samples")
        ->check(CLI::Range(1, 1000000000))
        ->capture_default_str();
    app.add_option("--preset", cfg.preset, "experiment preset")
        ->check(CLI::IsMember({"low-mach", "boussinesq"}))
        ->capture_default_str();
}

void finalize_run_config(const CLI::App& app, RunConfig& cfg) {
    if (app.count("--preset") > 0 && app.count("--alpha") == 0) {
        cfg.alpha = (cfg.preset == "boussinesq") ? 1 : 0;
    }
    cfg.preset = (cfg.alpha == 1) ? "boussinesq" : "low-mach";
}

RunConfig parse_run_config(const std::vector<std::string>& args) {
    RunConfig cfg;
    CLI::App app{"solver configuration"};
    app.set_config("--config", "", "key=value configuration file");
    app.allow_config_extras(false);
    register_run_options(app, cfg);
    try {
        // CLI11 wants argv in reverse order
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        throw ConfigError(e.what());
    }
    finalize_run_config(app, cfg);
    return cfg;
}

std::string serialize_config(const RunConfig& cfg) {
    std::ostringstream os;
    os.precision(17);
    os << "eps=" << cfg.eps << "\n";
    os << "alpha=" << cfg.alpha << "\n";
    os << "gamma_eos=" << cfg.gamma_eos << "\n";
    os << "gravity_on=" << (cfg.gravity_on ? "true" : "false") << "\n";
    os << "nx=" << cfg.nx << "\n";
    os << "ny=" << cfg.ny << "\n";
    os << "cfl=" << cfg.cfl << "\n";
    os << "dt_max=" << cfg.dt_max << "\n";
    os << "t_final=" << cfg.t_final << "\n";
    os << "newton_tol=" << cfg.newton_tol << "\n";
    os << "newton_max=" << cfg.newton_max << "\n";
    os << "output_dir=" << cfg.output_dir << "\n";
    os << "output_every=" << cfg.output_every << "\n";
    os << "preset=" << cfg.preset << "\n";
    return os.str();
}

}  // namespace apflow
