#pragma once

#include <string>
#include <vector>

namespace CLI {
class App;
}

namespace apflow {

/// Everything a solver run needs. Defaults are the low-Mach benchmark
/// (eps = 0.1, alpha = 0, 50x50 unit square, CFL 0.45, T = 1.0, periodic).
struct RunConfig {
    double eps = 0.1;
    int alpha = 0;
    double gamma_eos = 2.0;
    bool gravity_on = true;
    int nx = 50;
    int ny = 50;
    double cfl = 0.45;
    double dt_max = 1e-2;
    double t_final = 1.0;
    double newton_tol = 1e-10;
    int newton_max = 50;
    std::string output_dir = "out";
    int output_every = 50;
    std::string preset = "low-mach";

    bool operator==(const RunConfig&) const = default;
};

RunConfig low_mach_preset();
RunConfig boussinesq_preset();

/// Registers all RunConfig options (with range validation) on a CLI11 app.
/// Config-file keys match the long option names; command-line flags win.
void register_run_options(CLI::App& app, RunConfig& cfg);

/// Applies the preset after parsing (a preset picks alpha unless alpha was
/// given explicitly) and keeps the preset label consistent with alpha.
void finalize_run_config(const CLI::App& app, RunConfig& cfg);

/// Parses flags plus an optional `--config file` of key=value lines.
/// Unknown keys, malformed numbers and out-of-range values throw ConfigError
/// naming the offending key.
RunConfig parse_run_config(const std::vector<std::string>& args);

/// key=value lines; parsing them back yields an equal config.
std::string serialize_config(const RunConfig& cfg);

}  // namespace apflow
