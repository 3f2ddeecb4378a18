#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "apflow/csv_io.hpp"
#include "apflow/driver.hpp"
#include "apflow/errors.hpp"
#include "apflow/ops.hpp"
#include "apflow/run_config.hpp"

using namespace apflow;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
    return fs::temp_directory_path() / ("apflow_test_" + name);
}

std::string write_temp(const std::string& name, const std::string& text) {
    const fs::path p = temp_file(name);
    std::ofstream out(p);
    out << text;
    out.close();
    return p.string();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_SUITE("cli_io") {

TEST_CASE("empty input yields the low-Mach benchmark preset") {
    const RunConfig cfg = parse_run_config({});
    CHECK(cfg.eps == 0.1);
    CHECK(cfg.alpha == 0);
    CHECK(cfg.gamma_eos == 2.0);
    CHECK(cfg.gravity_on);
    CHECK(cfg.nx == 50);
    CHECK(cfg.ny == 50);
    CHECK(cfg.cfl == 0.45);
    CHECK(cfg.t_final == 1.0);
    CHECK(cfg.newton_tol == 1e-10);
    CHECK(cfg.preset == "low-mach");
    CHECK(cfg == low_mach_preset());
}

TEST_CASE("alpha=1 from a config file selects the Boussinesq preset") {
    const std::string path = write_temp("alpha.cfg", "alpha=1\n");
    const RunConfig cfg = parse_run_config({"--config", path});
    CHECK(cfg.alpha == 1);
    CHECK(cfg.preset == "boussinesq");
    RunConfig expect = boussinesq_preset();
    CHECK(cfg == expect);
}

TEST_CASE("command-line flags win over config-file values") {
    const std::string path = write_temp("eps.cfg", "eps=0.2\nnx=10\n");
    const RunConfig cfg = parse_run_config({"--config", path, "--eps", "0.05"});
    CHECK(cfg.eps == 0.05);
    CHECK(cfg.nx == 10);
}

TEST_CASE("out-of-range cfl is rejected naming the key") {
    try {
        parse_run_config({"--cfl", "1.7"});
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("cfl") != std::string::npos);
    }
}

TEST_CASE("unknown keys and malformed numbers are rejected") {
    CHECK_THROWS_AS(parse_run_config({"--no_such_option", "1"}), ConfigError);

    const std::string bad_key = write_temp("badkey.cfg", "mesh_size=50\n");
    CHECK_THROWS_AS(parse_run_config({"--config", bad_key}), ConfigError);

    try {
        parse_run_config({"--nx", "fifty"});
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("nx") != std::string::npos);
    }
}

TEST_CASE("config serialisation round-trips") {
    RunConfig cfg;
    cfg.eps = 0.025;
    cfg.alpha = 1;
    cfg.gamma_eos = 1.4;
    cfg.gravity_on = false;
    cfg.nx = 24;
    cfg.ny = 36;
    cfg.cfl = 0.3;
    cfg.dt_max = 0.004;
    cfg.t_final = 2.5;
    cfg.newton_tol = 1e-9;
    cfg.newton_max = 20;
    cfg.output_dir = "elsewhere";
    cfg.output_every = 7;
    cfg.preset = "boussinesq";

    const std::string path = write_temp("roundtrip.cfg", serialize_config(cfg));
    const RunConfig back = parse_run_config({"--config", path});
    CHECK(back == cfg);
}

TEST_CASE("APFLOW_OUTPUT_DIR is the fallback for output_dir") {
    setenv("APFLOW_OUTPUT_DIR", "env_dir", 1);
    const RunConfig from_env = parse_run_config({});
    CHECK(from_env.output_dir == "env_dir");
    const RunConfig from_flag = parse_run_config({"--output_dir", "flag_dir"});
    CHECK(from_flag.output_dir == "flag_dir");
    unsetenv("APFLOW_OUTPUT_DIR");
}

TEST_CASE("fields CSV of a small uniform state") {
    const GridSpec g = GridSpec::unit_square(4, 4);
    const ConservedField state(g);  // rho = 1, q = 0
    const std::string path = temp_file("uniform_fields.csv").string();
    write_fields_csv(state, path);

    const CsvTable table = read_csv(path);
    REQUIRE(table.header ==
            std::vector<std::string>{"x1", "x2", "rho", "u1", "u2", "div"});
    REQUIRE(table.rows.size() == 16);
    for (const auto& row : table.rows) {
        CHECK(row[2] == 1.0);
        CHECK(row[3] == 0.0);
        CHECK(row[4] == 0.0);
        CHECK(row[5] == 0.0);
    }
    // row-major: x1 varies fastest
    CHECK(table.rows[0][0] == g.x1_center(0));
    CHECK(table.rows[1][0] == g.x1_center(1));
    CHECK(table.rows[4][1] == g.x2_center(1));
}

TEST_CASE("fields CSV round-trips doubles exactly") {
    const GridSpec g = GridSpec::unit_square(8, 8);
    const ConservedField state = well_prepared_init(g, 0.1);
    const std::string path = temp_file("wp_fields.csv").string();
    write_fields_csv(state, path);

    const VectorField u = velocity(state);
    const ScalarField div = central_divergence(u);
    const CsvTable table = read_csv(path);
    REQUIRE(table.rows.size() == static_cast<std::size_t>(g.ncells()));
    std::size_t r = 0;
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i, ++r) {
            CHECK(table.rows[r][0] == g.x1_center(i));
            CHECK(table.rows[r][1] == g.x2_center(j));
            CHECK(table.rows[r][2] == state.rho(i, j));
            CHECK(table.rows[r][3] == u.c1(i, j));
            CHECK(table.rows[r][4] == u.c2(i, j));
            CHECK(table.rows[r][5] == div(i, j));
        }
    }
}

TEST_CASE("timeseries CSV carries the observable columns") {
    std::vector<ApObservables> series(2);
    series[0] = ApObservables{0.0, 1.005, 0.005, 0.06, 0.02, 1.4};
    series[1] = ApObservables{1.0, 1.005, 0.001, 0.01, 0.004, 1.2};
    const std::string path = temp_file("series.csv").string();
    write_timeseries_csv(series, path);
    const CsvTable table = read_csv(path);
    CHECK(table.header ==
          std::vector<std::string>{"t", "mass", "rho_dev_inf", "div_inf", "div_l2", "umax"});
    REQUIRE(table.rows.size() == 2);
    CHECK(table.rows[0][1] == 1.005);
    CHECK(table.rows[1][5] == 1.2);
}

TEST_CASE("identical configs produce byte-identical output") {
    RunConfig cfg;
    cfg.nx = 12;
    cfg.ny = 12;
    cfg.t_final = 0.02;
    cfg.output_every = 2;

    const std::string a = temp_file("det_a.csv").string();
    const std::string b = temp_file("det_b.csv").string();
    write_timeseries_csv(run_case(cfg).series, a);
    write_timeseries_csv(run_case(cfg).series, b);
    CHECK(slurp(a) == slurp(b));

    const std::string fa = temp_file("det_fields_a.csv").string();
    const std::string fb = temp_file("det_fields_b.csv").string();
    write_fields_csv(run_case(cfg).final_state, fa);
    write_fields_csv(run_case(cfg).final_state, fb);
    CHECK(slurp(fa) == slurp(fb));
}

TEST_CASE("parallel sweep matches the sequential sweep bitwise") {
    RunConfig base;
    base.nx = 12;
    base.ny = 12;
    base.t_final = 0.02;
    const std::vector<double> eps{0.1, 0.05, 0.025};
    const std::vector<SweepRow> seq = sweep_eps(base, eps, false);
    const std::vector<SweepRow> par = sweep_eps(base, eps, true);
    REQUIRE(seq.size() == par.size());
    for (std::size_t k = 0; k < seq.size(); ++k) {
        CHECK(seq[k].eps == par[k].eps);
        CHECK(seq[k].steps == par[k].steps);
        CHECK(seq[k].rho_dev_inf == par[k].rho_dev_inf);
        CHECK(seq[k].div_inf == par[k].div_inf);
        CHECK(seq[k].umax_initial == par[k].umax_initial);
        CHECK(seq[k].umax_final == par[k].umax_final);
    }
}

TEST_CASE("io errors carry the path") {
    const GridSpec g = GridSpec::unit_square(4, 4);
    const ConservedField state(g);
    try {
        write_fields_csv(state, "/nonexistent_dir_apflow/x.csv");
        FAIL("expected IoError");
    } catch (const IoError& e) {
        CHECK(std::string(e.what()).find("/nonexistent_dir_apflow/x.csv") != std::string::npos);
    }
    CHECK_THROWS_AS(read_csv("/nonexistent_dir_apflow/y.csv"), IoError);
}

}  // TEST_SUITE
