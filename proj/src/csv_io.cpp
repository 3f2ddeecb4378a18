#include "apflow/csv_io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include "apflow/errors.hpp"
#include "apflow/ops.hpp"

namespace apflow {

namespace {
std::FILE* open_or_throw(const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "w");
    if (!f) throw IoError("cannot open '" + path + "' for writing: " + std::strerror(errno));
    return f;
}

void close_or_throw(std::FILE* f, const std::string& path) {
    if (std::fclose(f) != 0) throw IoError("failed to close '" + path + "': " + std::strerror(errno));
}
}  // namespace

void write_fields_csv(const ConservedField& state, const std::string& path) {
    const GridSpec& g = state.grid();
    const VectorField u = velocity(state);
    const ScalarField div = central_divergence(u);

    std::FILE* f = open_or_throw(path);
    std::fputs("x1,x2,rho,u1,u2,div\n", f);
    for (int j = 0; j < g.ny; ++j) {
        for (int i = 0; i < g.nx; ++i) {
            std::fprintf(f, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", g.x1_center(i),
                         g.x2_center(j), state.rho(i, j), u.c1(i, j), u.c2(i, j), div(i, j));
        }
    }
    close_or_throw(f, path);
}

void write_timeseries_csv(const std::vector<ApObservables>& series, const std::string& path) {
    std::FILE* f = open_or_throw(path);
    std::fputs("t,mass,rho_dev_inf,div_inf,div_l2,umax\n", f);
    for (const auto& s : series) {
        std::fprintf(f, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", s.t, s.mass, s.rho_dev_inf,
                     s.div_inf, s.div_l2, s.umax);
    }
    close_or_throw(f, path);
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading: " + std::strerror(errno));
    CsvTable table;
    std::string line;
    if (!std::getline(in, line)) throw IoError("'" + path + "' is empty");
    {
        std::stringstream ss(line);
        std::string col;
        while (std::getline(ss, col, ',')) table.header.push_back(col);
    }
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        row.reserve(table.header.size());
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                row.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw IoError("'" + path + "': cannot parse '" + cell + "' as a number");
            }
        }
        if (row.size() != table.header.size()) {
            throw IoError("'" + path + "': row with " + std::to_string(row.size()) +
                          " cells, expected " + std::to_string(table.header.size()));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

void write_sweep_summary_csv(const std::vector<SweepRow>& rows, const std::string& path) {
    std::FILE* f = open_or_throw(path);
    std::fputs("eps,steps,rho_dev_inf,div_inf,umax_initial,umax_final\n", f);
    for (const auto& r : rows) {
        std::fprintf(f, "%.17g,%d,%.17g,%.17g,%.17g,%.17g\n", r.eps, r.steps, r.rho_dev_inf,
                     r.div_inf, r.umax_initial, r.umax_final);
    }
    close_or_throw(f, path);
}

}  // namespace apflow
