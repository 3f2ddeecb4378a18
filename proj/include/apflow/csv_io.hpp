#pragma once

#include <string>
#include <vector>

#include "apflow/diagnostics.hpp"
#include "apflow/model.hpp"

namespace apflow {

/// Header "x1,x2,rho,u1,u2,div", one row per cell in row-major order
/// (j outer, i inner), 17 significant digits so doubles round-trip exactly.
void write_fields_csv(const ConservedField& state, const std::string& path);

/// Header "t,mass,rho_dev_inf,div_inf,div_l2,umax".
void write_timeseries_csv(const std::vector<ApObservables>& series, const std::string& path);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

CsvTable read_csv(const std::string& path);

struct SweepRow {
    double eps = 0.0;
    int steps = 0;
    double rho_dev_inf = 0.0;
    double div_inf = 0.0;
    double umax_initial = 0.0;
    double umax_final = 0.0;
};

void write_sweep_summary_csv(const std::vector<SweepRow>& rows, const std::string& path);

}  // namespace apflow
