#include "apflow/grid.hpp"

#include <string>

#include "apflow/errors.hpp"

namespace apflow {

GridSpec::GridSpec(int nx_, int ny_, double x1min, double x1max, double x2min, double x2max)
    : nx(nx_), ny(ny_), x1_min(x1min), x1_max(x1max), x2_min(x2min), x2_max(x2max) {
    if (nx < 4 || ny < 4) {
        throw std::invalid_argument("GridSpec: nx and ny must be >= 4 (central stencils need width), got " +
                                    std::to_string(nx) + "x" + std::to_string(ny));
    }
    if (!(x1_max > x1_min) || !(x2_max > x2_min)) {
        throw std::invalid_argument("GridSpec: domain bounds must satisfy max > min");
    }
    dx1 = (x1_max - x1_min) / nx;
    dx2 = (x2_max - x2_min) / ny;
}

VectorField::VectorField(ScalarField a, ScalarField b) : c1(std::move(a)), c2(std::move(b)) {
    require_same_grid(c1.grid(), c2.grid(), "VectorField");
}

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* where) {
    if (!(a == b)) {
        throw std::invalid_argument(std::string(where) + ": fields live on different grids");
    }
}

}  // namespace apflow
