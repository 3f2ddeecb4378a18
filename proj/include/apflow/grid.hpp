#pragma once

#include <stdexcept>
#include <vector>

namespace apflow {

/// Uniform rectangular grid with periodic topology in both axes.
/// Cell (i,j) is centered at (x1_min + (i+1/2)dx1, x2_min + (j+1/2)dx2).
struct GridSpec {
    int nx = 0;
    int ny = 0;
    double x1_min = 0.0, x1_max = 1.0;
    double x2_min = 0.0, x2_max = 1.0;
    double dx1 = 0.0;
    double dx2 = 0.0;

    GridSpec() = default;
    GridSpec(int nx_, int ny_, double x1min, double x1max, double x2min, double x2max);

    static GridSpec unit_square(int nx_, int ny_) { return {nx_, ny_, 0.0, 1.0, 0.0, 1.0}; }

    double x1_center(int i) const { return x1_min + (i + 0.5) * dx1; }
    double x2_center(int j) const { return x2_min + (j + 0.5) * dx2; }
    double cell_area() const { return dx1 * dx2; }
    int ncells() const { return nx * ny; }
    int index(int i, int j) const { return j * nx + i; }

    int wrap1(int i) const { int r = i % nx; return r < 0 ? r + nx : r; }
    int wrap2(int j) const { int r = j % ny; return r < 0 ? r + ny : r; }

    bool operator==(const GridSpec&) const = default;
};

/// Cell-centered scalar data on a GridSpec. operator()(i,j) wraps periodically;
/// kernels that already know their indices are in range use data() directly.
class ScalarField {
public:
    ScalarField() = default;
    explicit ScalarField(const GridSpec& g, double value = 0.0)
        : grid_(g), data_(static_cast<std::size_t>(g.ncells()), value) {}

    const GridSpec& grid() const { return grid_; }
    int size() const { return static_cast<int>(data_.size()); }

    double operator()(int i, int j) const { return data_[idx(i, j)]; }
    double& operator()(int i, int j) { return data_[idx(i, j)]; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }
    std::vector<double>& values() { return data_; }
    const std::vector<double>& values() const { return data_; }

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(grid_.index(grid_.wrap1(i), grid_.wrap2(j)));
    }

    GridSpec grid_{};
    std::vector<double> data_{};
};

struct VectorField {
    ScalarField c1;
    ScalarField c2;

    VectorField() = default;
    explicit VectorField(const GridSpec& g) : c1(g), c2(g) {}
    VectorField(ScalarField a, ScalarField b);

    const GridSpec& grid() const { return c1.grid(); }
};

/// Fills a field with f(x1,x2) evaluated at cell centers.
template <class F>
ScalarField evaluate_at_centers(const GridSpec& g, F&& f) {
    ScalarField out(g);
    double* d = out.data();
    for (int j = 0; j < g.ny; ++j) {
        const double x2 = g.x2_center(j);
        for (int i = 0; i < g.nx; ++i) {
            d[g.index(i, j)] = f(g.x1_center(i), x2);
        }
    }
    return out;
}

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* where);

}  // namespace apflow
