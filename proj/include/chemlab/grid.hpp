#pragma once
#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "chemlab/errors.hpp"

namespace chemlab {

// Uniform cell-centered Cartesian mesh on the box [0, extent]^dim with
// zero-flux (homogeneous Neumann) faces. dim is validated to {1,2} at build
// time; the indexing below is dimension-generic.
struct Grid {
    int dim = 1;
    int cells_per_axis = 0;
    double extent = 0.0;
    double h = 0.0;

    std::size_t total_cells() const {
        std::size_t n = 1;
        for (int a = 0; a < dim; ++a) n *= static_cast<std::size_t>(cells_per_axis);
        return n;
    }
    double cell_volume() const {
        double v = 1.0;
        for (int a = 0; a < dim; ++a) v *= h;
        return v;
    }
    std::size_t stride(int axis) const {
        std::size_t s = 1;
        for (int a = 0; a < axis; ++a) s *= static_cast<std::size_t>(cells_per_axis);
        return s;
    }
    // Coordinate index of cell c along axis.
    int coord(std::size_t c, int axis) const {
        return static_cast<int>((c / stride(axis)) % static_cast<std::size_t>(cells_per_axis));
    }
    // Cell-center position along axis.
    double center(std::size_t c, int axis) const {
        return (coord(c, axis) + 0.5) * h;
    }
};

using Field = std::vector<double>;

// One time instant of the simulated pair (u = cell density, v = concentration).
struct State {
    double t = 0.0;
    Field u;
    Field v;
};

Grid build_grid(int dim, int cells_per_axis, double extent);

// Sum of cell values times cell volume.
double integrate(const Field& f, const Grid& g);

// (sum |f_i|^p h^dim)^(1/p), p >= 1 finite.
double lp_norm(const Field& f, const Grid& g, double p);

// Sum over interior faces of ((f_R - f_L)/h)^2 * h^dim. Zero-flux boundary
// faces contribute nothing, so adding a constant leaves the value unchanged.
double grad_sq_integral(const Field& f, const Grid& g);

bool all_finite(const Field& f);
void require_matching(const Field& f, const Grid& g, const char* what);

// Snapshot file: "# dim,cells,extent,t" metadata line, then one row per cell
// "index,x[,y],u,v" with >= 15 significant digits.
void write_snapshot(const std::string& path, const Grid& g, const State& s);
State read_snapshot(const std::string& path, Grid& g_out);

} // namespace chemlab
