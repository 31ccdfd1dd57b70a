#include "chemlab/grid.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace chemlab {

Grid build_grid(int dim, int cells_per_axis, double extent) {
    if (dim != 1 && dim != 2)
        throw Error("build_grid: dim must be 1 or 2 (got " + std::to_string(dim) + ")");
    if (cells_per_axis < 4)
        throw Error("build_grid: cells_per_axis must be >= 4 (got " +
                    std::to_string(cells_per_axis) + ")");
    if (!(extent > 0.0) || !std::isfinite(extent))
        throw Error("build_grid: extent must be positive and finite");
    Grid g;
    g.dim = dim;
    g.cells_per_axis = cells_per_axis;
    g.extent = extent;
    g.h = extent / cells_per_axis;
    return g;
}

double integrate(const Field& f, const Grid& g) {
    require_matching(f, g, "integrate");
    double s = 0.0;
    for (double x : f) s += x;
    return s * g.cell_volume();
}

double lp_norm(const Field& f, const Grid& g, double p) {
    require_matching(f, g, "lp_norm");
    if (!(p >= 1.0) || !std::isfinite(p))
        throw Error("lp_norm: p must be finite and >= 1");
    const long ip = std::lround(p);
    const bool integral_p = std::abs(p - static_cast<double>(ip)) == 0.0 && ip <= 8;
    double s = 0.0;
    if (integral_p) {
        for (double x : f) {
            double a = std::abs(x), t = 1.0;
            for (long k = 0; k < ip; ++k) t *= a;
            s += t;
        }
    } else {
        for (double x : f) s += std::pow(std::abs(x), p);
    }
    return std::pow(s * g.cell_volume(), 1.0 / p);
}

double grad_sq_integral(const Field& f, const Grid& g) {
    require_matching(f, g, "grad_sq_integral");
    const std::size_t n = g.total_cells();
    const int N = g.cells_per_axis;
    const double vol = g.cell_volume();
    const double inv_h = 1.0 / g.h;
    double s = 0.0;
    for (int a = 0; a < g.dim; ++a) {
        const std::size_t str = g.stride(a);
        for (std::size_t c = 0; c < n; ++c) {
            if (g.coord(c, a) == N - 1) continue; // +a face on the boundary
            const double d = (f[c + str] - f[c]) * inv_h;
            s += d * d;
        }
    }
    return s * vol;
}

bool all_finite(const Field& f) {
    for (double x : f)
        if (!std::isfinite(x)) return false;
    return true;
}

void require_matching(const Field& f, const Grid& g, const char* what) {
    if (f.size() != g.total_cells())
        throw Error(std::string(what) + ": field size " + std::to_string(f.size()) +
                    " does not match grid cell count " + std::to_string(g.total_cells()));
}

void write_snapshot(const std::string& path, const Grid& g, const State& s) {
    require_matching(s.u, g, "write_snapshot(u)");
    require_matching(s.v, g, "write_snapshot(v)");
    std::ofstream out(path);
    if (!out) throw Error("write_snapshot: cannot open " + path);
    char buf[512];
    std::snprintf(buf, sizeof(buf), "# %d,%d,%.17g,%.17g\n", g.dim, g.cells_per_axis,
                  g.extent, s.t);
    out << buf;
    const std::size_t n = g.total_cells();
    for (std::size_t c = 0; c < n; ++c) {
        if (g.dim == 1) {
            std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g,%.17g\n", c, g.center(c, 0),
                          s.u[c], s.v[c]);
        } else {
            std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g,%.17g,%.17g\n", c,
                          g.center(c, 0), g.center(c, 1), s.u[c], s.v[c]);
        }
        out << buf;
    }
    if (!out) throw Error("write_snapshot: write failed for " + path);
}

State read_snapshot(const std::string& path, Grid& g_out) {
    std::ifstream in(path);
    if (!in) throw Error("read_snapshot: cannot open " + path);
    std::string line;
    if (!std::getline(in, line) || line.size() < 2 || line[0] != '#')
        throw Error("read_snapshot: missing metadata line in " + path);
    {
        std::istringstream hs(line.substr(1));
        char comma;
        int dim = 0, cells = 0;
        double extent = 0.0, t = 0.0;
        if (!(hs >> dim >> comma >> cells >> comma >> extent >> comma >> t))
            throw Error("read_snapshot: malformed metadata in " + path);
        g_out = build_grid(dim, cells, extent);
        State s;
        s.t = t;
        const std::size_t n = g_out.total_cells();
        s.u.resize(n);
        s.v.resize(n);
        for (std::size_t c = 0; c < n; ++c) {
            if (!std::getline(in, line))
                throw Error("read_snapshot: truncated file " + path);
            std::istringstream ls(line);
            std::size_t idx;
            double coordv, u, v;
            ls >> idx >> comma >> coordv >> comma;
            if (g_out.dim == 2) ls >> coordv >> comma;
            ls >> u >> comma >> v;
            if (!ls || idx != c)
                throw Error("read_snapshot: malformed row " + std::to_string(c) + " in " + path);
            s.u[c] = u;
            s.v[c] = v;
        }
        return s;
    }
}

} // namespace chemlab
