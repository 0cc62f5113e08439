#pragma once

// Uniform box grids, grid functions, multilinear interpolation with
// clamping, and finite-difference gradients. Node storage is row-major
// with the last axis fastest; the CSV format mirrors that order so files
// round-trip bit-exactly.

#include <cstdio>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>

#include "impulse/core.hpp"

namespace impulse {

struct Grid {
    Vec lower;
    Vec upper;
    std::vector<std::size_t> nodes_per_axis;

    void validate() const {
        Box{lower, upper}.validate();
        if (nodes_per_axis.size() != lower.size())
            throw std::invalid_argument("Grid: nodes_per_axis dimension mismatch");
        for (std::size_t n : nodes_per_axis)
            if (n < 2) throw std::invalid_argument("Grid: need at least 2 nodes per axis");
    }

    std::size_t dimension() const { return lower.size(); }

    std::size_t size() const {
        std::size_t s = 1;
        for (std::size_t n : nodes_per_axis) s *= n;
        return s;
    }

    double spacing(std::size_t axis) const {
        return (upper[axis] - lower[axis]) / static_cast<double>(nodes_per_axis[axis] - 1);
    }

    double min_spacing() const {
        double h = std::numeric_limits<double>::infinity();
        for (std::size_t a = 0; a < dimension(); ++a) h = std::min(h, spacing(a));
        return h;
    }

    double max_spacing() const {
        double h = 0.0;
        for (std::size_t a = 0; a < dimension(); ++a) h = std::max(h, spacing(a));
        return h;
    }

    Box box() const { return Box{lower, upper}; }

    std::size_t flat_index(const std::vector<std::size_t>& mi) const {
        std::size_t idx = 0;
        for (std::size_t a = 0; a < dimension(); ++a) idx = idx * nodes_per_axis[a] + mi[a];
        return idx;
    }

    std::vector<std::size_t> multi_index(std::size_t flat) const {
        std::vector<std::size_t> mi(dimension());
        for (std::size_t a = dimension(); a-- > 0;) {
            mi[a] = flat % nodes_per_axis[a];
            flat /= nodes_per_axis[a];
        }
        return mi;
    }

    Vec point(const std::vector<std::size_t>& mi) const {
        Vec x(dimension());
        for (std::size_t a = 0; a < dimension(); ++a)
            x[a] = lower[a] + static_cast<double>(mi[a]) * spacing(a);
        return x;
    }

    Vec point(std::size_t flat) const { return point(multi_index(flat)); }

    bool is_face_node(const std::vector<std::size_t>& mi) const {
        for (std::size_t a = 0; a < dimension(); ++a)
            if (mi[a] == 0 || mi[a] + 1 == nodes_per_axis[a]) return true;
        return false;
    }

    bool operator==(const Grid& other) const {
        return lower == other.lower && upper == other.upper &&
               nodes_per_axis == other.nodes_per_axis;
    }
};

/// Values of a candidate value function at the grid nodes. Treated as
/// immutable after construction; the solver double-buffers.
struct GridFunction {
    Grid grid;
    std::vector<double> values;

    GridFunction() = default;
    GridFunction(Grid g, double fill) : grid(std::move(g)), values(grid.size(), fill) {}
    GridFunction(Grid g, std::vector<double> v) : grid(std::move(g)), values(std::move(v)) {
        if (values.size() != grid.size())
            throw std::invalid_argument("GridFunction: value count mismatch");
    }

    double at(const std::vector<std::size_t>& mi) const { return values[grid.flat_index(mi)]; }
};

inline GridFunction tabulate(const Grid& grid, const std::function<double(const Vec&)>& f) {
    GridFunction gf(grid, 0.0);
    for (std::size_t i = 0; i < gf.values.size(); ++i) gf.values[i] = f(grid.point(i));
    return gf;
}

/// Multilinear interpolation after clamping x into the box. Clamping keeps
/// the map monotone and nonexpansive, which the solver's convergence needs.
inline double interpolate(const GridFunction& gf, const Vec& x) {
    const Grid& g = gf.grid;
    const std::size_t n = g.dimension();
    std::vector<std::size_t> base(n);
    Vec w(n);
    for (std::size_t a = 0; a < n; ++a) {
        const double h = g.spacing(a);
        double xa = std::min(std::max(x[a], g.lower[a]), g.upper[a]);
        double t = (xa - g.lower[a]) / h;
        auto cell = static_cast<std::size_t>(t);
        if (cell > g.nodes_per_axis[a] - 2) cell = g.nodes_per_axis[a] - 2;
        base[a] = cell;
        w[a] = t - static_cast<double>(cell);
    }
    double sum = 0.0;
    std::vector<std::size_t> mi(n);
    for (std::size_t corner = 0; corner < (std::size_t{1} << n); ++corner) {
        double weight = 1.0;
        for (std::size_t a = 0; a < n; ++a) {
            const bool hi = (corner >> a) & 1;
            mi[a] = base[a] + (hi ? 1 : 0);
            weight *= hi ? w[a] : 1.0 - w[a];
        }
        if (weight != 0.0) sum += weight * gf.values[g.flat_index(mi)];
    }
    return sum;
}

/// Central differences at interior nodes, first-order one-sided at faces.
inline Vec gradient_fd(const GridFunction& gf, const std::vector<std::size_t>& mi) {
    const Grid& g = gf.grid;
    const std::size_t n = g.dimension();
    if (mi.size() != n) throw std::invalid_argument("gradient_fd: bad multi-index");
    for (std::size_t a = 0; a < n; ++a)
        if (mi[a] >= g.nodes_per_axis[a]) throw std::invalid_argument("gradient_fd: index out of range");
    Vec grad(n);
    std::vector<std::size_t> lo = mi, hi = mi;
    for (std::size_t a = 0; a < n; ++a) {
        const double h = g.spacing(a);
        const std::size_t i = mi[a];
        if (i == 0) {
            hi[a] = i + 1;
            grad[a] = (gf.at(hi) - gf.at(mi)) / h;
        } else if (i + 1 == g.nodes_per_axis[a]) {
            lo[a] = i - 1;
            grad[a] = (gf.at(mi) - gf.at(lo)) / h;
        } else {
            lo[a] = i - 1;
            hi[a] = i + 1;
            grad[a] = (gf.at(hi) - gf.at(lo)) / (2.0 * h);
        }
        lo[a] = i;
        hi[a] = i;
    }
    return grad;
}

namespace detail {

// 17 significant digits: doubles survive the text round trip bit-exactly.
inline void print_double(std::ostream& os, double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    os << buf;
}

}  // namespace detail

/// CSV rows x_1..x_n,value in row-major node order.
inline void write_grid_csv(std::ostream& os, const GridFunction& gf) {
    const std::size_t n = gf.grid.dimension();
    for (std::size_t a = 0; a < n; ++a) os << "x_" << (a + 1) << ',';
    os << "value\n";
    for (std::size_t i = 0; i < gf.values.size(); ++i) {
        const Vec x = gf.grid.point(i);
        for (std::size_t a = 0; a < n; ++a) {
            detail::print_double(os, x[a]);
            os << ',';
        }
        detail::print_double(os, gf.values[i]);
        os << '\n';
    }
}

inline void write_grid_csv_file(const std::string& path, const GridFunction& gf) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path + " for writing");
    write_grid_csv(os, gf);
}

/// Reads values written by write_grid_csv back onto `grid` (coordinates in
/// the file are ignored; row order is authoritative).
inline GridFunction read_grid_csv(std::istream& is, const Grid& grid) {
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("grid csv: missing header");
    std::vector<double> values;
    values.reserve(grid.size());
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto pos = line.find_last_of(',');
        if (pos == std::string::npos) throw std::runtime_error("grid csv: malformed row");
        values.push_back(std::stod(line.substr(pos + 1)));
    }
    if (values.size() != grid.size())
        throw std::runtime_error("grid csv: row count does not match grid");
    return GridFunction(grid, std::move(values));
}

inline GridFunction read_grid_csv_file(const std::string& path, const Grid& grid) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open " + path);
    return read_grid_csv(is, grid);
}

}  // namespace impulse
