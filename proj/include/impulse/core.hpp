#pragma once

// Small dense-vector helpers shared across the library. States, actions and
// gradients are plain std::vector<double>; dimensions are runtime values.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace impulse {

using Vec = std::vector<double>;

inline Vec add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec scaled(const Vec& a, double s) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

// r = a + s*b
inline Vec axpy(const Vec& a, double s, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + s * b[i];
    return r;
}

inline double dot(const Vec& a, const Vec& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

inline double inf_norm(const Vec& a) {
    double m = 0.0;
    for (double x : a) m = std::max(m, std::abs(x));
    return m;
}

inline bool is_zero(const Vec& a) {
    for (double x : a)
        if (x != 0.0) return false;
    return true;
}

inline bool all_finite(const Vec& a) {
    for (double x : a)
        if (!std::isfinite(x)) return false;
    return true;
}

/// Axis-aligned box in R^n.
struct Box {
    Vec lower;
    Vec upper;

    std::size_t dimension() const { return lower.size(); }

    void validate() const {
        if (lower.empty() || lower.size() != upper.size())
            throw std::invalid_argument("Box: empty or mismatched bounds");
        for (std::size_t i = 0; i < lower.size(); ++i)
            if (!(lower[i] < upper[i]))
                throw std::invalid_argument("Box: degenerate axis " + std::to_string(i));
    }

    Vec clamp(Vec x) const {
        for (std::size_t i = 0; i < x.size(); ++i)
            x[i] = std::min(std::max(x[i], lower[i]), upper[i]);
        return x;
    }

    /// Distance from x to the nearest face, negative outside.
    double face_distance(const Vec& x) const {
        double d = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < x.size(); ++i)
            d = std::min(d, std::min(x[i] - lower[i], upper[i] - x[i]));
        return d;
    }
};

}  // namespace impulse
