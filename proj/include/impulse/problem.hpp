#pragma once

// Game instance description and validation of the standing assumptions:
// bounded Lipschitz drift/gain, zero-lower-bound impulse costs, maximizer
// cost subadditivity, minimizer cost strict subadditivity, and the
// proportional property c(k xi) <= k c(xi) for k xi in U.

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include "impulse/core.hpp"

namespace impulse {

/// Two-player zero-sum impulse game instance. Player-xi maximizes the
/// discounted payoff by jumps from the finite action set U at cost c;
/// player-eta minimizes by jumps from V at cost chi. Between jumps the
/// state follows dy/dt = drift(y) and accrues running_gain discounted
/// at rate `discount`.
///
/// drift_sup/drift_lip/gain_sup/gain_lip are bounds declared by whoever
/// built the instance (the builtin catalog knows them exactly); the
/// sampled estimates live in AssumptionReport.
struct GameProblem {
    std::size_t dimension = 0;
    std::function<Vec(const Vec&)> drift;
    std::function<double(const Vec&)> running_gain;
    double discount = 0.0;
    std::vector<Vec> max_actions;  // U, player-xi
    std::vector<Vec> min_actions;  // V, player-eta
    std::function<double(const Vec&)> max_cost;  // c on U
    std::function<double(const Vec&)> min_cost;  // chi on V

    double drift_sup = 0.0;
    double drift_lip = 0.0;
    double gain_sup = 0.0;
    double gain_lip = 0.0;

    void validate() const {
        if (dimension < 1) throw std::invalid_argument("GameProblem: dimension must be >= 1");
        if (!(discount > 0.0)) throw std::invalid_argument("GameProblem: discount must be positive");
        if (max_actions.empty() || min_actions.empty())
            throw std::invalid_argument("GameProblem: action sets must be nonempty");
        for (const auto& a : max_actions)
            if (a.size() != dimension || is_zero(a))
                throw std::invalid_argument("GameProblem: U actions must be nonzero vectors of the right dimension");
        for (const auto& a : min_actions)
            if (a.size() != dimension || is_zero(a))
                throw std::invalid_argument("GameProblem: V actions must be nonzero vectors of the right dimension");
        if (!drift || !running_gain || !max_cost || !min_cost)
            throw std::invalid_argument("GameProblem: missing drift/gain/cost function");
    }

    double min_max_cost() const {
        double m = std::numeric_limits<double>::infinity();
        for (const auto& a : max_actions) m = std::min(m, max_cost(a));
        return m;
    }

    double min_min_cost() const {
        double m = std::numeric_limits<double>::infinity();
        for (const auto& a : min_actions) m = std::min(m, min_cost(a));
        return m;
    }

    double max_min_cost() const {
        double m = 0.0;
        for (const auto& a : min_actions) m = std::max(m, min_cost(a));
        return m;
    }

    double max_action_norm() const {
        double m = 0.0;
        for (const auto& a : max_actions) m = std::max(m, norm(a));
        for (const auto& a : min_actions) m = std::max(m, norm(a));
        return m;
    }

    bool in_max_actions(const Vec& a) const {
        for (const auto& u : max_actions)
            if (u == a) return true;
        return false;
    }

    bool in_min_actions(const Vec& a) const {
        for (const auto& v : min_actions)
            if (v == a) return true;
        return false;
    }
};

/// Both value functions lie in [-bound, +bound]: costs are nonnegative and
/// never jumping is admissible for either player.
inline double value_bound(const GameProblem& problem) {
    problem.validate();
    return problem.gain_sup / problem.discount;
}

struct AssumptionViolation {
    std::string property;
    std::string witness;
    double lhs = 0.0;
    double rhs = 0.0;
};

struct AssumptionReport {
    double lipschitz_b_estimate = 0.0;
    double lipschitz_f_estimate = 0.0;
    double bound_b = 0.0;
    double bound_f = 0.0;
    bool subadditivity_c_ok = true;
    bool strict_subadditivity_chi_ok = true;
    bool zero_lower_bound_ok = true;
    bool proportional_h2_ok = true;
    bool h2_vacuous = false;
    std::vector<AssumptionViolation> violations;

    bool all_ok() const {
        return subadditivity_c_ok && strict_subadditivity_chi_ok && zero_lower_bound_ok &&
               proportional_h2_ok;
    }

    void print(std::ostream& os) const {
        os << "lipschitz_b_estimate=" << lipschitz_b_estimate << '\n'
           << "lipschitz_f_estimate=" << lipschitz_f_estimate << '\n'
           << "bound_b=" << bound_b << '\n'
           << "bound_f=" << bound_f << '\n'
           << "subadditivity_c_ok=" << (subadditivity_c_ok ? 1 : 0) << '\n'
           << "strict_subadditivity_chi_ok=" << (strict_subadditivity_chi_ok ? 1 : 0) << '\n'
           << "zero_lower_bound_ok=" << (zero_lower_bound_ok ? 1 : 0) << '\n'
           << "proportional_h2_ok=" << (proportional_h2_ok ? 1 : 0) << '\n'
           << "h2_vacuous=" << (h2_vacuous ? 1 : 0) << '\n';
        if (h2_vacuous)
            os << "h2_note=finite action sets cannot witness scalings k -> 0; "
                  "only the supplied scale samples were checked\n";
        for (const auto& v : violations)
            os << "violation=" << v.property << " witness=" << v.witness << " lhs=" << v.lhs
               << " rhs=" << v.rhs << '\n';
    }
};

namespace detail {

inline std::string vec_to_string(const Vec& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ')';
    return os.str();
}

// Deterministic sample sequence: box center, then corners (when affordable),
// then seeded uniform draws. A prefix of a longer sequence equals the shorter
// sequence, which makes the Lipschitz estimates monotone in the sample count.
inline std::vector<Vec> sample_points(const Box& domain, std::size_t samples, std::uint64_t seed) {
    std::vector<Vec> pts;
    const std::size_t n = domain.dimension();
    Vec center(n);
    for (std::size_t i = 0; i < n; ++i) center[i] = 0.5 * (domain.lower[i] + domain.upper[i]);
    pts.push_back(center);
    if (n <= 12) {
        for (std::size_t mask = 0; mask < (std::size_t{1} << n) && pts.size() < samples; ++mask) {
            Vec corner(n);
            for (std::size_t i = 0; i < n; ++i)
                corner[i] = (mask >> i) & 1 ? domain.upper[i] : domain.lower[i];
            pts.push_back(corner);
        }
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    while (pts.size() < samples) {
        Vec x(n);
        for (std::size_t i = 0; i < n; ++i)
            x[i] = domain.lower[i] + unit(rng) * (domain.upper[i] - domain.lower[i]);
        pts.push_back(x);
    }
    pts.resize(samples);
    return pts;
}

}  // namespace detail

/// Sampled check of H1: boundedness and Lipschitz estimates for b and f over
/// `domain`, exact finite-set checks for the cost properties. Deterministic
/// given seed; estimates never decrease when `samples` grows.
inline AssumptionReport validate_h1(const GameProblem& problem, const Box& domain,
                                    std::size_t samples, std::uint64_t seed) {
    problem.validate();
    domain.validate();
    if (domain.dimension() != problem.dimension)
        throw std::invalid_argument("validate_h1: domain dimension mismatch");
    if (samples < 2) throw std::invalid_argument("validate_h1: samples must be >= 2");

    AssumptionReport report;
    const auto pts = detail::sample_points(domain, samples, seed);
    for (const auto& x : pts) {
        report.bound_b = std::max(report.bound_b, norm(problem.drift(x)));
        report.bound_f = std::max(report.bound_f, std::abs(problem.running_gain(x)));
    }
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            const double d = norm(sub(pts[i], pts[j]));
            if (d == 0.0) continue;
            report.lipschitz_b_estimate = std::max(
                report.lipschitz_b_estimate, norm(sub(problem.drift(pts[i]), problem.drift(pts[j]))) / d);
            report.lipschitz_f_estimate =
                std::max(report.lipschitz_f_estimate,
                         std::abs(problem.running_gain(pts[i]) - problem.running_gain(pts[j])) / d);
        }
    }

    for (const auto& a : problem.max_actions) {
        if (!(problem.max_cost(a) > 0.0)) {
            report.zero_lower_bound_ok = false;
            report.violations.push_back({"zero_lower_bound_c", detail::vec_to_string(a),
                                         problem.max_cost(a), 0.0});
        }
    }
    for (const auto& a : problem.min_actions) {
        if (!(problem.min_cost(a) > 0.0)) {
            report.zero_lower_bound_ok = false;
            report.violations.push_back({"zero_lower_bound_chi", detail::vec_to_string(a),
                                         problem.min_cost(a), 0.0});
        }
    }

    // Subadditivity over pairs whose sum is again a declared action
    // (exact vector equality; finite sets make this an exhaustive check).
    for (const auto& a : problem.max_actions) {
        for (const auto& b : problem.max_actions) {
            const Vec s = add(a, b);
            if (!problem.in_max_actions(s)) continue;
            const double lhs = problem.max_cost(s);
            const double rhs = problem.max_cost(a) + problem.max_cost(b);
            if (lhs > rhs) {
                report.subadditivity_c_ok = false;
                report.violations.push_back(
                    {"subadditivity_c",
                     detail::vec_to_string(a) + "+" + detail::vec_to_string(b), lhs, rhs});
            }
        }
    }
    for (const auto& a : problem.min_actions) {
        for (const auto& b : problem.min_actions) {
            const Vec s = add(a, b);
            if (!problem.in_min_actions(s)) continue;
            const double lhs = problem.min_cost(s);
            const double rhs = problem.min_cost(a) + problem.min_cost(b);
            if (!(lhs < rhs)) {
                report.strict_subadditivity_chi_ok = false;
                report.violations.push_back(
                    {"strict_subadditivity_chi",
                     detail::vec_to_string(a) + "+" + detail::vec_to_string(b), lhs, rhs});
            }
        }
    }
    return report;
}

/// Sampled check of H2, the proportional cost property of the maximizer:
/// c(k xi) <= k c(xi) for every xi in U and every k in scale_samples with
/// k xi again in U. Vacuous passes are flagged.
inline AssumptionReport validate_h2(const GameProblem& problem,
                                    const std::vector<double>& scale_samples) {
    problem.validate();
    if (scale_samples.empty()) throw std::invalid_argument("validate_h2: no scale samples");
    AssumptionReport report;
    bool any_pair = false;
    for (const auto& xi : problem.max_actions) {
        for (double k : scale_samples) {
            if (!(k > 0.0)) throw std::invalid_argument("validate_h2: scales must be positive");
            const Vec kxi = scaled(xi, k);
            if (!problem.in_max_actions(kxi)) continue;
            any_pair = true;
            const double lhs = problem.max_cost(kxi);
            const double rhs = k * problem.max_cost(xi);
            if (lhs > rhs) {
                report.proportional_h2_ok = false;
                report.violations.push_back(
                    {"proportional_h2",
                     "k=" + std::to_string(k) + " xi=" + detail::vec_to_string(xi), lhs, rhs});
            }
        }
    }
    report.h2_vacuous = !any_pair;
    return report;
}

/// Combine an H1 report and an H2 report into one document.
inline AssumptionReport merge_reports(const AssumptionReport& h1, const AssumptionReport& h2) {
    AssumptionReport r = h1;
    r.proportional_h2_ok = h2.proportional_h2_ok;
    r.h2_vacuous = h2.h2_vacuous;
    for (const auto& v : h2.violations) r.violations.push_back(v);
    return r;
}

}  // namespace impulse
