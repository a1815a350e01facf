#include "duckswarm/constrained.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

namespace duckswarm {

namespace {

using std::numbers::pi;
using std::numbers::sqrt2;
using Span = std::span<const double>;

ConstrainedProblem make(std::string id, std::string name, Vector lower, Vector upper,
                        std::function<double(Span)> cost, std::vector<Constraint> constraints,
                        Vector reference, double reference_cost) {
    std::vector<std::string> names;
    for (std::size_t j = 0; j < lower.size(); ++j) {
        names.push_back(fmt::format("x{}", j + 1));
    }
    Problem base{
        .id = std::move(id),
        .space = SearchSpace(std::move(lower), std::move(upper)),
        .objective = [cost = std::move(cost)](Span x, Rng&) { return cost(x); },
        .constraints = std::move(constraints),
        .known_optimum = reference_cost,
        .stochastic = false,
    };
    return ConstrainedProblem{
        .base = std::move(base),
        .name = std::move(name),
        .variable_names = std::move(names),
        .penalty_coefficient = 1e10,
        .reference_solution = std::move(reference),
        .reference_objective = reference_cost,
    };
}

}  // namespace

double ConstrainedProblem::objective(Span x) const {
    Rng unused(0);
    return base.objective(x, unused);
}

Vector ConstrainedProblem::constraint_values(Span x) const {
    Vector g;
    g.reserve(base.constraints.size());
    for (const auto& c : base.constraints) {
        g.push_back(c(x));
    }
    return g;
}

double ConstrainedProblem::max_violation(Span x) const {
    double worst = 0.0;
    for (const auto& c : base.constraints) {
        const double g = c(x);
        if (!std::isfinite(g)) {
            if (!(g < 0.0)) {
                return std::numeric_limits<double>::infinity();
            }
            continue;
        }
        worst = std::max(worst, g);
    }
    return worst;
}

double penalized_objective(const ConstrainedProblem& cp, Span x) {
    constexpr double kSaturated = std::numeric_limits<double>::max();
    double violation = 0.0;
    for (const auto& c : cp.base.constraints) {
        const double g = c(x);
        if (std::isnan(g) || g == std::numeric_limits<double>::infinity()) {
            return kSaturated;
        }
        if (g > 0.0) {
            violation += g * g;
        }
    }
    const double value = cp.objective(x) + cp.penalty_coefficient * violation;
    return std::isfinite(value) ? value : kSaturated;
}

Problem as_penalized_problem(const ConstrainedProblem& cp) {
    Problem p = cp.base;
    p.objective = [cp](Span x, Rng&) { return penalized_objective(cp, x); };
    return p;
}

ConstrainedProblem three_bar_truss() {
    constexpr double length = 100.0;
    constexpr double load = 2.0;
    constexpr double stress = 2.0;
    return make(
        "tbtp", "Three-bar truss", {0.0, 0.0}, {1.0, 1.0},
        [](Span x) { return (2.0 * sqrt2 * x[0] + x[1]) * length; },
        {
            [](Span x) {
                return (sqrt2 * x[0] + x[1]) / (sqrt2 * x[0] * x[0] + 2.0 * x[0] * x[1]) * load -
                       stress;
            },
            [](Span x) {
                return x[1] / (sqrt2 * x[0] * x[0] + 2.0 * x[0] * x[1]) * load - stress;
            },
            [](Span x) { return 1.0 / (x[0] + sqrt2 * x[1]) * load - stress; },
        },
        {0.788675136, 0.408248285}, 263.8958434);
}

ConstrainedProblem sawmill() {
    return make(
        "sop", "Sawmill operation", {0.0, 0.0, 0.0, 0.0}, {200.0, 200.0, 200.0, 200.0},
        [](Span x) { return 10.0 * (24.0 * x[0] + 20.5 * x[1] + 17.2 * x[2] + 10.0 * x[3]); },
        {
            [](Span x) { return x[0] + x[1] - 240.0; },
            [](Span x) { return x[2] + x[3] - 300.0; },
            [](Span x) { return x[0] + x[2] - 200.0; },
            [](Span x) { return x[1] + x[3] - 200.0; },
            [](Span x) { return 300.0 - (x[0] + x[1] + x[2] + x[3]); },
        },
        {1.20e-11, 1.63e-06, 100.0001, 199.9999}, 37200.0053);
}

ConstrainedProblem tension_spring() {
    // x1 wire diameter, x2 mean coil diameter, x3 active coils.
    return make(
        "tsd", "Tension spring design", {0.05, 0.25, 2.0}, {2.0, 1.3, 15.0},
        [](Span x) { return (x[2] + 2.0) * x[1] * x[0] * x[0]; },
        {
            [](Span x) { return 1.0 - x[1] * x[1] * x[1] * x[2] / (71785.0 * std::pow(x[0], 4)); },
            [](Span x) {
                const double d = x[0];
                const double coil = x[1];
                return (4.0 * coil * coil - d * coil) /
                           (12566.0 * (coil * d * d * d - std::pow(d, 4))) +
                       1.0 / (5108.0 * d * d) - 1.0;
            },
            [](Span x) { return 1.0 - 140.45 * x[0] / (x[1] * x[1] * x[2]); },
            [](Span x) { return (x[0] + x[1]) / 1.5 - 1.0; },
        },
        {0.052068, 0.365900, 10.770262}, 0.012668);
}

ConstrainedProblem welded_beam() {
    // x1 weld thickness h, x2 weld length l, x3 bar height t, x4 bar thickness b.
    constexpr double load = 6000.0;
    constexpr double span_length = 14.0;
    constexpr double young = 30e6;
    constexpr double shear_modulus = 12e6;
    constexpr double tau_max = 13600.0;
    constexpr double sigma_max = 30000.0;
    constexpr double delta_max = 0.25;

    const auto tau = [=](Span x) {
        const double tau_p = load / (sqrt2 * x[0] * x[1]);
        const double moment = load * (span_length + x[1] / 2.0);
        const double half = (x[0] + x[2]) / 2.0;
        const double radius = std::sqrt(x[1] * x[1] / 4.0 + half * half);
        const double inertia = 2.0 * (sqrt2 * x[0] * x[1] * (x[1] * x[1] / 12.0 + half * half));
        const double tau_pp = moment * radius / inertia;
        return std::sqrt(tau_p * tau_p + 2.0 * tau_p * tau_pp * x[1] / (2.0 * radius) +
                         tau_pp * tau_pp);
    };
    const auto sigma = [=](Span x) { return 6.0 * load * span_length / (x[3] * x[2] * x[2]); };
    const auto delta = [=](Span x) {
        return 4.0 * load * std::pow(span_length, 3) / (young * std::pow(x[2], 3) * x[3]);
    };
    const auto buckling = [=](Span x) {
        return 4.013 * young * std::sqrt(x[2] * x[2] * std::pow(x[3], 6) / 36.0) /
               (span_length * span_length) *
               (1.0 - x[2] / (2.0 * span_length) * std::sqrt(young / (4.0 * shear_modulus)));
    };

    return make(
        "wbd", "Welded beam design", {0.1, 0.1, 0.1, 0.1}, {2.0, 10.0, 10.0, 2.0},
        [](Span x) { return 1.10471 * x[0] * x[0] * x[1] + 0.04811 * x[2] * x[3] * (14.0 + x[1]); },
        {
            [=](Span x) { return tau(x) - tau_max; },
            [=](Span x) { return sigma(x) - sigma_max; },
            [](Span x) { return x[0] - x[3]; },
            [](Span x) {
                return 0.10471 * x[0] * x[0] + 0.04811 * x[2] * x[3] * (14.0 + x[1]) - 5.0;
            },
            [](Span x) { return 0.125 - x[0]; },
            [=](Span x) { return delta(x) - delta_max; },
            [=](Span x) { return load - buckling(x); },
        },
        {0.205731, 3.475599, 9.036601, 0.205731}, 1.725555);
}

ConstrainedProblem pressure_vessel() {
    // x1 shell thickness, x2 head thickness, x3 inner radius, x4 cylinder length.
    return make(
        "pvd", "Pressure vessel design", {0.0, 0.0, 10.0, 10.0}, {99.0, 99.0, 200.0, 200.0},
        [](Span x) {
            return 0.6224 * x[0] * x[2] * x[3] + 1.7781 * x[1] * x[2] * x[2] +
                   3.1661 * x[0] * x[0] * x[3] + 19.84 * x[0] * x[0] * x[2];
        },
        {
            [](Span x) { return -x[0] + 0.0193 * x[2]; },
            [](Span x) { return -x[1] + 0.00954 * x[2]; },
            [](Span x) {
                return -pi * x[2] * x[2] * x[3] - 4.0 / 3.0 * pi * std::pow(x[2], 3) + 1296000.0;
            },
            [](Span x) { return x[3] - 240.0; },
        },
        {0.778189, 0.384659, 40.320642, 199.985755}, 5885.374386);
}

ConstrainedProblem speed_reducer() {
    return make(
        "srd", "Speed reducer design", {2.6, 0.7, 17.0, 7.3, 7.8, 2.9, 5.0},
        {3.6, 0.8, 28.0, 8.3, 8.3, 3.9, 5.5},
        [](Span x) {
            return 0.7854 * x[0] * x[1] * x[1] *
                       (3.3333 * x[2] * x[2] + 14.9334 * x[2] - 43.0934) -
                   1.508 * x[0] * (x[5] * x[5] + x[6] * x[6]) +
                   7.4777 * (std::pow(x[5], 3) + std::pow(x[6], 3)) +
                   0.7854 * (x[3] * x[5] * x[5] + x[4] * x[6] * x[6]);
        },
        {
            [](Span x) { return 27.0 / (x[0] * x[1] * x[1] * x[2]) - 1.0; },
            [](Span x) { return 397.5 / (x[0] * x[1] * x[1] * x[2] * x[2]) - 1.0; },
            [](Span x) { return 1.93 * std::pow(x[3], 3) / (x[1] * x[2] * std::pow(x[5], 4)) - 1.0; },
            [](Span x) { return 1.93 * std::pow(x[4], 3) / (x[1] * x[2] * std::pow(x[6], 4)) - 1.0; },
            [](Span x) {
                const double m = 745.0 * x[3] / (x[1] * x[2]);
                return std::sqrt(m * m + 16.9e6) / (110.0 * std::pow(x[5], 3)) - 1.0;
            },
            [](Span x) {
                const double m = 745.0 * x[4] / (x[1] * x[2]);
                return std::sqrt(m * m + 157.5e6) / (85.0 * std::pow(x[6], 3)) - 1.0;
            },
            [](Span x) { return x[1] * x[2] / 40.0 - 1.0; },
            [](Span x) { return 5.0 * x[1] / x[0] - 1.0; },
            [](Span x) { return x[0] / (12.0 * x[1]) - 1.0; },
            [](Span x) { return (1.5 * x[5] + 1.9) / x[3] - 1.0; },
            [](Span x) { return (1.1 * x[6] + 1.9) / x[4] - 1.0; },
        },
        {3.500006, 0.700000, 17.000000, 7.300490, 7.800000, 3.350216, 5.286759}, 2996.403492);
}

const std::vector<std::string_view>& engineering_ids() {
    static const std::vector<std::string_view> ids{"tbtp", "sop", "tsd", "wbd", "pvd", "srd"};
    return ids;
}

bool is_engineering_id(std::string_view id) {
    const auto& ids = engineering_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

ConstrainedProblem make_engineering_problem(std::string_view id) {
    if (id == "tbtp") return three_bar_truss();
    if (id == "sop") return sawmill();
    if (id == "tsd") return tension_spring();
    if (id == "wbd") return welded_beam();
    if (id == "pvd") return pressure_vessel();
    if (id == "srd") return speed_reducer();
    throw ConfigError(fmt::format("unknown engineering problem '{}'", id));
}

}  // namespace duckswarm
