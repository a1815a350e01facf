#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "duckswarm/core.hpp"

namespace duckswarm {

/// A design problem with inequality constraints g_i(x) <= 0, solved through
/// a static quadratic penalty.
struct ConstrainedProblem {
    Problem base;  // objective is the raw design cost
    std::string name;
    std::vector<std::string> variable_names;
    double penalty_coefficient = 1e10;

    /// Best published decision vector and its reported cost, used as a
    /// transcription oracle.
    Vector reference_solution;
    double reference_objective = 0.0;

    double objective(std::span<const double> x) const;
    Vector constraint_values(std::span<const double> x) const;

    /// Largest positive g_i(x); 0 when feasible. Non-finite g counts as +inf.
    double max_violation(std::span<const double> x) const;
};

/// f(x) + penalty_coefficient * sum(max(0, g_i(x))^2). A constraint that
/// evaluates to NaN or inf (singular geometry on the box boundary) makes the
/// result saturate at the largest finite double instead of leaving the reals.
double penalized_objective(const ConstrainedProblem& cp, std::span<const double> x);

/// Unconstrained problem whose objective is penalized_objective.
Problem as_penalized_problem(const ConstrainedProblem& cp);

ConstrainedProblem three_bar_truss();
ConstrainedProblem sawmill();
ConstrainedProblem tension_spring();
ConstrainedProblem welded_beam();
ConstrainedProblem pressure_vessel();
ConstrainedProblem speed_reducer();

/// "tbtp", "sop", "tsd", "wbd", "pvd", "srd".
const std::vector<std::string_view>& engineering_ids();
bool is_engineering_id(std::string_view id);
ConstrainedProblem make_engineering_problem(std::string_view id);

}  // namespace duckswarm
