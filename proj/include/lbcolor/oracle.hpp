#pragma once

#include "lbcolor/instance.hpp"

namespace lbcolor {

inline constexpr double kDefaultOracleCap = 1e7;

/// True when k^|elements| does not exceed `cap`.
bool oracle_in_range(const Instance& inst, double cap = kDefaultOracleCap);

/// Exhaustive enumeration of every assignment, checked with validate_coloring.
///
/// Assignments are visited in lexicographic order of the color vector (element
/// 0 most significant). `decide` returns the first valid one; `maximize` and
/// `minimize` return the first valid assignment of extreme profit and need a
/// profit matrix (UsageError otherwise). Throws OracleLimitError above `cap`.
SolveOutcome brute_force_solve(const Instance& inst, Objective objective = Objective::decide,
                               double cap = kDefaultOracleCap);

}  // namespace lbcolor
