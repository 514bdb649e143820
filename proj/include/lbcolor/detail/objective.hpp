#pragma once

#include "lbcolor/instance.hpp"

namespace lbcolor::detail {

/// Fills in the objective of a feasible outcome from its witness.
inline SolveOutcome finalize(const Instance& inst, SolveOutcome out) {
    if (out.feasible() && inst.profit) out.objective = coloring_profit(inst, *out.witness);
    else out.objective.reset();
    return out;
}

/// Runs `solve(instance, maximize)` for the requested objective. Minimization
/// maximizes the negated profits.
template <class Solve>
SolveOutcome run_objective(const Instance& inst, Objective objective, Solve&& solve) {
    if (objective != Objective::decide && !inst.profit)
        throw UsageError("optimization requires a profit matrix");
    if (objective == Objective::minimize) return finalize(inst, solve(negate_profit(inst), true));
    return finalize(inst, solve(inst, objective == Objective::maximize));
}

}  // namespace lbcolor::detail
