#pragma once

#include <string>
#include <vector>

#include "lbcolor/instance.hpp"

namespace lbcolor {

/// Solver names accepted by run_solver (and the CLI), "auto" excluded.
const std::vector<std::string>& solver_names();

/// Most specific applicable solver, in the order complete, complete-bipartite,
/// edgeless, split, cograph, tree-width DP, oracle. Edge-mode instances go to
/// split-edge, cograph-edge or treewidth-edge.
std::string auto_solver(const Instance& inst, Objective objective = Objective::decide, bool clique_general = false);

/// Runs the named solver. UsageError when the instance does not meet the
/// solver's precondition or the solver does not support the objective.
SolveOutcome run_solver(const Instance& inst, const std::string& name, Objective objective = Objective::decide,
                        bool clique_general = false);

}  // namespace lbcolor
