#pragma once

#include "lbcolor/instance.hpp"
#include "lbcolor/matching.hpp"

namespace lbcolor {

/// Flow network for an edgeless unit-weight instance: left node per vertex,
/// right node per (part, color) slot with demand W[h][c].
/// Right node index is h * k + c.
CapacitatedBipartiteNetwork isolated_unit_network(const Instance& inst);

/// Edgeless instance with unit weights: feasible iff the slot network
/// saturates. Decide only. UsageError outside the precondition.
SolveOutcome solve_isolated_unit(const Instance& inst);

/// Edgeless instance, arbitrary weights, small k: each part solved on its own
/// by a DP over reachable per-color weight vectors. Supports decide and
/// maximize (minimize via negated profits).
SolveOutcome solve_isolated_k_fixed(const Instance& inst, Objective objective = Objective::decide);

/// Vertex instance with k = 2: every component has at most two proper
/// colorings, combined by a DP over per-part color-1 weights.
SolveOutcome solve_components_k2(const Instance& inst, Objective objective = Objective::decide);

}  // namespace lbcolor
