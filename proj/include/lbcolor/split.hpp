#pragma once

#include <optional>
#include <vector>

#include "lbcolor/instance.hpp"

namespace lbcolor {

struct SplitPartition {
    std::vector<int> clique;       // K, sorted
    std::vector<int> independent;  // S, sorted
};

/// Degree-sequence recognition. Among all split partitions returns one with
/// the largest clique; ties go to lower vertex indices.
std::optional<SplitPartition> split_partition(int n, const std::vector<Edge>& edges);
std::optional<SplitPartition> split_partition(const Instance& inst);

/// Colors whose bound column is not the common constant column B.
struct SingularSpec {
    std::vector<int> singular;      // sorted
    std::vector<int> non_singular;  // sorted; W[h][c] = B for every part h
    Weight common = 0;              // B, meaningless when non_singular is empty
};

/// B is the most frequent value among constant columns, counted only when it
/// occurs at least twice; ties go to the smaller value. Without such a value
/// every color is singular.
SingularSpec infer_singular(const Instance& inst);

/// Split graph, small k: enumerate list-colorings of K, then solve the
/// remaining edgeless instance on S. Supports decide, maximize and minimize.
SolveOutcome solve_split_k_fixed(const Instance& inst, Objective objective = Objective::decide);

/// Split graph with few singular colors and unit-weight, full-list S
/// vertices. Guesses where each singular color sits in K, gives the other K
/// vertices distinct non-singular colors and solves S by a flow. With
/// `clique_general` the K vertices may have lists and arbitrary weights and
/// the non-singular colors are placed by an assignment. Decide only.
SolveOutcome solve_split_singular(const Instance& inst, bool clique_general = false);

/// Edge mode on a split graph: at most O(k^2) edges survive the degree test,
/// so plain backtracking suffices.
SolveOutcome solve_split_edges(const Instance& inst, Objective objective = Objective::decide);

}  // namespace lbcolor
