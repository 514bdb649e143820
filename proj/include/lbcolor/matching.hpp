#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace lbcolor {

using Capacity = std::int64_t;

/// Bipartite transportation network: each left node offers `supply` units,
/// each right node absorbs at most `demand` units, arcs carry at most their
/// capacity from left to right.
struct CapacitatedBipartiteNetwork {
    struct Arc {
        int left;
        int right;
        Capacity capacity;
    };

    int left_size = 0;
    int right_size = 0;
    std::vector<Arc> arcs;
    std::vector<Capacity> supply;  // left_size
    std::vector<Capacity> demand;  // right_size

    /// Throws std::invalid_argument on bad indices or negative amounts.
    void check() const;
};

struct FlowResult {
    Capacity value = 0;
    std::vector<Capacity> arc_flow;  // parallel to network.arcs
    bool saturated = false;          // every left supply fully shipped
};

/// Integral maximum flow from the left supplies to the right demands, using
/// shortest (BFS) augmenting paths.
FlowResult max_flow_saturate(const CapacitatedBipartiteNetwork& net);

/// Rectangular rows x cols weight matrix; a perfect assignment matches every
/// row to a distinct column, never through a forbidden pair.
struct AssignmentProblem {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::int64_t>> weight;
    std::vector<std::vector<char>> forbidden;

    AssignmentProblem() = default;
    AssignmentProblem(int rows, int cols)
        : rows(rows), cols(cols),
          weight(rows, std::vector<std::int64_t>(cols, 0)),
          forbidden(rows, std::vector<char>(cols, 0)) {}
};

struct Assignment {
    std::vector<int> column_of;  // row -> column
    std::int64_t total = 0;
};

/// Maximum-weight perfect assignment, or nullopt when none exists. Uses
/// exhaustive search on problems with at most 8 rows and 8 columns and the
/// Hungarian method otherwise.
std::optional<Assignment> max_weight_perfect_assignment(const AssignmentProblem& ap);

/// Depth-first enumeration of all injective row->column maps. Among maxima the
/// lexicographically first column vector wins.
std::optional<Assignment> assignment_exhaustive(const AssignmentProblem& ap);

/// Shortest-augmenting-path Hungarian method with potentials, O(rows^2 cols).
std::optional<Assignment> assignment_hungarian(const AssignmentProblem& ap);

}  // namespace lbcolor
