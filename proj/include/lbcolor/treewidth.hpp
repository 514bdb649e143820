#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lbcolor/instance.hpp"

namespace lbcolor {

enum class NodeKind { leaf, introduce, forget, join };

struct NiceNode {
    NodeKind kind = NodeKind::leaf;
    std::vector<int> bag;  // sorted
    int vertex = -1;       // introduced or forgotten vertex
    std::vector<int> children;
};

/// Rooted nice tree decomposition. Built by normalize_decomposition: leaves
/// have empty bags and the root bag is empty.
struct NiceDecomposition {
    std::vector<NiceNode> nodes;
    int root = -1;

    int width() const;
    /// Node indices with every child before its parent.
    std::vector<int> post_order() const;
};

/// Tree decomposition without structural restrictions.
struct TreeDecomposition {
    std::vector<std::vector<int>> bags;
    std::vector<std::pair<int, int>> tree_edges;
    int root = 0;

    int width() const;
};

/// Throws InstanceError("decomposition", ...) naming the violated condition:
/// not a tree, vertex coverage, edge coverage, or running intersection.
void check_tree_decomposition(int n, const std::vector<Edge>& edges, const TreeDecomposition& td);

/// Checks every invariant of a nice decomposition against the graph, plus the
/// tree-decomposition conditions. Throws std::logic_error on failure.
void check_nice_decomposition(int n, const std::vector<Edge>& edges, const NiceDecomposition& nd);

/// Greedy min-fill elimination order.
std::vector<int> min_fill_order(int n, const std::vector<Edge>& edges);

/// Elimination order of minimum width, by dynamic programming over vertex
/// subsets (every elimination order is covered). Intended for n <= 10.
std::vector<int> exact_elimination_order(int n, const std::vector<Edge>& edges);

/// Width induced by eliminating vertices in `order`.
int elimination_width(int n, const std::vector<Edge>& edges, const std::vector<int>& order);

/// Tree decomposition induced by an elimination order.
TreeDecomposition decomposition_from_order(int n, const std::vector<Edge>& edges,
                                           const std::vector<int>& order);

/// Rewrites a valid tree decomposition into nice form.
NiceDecomposition normalize_decomposition(const TreeDecomposition& td);

/// Validates and normalizes `supplied` (or the instance's own decomposition
/// field when `supplied` is empty); otherwise builds one from an exact
/// elimination order when n <= 10 and from min-fill above.
NiceDecomposition build_nice_decomposition(const Instance& inst,
                                           const std::optional<DecompositionSpec>& supplied = std::nullopt);

/// Width of the decomposition build_nice_decomposition would construct.
int treewidth_estimate(int n, const std::vector<Edge>& edges);

/// Counters filled in by the DP engines when requested.
struct DpDiagnostics {
    std::int64_t states = 0;
    std::int64_t join_checks = 0;      // join combinations verified on the trace
    std::int64_t join_violations = 0;  // q + q' != omega + w_bag, or q outside [w_bag, omega]
    std::int64_t range_violations = 0; // stored tuple outside [0, W]
};

/// Vertex-mode DP over bag colorings and per-(part, color) weight tuples.
/// Supports decide, maximize and minimize.
SolveOutcome dp_vertex(const Instance& inst, const NiceDecomposition& dec,
                       Objective objective = Objective::decide, DpDiagnostics* diag = nullptr);

/// Edge-mode DP over colorings of bag-induced edges.
SolveOutcome dp_edge(const Instance& inst, const NiceDecomposition& dec,
                     Objective objective = Objective::decide, DpDiagnostics* diag = nullptr);

}  // namespace lbcolor
