#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "lbcolor/instance.hpp"

namespace lbcolor {

enum class CotreeKind { leaf, disjoint_union, join };

struct CotreeNode {
    CotreeKind kind = CotreeKind::leaf;
    int vertex = -1;  // leaves only
    int left = -1;
    int right = -1;
};

/// Binary cotree. Leaves biject with the vertices of the graph.
struct Cotree {
    std::vector<CotreeNode> nodes;
    int root = -1;
};

struct CotreeResult {
    std::optional<Cotree> cotree;
    std::optional<std::array<int, 4>> p4;  // induced path a-b-c-d when not a cograph

    bool is_cograph() const { return cotree.has_value(); }
};

/// Splits on components, then on co-components; a vertex set that is
/// connected in both the graph and its complement yields an induced P4.
CotreeResult build_cotree(int n, const std::vector<Edge>& edges);
CotreeResult build_cotree(const Instance& inst);

/// Adjacency matrix of the graph the cotree describes.
std::vector<std::vector<char>> reconstruct_graph(const Cotree& ct, int n);

struct CographDiagnostics {
    std::int64_t states = 0;
    std::int64_t join_checks = 0;
    std::int64_t join_violations = 0;  // a color carried by both children of a join
};

/// DP over the cotree: per node, the reachable per-(part, color) weight
/// tuples of the subgraph below it. At a join node the two children must use
/// disjoint color sets.
SolveOutcome dp_cograph(const Instance& inst, const Cotree& ct, Objective objective = Objective::decide,
                        CographDiagnostics* diag = nullptr);

/// Complete graph: after dropping all-zero bound columns every color is used
/// by exactly one vertex, found by a perfect assignment.
SolveOutcome solve_complete_graph(const Instance& inst, Objective objective = Objective::decide);

/// Sides (A, B) of a complete bipartite graph with both sides non-empty.
std::optional<std::pair<std::vector<int>, std::vector<int>>> complete_bipartite_sides(int n,
                                                                                     const std::vector<Edge>& edges);

/// Complete bipartite graph: tries every side label for every color and
/// solves both sides as edgeless instances.
SolveOutcome solve_complete_bipartite(const Instance& inst, Objective objective = Objective::decide);

/// Edge mode on a cograph: components are small once every degree is at most
/// k, so each is enumerated and the components are combined by a tuple DP.
SolveOutcome solve_cograph_edges(const Instance& inst, Objective objective = Objective::decide);

}  // namespace lbcolor
