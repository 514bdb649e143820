#pragma once

#include <map>
#include <vector>

#include "lbcolor/detail/tuple.hpp"

namespace lbcolor::detail {

/// Backtracking over the proper list edge-colorings of a subset of edges.
/// Partial tallies above `cap` are cut. `visit(colors, tally, value)` sees
/// each complete coloring (colors parallel to `subset`) and returns false to
/// stop the search.
template <class Visit>
void enumerate_edge_colorings(const Instance& inst, const std::vector<int>& subset, const Tuple& cap,
                              Visit&& visit) {
    std::map<int, int> local;
    for (int e : subset) {
        local.try_emplace(inst.edges[e].first, static_cast<int>(local.size()));
        local.try_emplace(inst.edges[e].second, static_cast<int>(local.size()));
    }
    std::vector<std::pair<int, int>> ends;
    for (int e : subset) ends.emplace_back(local[inst.edges[e].first], local[inst.edges[e].second]);

    std::vector<std::vector<char>> used(local.size(), std::vector<char>(inst.k, 0));
    std::vector<int> colors(subset.size(), -1);
    Tuple tally(cap.size(), 0);
    bool stop = false;

    auto rec = [&](auto&& self, std::size_t i, Weight value) -> void {
        if (stop) return;
        if (i == subset.size()) {
            if (!visit(colors, tally, value)) stop = true;
            return;
        }
        const int e = subset[i];
        const auto [a, b] = ends[i];
        const auto base = slot(inst, inst.part_of[e], 0);
        for (int c : inst.allowed[e]) {
            if (used[a][c] || used[b][c]) continue;
            if (tally[base + c] + inst.weight[e] > cap[base + c]) continue;
            used[a][c] = used[b][c] = 1;
            tally[base + c] += inst.weight[e];
            colors[i] = c;
            self(self, i + 1, value + inst.profit_of(e, c));
            tally[base + c] -= inst.weight[e];
            used[a][c] = used[b][c] = 0;
            if (stop) return;
        }
    };
    rec(rec, 0, 0);
}

}  // namespace lbcolor::detail
