#include "lbcolor/instance.hpp"

#include <algorithm>
#include <set>

namespace lbcolor {

namespace {

std::string idx(const std::string& field, std::size_t i) {
    return field + "[" + std::to_string(i) + "]";
}

}  // namespace

bool Instance::allows(int element, int color) const {
    const auto& list = allowed[element];
    return std::binary_search(list.begin(), list.end(), color);
}

void validate_instance(const Instance& inst) {
    if (inst.n < 0) throw InstanceError("n", "must be non-negative");
    if (inst.k < 1) throw InstanceError("k", "must be at least 1");
    if (inst.p < 1) throw InstanceError("p", "must be at least 1");

    std::set<Edge> seen;
    for (std::size_t i = 0; i < inst.edges.size(); ++i) {
        auto [u, v] = inst.edges[i];
        if (u < 0 || v < 0 || u >= inst.n || v >= inst.n)
            throw InstanceError(idx("edges", i), "endpoint out of range");
        if (u == v) throw InstanceError(idx("edges", i), "self-loop");
        if (!seen.insert({std::min(u, v), std::max(u, v)}).second)
            throw InstanceError(idx("edges", i), "duplicate edge");
    }

    const auto m = static_cast<std::size_t>(inst.element_count());
    if (inst.part_of.size() != m) throw InstanceError("part_of", "length differs from element count");
    if (inst.weight.size() != m) throw InstanceError("weight", "length differs from element count");
    if (inst.allowed.size() != m) throw InstanceError("allowed", "length differs from element count");

    for (std::size_t e = 0; e < m; ++e) {
        if (inst.part_of[e] < 0 || inst.part_of[e] >= inst.p)
            throw InstanceError(idx("part_of", e), "part out of range");
        if (inst.weight[e] <= 0) throw InstanceError(idx("weight", e), "weights must be positive");
        const auto& list = inst.allowed[e];
        if (list.empty()) throw InstanceError(idx("allowed", e), "empty color list");
        for (std::size_t j = 0; j < list.size(); ++j) {
            if (list[j] < 0 || list[j] >= inst.k)
                throw InstanceError(idx(idx("allowed", e), j), "color out of range");
            if (j > 0 && list[j] <= list[j - 1])
                throw InstanceError(idx("allowed", e), "colors must be sorted and distinct");
        }
    }

    if (inst.bounds.size() != static_cast<std::size_t>(inst.p))
        throw InstanceError("bounds", "expected one row per part");
    std::vector<Weight> part_total(inst.p, 0);
    for (std::size_t e = 0; e < m; ++e) part_total[inst.part_of[e]] += inst.weight[e];
    for (int h = 0; h < inst.p; ++h) {
        const auto& row = inst.bounds[h];
        if (row.size() != static_cast<std::size_t>(inst.k))
            throw InstanceError(idx("bounds", h), "expected one entry per color");
        Weight sum = 0;
        for (int c = 0; c < inst.k; ++c) {
            if (row[c] < 0) throw InstanceError(idx(idx("bounds", h), c), "bounds must be non-negative");
            sum += row[c];
        }
        if (sum != part_total[h])
            throw InstanceError(idx("bounds", h), "row sums to " + std::to_string(sum) +
                                                      " but the part weighs " +
                                                      std::to_string(part_total[h]));
    }

    if (inst.profit) {
        if (inst.profit->size() != m) throw InstanceError("profit", "expected one row per element");
        for (std::size_t e = 0; e < m; ++e)
            if ((*inst.profit)[e].size() != static_cast<std::size_t>(inst.k))
                throw InstanceError(idx("profit", e), "expected one entry per color");
    }
}

ValidityReport validate_coloring(const Instance& inst, const Coloring& col) {
    const int m = inst.element_count();
    if (static_cast<int>(col.color_of.size()) != m)
        throw StructuralError("coloring has " + std::to_string(col.color_of.size()) +
                              " entries but the instance has " + std::to_string(m) + " elements");
    for (int e = 0; e < m; ++e)
        if (col.color_of[e] < 0 || col.color_of[e] >= inst.k)
            throw StructuralError("color of element " + std::to_string(e) + " is out of range");

    const auto& c = col.color_of;
    if (inst.mode == Mode::vertex) {
        for (auto [u, v] : inst.edges)
            if (c[u] == c[v])
                return {false, Violation::properness,
                        "properness: vertices " + std::to_string(u) + " and " + std::to_string(v) +
                            " share color " + std::to_string(c[u] + 1)};
    } else {
        std::vector<std::vector<int>> incident(inst.n);
        for (int e = 0; e < m; ++e) {
            incident[inst.edges[e].first].push_back(e);
            incident[inst.edges[e].second].push_back(e);
        }
        for (int v = 0; v < inst.n; ++v)
            for (std::size_t a = 0; a < incident[v].size(); ++a)
                for (std::size_t b = a + 1; b < incident[v].size(); ++b)
                    if (c[incident[v][a]] == c[incident[v][b]])
                        return {false, Violation::properness,
                                "properness: edges " + std::to_string(incident[v][a]) + " and " +
                                    std::to_string(incident[v][b]) + " meet at vertex " +
                                    std::to_string(v) + " with the same color"};
    }

    for (int e = 0; e < m; ++e)
        if (!inst.allows(e, c[e]))
            return {false, Violation::list,
                    "list: element " + std::to_string(e) + " may not take color " +
                        std::to_string(c[e] + 1)};

    const auto tally = weight_tally(inst, col);
    for (int h = 0; h < inst.p; ++h)
        for (int cc = 0; cc < inst.k; ++cc)
            if (tally[h][cc] != inst.bounds[h][cc])
                return {false, Violation::bounds,
                        "bounds: part " + std::to_string(h + 1) + " color " + std::to_string(cc + 1) +
                            " carries weight " + std::to_string(tally[h][cc]) + ", expected " +
                            std::to_string(inst.bounds[h][cc])};
    return {};
}

Weight coloring_profit(const Instance& inst, const Coloring& col) {
    Weight total = 0;
    for (int e = 0; e < inst.element_count(); ++e) total += inst.profit_of(e, col.color_of[e]);
    return total;
}

std::vector<std::vector<Weight>> weight_tally(const Instance& inst, const Coloring& col) {
    std::vector<std::vector<Weight>> tally(inst.p, std::vector<Weight>(inst.k, 0));
    for (int e = 0; e < inst.element_count(); ++e)
        tally[inst.part_of[e]][col.color_of[e]] += inst.weight[e];
    return tally;
}

std::vector<std::vector<int>> adjacency(const Instance& inst) {
    std::vector<std::vector<int>> adj(inst.n);
    for (auto [u, v] : inst.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
    return adj;
}

std::vector<std::vector<char>> adjacency_matrix(const Instance& inst) {
    std::vector<std::vector<char>> adj(inst.n, std::vector<char>(inst.n, 0));
    for (auto [u, v] : inst.edges) adj[u][v] = adj[v][u] = 1;
    return adj;
}

Instance negate_profit(const Instance& inst) {
    Instance out = inst;
    if (out.profit)
        for (auto& row : *out.profit)
            for (auto& x : row) x = -x;
    return out;
}

const char* to_string(Violation v) {
    switch (v) {
        case Violation::none: return "none";
        case Violation::properness: return "properness";
        case Violation::list: return "list";
        case Violation::bounds: return "bounds";
    }
    return "?";
}

const char* to_string(Status s) { return s == Status::feasible ? "feasible" : "infeasible"; }

}  // namespace lbcolor
