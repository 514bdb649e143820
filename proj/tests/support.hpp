#pragma once

// Random instance families and reference checkers shared by the unit tests
// and the acceptance suite. The reference code here deliberately avoids the
// library's validator and oracle.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lbcolor/generators.hpp"
#include "lbcolor/instance.hpp"

namespace support {

using lbcolor::Edge;
using lbcolor::Instance;
using lbcolor::Mode;
using lbcolor::Weight;
using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

struct Graph {
    int n = 0;
    std::vector<Edge> edges;
};

inline Graph random_graph(Rng& rng, int n, double density) {
    Graph g{n, {}};
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng, density)) g.edges.emplace_back(u, v);
    return g;
}

inline Graph edgeless(int n) { return {n, {}}; }

inline Graph complete(int n) {
    Graph g{n, {}};
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
    return g;
}

/// Sides of sizes a and b, vertices of side A first, then shuffled labels.
inline Graph complete_bipartite(Rng& rng, int a, int b) {
    std::vector<int> label(a + b);
    std::iota(label.begin(), label.end(), 0);
    std::shuffle(label.begin(), label.end(), rng);
    Graph g{a + b, {}};
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.edges.emplace_back(std::min(label[u], label[v]), std::max(label[u], label[v]));
    return g;
}

inline Graph random_bipartite(Rng& rng, int n, double density) {
    std::vector<int> side(n);
    for (int& s : side) s = uniform(rng, 0, 1);
    Graph g{n, {}};
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (side[u] != side[v] && coin(rng, density)) g.edges.emplace_back(u, v);
    return g;
}

/// Random cograph from a random union/join expression over shuffled vertices.
inline Graph random_cograph(Rng& rng, int n) {
    std::vector<std::vector<int>> groups;
    std::vector<int> label(n);
    std::iota(label.begin(), label.end(), 0);
    std::shuffle(label.begin(), label.end(), rng);
    for (int v : label) groups.push_back({v});
    std::set<Edge> edges;
    while (groups.size() > 1) {
        const int i = uniform(rng, 0, static_cast<int>(groups.size()) - 1);
        auto a = groups[i];
        groups.erase(groups.begin() + i);
        const int j = uniform(rng, 0, static_cast<int>(groups.size()) - 1);
        auto& b = groups[j];
        if (coin(rng))
            for (int u : a)
                for (int v : b) edges.emplace(std::min(u, v), std::max(u, v));
        b.insert(b.end(), a.begin(), a.end());
    }
    return {n, {edges.begin(), edges.end()}};
}

/// Clique on a random subset, the rest independent, random clique-to-rest edges.
inline Graph random_split(Rng& rng, int n, double density) {
    std::vector<char> in_k(n);
    for (auto& x : in_k) x = coin(rng);
    Graph g{n, {}};
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((in_k[u] && in_k[v]) || ((in_k[u] || in_k[v]) && coin(rng, density))) g.edges.emplace_back(u, v);
    return g;
}

/// Adjacency lists.
inline std::vector<std::vector<int>> neighbors(int n, const std::vector<Edge>& edges) {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

/// True when two elements may not share a color.
inline bool elements_conflict(const Instance& inst, int a, int b) {
    if (a == b) return false;
    if (inst.mode == Mode::vertex) {
        for (auto [u, v] : inst.edges)
            if ((u == a && v == b) || (u == b && v == a)) return true;
        return false;
    }
    auto [u1, v1] = inst.edges[a];
    auto [u2, v2] = inst.edges[b];
    return u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2;
}

/// Single-part instance with full lists unless `lists` is given (0-based colors).
inline Instance simple(Mode mode, int n, std::vector<Edge> edges, std::vector<Weight> bounds, std::vector<Weight> weights,
                       std::vector<std::vector<int>> lists = {}) {
    Instance inst;
    inst.mode = mode;
    inst.n = n;
    inst.edges = std::move(edges);
    inst.k = static_cast<int>(bounds.size());
    inst.p = 1;
    inst.bounds = {std::move(bounds)};
    const int m = inst.element_count();
    inst.part_of.assign(m, 0);
    inst.weight = weights.empty() ? std::vector<Weight>(m, 1) : std::move(weights);
    if (lists.empty()) {
        std::vector<int> full(inst.k);
        std::iota(full.begin(), full.end(), 0);
        lists.assign(m, full);
    }
    inst.allowed = std::move(lists);
    return inst;
}

inline Instance vertex_instance(int n, std::vector<Edge> edges, std::vector<Weight> bounds,
                                std::vector<Weight> weights = {}, std::vector<std::vector<int>> lists = {}) {
    return simple(Mode::vertex, n, std::move(edges), std::move(bounds), std::move(weights), std::move(lists));
}

inline Instance edge_instance(int n, std::vector<Edge> edges, std::vector<Weight> bounds,
                              std::vector<Weight> weights = {}, std::vector<std::vector<int>> lists = {}) {
    return simple(Mode::edge, n, std::move(edges), std::move(bounds), std::move(weights), std::move(lists));
}

struct Shape {
    int k_min = 1, k_max = 3;
    int p_max = 2;
    int w_max = 3;
    double full_list = 0.6;
    double planted = 0.75;  // bounds taken from a random proper coloring
    double perturb = 0.3;   // then one unit of weight moved between colors
    bool unit_weights = false;
    bool profits = false;
    int profit_lo = -5, profit_hi = 5;
};

/// Random instance on `g`. Bounds come from a planted proper list-coloring
/// when one is found, optionally perturbed, otherwise from a random split of
/// each part's weight.
inline Instance random_instance(Rng& rng, const Graph& g, Mode mode, const Shape& s) {
    Instance inst;
    inst.mode = mode;
    inst.n = g.n;
    inst.edges = g.edges;
    inst.k = uniform(rng, s.k_min, s.k_max);
    inst.p = uniform(rng, 1, s.p_max);
    const int m = inst.element_count();
    for (int e = 0; e < m; ++e) {
        inst.part_of.push_back(uniform(rng, 0, inst.p - 1));
        inst.weight.push_back(s.unit_weights ? 1 : uniform(rng, 1, s.w_max));
        std::vector<int> list;
        if (coin(rng, s.full_list)) {
            list.resize(inst.k);
            std::iota(list.begin(), list.end(), 0);
        } else {
            for (int c = 0; c < inst.k; ++c)
                if (coin(rng)) list.push_back(c);
            if (list.empty()) list.push_back(uniform(rng, 0, inst.k - 1));
        }
        inst.allowed.push_back(list);
    }
    if (s.profits) {
        inst.profit.emplace();
        for (int e = 0; e < m; ++e) {
            auto& row = inst.profit->emplace_back();
            for (int c = 0; c < inst.k; ++c) row.push_back(uniform(rng, s.profit_lo, s.profit_hi));
        }
    }

    inst.bounds.assign(inst.p, std::vector<Weight>(inst.k, 0));
    std::optional<std::vector<int>> planted;
    if (coin(rng, s.planted)) {
        std::vector<int> color(m, -1);
        bool ok = true;
        for (int e = 0; e < m && ok; ++e) {
            std::vector<int> options;
            for (int c : inst.allowed[e]) {
                bool clash = false;
                for (int f = 0; f < e && !clash; ++f) clash = color[f] == c && elements_conflict(inst, e, f);
                if (!clash) options.push_back(c);
            }
            if (options.empty()) ok = false;
            else color[e] = options[uniform(rng, 0, static_cast<int>(options.size()) - 1)];
        }
        if (ok) planted = color;
    }
    if (planted) {
        for (int e = 0; e < m; ++e) inst.bounds[inst.part_of[e]][(*planted)[e]] += inst.weight[e];
        if (inst.k > 1 && coin(rng, s.perturb)) {
            const int h = uniform(rng, 0, inst.p - 1);
            const int from = uniform(rng, 0, inst.k - 1);
            const int to = (from + uniform(rng, 1, inst.k - 1)) % inst.k;
            if (inst.bounds[h][from] > 0) {
                --inst.bounds[h][from];
                ++inst.bounds[h][to];
            }
        }
    } else {
        for (int e = 0; e < m; ++e) inst.bounds[inst.part_of[e]][uniform(rng, 0, inst.k - 1)] += inst.weight[e];
    }
    return inst;
}

/// Independent validity check of a color vector (0-based colors).
inline bool reference_valid(const Instance& inst, const std::vector<int>& color) {
    const int m = inst.element_count();
    if (static_cast<int>(color.size()) != m) return false;
    for (int a = 0; a < m; ++a) {
        if (std::find(inst.allowed[a].begin(), inst.allowed[a].end(), color[a]) == inst.allowed[a].end()) return false;
        for (int b = a + 1; b < m; ++b)
            if (color[a] == color[b] && elements_conflict(inst, a, b)) return false;
    }
    for (int h = 0; h < inst.p; ++h)
        for (int c = 0; c < inst.k; ++c) {
            Weight total = 0;
            for (int e = 0; e < m; ++e)
                if (inst.part_of[e] == h && color[e] == c) total += inst.weight[e];
            if (total != inst.bounds[h][c]) return false;
        }
    return true;
}

inline Weight reference_profit(const Instance& inst, const std::vector<int>& color) {
    Weight total = 0;
    if (inst.profit)
        for (std::size_t e = 0; e < color.size(); ++e) total += (*inst.profit)[e][color[e]];
    return total;
}

struct ReferenceAnswer {
    bool feasible = false;
    Weight best = 0;   // maximum profit over valid colorings
    Weight worst = 0;  // minimum profit over valid colorings
    long long valid_count = 0;
};

/// Plain recursion over all k^m assignments.
inline ReferenceAnswer reference_solve(const Instance& inst) {
    ReferenceAnswer ans;
    const int m = inst.element_count();
    std::vector<int> color(m, 0);
    std::function<void(int)> rec = [&](int e) {
        if (e == m) {
            if (!reference_valid(inst, color)) return;
            const Weight v = reference_profit(inst, color);
            if (!ans.feasible) ans.best = ans.worst = v;
            ans.best = std::max(ans.best, v);
            ans.worst = std::min(ans.worst, v);
            ans.feasible = true;
            ++ans.valid_count;
            return;
        }
        for (int c = 0; c < inst.k; ++c) {
            color[e] = c;
            rec(e + 1);
        }
    };
    rec(0);
    return ans;
}

/// Empty when `out` is consistent with the reference answer for `objective`,
/// otherwise a short description of the mismatch.
inline std::string mismatch(const Instance& inst, const lbcolor::SolveOutcome& out, lbcolor::Objective objective,
                            const ReferenceAnswer& ref) {
    if (out.feasible() != ref.feasible) return ref.feasible ? "reported infeasible" : "reported feasible";
    if (!ref.feasible) return out.witness ? "witness on an infeasible instance" : "";
    if (!out.witness) return "no witness";
    if (!reference_valid(inst, out.witness->color_of)) return "invalid witness";
    if (objective == lbcolor::Objective::decide) return "";
    const Weight want = objective == lbcolor::Objective::maximize ? ref.best : ref.worst;
    if (reference_profit(inst, out.witness->color_of) != want) return "witness profit is not optimal";
    if (!out.objective || *out.objective != want) return "objective value is wrong";
    return "";
}

// Source-level answers by exhaustive search.

inline bool partition_answer(const std::vector<Weight>& a, Weight B) {
    const int n = static_cast<int>(a.size());
    for (int mask = 0; mask < (1 << n); ++mask) {
        Weight s = 0;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) s += a[i];
        if (s == B) return true;
    }
    return false;
}

/// Assigns every item to one of n groups and checks that each group has three
/// items summing to B.
inline bool three_partition_answer(const std::vector<Weight>& a, Weight B) {
    const int m = static_cast<int>(a.size());
    const int n = m / 3;
    std::vector<int> group(m, 0);
    std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == m) {
            for (int g = 0; g < n; ++g) {
                Weight s = 0;
                int count = 0;
                for (int j = 0; j < m; ++j)
                    if (group[j] == g) {
                        s += a[j];
                        ++count;
                    }
                if (s != B || count != 3) return false;
            }
            return true;
        }
        for (int g = 0; g < n; ++g) {
            group[i] = g;
            if (rec(i + 1)) return true;
        }
        return false;
    };
    return rec(0);
}

inline bool one_in_three_answer(int variables, const std::vector<std::array<int, 3>>& clauses) {
    for (int mask = 0; mask < (1 << variables); ++mask) {
        bool ok = true;
        for (const auto& c : clauses) {
            int t = 0;
            for (int x : c) t += mask >> x & 1;
            ok = ok && t == 1;
        }
        if (ok) return true;
    }
    return false;
}

inline bool three_dim_matching_answer(int q, const std::vector<std::array<int, 3>>& triples) {
    const int t = static_cast<int>(triples.size());
    for (int mask = 0; mask < (1 << t); ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) != q) continue;
        std::vector<char> seen(3 * q, 0);
        bool ok = true;
        for (int h = 0; h < t && ok; ++h)
            if (mask >> h & 1)
                for (int d = 0; d < 3 && ok; ++d) {
                    auto& s = seen[d * q + triples[h][d]];
                    ok = !s;
                    s = 1;
                }
        if (ok) return true;
    }
    return false;
}

// Random source problems.

/// n positive integers with an even sum; B is half of it.
inline lbcolor::PartitionSource random_partition(Rng& rng, int n, int max_a) {
    lbcolor::PartitionSource src;
    Weight sum = 0;
    for (int i = 0; i < n; ++i) {
        src.a.push_back(uniform(rng, 1, max_a));
        sum += src.a.back();
    }
    if (sum % 2) {
        ++src.a.back();
        ++sum;
    }
    src.B = sum / 2;
    return src;
}

/// 3n integers strictly between B/4 and B/2 summing to nB. Built from n
/// triples when `planted`, otherwise from random values fixed up to the sum
/// (which may or may not admit a partition).
inline std::optional<lbcolor::ThreePartitionSource> random_three_partition(Rng& rng, int n, Weight B, bool planted) {
    auto inside = [&](Weight a) { return 4 * a > B && 2 * a < B; };
    lbcolor::ThreePartitionSource src;
    src.B = B;
    for (int attempt = 0; attempt < 200 && src.a.empty(); ++attempt) {
        std::vector<Weight> a;
        if (planted) {
            for (int g = 0; g < n; ++g) {
                const Weight x = uniform(rng, static_cast<int>(B / 4 + 1), static_cast<int>((B - 1) / 2));
                const Weight y = uniform(rng, static_cast<int>(B / 4 + 1), static_cast<int>((B - 1) / 2));
                a.insert(a.end(), {x, y, B - x - y});
            }
        } else {
            Weight sum = 0;
            for (int i = 0; i < 3 * n; ++i) {
                a.push_back(uniform(rng, static_cast<int>(B / 4 + 1), static_cast<int>((B - 1) / 2)));
                sum += a.back();
            }
            a.back() += static_cast<Weight>(n) * B - sum;
        }
        if (std::all_of(a.begin(), a.end(), inside)) {
            std::shuffle(a.begin(), a.end(), rng);
            src.a = a;
        }
    }
    if (src.a.empty()) return std::nullopt;
    return src;
}

/// mu random clauses over distinct variables.
inline lbcolor::OneInThreeSatSource random_sat(Rng& rng, int variables, int mu) {
    lbcolor::OneInThreeSatSource src;
    src.variables = variables;
    std::vector<int> vars(variables);
    std::iota(vars.begin(), vars.end(), 0);
    for (int h = 0; h < mu; ++h) {
        std::shuffle(vars.begin(), vars.end(), rng);
        src.clauses.push_back({vars[0], vars[1], vars[2]});
    }
    return src;
}

/// q matching triples (when `planted`) plus `extra` random ones, shuffled.
inline lbcolor::ThreeDimMatchingSource random_3dm(Rng& rng, int q, int extra, bool planted) {
    lbcolor::ThreeDimMatchingSource src;
    src.q = q;
    const int base = planted ? q : q + extra;
    if (planted) {
        std::vector<int> y(q), z(q);
        std::iota(y.begin(), y.end(), 0);
        std::iota(z.begin(), z.end(), 0);
        std::shuffle(y.begin(), y.end(), rng);
        std::shuffle(z.begin(), z.end(), rng);
        for (int i = 0; i < q; ++i) src.triples.push_back({i, y[i], z[i]});
    }
    const int more = planted ? extra : base;
    for (int h = 0; h < more; ++h)
        src.triples.push_back({uniform(rng, 0, q - 1), uniform(rng, 0, q - 1), uniform(rng, 0, q - 1)});
    std::shuffle(src.triples.begin(), src.triples.end(), rng);
    return src;
}

}  // namespace support
