#include "lbcolor/split.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "lbcolor/basic.hpp"
#include "lbcolor/detail/edge_search.hpp"
#include "lbcolor/detail/objective.hpp"
#include "lbcolor/detail/tuple.hpp"
#include "lbcolor/matching.hpp"

namespace lbcolor {

namespace {

SplitPartition require_split(const Instance& inst, const char* solver) {
    auto sp = split_partition(inst);
    if (!sp) throw UsageError(std::string(solver) + " needs a split graph: not a split graph");
    return *sp;
}

// The edgeless instance left on S once K is colored: bounds lose K's
// weights and each S vertex loses the colors of its K neighbors. Returns
// nullopt when a bound goes negative or a list runs empty.
std::optional<Instance> residual_on_independent(const Instance& inst, const SplitPartition& sp,
                                                const std::vector<int>& color_of, bool full_lists) {
    Instance res;
    res.mode = Mode::vertex;
    res.n = static_cast<int>(sp.independent.size());
    res.k = inst.k;
    res.p = inst.p;
    res.bounds = inst.bounds;
    for (int u : sp.clique) {
        auto& b = res.bounds[inst.part_of[u]][color_of[u]];
        b -= inst.weight[u];
        if (b < 0) return std::nullopt;
    }
    const auto adj = adjacency(inst);
    if (inst.profit) res.profit.emplace();
    for (int v : sp.independent) {
        std::vector<char> banned(inst.k, 0);
        for (int u : adj[v]) banned[color_of[u]] = 1;
        auto& list = res.allowed.emplace_back();
        if (full_lists) {
            for (int c = 0; c < inst.k; ++c)
                if (!banned[c]) list.push_back(c);
        } else {
            for (int c : inst.allowed[v])
                if (!banned[c]) list.push_back(c);
        }
        if (list.empty()) return std::nullopt;
        res.part_of.push_back(inst.part_of[v]);
        res.weight.push_back(inst.weight[v]);
        if (inst.profit) res.profit->push_back((*inst.profit)[v]);
    }
    return res;
}

void merge_residual(const SplitPartition& sp, const Coloring& part, std::vector<int>& color_of) {
    for (std::size_t i = 0; i < sp.independent.size(); ++i) color_of[sp.independent[i]] = part.color_of[i];
}

}  // namespace

std::optional<SplitPartition> split_partition(int n, const std::vector<Edge>& edges) {
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    std::vector<long long> deg(n, 0);
    for (auto [u, v] : edges) {
        adj[u][v] = adj[v][u] = 1;
        ++deg[u];
        ++deg[v];
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] > deg[b]; });

    // Hammer-Simeone: with m the largest i such that d_i >= i - 1, the graph is
    // split iff sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i; m is then the clique number.
    long long m = 0;
    for (int i = 0; i < n; ++i)
        if (deg[order[i]] >= i) m = i + 1;
    long long head = 0, tail = 0;
    for (int i = 0; i < n; ++i) (i < m ? head : tail) += deg[order[i]];
    if (head != m * (m - 1) + tail) return std::nullopt;

    // Every vertex of degree >= m lies in every maximum clique; the rest of K
    // comes from the degree m-1 vertices, taken greedily by index.
    SplitPartition sp;
    std::vector<char> in_clique(n, 0);
    for (int v = 0; v < n; ++v)
        if (deg[v] >= m) {
            in_clique[v] = 1;
            sp.clique.push_back(v);
        }
    for (int v = 0; v < n && static_cast<long long>(sp.clique.size()) < m; ++v) {
        if (in_clique[v] || deg[v] != m - 1) continue;
        if (std::all_of(sp.clique.begin(), sp.clique.end(), [&](int u) { return adj[u][v] != 0; })) {
            in_clique[v] = 1;
            sp.clique.push_back(v);
        }
    }
    std::sort(sp.clique.begin(), sp.clique.end());
    for (int v = 0; v < n; ++v)
        if (!in_clique[v]) sp.independent.push_back(v);

    for (std::size_t a = 0; a < sp.clique.size(); ++a)
        for (std::size_t b = a + 1; b < sp.clique.size(); ++b)
            if (!adj[sp.clique[a]][sp.clique[b]]) return std::nullopt;
    for (std::size_t a = 0; a < sp.independent.size(); ++a)
        for (std::size_t b = a + 1; b < sp.independent.size(); ++b)
            if (adj[sp.independent[a]][sp.independent[b]]) return std::nullopt;
    return sp;
}

std::optional<SplitPartition> split_partition(const Instance& inst) { return split_partition(inst.n, inst.edges); }

SingularSpec infer_singular(const Instance& inst) {
    std::vector<char> constant(inst.k, 1);
    std::map<Weight, int> count;
    for (int c = 0; c < inst.k; ++c) {
        for (int h = 1; h < inst.p; ++h)
            if (inst.bounds[h][c] != inst.bounds[0][c]) constant[c] = 0;
        if (constant[c]) ++count[inst.bounds[0][c]];
    }
    std::optional<Weight> common;
    int best = 1;
    for (auto [value, times] : count)
        if (times > best) {
            best = times;
            common = value;
        }

    SingularSpec spec;
    for (int c = 0; c < inst.k; ++c) {
        if (common && constant[c] && inst.bounds[0][c] == *common) spec.non_singular.push_back(c);
        else spec.singular.push_back(c);
    }
    if (common) spec.common = *common;
    return spec;
}

SolveOutcome solve_split_k_fixed(const Instance& inst, Objective objective) {
    if (inst.mode != Mode::vertex) throw UsageError("split-kfixed needs a vertex-mode instance");
    const SplitPartition sp = require_split(inst, "split-kfixed");

    return detail::run_objective(inst, objective, [&](const Instance& in, bool maximize) {
        if (static_cast<int>(sp.clique.size()) > in.k) return SolveOutcome::infeasible();
        const auto& clique = sp.clique;
        std::vector<int> color_of(in.n, -1);
        std::vector<char> taken(in.k, 0);
        SolveOutcome best;
        Weight best_value = 0;
        bool done = false;

        auto rec = [&](auto&& self, std::size_t i) -> void {
            if (done) return;
            if (i == clique.size()) {
                const auto res = residual_on_independent(in, sp, color_of, false);
                if (!res) return;
                const auto part = solve_isolated_k_fixed(*res, maximize ? Objective::maximize : Objective::decide);
                if (!part.feasible()) return;
                Coloring col{color_of};
                merge_residual(sp, *part.witness, col.color_of);
                const Weight value = coloring_profit(in, col);
                if (!best.feasible() || value > best_value) {
                    best = SolveOutcome{Status::feasible, col, std::nullopt};
                    best_value = value;
                }
                if (!maximize) done = true;
                return;
            }
            const int u = clique[i];
            for (int c : in.allowed[u]) {
                if (taken[c]) continue;
                taken[c] = 1;
                color_of[u] = c;
                self(self, i + 1);
                taken[c] = 0;
                color_of[u] = -1;
            }
        };
        rec(rec, 0);
        return best;
    });
}

SolveOutcome solve_split_singular(const Instance& inst, bool clique_general) {
    if (inst.mode != Mode::vertex) throw UsageError("split-singular needs a vertex-mode instance");
    const SplitPartition sp = require_split(inst, "split-singular");
    auto full = [&](int v) { return static_cast<int>(inst.allowed[v].size()) == inst.k; };
    for (int v : sp.independent) {
        if (inst.weight[v] != 1) throw UsageError("split-singular needs unit weights on the independent side");
        if (!full(v)) throw UsageError("split-singular needs full color lists on the independent side");
    }
    if (!clique_general)
        for (int u : sp.clique) {
            if (inst.weight[u] != 1)
                throw UsageError("split-singular needs unit weights on the clique (or --clique-general)");
            if (!full(u)) throw UsageError("split-singular needs full color lists on the clique (or --clique-general)");
        }

    const SingularSpec spec = infer_singular(inst);
    const auto& clique = sp.clique;
    const double guesses = std::pow(static_cast<double>(clique.size()) + 1.0, static_cast<double>(spec.singular.size()));
    if (guesses > 1e7)
        throw UsageError("split-singular: too many singular colors (" + std::to_string(spec.singular.size()) + ")");
    if (static_cast<int>(clique.size()) > inst.k) return detail::finalize(inst, SolveOutcome::infeasible());

    std::vector<int> color_of(inst.n, -1);
    std::optional<Coloring> found;

    // Gives the clique vertices still uncolored distinct non-singular colors.
    auto place_rest = [&]() -> bool {
        std::vector<int> rest;
        for (int u : clique)
            if (color_of[u] < 0) rest.push_back(u);
        if (rest.size() > spec.non_singular.size()) return false;
        if (!clique_general) {
            for (std::size_t i = 0; i < rest.size(); ++i) color_of[rest[i]] = spec.non_singular[i];
            return true;
        }
        AssignmentProblem ap(static_cast<int>(rest.size()), static_cast<int>(spec.non_singular.size()));
        for (std::size_t i = 0; i < rest.size(); ++i)
            for (std::size_t j = 0; j < spec.non_singular.size(); ++j)
                ap.forbidden[i][j] = !(inst.allows(rest[i], spec.non_singular[j]) && inst.weight[rest[i]] <= spec.common);
        const auto a = max_weight_perfect_assignment(ap);
        if (!a) return false;
        for (std::size_t i = 0; i < rest.size(); ++i) color_of[rest[i]] = spec.non_singular[a->column_of[i]];
        return true;
    };

    auto rec = [&](auto&& self, std::size_t s) -> void {
        if (found) return;
        if (s == spec.singular.size()) {
            const std::vector<int> saved = color_of;
            if (place_rest()) {
                if (const auto res = residual_on_independent(inst, sp, color_of, true)) {
                    const auto part = solve_isolated_unit(*res);
                    if (part.feasible()) {
                        found = Coloring{color_of};
                        merge_residual(sp, *part.witness, found->color_of);
                    }
                }
            }
            color_of = saved;
            return;
        }
        const int c = spec.singular[s];
        self(self, s + 1);  // c unused on the clique
        for (int u : clique) {
            if (found) return;
            if (color_of[u] >= 0 || !inst.allows(u, c) || inst.bounds[inst.part_of[u]][c] < inst.weight[u]) continue;
            color_of[u] = c;
            self(self, s + 1);
            color_of[u] = -1;
        }
    };
    rec(rec, 0);

    if (!found) return detail::finalize(inst, SolveOutcome::infeasible());
    return detail::finalize(inst, {Status::feasible, *found, std::nullopt});
}

SolveOutcome solve_split_edges(const Instance& inst, Objective objective) {
    if (inst.mode != Mode::edge) throw UsageError("split-edge needs an edge-mode instance");
    const SplitPartition sp = require_split(inst, "split-edge");

    return detail::run_objective(inst, objective, [&](const Instance& in, bool maximize) {
        for (const auto& nb : adjacency(in))
            if (static_cast<int>(nb.size()) > in.k) return SolveOutcome::infeasible();
        if (static_cast<int>(sp.clique.size()) > in.k + 1) return SolveOutcome::infeasible();

        const detail::Tuple cap = detail::bound_tuple(in);
        std::vector<int> all(in.edges.size());
        std::iota(all.begin(), all.end(), 0);
        SolveOutcome best;
        Weight best_value = 0;
        detail::enumerate_edge_colorings(in, all, cap, [&](const std::vector<int>& cs, const detail::Tuple& t, Weight v) {
            if (t != cap) return true;
            if (!best.feasible() || v > best_value) {
                best = SolveOutcome{Status::feasible, Coloring{cs}, std::nullopt};
                best_value = v;
            }
            return maximize;
        });
        return best;
    });
}

}  // namespace lbcolor
