#include "lbcolor/cographs.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "lbcolor/basic.hpp"
#include "lbcolor/detail/edge_search.hpp"
#include "lbcolor/detail/layered_dp.hpp"
#include "lbcolor/detail/objective.hpp"
#include "lbcolor/detail/tuple.hpp"

namespace lbcolor {

using detail::Tuple;

namespace {

using Matrix = std::vector<std::vector<char>>;

Matrix matrix_of(int n, const std::vector<Edge>& edges) {
    Matrix adj(n, std::vector<char>(n, 0));
    for (auto [u, v] : edges) adj[u][v] = adj[v][u] = 1;
    return adj;
}

// Components of the graph (complement = false) or of its complement, restricted to `set`.
std::vector<std::vector<int>> components(const Matrix& adj, const std::vector<int>& set, bool complement) {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(set.size(), 0);
    for (std::size_t s = 0; s < set.size(); ++s) {
        if (seen[s]) continue;
        auto& comp = out.emplace_back();
        std::vector<std::size_t> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            auto i = stack.back();
            stack.pop_back();
            comp.push_back(set[i]);
            for (std::size_t j = 0; j < set.size(); ++j)
                if (!seen[j] && i != j && (adj[set[i]][set[j]] != 0) != complement) {
                    seen[j] = 1;
                    stack.push_back(j);
                }
        }
        std::sort(comp.begin(), comp.end());
    }
    return out;
}

// An induced P4 inside a set that is connected in the graph and its complement.
std::optional<std::array<int, 4>> find_p4(const Matrix& adj, const std::vector<int>& set) {
    for (int b : set)
        for (int c : set) {
            if (!adj[b][c]) continue;
            for (int a : set) {
                if (a == c || !adj[a][b] || adj[a][c]) continue;
                for (int d : set)
                    if (d != b && adj[c][d] && !adj[d][b] && !adj[d][a]) return std::array<int, 4>{a, b, c, d};
            }
        }
    return std::nullopt;
}

class CotreeBuilder {
public:
    explicit CotreeBuilder(Matrix adj) : adj_(std::move(adj)) {}

    int build(const std::vector<int>& set) {
        if (set.size() == 1) return add({CotreeKind::leaf, set[0], -1, -1});
        auto parts = components(adj_, set, false);
        CotreeKind kind = CotreeKind::disjoint_union;
        if (parts.size() == 1) {
            parts = components(adj_, set, true);
            kind = CotreeKind::join;
        }
        if (parts.size() == 1) {
            p4 = find_p4(adj_, set);
            return -1;
        }
        int acc = build(parts[0]);
        for (std::size_t i = 1; i < parts.size() && acc >= 0; ++i) {
            int next = build(parts[i]);
            if (next < 0) return -1;
            acc = add({kind, -1, acc, next});
        }
        return acc;
    }

    std::vector<CotreeNode> nodes;
    std::optional<std::array<int, 4>> p4;

private:
    int add(CotreeNode node) {
        nodes.push_back(node);
        return static_cast<int>(nodes.size()) - 1;
    }

    Matrix adj_;
};

// Vertices below each node.
std::vector<std::vector<int>> leaves_below(const Cotree& ct) {
    std::vector<std::vector<int>> out(ct.nodes.size());
    // Builders append children before parents, but do not rely on it.
    std::vector<int> order;
    std::vector<std::pair<int, bool>> stack{{ct.root, false}};
    while (!stack.empty()) {
        auto [i, expanded] = stack.back();
        stack.pop_back();
        if (expanded) {
            order.push_back(i);
            continue;
        }
        stack.push_back({i, true});
        if (ct.nodes[i].kind != CotreeKind::leaf) {
            stack.push_back({ct.nodes[i].right, false});
            stack.push_back({ct.nodes[i].left, false});
        }
    }
    for (int i : order) {
        const auto& node = ct.nodes[i];
        if (node.kind == CotreeKind::leaf) {
            out[i] = {node.vertex};
        } else {
            out[i] = out[node.left];
            out[i].insert(out[i].end(), out[node.right].begin(), out[node.right].end());
        }
    }
    return out;
}

std::vector<int> post_order(const Cotree& ct) {
    std::vector<int> order;
    std::vector<std::pair<int, bool>> stack{{ct.root, false}};
    while (!stack.empty()) {
        auto [i, expanded] = stack.back();
        stack.pop_back();
        if (expanded) {
            order.push_back(i);
            continue;
        }
        stack.push_back({i, true});
        if (ct.nodes[i].kind != CotreeKind::leaf) {
            stack.push_back({ct.nodes[i].right, false});
            stack.push_back({ct.nodes[i].left, false});
        }
    }
    return order;
}

class CotreeDp {
public:
    CotreeDp(const Instance& inst, const Cotree& ct, bool maximize, CographDiagnostics* diag)
        : inst_(inst), ct_(ct), maximize_(maximize), diag_(diag), cap_(detail::bound_tuple(inst)) {}

    SolveOutcome run() {
        tables_.assign(ct_.nodes.size(), {});
        for (int i : post_order(ct_)) {
            const auto& node = ct_.nodes[i];
            if (node.kind == CotreeKind::leaf) build_leaf(i, node.vertex);
            else build_inner(i, node);
            if (diag_) diag_->states += static_cast<std::int64_t>(tables_[i].size());
        }
        auto it = tables_[ct_.root].find(cap_);
        if (it == tables_[ct_.root].end()) return SolveOutcome::infeasible();
        Coloring col{std::vector<int>(inst_.n, -1)};
        trace(ct_.root, &*it, col);
        if (inst_.profit && coloring_profit(inst_, col) != it->second.value)
            throw std::logic_error("cotree DP value differs from the witness profit");
        return {Status::feasible, std::move(col), std::nullopt};
    }

private:
    struct Cell;
    using Entry = std::pair<const Tuple, Cell>;
    struct Cell {
        Weight value = 0;
        const Entry* left = nullptr;
        const Entry* right = nullptr;
        int color = -1;  // leaves only
    };
    using Table = std::map<Tuple, Cell>;

    // Colors carrying positive weight anywhere in the tuple.
    std::vector<char> used_colors(const Tuple& t) const {
        std::vector<char> used(inst_.k, 0);
        for (int h = 0; h < inst_.p; ++h)
            for (int c = 0; c < inst_.k; ++c)
                if (t[detail::slot(inst_, h, c)] > 0) used[c] = 1;
        return used;
    }

    void offer(Table& table, const Tuple& key, Cell cell) {
        auto [it, inserted] = table.try_emplace(key, cell);
        if (!inserted && maximize_ && cell.value > it->second.value) it->second = cell;
    }

    void build_leaf(int i, int v) {
        for (int c : inst_.allowed[v]) {
            Tuple t = detail::zero_tuple(inst_);
            t[detail::slot(inst_, inst_.part_of[v], c)] = inst_.weight[v];
            if (detail::fits(t, cap_)) offer(tables_[i], t, Cell{inst_.profit_of(v, c), nullptr, nullptr, c});
        }
    }

    void build_inner(int i, const CotreeNode& node) {
        const auto& left = tables_[node.left];
        const auto& right = tables_[node.right];
        const bool join = node.kind == CotreeKind::join;
        std::vector<std::vector<char>> right_used;
        if (join)
            for (const auto& entry : right) right_used.push_back(used_colors(entry.first));
        Tuple sum;
        for (const auto& a : left) {
            std::vector<char> a_used;
            if (join) a_used = used_colors(a.first);
            std::size_t r = 0;
            for (auto b = right.begin(); b != right.end(); ++b, ++r) {
                if (join) {
                    bool shared = false;
                    for (int c = 0; c < inst_.k && !shared; ++c) shared = a_used[c] && right_used[r][c];
                    if (shared) continue;
                }
                if (detail::add_within(a.first, b->first, cap_, sum))
                    offer(tables_[i], sum, Cell{a.second.value + b->second.value, &a, &*b, -1});
            }
        }
    }

    void trace(int i, const Entry* entry, Coloring& col) {
        const auto& node = ct_.nodes[i];
        if (node.kind == CotreeKind::leaf) {
            col.color_of[node.vertex] = entry->second.color;
            return;
        }
        if (node.kind == CotreeKind::join && diag_) {
            ++diag_->join_checks;
            const auto a = used_colors(entry->second.left->first);
            const auto b = used_colors(entry->second.right->first);
            for (int c = 0; c < inst_.k; ++c)
                if (a[c] && b[c]) {
                    ++diag_->join_violations;
                    break;
                }
        }
        trace(node.left, entry->second.left, col);
        trace(node.right, entry->second.right, col);
    }

    const Instance& inst_;
    const Cotree& ct_;
    bool maximize_;
    CographDiagnostics* diag_;
    Tuple cap_;
    std::vector<Table> tables_;
};

bool is_complete(const Instance& inst) {
    return static_cast<long long>(inst.edges.size()) == static_cast<long long>(inst.n) * (inst.n - 1) / 2;
}

}  // namespace

CotreeResult build_cotree(int n, const std::vector<Edge>& edges) {
    CotreeResult result;
    if (n == 0) return result;
    CotreeBuilder builder(matrix_of(n, edges));
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    int root = builder.build(all);
    if (root < 0) {
        result.p4 = builder.p4;
        return result;
    }
    result.cotree = Cotree{std::move(builder.nodes), root};
    return result;
}

CotreeResult build_cotree(const Instance& inst) { return build_cotree(inst.n, inst.edges); }

std::vector<std::vector<char>> reconstruct_graph(const Cotree& ct, int n) {
    Matrix adj(n, std::vector<char>(n, 0));
    if (ct.root < 0) return adj;
    const auto below = leaves_below(ct);
    for (std::size_t i = 0; i < ct.nodes.size(); ++i) {
        const auto& node = ct.nodes[i];
        if (node.kind != CotreeKind::join) continue;
        for (int u : below[node.left])
            for (int v : below[node.right]) adj[u][v] = adj[v][u] = 1;
    }
    return adj;
}

SolveOutcome dp_cograph(const Instance& inst, const Cotree& ct, Objective objective, CographDiagnostics* diag) {
    if (inst.mode != Mode::vertex) throw UsageError("cograph needs a vertex-mode instance");
    if (inst.n == 0) {
        return detail::run_objective(inst, objective, [](const Instance& in, bool) {
            for (const auto& row : in.bounds)
                for (Weight w : row)
                    if (w != 0) return SolveOutcome::infeasible();
            return SolveOutcome{Status::feasible, Coloring{}, std::nullopt};
        });
    }
    return detail::run_objective(inst, objective, [&](const Instance& in, bool maximize) {
        return CotreeDp(in, ct, maximize, diag).run();
    });
}

SolveOutcome solve_complete_graph(const Instance& inst, Objective objective) {
    if (inst.mode != Mode::vertex) throw UsageError("complete needs a vertex-mode instance");
    if (!is_complete(inst)) throw UsageError("complete needs a complete graph");

    return detail::run_objective(inst, objective, [](const Instance& in, bool maximize) {
        // Colors with a positive bound, each owned by the single part holding it.
        std::vector<int> colors;
        std::vector<int> owner;
        for (int c = 0; c < in.k; ++c) {
            int part = -1;
            for (int h = 0; h < in.p; ++h) {
                if (in.bounds[h][c] == 0) continue;
                if (part >= 0) return SolveOutcome::infeasible();
                part = h;
            }
            if (part < 0) continue;
            colors.push_back(c);
            owner.push_back(part);
        }
        if (static_cast<int>(colors.size()) != in.n) return SolveOutcome::infeasible();

        AssignmentProblem ap(in.n, in.n);
        for (int v = 0; v < in.n; ++v)
            for (int j = 0; j < in.n; ++j) {
                const int c = colors[j];
                const bool ok = in.allows(v, c) && in.part_of[v] == owner[j] && in.weight[v] == in.bounds[owner[j]][c];
                ap.forbidden[v][j] = !ok;
                if (maximize) ap.weight[v][j] = in.profit_of(v, c);
            }
        const auto assignment = max_weight_perfect_assignment(ap);
        if (!assignment) return SolveOutcome::infeasible();
        Coloring col{std::vector<int>(in.n)};
        for (int v = 0; v < in.n; ++v) col.color_of[v] = colors[assignment->column_of[v]];
        return SolveOutcome{Status::feasible, col, std::nullopt};
    });
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> complete_bipartite_sides(
    int n, const std::vector<Edge>& edges) {
    if (n < 2 || edges.empty()) return std::nullopt;
    const Matrix adj = matrix_of(n, edges);
    // The side of vertex 0 is exactly its non-neighbors.
    std::vector<int> a, b;
    for (int v = 0; v < n; ++v) (v == 0 || !adj[0][v] ? a : b).push_back(v);
    if (b.empty()) return std::nullopt;
    if (static_cast<long long>(a.size()) * static_cast<long long>(b.size()) != static_cast<long long>(edges.size()))
        return std::nullopt;
    for (int u : a)
        for (int v : b)
            if (!adj[u][v]) return std::nullopt;
    return std::make_pair(a, b);
}

SolveOutcome solve_complete_bipartite(const Instance& inst, Objective objective) {
    if (inst.mode != Mode::vertex) throw UsageError("complete-bipartite needs a vertex-mode instance");
    const auto sides = complete_bipartite_sides(inst.n, inst.edges);
    if (!sides) throw UsageError("complete-bipartite needs a complete bipartite graph");
    if (inst.k > 20) throw UsageError("complete-bipartite supports at most 20 colors");

    return detail::run_objective(inst, objective, [&](const Instance& in, bool maximize) {
        const std::array<const std::vector<int>*, 2> side{&sides->first, &sides->second};
        SolveOutcome best;
        Weight best_value = 0;
        for (std::uint32_t mask = 0; mask < (1u << in.k); ++mask) {
            Coloring col{std::vector<int>(in.n, -1)};
            bool ok = true;
            for (int s = 0; s < 2 && ok; ++s) {
                // Edgeless instance on one side, restricted to that side's colors.
                Instance sub;
                sub.mode = Mode::vertex;
                sub.n = static_cast<int>(side[s]->size());
                sub.k = in.k;
                sub.p = in.p;
                sub.bounds = in.bounds;
                for (int c = 0; c < in.k; ++c)
                    if (((mask >> c) & 1u) != static_cast<std::uint32_t>(s))
                        for (int h = 0; h < in.p; ++h) sub.bounds[h][c] = 0;
                std::vector<Weight> row_sum(in.p, 0);
                if (in.profit) sub.profit.emplace();
                for (int v : *side[s]) {
                    sub.part_of.push_back(in.part_of[v]);
                    sub.weight.push_back(in.weight[v]);
                    row_sum[in.part_of[v]] += in.weight[v];
                    auto& list = sub.allowed.emplace_back();
                    for (int c : in.allowed[v])
                        if (((mask >> c) & 1u) == static_cast<std::uint32_t>(s)) list.push_back(c);
                    if (list.empty()) ok = false;
                    if (in.profit) sub.profit->push_back((*in.profit)[v]);
                }
                for (int h = 0; h < in.p && ok; ++h) {
                    Weight total = 0;
                    for (Weight w : sub.bounds[h]) total += w;
                    ok = total == row_sum[h];
                }
                if (!ok) break;
                const auto part = solve_isolated_k_fixed(sub, maximize ? Objective::maximize : Objective::decide);
                if (!part.feasible()) {
                    ok = false;
                    break;
                }
                for (std::size_t i = 0; i < side[s]->size(); ++i)
                    col.color_of[(*side[s])[i]] = part.witness->color_of[i];
            }
            if (!ok) continue;
            const Weight value = coloring_profit(in, col);
            if (!best.feasible() || (maximize && value > best_value)) {
                best = SolveOutcome{Status::feasible, col, std::nullopt};
                best_value = value;
                if (!maximize) break;
            }
        }
        return best;
    });
}

SolveOutcome solve_cograph_edges(const Instance& inst, Objective objective) {
    if (inst.mode != Mode::edge) throw UsageError("cograph-edge needs an edge-mode instance");
    if (!build_cotree(inst.n, inst.edges).is_cograph() && inst.n > 0)
        throw UsageError("cograph-edge needs a cograph: not a cograph");

    return detail::run_objective(inst, objective, [](const Instance& in, bool maximize) {
        const auto adj = adjacency(in);
        for (const auto& nb : adj)
            if (static_cast<int>(nb.size()) > in.k) return SolveOutcome::infeasible();

        // Edges grouped by connected component of the graph.
        std::vector<int> comp(in.n, -1);
        int count = 0;
        for (int s = 0; s < in.n; ++s) {
            if (comp[s] >= 0 || adj[s].empty()) continue;
            std::vector<int> stack{s};
            comp[s] = count;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (int v : adj[u])
                    if (comp[v] < 0) {
                        comp[v] = count;
                        stack.push_back(v);
                    }
            }
            ++count;
        }
        std::vector<std::vector<int>> groups(count);
        for (std::size_t e = 0; e < in.edges.size(); ++e) groups[comp[in.edges[e].first]].push_back(static_cast<int>(e));

        const Tuple cap = detail::bound_tuple(in);
        detail::LayeredDp::Options options(count);
        std::vector<std::vector<std::vector<int>>> colorings(count);
        for (int g = 0; g < count; ++g) {
            // One representative coloring per reachable tally; the best one when maximizing.
            std::map<Tuple, std::pair<Weight, std::vector<int>>> found;
            detail::enumerate_edge_colorings(in, groups[g], cap, [&](const std::vector<int>& cs, const Tuple& t, Weight v) {
                auto [it, inserted] = found.try_emplace(t, v, cs);
                if (!inserted && maximize && v > it->second.first) it->second = {v, cs};
                return true;
            });
            if (found.empty()) return SolveOutcome::infeasible();
            for (auto& [t, best] : found) {
                options[g].emplace_back(t, best.first);
                colorings[g].push_back(std::move(best.second));
            }
        }
        detail::LayeredDp dp;
        if (!dp.run(options, cap, maximize)) return SolveOutcome::infeasible();
        const auto choice = dp.trace(cap);
        Coloring col{std::vector<int>(in.edges.size(), -1)};
        for (int g = 0; g < count; ++g)
            for (std::size_t i = 0; i < groups[g].size(); ++i) col.color_of[groups[g][i]] = colorings[g][choice[g]][i];
        return SolveOutcome{Status::feasible, col, std::nullopt};
    });
}

}  // namespace lbcolor
