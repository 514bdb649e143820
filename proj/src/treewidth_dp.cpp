#include <algorithm>
#include <map>
#include <stdexcept>

#include "lbcolor/detail/objective.hpp"
#include "lbcolor/detail/tuple.hpp"
#include "lbcolor/treewidth.hpp"

namespace lbcolor {

using detail::Tuple;

namespace {

// Vertex mode. The state of a node is a coloring of its bag ("items") plus
// the weight tuple of the colored subtree, bag included.
class BagDp {
public:
    BagDp(const Instance& inst, const NiceDecomposition& dec, bool maximize, DpDiagnostics* diag)
        : inst_(inst), dec_(dec), maximize_(maximize), diag_(diag), cap_(detail::bound_tuple(inst)) {
        if (inst.k > 255) throw UsageError("tree-width DP supports at most 255 colors");
        adj_ = adjacency_matrix(inst);
        items_.resize(dec.nodes.size());
        for (std::size_t i = 0; i < dec.nodes.size(); ++i) items_[i] = dec.nodes[i].bag;
    }

    SolveOutcome run() {
        tables_.assign(dec_.nodes.size(), {});
        for (int i : dec_.post_order()) {
            const auto& node = dec_.nodes[i];
            switch (node.kind) {
                case NodeKind::leaf: build_leaf(i); break;
                case NodeKind::introduce: build_introduce(i); break;
                case NodeKind::forget: build_forget(i); break;
                case NodeKind::join: build_join(i); break;
            }
            if (diag_) diag_->states += static_cast<std::int64_t>(tables_[i].size());
            for (const auto& [key, cell] : tables_[i])
                if (!detail::fits(key.second, cap_) ||
                    std::any_of(key.second.begin(), key.second.end(), [](Weight w) { return w < 0; }))
                    if (diag_) ++diag_->range_violations;
        }

        const Entry* best = nullptr;
        for (const auto& entry : tables_[dec_.root])
            if (entry.first.second == cap_ && (!best || (maximize_ && entry.second.value > best->second.value)))
                best = &entry;
        if (!best) return SolveOutcome::infeasible();

        Coloring col{std::vector<int>(inst_.element_count(), -1)};
        trace(dec_.root, best, col);
        for (int c : col.color_of)
            if (c < 0) throw std::logic_error("bag DP left an element uncolored");
        if (inst_.profit && coloring_profit(inst_, col) != best->second.value)
            throw std::logic_error("bag DP value differs from the witness profit");
        return {Status::feasible, std::move(col), std::nullopt};
    }

private:
    using Colors = std::vector<std::uint8_t>;  // parallel to items_[node]
    using Key = std::pair<Colors, Tuple>;
    struct Cell;
    using Entry = std::pair<const Key, Cell>;
    struct Cell {
        Weight value = 0;
        const Entry* first = nullptr;
        const Entry* second = nullptr;
    };
    using Table = std::map<Key, Cell>;

    bool conflict(int a, int b) const { return adj_[a][b] != 0; }

    void offer(Table& table, Key key, Weight value, const Entry* first, const Entry* second) {
        auto [it, inserted] = table.try_emplace(std::move(key), Cell{value, first, second});
        if (!inserted && maximize_ && value > it->second.value) it->second = Cell{value, first, second};
    }

    // Enumerates list-respecting colorings of items[fresh...] that avoid
    // conflicts with already-colored items, calling emit(colors, delta, value).
    template <class Emit>
    void extend(const std::vector<int>& items, std::vector<int>& fresh, Colors& colors, std::vector<char>& colored,
                std::size_t pos, Tuple& delta, Weight value, Emit&& emit) const {
        if (pos == fresh.size()) {
            emit(colors, delta, value);
            return;
        }
        const int idx = fresh[pos];
        const int e = items[idx];
        for (int c : inst_.allowed[e]) {
            bool ok = true;
            for (std::size_t j = 0; j < items.size() && ok; ++j)
                if (colored[j] && colors[j] == c && conflict(items[j], e)) ok = false;
            if (!ok) continue;
            const auto s = detail::slot(inst_, inst_.part_of[e], c);
            delta[s] += inst_.weight[e];
            colors[idx] = static_cast<std::uint8_t>(c);
            colored[idx] = 1;
            extend(items, fresh, colors, colored, pos + 1, delta, value + inst_.profit_of(e, c), emit);
            colored[idx] = 0;
            delta[s] -= inst_.weight[e];
        }
    }

    void build_leaf(int i) {
        const auto& items = items_[i];
        std::vector<int> fresh(items.size());
        for (std::size_t j = 0; j < items.size(); ++j) fresh[j] = static_cast<int>(j);
        Colors colors(items.size(), 0);
        std::vector<char> colored(items.size(), 0);
        Tuple delta = detail::zero_tuple(inst_);
        extend(items, fresh, colors, colored, 0, delta, 0, [&](const Colors& cs, const Tuple& t, Weight v) {
            if (detail::fits(t, cap_)) offer(tables_[i], {cs, t}, v, nullptr, nullptr);
        });
    }

    void build_introduce(int i) {
        const int child = dec_.nodes[i].children[0];
        const auto& items = items_[i];
        const auto& child_items = items_[child];
        // Position in the child's state of every item carried over.
        std::vector<int> from(items.size(), -1);
        std::vector<int> fresh;
        for (std::size_t j = 0; j < items.size(); ++j) {
            auto it = std::lower_bound(child_items.begin(), child_items.end(), items[j]);
            if (it != child_items.end() && *it == items[j]) from[j] = static_cast<int>(it - child_items.begin());
            else fresh.push_back(static_cast<int>(j));
        }
        Tuple next;
        for (const auto& entry : tables_[child]) {
            Colors colors(items.size(), 0);
            std::vector<char> colored(items.size(), 0);
            for (std::size_t j = 0; j < items.size(); ++j)
                if (from[j] >= 0) {
                    colors[j] = entry.first.first[from[j]];
                    colored[j] = 1;
                }
            Tuple delta = detail::zero_tuple(inst_);
            extend(items, fresh, colors, colored, 0, delta, 0, [&](const Colors& cs, const Tuple& d, Weight v) {
                if (detail::add_within(entry.first.second, d, cap_, next))
                    offer(tables_[i], {cs, next}, entry.second.value + v, &entry, nullptr);
            });
        }
    }

    void build_forget(int i) {
        const int child = dec_.nodes[i].children[0];
        const auto& items = items_[i];
        const auto& child_items = items_[child];
        std::vector<int> keep;
        for (std::size_t j = 0; j < child_items.size(); ++j)
            if (std::binary_search(items.begin(), items.end(), child_items[j])) keep.push_back(static_cast<int>(j));
        for (const auto& entry : tables_[child]) {
            Colors colors;
            colors.reserve(keep.size());
            for (int j : keep) colors.push_back(entry.first.first[j]);
            offer(tables_[i], {std::move(colors), entry.first.second}, entry.second.value, &entry, nullptr);
        }
    }

    // Weight and profit of the items themselves under `colors`.
    std::pair<Tuple, Weight> bag_load(const std::vector<int>& items, const Colors& colors) const {
        Tuple load = detail::zero_tuple(inst_);
        Weight value = 0;
        for (std::size_t j = 0; j < items.size(); ++j) {
            load[detail::slot(inst_, inst_.part_of[items[j]], colors[j])] += inst_.weight[items[j]];
            value += inst_.profit_of(items[j], colors[j]);
        }
        return {load, value};
    }

    void build_join(int i) {
        const auto& left = tables_[dec_.nodes[i].children[0]];
        const auto& right = tables_[dec_.nodes[i].children[1]];
        const auto& items = items_[i];
        Tuple omega(cap_.size());
        auto lit = left.begin();
        while (lit != left.end()) {
            const Colors& colors = lit->first.first;
            auto lend = lit;
            while (lend != left.end() && lend->first.first == colors) ++lend;
            auto rit = right.lower_bound({colors, Tuple{}});
            auto rend = rit;
            while (rend != right.end() && rend->first.first == colors) ++rend;
            if (rit != rend) {
                const auto [load, load_value] = bag_load(items, colors);
                for (auto a = lit; a != lend; ++a)
                    for (auto b = rit; b != rend; ++b) {
                        bool ok = true;
                        for (std::size_t s = 0; s < omega.size() && ok; ++s) {
                            omega[s] = a->first.second[s] + b->first.second[s] - load[s];
                            ok = omega[s] <= cap_[s];
                        }
                        if (ok) offer(tables_[i], {colors, omega}, a->second.value + b->second.value - load_value, &*a, &*b);
                    }
            }
            lit = lend;
        }
    }

    void trace(int i, const Entry* entry, Coloring& col) {
        const auto& items = items_[i];
        for (std::size_t j = 0; j < items.size(); ++j) col.color_of[items[j]] = entry->first.first[j];
        const auto& node = dec_.nodes[i];
        if (node.kind == NodeKind::join && diag_) {
            const auto load = bag_load(items, entry->first.first).first;
            const Tuple& omega = entry->first.second;
            const Tuple& q1 = entry->second.first->first.second;
            const Tuple& q2 = entry->second.second->first.second;
            ++diag_->join_checks;
            for (std::size_t s = 0; s < omega.size(); ++s)
                if (q1[s] + q2[s] != omega[s] + load[s] || q1[s] < load[s] || q2[s] < load[s] ||
                    q1[s] > omega[s] || q2[s] > omega[s]) {
                    ++diag_->join_violations;
                    break;
                }
        }
        if (!node.children.empty()) trace(node.children[0], entry->second.first, col);
        if (node.children.size() > 1) trace(node.children[1], entry->second.second, col);
    }

    const Instance& inst_;
    const NiceDecomposition& dec_;
    bool maximize_;
    DpDiagnostics* diag_;
    Tuple cap_;
    std::vector<std::vector<char>> adj_;
    std::vector<std::vector<int>> items_;
    std::vector<Table> tables_;
};

// Edge mode. An edge is colored at the forget node of whichever endpoint
// leaves the decomposition first; both endpoints are in that node's child bag.
// The state keeps, per bag vertex, the set of colors already used on its
// incident edges, so edges meeting at a vertex never share a color even when
// no bag holds both of them.
class EdgeDp {
public:
    EdgeDp(const Instance& inst, const NiceDecomposition& dec, bool maximize, DpDiagnostics* diag)
        : inst_(inst), dec_(dec), maximize_(maximize), diag_(diag), cap_(detail::bound_tuple(inst)) {
        if (inst.k > 64) throw UsageError("tree-width edge DP supports at most 64 colors");
        edge_id_.assign(inst.n, std::vector<int>(inst.n, -1));
        for (std::size_t e = 0; e < inst.edges.size(); ++e) {
            auto [u, v] = inst.edges[e];
            edge_id_[u][v] = edge_id_[v][u] = static_cast<int>(e);
        }
    }

    SolveOutcome run() {
        tables_.assign(dec_.nodes.size(), {});
        for (int i : dec_.post_order()) {
            const auto& node = dec_.nodes[i];
            switch (node.kind) {
                case NodeKind::leaf: offer(tables_[i], {Masks(node.bag.size(), 0), detail::zero_tuple(inst_)}, Cell{}); break;
                case NodeKind::introduce: build_introduce(i); break;
                case NodeKind::forget: build_forget(i); break;
                case NodeKind::join: build_join(i); break;
            }
            if (diag_) diag_->states += static_cast<std::int64_t>(tables_[i].size());
            for (const auto& [key, cell] : tables_[i])
                if (!detail::fits(key.second, cap_) ||
                    std::any_of(key.second.begin(), key.second.end(), [](Weight w) { return w < 0; }))
                    if (diag_) ++diag_->range_violations;
        }

        const Entry* best = nullptr;
        for (const auto& entry : tables_[dec_.root])
            if (entry.first.second == cap_ && (!best || (maximize_ && entry.second.value > best->second.value)))
                best = &entry;
        if (!best) return SolveOutcome::infeasible();

        Coloring col{std::vector<int>(inst_.element_count(), -1)};
        trace(dec_.root, best, col);
        for (int c : col.color_of)
            if (c < 0) throw std::logic_error("edge DP left an edge uncolored");
        if (inst_.profit && coloring_profit(inst_, col) != best->second.value)
            throw std::logic_error("edge DP value differs from the witness profit");
        return {Status::feasible, std::move(col), std::nullopt};
    }

private:
    using Masks = std::vector<std::uint64_t>;  // parallel to the bag
    using Key = std::pair<Masks, Tuple>;
    struct Cell;
    using Entry = std::pair<const Key, Cell>;
    struct Cell {
        Weight value = 0;
        const Entry* first = nullptr;
        const Entry* second = nullptr;
        std::vector<std::pair<int, int>> chosen;  // (edge, color) fixed at a forget node
    };
    using Table = std::map<Key, Cell>;

    void offer(Table& table, Key key, Cell cell) {
        auto [it, inserted] = table.try_emplace(std::move(key), cell);
        if (!inserted && maximize_ && cell.value > it->second.value) it->second = std::move(cell);
    }

    void build_introduce(int i) {
        const auto& node = dec_.nodes[i];
        const auto& bag = node.bag;
        const auto pos = std::lower_bound(bag.begin(), bag.end(), node.vertex) - bag.begin();
        for (const auto& entry : tables_[node.children[0]]) {
            Masks masks = entry.first.first;
            masks.insert(masks.begin() + pos, 0);
            offer(tables_[i], {std::move(masks), entry.first.second}, Cell{entry.second.value, &entry, nullptr, {}});
        }
    }

    void build_forget(int i) {
        const auto& node = dec_.nodes[i];
        const int child = node.children[0];
        const auto& cbag = dec_.nodes[child].bag;
        const int v = node.vertex;
        const auto vpos = std::lower_bound(cbag.begin(), cbag.end(), v) - cbag.begin();
        // Edges from v to the vertices that stay, with their positions in the child bag.
        std::vector<std::pair<int, int>> fresh;
        for (std::size_t j = 0; j < cbag.size(); ++j)
            if (cbag[j] != v && edge_id_[v][cbag[j]] >= 0) fresh.push_back({edge_id_[v][cbag[j]], static_cast<int>(j)});

        for (const auto& entry : tables_[child]) {
            Masks masks = entry.first.first;
            Tuple tuple = entry.first.second;
            std::vector<std::pair<int, int>> chosen;
            auto rec = [&](auto&& self, std::size_t f, Weight value) -> void {
                if (f == fresh.size()) {
                    Masks kept = masks;
                    kept.erase(kept.begin() + vpos);
                    offer(tables_[i], {std::move(kept), tuple}, Cell{value, &entry, nullptr, chosen});
                    return;
                }
                const auto [e, j] = fresh[f];
                for (int c : inst_.allowed[e]) {
                    const std::uint64_t bit = std::uint64_t{1} << c;
                    if ((masks[vpos] | masks[j]) & bit) continue;
                    const auto s = detail::slot(inst_, inst_.part_of[e], c);
                    if (tuple[s] + inst_.weight[e] > cap_[s]) continue;
                    tuple[s] += inst_.weight[e];
                    masks[vpos] |= bit;
                    masks[j] |= bit;
                    chosen.push_back({e, c});
                    self(self, f + 1, value + inst_.profit_of(e, c));
                    chosen.pop_back();
                    masks[j] &= ~bit;
                    masks[vpos] &= ~bit;
                    tuple[s] -= inst_.weight[e];
                }
            };
            rec(rec, 0, entry.second.value);
        }
    }

    void build_join(int i) {
        const auto& left = tables_[dec_.nodes[i].children[0]];
        const auto& right = tables_[dec_.nodes[i].children[1]];
        Tuple omega;
        for (const auto& a : left)
            for (const auto& b : right) {
                const Masks& ma = a.first.first;
                const Masks& mb = b.first.first;
                bool ok = true;
                Masks masks(ma.size());
                for (std::size_t j = 0; j < ma.size() && ok; ++j) {
                    ok = (ma[j] & mb[j]) == 0;
                    masks[j] = ma[j] | mb[j];
                }
                if (ok && detail::add_within(a.first.second, b.first.second, cap_, omega))
                    offer(tables_[i], {std::move(masks), omega}, Cell{a.second.value + b.second.value, &a, &b, {}});
            }
    }

    void trace(int i, const Entry* entry, Coloring& col) {
        for (auto [e, c] : entry->second.chosen) col.color_of[e] = c;
        const auto& node = dec_.nodes[i];
        if (node.kind == NodeKind::join && diag_) {
            const Tuple& omega = entry->first.second;
            const Tuple& q1 = entry->second.first->first.second;
            const Tuple& q2 = entry->second.second->first.second;
            ++diag_->join_checks;
            for (std::size_t s = 0; s < omega.size(); ++s)
                if (q1[s] + q2[s] != omega[s] || q1[s] < 0 || q2[s] < 0 || q1[s] > omega[s] || q2[s] > omega[s]) {
                    ++diag_->join_violations;
                    break;
                }
        }
        if (!node.children.empty()) trace(node.children[0], entry->second.first, col);
        if (node.children.size() > 1) trace(node.children[1], entry->second.second, col);
    }

    const Instance& inst_;
    const NiceDecomposition& dec_;
    bool maximize_;
    DpDiagnostics* diag_;
    Tuple cap_;
    std::vector<std::vector<int>> edge_id_;
    std::vector<Table> tables_;
};

}  // namespace

SolveOutcome dp_vertex(const Instance& inst, const NiceDecomposition& dec, Objective objective, DpDiagnostics* diag) {
    if (inst.mode != Mode::vertex) throw UsageError("treewidth needs a vertex-mode instance");
    return detail::run_objective(inst, objective, [&](const Instance& in, bool maximize) {
        return BagDp(in, dec, maximize, diag).run();
    });
}

SolveOutcome dp_edge(const Instance& inst, const NiceDecomposition& dec, Objective objective, DpDiagnostics* diag) {
    if (inst.mode != Mode::edge) throw UsageError("treewidth-edge needs an edge-mode instance");
    return detail::run_objective(inst, objective, [&](const Instance& in, bool maximize) {
        return EdgeDp(in, dec, maximize, diag).run();
    });
}

}  // namespace lbcolor
