#include <algorithm>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>

#include "lbcolor/treewidth.hpp"

namespace lbcolor {

namespace {

using AdjSets = std::vector<std::set<int>>;

AdjSets adjacency_sets(int n, const std::vector<Edge>& edges) {
    AdjSets adj(n);
    for (auto [u, v] : edges) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    return adj;
}

// Neighbours of `v` in the graph filled by eliminating `order` up to v.
std::vector<std::vector<int>> later_neighbours(int n, const std::vector<Edge>& edges,
                                               const std::vector<int>& order) {
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    AdjSets adj = adjacency_sets(n, edges);
    std::vector<std::vector<int>> later(n);
    for (int v : order) {
        for (int u : adj[v])
            if (pos[u] > pos[v]) later[v].push_back(u);
        for (std::size_t a = 0; a < later[v].size(); ++a)
            for (std::size_t b = a + 1; b < later[v].size(); ++b) {
                adj[later[v][a]].insert(later[v][b]);
                adj[later[v][b]].insert(later[v][a]);
            }
    }
    return later;
}

std::vector<std::vector<int>> tree_adjacency(std::size_t nodes, const std::vector<std::pair<int, int>>& tree_edges) {
    std::vector<std::vector<int>> adj(nodes);
    for (auto [a, b] : tree_edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    return adj;
}

}  // namespace

int NiceDecomposition::width() const {
    int w = -1;
    for (const auto& node : nodes) w = std::max(w, static_cast<int>(node.bag.size()) - 1);
    return std::max(w, 0);
}

std::vector<int> NiceDecomposition::post_order() const {
    std::vector<int> order;
    order.reserve(nodes.size());
    std::vector<std::pair<int, bool>> stack{{root, false}};
    while (!stack.empty()) {
        auto [v, expanded] = stack.back();
        stack.pop_back();
        if (expanded) {
            order.push_back(v);
            continue;
        }
        stack.push_back({v, true});
        for (auto it = nodes[v].children.rbegin(); it != nodes[v].children.rend(); ++it)
            stack.push_back({*it, false});
    }
    return order;
}

int TreeDecomposition::width() const {
    int w = 0;
    for (const auto& bag : bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
    return w;
}

void check_tree_decomposition(int n, const std::vector<Edge>& edges, const TreeDecomposition& td) {
    const auto nodes = td.bags.size();
    auto fail = [](const std::string& what) { throw InstanceError("decomposition", what); };
    if (nodes == 0) fail("not a tree: no bags");
    if (td.root < 0 || static_cast<std::size_t>(td.root) >= nodes) fail("root out of range");
    if (td.tree_edges.size() + 1 != nodes) fail("not a tree: expected " + std::to_string(nodes - 1) + " tree edges");
    for (auto [a, b] : td.tree_edges)
        if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= nodes || static_cast<std::size_t>(b) >= nodes || a == b)
            fail("not a tree: bad tree edge");
    const auto tadj = tree_adjacency(nodes, td.tree_edges);
    std::vector<char> seen(nodes, 0);
    std::vector<int> stack{td.root};
    seen[td.root] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        for (int s : tadj[t])
            if (!seen[s]) {
                seen[s] = 1;
                ++reached;
                stack.push_back(s);
            }
    }
    if (reached != nodes) fail("not a tree: disconnected");

    std::vector<std::vector<char>> in_bag(nodes, std::vector<char>(n, 0));
    for (std::size_t t = 0; t < nodes; ++t)
        for (int v : td.bags[t]) {
            if (v < 0 || v >= n) fail("bag " + std::to_string(t) + " names a missing vertex");
            in_bag[t][v] = 1;
        }
    for (int v = 0; v < n; ++v) {
        std::vector<int> holders;
        for (std::size_t t = 0; t < nodes; ++t)
            if (in_bag[t][v]) holders.push_back(static_cast<int>(t));
        if (holders.empty()) fail("vertex coverage: vertex " + std::to_string(v) + " is in no bag");
        // The holders must induce a connected subtree.
        std::vector<char> mark(nodes, 0);
        std::vector<int> st{holders[0]};
        mark[holders[0]] = 1;
        std::size_t count = 1;
        while (!st.empty()) {
            int t = st.back();
            st.pop_back();
            for (int s : tadj[t])
                if (!mark[s] && in_bag[s][v]) {
                    mark[s] = 1;
                    ++count;
                    st.push_back(s);
                }
        }
        if (count != holders.size())
            fail("running intersection: bags holding vertex " + std::to_string(v) + " are not connected");
    }
    for (auto [u, v] : edges) {
        bool covered = false;
        for (std::size_t t = 0; t < nodes && !covered; ++t) covered = in_bag[t][u] && in_bag[t][v];
        if (!covered)
            fail("edge coverage: edge (" + std::to_string(u) + "," + std::to_string(v) + ") is in no bag");
    }
}

void check_nice_decomposition(int n, const std::vector<Edge>& edges, const NiceDecomposition& nd) {
    auto fail = [](const std::string& what) { throw std::logic_error("nice decomposition: " + what); };
    if (nd.root < 0 || static_cast<std::size_t>(nd.root) >= nd.nodes.size()) fail("bad root");
    TreeDecomposition td;
    td.root = nd.root;
    for (std::size_t i = 0; i < nd.nodes.size(); ++i) {
        const auto& node = nd.nodes[i];
        if (!std::is_sorted(node.bag.begin(), node.bag.end())) fail("unsorted bag");
        td.bags.push_back(node.bag);
        for (int c : node.children) td.tree_edges.push_back({static_cast<int>(i), c});
        auto diff = [](const std::vector<int>& a, const std::vector<int>& b) {
            std::vector<int> out;
            std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
            return out;
        };
        switch (node.kind) {
            case NodeKind::leaf:
                if (!node.children.empty()) fail("leaf with children");
                break;
            case NodeKind::join:
                if (node.children.size() != 2) fail("join without two children");
                for (int c : node.children)
                    if (nd.nodes[c].bag != node.bag) fail("join child bag differs");
                break;
            case NodeKind::introduce: {
                if (node.children.size() != 1) fail("introduce without one child");
                const auto& child = nd.nodes[node.children[0]].bag;
                if (diff(node.bag, child) != std::vector<int>{node.vertex} || !diff(child, node.bag).empty())
                    fail("introduce bag mismatch");
                break;
            }
            case NodeKind::forget: {
                if (node.children.size() != 1) fail("forget without one child");
                const auto& child = nd.nodes[node.children[0]].bag;
                if (diff(child, node.bag) != std::vector<int>{node.vertex} || !diff(node.bag, child).empty())
                    fail("forget bag mismatch");
                break;
            }
        }
    }
    if (nd.post_order().size() != nd.nodes.size()) fail("nodes unreachable from the root");
    // Vertex-free graphs have nothing more to check.
    if (n > 0) check_tree_decomposition(n, edges, td);
}

std::vector<int> min_fill_order(int n, const std::vector<Edge>& edges) {
    AdjSets adj = adjacency_sets(n, edges);
    std::vector<char> gone(n, 0);
    std::vector<int> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        long best_fill = std::numeric_limits<long>::max();
        std::size_t best_degree = 0;
        for (int v = 0; v < n; ++v) {
            if (gone[v]) continue;
            long fill = 0;
            for (auto a = adj[v].begin(); a != adj[v].end(); ++a)
                for (auto b = std::next(a); b != adj[v].end(); ++b)
                    if (!adj[*a].count(*b)) ++fill;
            if (fill < best_fill || (fill == best_fill && adj[v].size() < best_degree)) {
                best = v;
                best_fill = fill;
                best_degree = adj[v].size();
            }
        }
        gone[best] = 1;
        order.push_back(best);
        std::vector<int> nb(adj[best].begin(), adj[best].end());
        for (int u : nb) adj[u].erase(best);
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                adj[nb[a]].insert(nb[b]);
                adj[nb[b]].insert(nb[a]);
            }
        adj[best].clear();
    }
    return order;
}

std::vector<int> exact_elimination_order(int n, const std::vector<Edge>& edges) {
    if (n > 20) throw std::invalid_argument("exact elimination order is limited to 20 vertices");
    if (n == 0) return {};
    std::vector<std::uint32_t> nbr(n, 0);
    for (auto [u, v] : edges) {
        nbr[u] |= 1u << v;
        nbr[v] |= 1u << u;
    }
    // |Q(S, v)|: vertices outside S + v reachable from v through S.
    auto q_size = [&](std::uint32_t s, int v) {
        std::uint32_t visited = 1u << v;
        std::uint32_t frontier = 1u << v;
        std::uint32_t outside = 0;
        while (frontier) {
            std::uint32_t next = 0;
            for (std::uint32_t f = frontier; f; f &= f - 1) {
                const std::uint32_t reach = nbr[__builtin_ctz(f)] & ~visited;
                outside |= reach & ~s;
                next |= reach & s;
                visited |= reach;
            }
            frontier = next;
        }
        return __builtin_popcount(outside);
    };
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    std::vector<int> best(std::size_t(full) + 1, std::numeric_limits<int>::max());
    std::vector<std::int8_t> last(std::size_t(full) + 1, -1);
    best[0] = 0;
    for (std::uint32_t s = 1; s <= full; ++s) {
        for (std::uint32_t rest = s; rest; rest &= rest - 1) {
            const int v = __builtin_ctz(rest);
            const std::uint32_t prev = s & ~(1u << v);
            const int w = std::max(best[prev], q_size(prev, v));
            if (w < best[s]) {
                best[s] = w;
                last[s] = static_cast<std::int8_t>(v);
            }
        }
    }
    std::vector<int> order(n);
    std::uint32_t s = full;
    for (int i = n - 1; i >= 0; --i) {
        order[i] = last[s];
        s &= ~(1u << last[s]);
    }
    return order;
}

int elimination_width(int n, const std::vector<Edge>& edges, const std::vector<int>& order) {
    int w = 0;
    for (const auto& later : later_neighbours(n, edges, order)) w = std::max(w, static_cast<int>(later.size()));
    return w;
}

TreeDecomposition decomposition_from_order(int n, const std::vector<Edge>& edges, const std::vector<int>& order) {
    TreeDecomposition td;
    if (n == 0) {
        td.bags.push_back({});
        return td;
    }
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    const auto later = later_neighbours(n, edges, order);
    // Bag i belongs to the i-th eliminated vertex.
    int anchor = -1;
    for (int i = 0; i < n; ++i) {
        const int v = order[i];
        std::vector<int> bag = later[v];
        bag.push_back(v);
        std::sort(bag.begin(), bag.end());
        td.bags.push_back(std::move(bag));
        if (later[v].empty()) {
            // Component root: chain component roots together.
            if (anchor >= 0) td.tree_edges.push_back({anchor, i});
            anchor = i;
        } else {
            int parent = n;
            for (int u : later[v]) parent = std::min(parent, pos[u]);
            td.tree_edges.push_back({i, parent});
        }
    }
    td.root = anchor;
    return td;
}

NiceDecomposition normalize_decomposition(const TreeDecomposition& td) {
    NiceDecomposition nd;
    const auto tadj = tree_adjacency(td.bags.size(), td.tree_edges);

    auto add = [&nd](NodeKind kind, std::vector<int> bag, int vertex, std::vector<int> children) {
        nd.nodes.push_back({kind, std::move(bag), vertex, std::move(children)});
        return static_cast<int>(nd.nodes.size()) - 1;
    };
    // Walks node `id` (bag `from`) to bag `to`: forget first, then introduce.
    auto transition = [&](int id, const std::vector<int>& from, const std::vector<int>& to) {
        std::vector<int> bag = from;
        for (int v : from)
            if (!std::binary_search(to.begin(), to.end(), v)) {
                bag.erase(std::find(bag.begin(), bag.end(), v));
                id = add(NodeKind::forget, bag, v, {id});
            }
        for (int v : to)
            if (!std::binary_search(from.begin(), from.end(), v)) {
                bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
                id = add(NodeKind::introduce, bag, v, {id});
            }
        return id;
    };

    std::vector<std::vector<int>> sorted_bags = td.bags;
    for (auto& b : sorted_bags) {
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
    }

    // Iterative post-order over the rooted input tree.
    std::vector<int> parent(td.bags.size(), -1), order;
    std::vector<int> stack{td.root};
    parent[td.root] = td.root;
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        order.push_back(t);
        for (int s : tadj[t])
            if (parent[s] == -1) {
                parent[s] = t;
                stack.push_back(s);
            }
    }
    std::vector<int> built(td.bags.size(), -1);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int t = *it;
        const auto& bag = sorted_bags[t];
        std::vector<int> subs;
        for (int s : tadj[t])
            if (parent[s] == t) subs.push_back(transition(built[s], sorted_bags[s], bag));
        int id;
        if (subs.empty()) {
            id = transition(add(NodeKind::leaf, {}, -1, {}), {}, bag);
        } else {
            id = subs[0];
            for (std::size_t i = 1; i < subs.size(); ++i) id = add(NodeKind::join, bag, -1, {id, subs[i]});
        }
        built[t] = id;
    }
    nd.root = transition(built[td.root], sorted_bags[td.root], {});
    return nd;
}

namespace {

std::vector<int> default_order(int n, const std::vector<Edge>& edges) {
    return n <= 10 ? exact_elimination_order(n, edges) : min_fill_order(n, edges);
}

}  // namespace

NiceDecomposition build_nice_decomposition(const Instance& inst, const std::optional<DecompositionSpec>& supplied) {
    const auto& spec = supplied ? supplied : inst.decomposition;
    TreeDecomposition td;
    if (spec) {
        td.bags = spec->bags;
        td.tree_edges = spec->tree_edges;
        td.root = spec->root;
        check_tree_decomposition(inst.n, inst.edges, td);
    } else {
        td = decomposition_from_order(inst.n, inst.edges, default_order(inst.n, inst.edges));
    }
    return normalize_decomposition(td);
}

int treewidth_estimate(int n, const std::vector<Edge>& edges) {
    if (n == 0) return 0;
    return elimination_width(n, edges, default_order(n, edges));
}

}  // namespace lbcolor
