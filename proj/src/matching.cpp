#include "lbcolor/matching.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <queue>
#include <stdexcept>

namespace lbcolor {

void CapacitatedBipartiteNetwork::check() const {
    if (left_size < 0 || right_size < 0) throw std::invalid_argument("negative side size");
    if (supply.size() != static_cast<std::size_t>(left_size) ||
        demand.size() != static_cast<std::size_t>(right_size))
        throw std::invalid_argument("supply/demand sizes do not match the sides");
    for (auto s : supply)
        if (s < 0) throw std::invalid_argument("negative supply");
    for (auto d : demand)
        if (d < 0) throw std::invalid_argument("negative demand");
    for (const auto& a : arcs) {
        if (a.left < 0 || a.left >= left_size || a.right < 0 || a.right >= right_size)
            throw std::invalid_argument("arc references a missing node");
        if (a.capacity < 0) throw std::invalid_argument("negative capacity");
    }
}

namespace {

struct ResidualGraph {
    struct Edge {
        int to;
        Capacity cap;
    };
    std::vector<Edge> edges;
    std::vector<std::vector<int>> out;

    explicit ResidualGraph(int nodes) : out(nodes) {}

    int add(int from, int to, Capacity cap) {
        out[from].push_back(static_cast<int>(edges.size()));
        edges.push_back({to, cap});
        out[to].push_back(static_cast<int>(edges.size()));
        edges.push_back({from, 0});
        return static_cast<int>(edges.size()) - 2;
    }

    Capacity max_flow(int source, int sink) {
        Capacity total = 0;
        const int nodes = static_cast<int>(out.size());
        while (true) {
            std::vector<int> via(nodes, -1);
            std::queue<int> queue;
            queue.push(source);
            via[source] = -2;
            while (!queue.empty() && via[sink] == -1) {
                int u = queue.front();
                queue.pop();
                for (int id : out[u]) {
                    const auto& e = edges[id];
                    if (e.cap > 0 && via[e.to] == -1) {
                        via[e.to] = id;
                        queue.push(e.to);
                    }
                }
            }
            if (via[sink] == -1) return total;
            Capacity push = std::numeric_limits<Capacity>::max();
            for (int v = sink; v != source; v = edges[via[v] ^ 1].to)
                push = std::min(push, edges[via[v]].cap);
            for (int v = sink; v != source; v = edges[via[v] ^ 1].to) {
                edges[via[v]].cap -= push;
                edges[via[v] ^ 1].cap += push;
            }
            total += push;
        }
    }
};

}  // namespace

FlowResult max_flow_saturate(const CapacitatedBipartiteNetwork& net) {
    net.check();
    const int source = 0;
    const int sink = net.left_size + net.right_size + 1;
    ResidualGraph g(sink + 1);
    for (int l = 0; l < net.left_size; ++l) g.add(source, 1 + l, net.supply[l]);
    for (int r = 0; r < net.right_size; ++r) g.add(1 + net.left_size + r, sink, net.demand[r]);
    std::vector<int> arc_ids;
    arc_ids.reserve(net.arcs.size());
    for (const auto& a : net.arcs) arc_ids.push_back(g.add(1 + a.left, 1 + net.left_size + a.right, a.capacity));

    FlowResult result;
    result.value = g.max_flow(source, sink);
    result.arc_flow.reserve(arc_ids.size());
    for (std::size_t i = 0; i < arc_ids.size(); ++i)
        result.arc_flow.push_back(net.arcs[i].capacity - g.edges[arc_ids[i]].cap);
    Capacity total_supply = 0;
    for (auto s : net.supply) total_supply += s;
    result.saturated = result.value == total_supply;
    return result;
}

std::optional<Assignment> assignment_exhaustive(const AssignmentProblem& ap) {
    if (ap.rows > ap.cols) return std::nullopt;
    std::optional<Assignment> best;
    std::vector<int> current(ap.rows, -1);
    std::vector<char> used(ap.cols, 0);

    auto dfs = [&](auto&& self, int row, std::int64_t total) -> void {
        if (row == ap.rows) {
            if (!best || total > best->total) best = Assignment{current, total};
            return;
        }
        for (int c = 0; c < ap.cols; ++c) {
            if (used[c] || ap.forbidden[row][c]) continue;
            used[c] = 1;
            current[row] = c;
            self(self, row + 1, total + ap.weight[row][c]);
            used[c] = 0;
        }
    };
    dfs(dfs, 0, 0);
    return best;
}

std::optional<Assignment> assignment_hungarian(const AssignmentProblem& ap) {
    const int n = ap.rows;
    const int m = ap.cols;
    if (n > m) return std::nullopt;
    if (n == 0) return Assignment{};

    std::int64_t max_abs = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            if (!ap.forbidden[i][j]) max_abs = std::max(max_abs, std::abs(ap.weight[i][j]));
    // Any assignment through a forbidden pair costs more than every clean one.
    const std::int64_t big = (2 * static_cast<std::int64_t>(n) + 1) * (max_abs + 1);
    auto cost = [&](int i, int j) { return ap.forbidden[i][j] ? big : -ap.weight[i][j]; };

    constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
    // 1-based potentials over rows (u) and columns (v); way[] holds the
    // alternating tree, match[j] the row assigned to column j.
    std::vector<std::int64_t> u(n + 1, 0), v(m + 1, 0);
    std::vector<int> match(m + 1, 0), way(m + 1, 0);
    for (int i = 1; i <= n; ++i) {
        match[0] = i;
        int j0 = 0;
        std::vector<std::int64_t> minv(m + 1, inf);
        std::vector<char> visited(m + 1, 0);
        do {
            visited[j0] = 1;
            const int i0 = match[j0];
            std::int64_t delta = inf;
            int j1 = 0;
            for (int j = 1; j <= m; ++j) {
                if (visited[j]) continue;
                const std::int64_t cur = cost(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= m; ++j) {
                if (visited[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            const int j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    Assignment result;
    result.column_of.assign(n, -1);
    for (int j = 1; j <= m; ++j)
        if (match[j] != 0) result.column_of[match[j] - 1] = j - 1;
    for (int i = 0; i < n; ++i) {
        const int j = result.column_of[i];
        if (ap.forbidden[i][j]) return std::nullopt;
        result.total += ap.weight[i][j];
    }
    return result;
}

std::optional<Assignment> max_weight_perfect_assignment(const AssignmentProblem& ap) {
    if (ap.rows <= 8 && ap.cols <= 8) return assignment_exhaustive(ap);
    return assignment_hungarian(ap);
}

}  // namespace lbcolor
