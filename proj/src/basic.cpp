#include "lbcolor/basic.hpp"

#include <queue>

#include "lbcolor/detail/layered_dp.hpp"
#include "lbcolor/detail/objective.hpp"
#include "lbcolor/detail/tuple.hpp"

namespace lbcolor {

using detail::LayeredDp;
using detail::Tuple;

namespace {

void require_edgeless_vertex_mode(const Instance& inst, const char* solver) {
    if (inst.mode != Mode::vertex) throw UsageError(std::string(solver) + " needs a vertex-mode instance");
    if (!inst.edges.empty()) throw UsageError(std::string(solver) + " needs a graph without edges");
}

}  // namespace

CapacitatedBipartiteNetwork isolated_unit_network(const Instance& inst) {
    CapacitatedBipartiteNetwork net;
    net.left_size = inst.n;
    net.right_size = inst.p * inst.k;
    net.supply.assign(inst.n, 1);
    net.demand.reserve(net.right_size);
    for (int h = 0; h < inst.p; ++h)
        for (int c = 0; c < inst.k; ++c) net.demand.push_back(inst.bounds[h][c]);
    for (int v = 0; v < inst.n; ++v)
        for (int c : inst.allowed[v])
            net.arcs.push_back({v, inst.part_of[v] * inst.k + c, 1});
    return net;
}

SolveOutcome solve_isolated_unit(const Instance& inst) {
    require_edgeless_vertex_mode(inst, "isolated-unit");
    for (int v = 0; v < inst.n; ++v)
        if (inst.weight[v] != 1) throw UsageError("isolated-unit needs all weights equal to 1");

    const auto net = isolated_unit_network(inst);
    const auto flow = max_flow_saturate(net);
    if (!flow.saturated) return SolveOutcome::infeasible();

    Coloring col{std::vector<int>(inst.n, -1)};
    for (std::size_t a = 0; a < net.arcs.size(); ++a)
        if (flow.arc_flow[a] > 0) col.color_of[net.arcs[a].left] = net.arcs[a].right % inst.k;
    return detail::finalize(inst, {Status::feasible, col, std::nullopt});
}

SolveOutcome solve_isolated_k_fixed(const Instance& inst, Objective objective) {
    require_edgeless_vertex_mode(inst, "isolated-kfixed");
    return detail::run_objective(inst, objective, [](const Instance& in, bool maximize) {
        Coloring col{std::vector<int>(in.n, -1)};
        for (int h = 0; h < in.p; ++h) {
            std::vector<int> members;
            for (int v = 0; v < in.n; ++v)
                if (in.part_of[v] == h) members.push_back(v);

            LayeredDp::Options options;
            for (int v : members) {
                auto& opts = options.emplace_back();
                for (int c : in.allowed[v]) {
                    Tuple delta(in.k, 0);
                    delta[c] = in.weight[v];
                    opts.emplace_back(std::move(delta), in.profit_of(v, c));
                }
            }
            LayeredDp dp;
            const Tuple& target = in.bounds[h];
            if (!dp.run(options, target, maximize)) return SolveOutcome::infeasible();
            const auto choice = dp.trace(target);
            for (std::size_t i = 0; i < members.size(); ++i)
                col.color_of[members[i]] = in.allowed[members[i]][choice[i]];
        }
        return SolveOutcome{Status::feasible, col, std::nullopt};
    });
}

SolveOutcome solve_components_k2(const Instance& inst, Objective objective) {
    if (inst.mode != Mode::vertex) throw UsageError("components-k2 needs a vertex-mode instance");
    if (inst.k != 2) throw UsageError("components-k2 needs exactly two colors");

    return detail::run_objective(inst, objective, [](const Instance& in, bool maximize) {
        const auto adj = adjacency(in);
        std::vector<int> side(in.n, -1);
        std::vector<std::vector<int>> components;
        for (int s = 0; s < in.n; ++s) {
            if (side[s] != -1) continue;
            auto& comp = components.emplace_back();
            std::queue<int> queue;
            queue.push(s);
            side[s] = 0;
            while (!queue.empty()) {
                int u = queue.front();
                queue.pop();
                comp.push_back(u);
                for (int v : adj[u]) {
                    if (side[v] == -1) {
                        side[v] = 1 - side[u];
                        queue.push(v);
                    } else if (side[v] == side[u]) {
                        return SolveOutcome::infeasible();  // odd cycle
                    }
                }
            }
        }

        // Option f of a component colors vertex u with side[u] ^ f.
        LayeredDp::Options options;
        std::vector<std::vector<int>> flips;
        for (const auto& comp : components) {
            auto& opts = options.emplace_back();
            auto& fl = flips.emplace_back();
            for (int flip = 0; flip < 2; ++flip) {
                Tuple delta(in.p, 0);
                Weight value = 0;
                bool ok = true;
                for (int u : comp) {
                    const int c = side[u] ^ flip;
                    if (!in.allows(u, c)) {
                        ok = false;
                        break;
                    }
                    if (c == 0) delta[in.part_of[u]] += in.weight[u];
                    value += in.profit_of(u, c);
                }
                if (!ok) continue;
                opts.emplace_back(std::move(delta), value);
                fl.push_back(flip);
            }
            if (opts.empty()) return SolveOutcome::infeasible();
        }

        Tuple target(in.p);
        for (int h = 0; h < in.p; ++h) target[h] = in.bounds[h][0];
        LayeredDp dp;
        if (!dp.run(options, target, maximize)) return SolveOutcome::infeasible();
        const auto choice = dp.trace(target);
        Coloring col{std::vector<int>(in.n, -1)};
        for (std::size_t i = 0; i < components.size(); ++i)
            for (int u : components[i]) col.color_of[u] = side[u] ^ flips[i][choice[i]];
        return SolveOutcome{Status::feasible, col, std::nullopt};
    });
}

}  // namespace lbcolor
