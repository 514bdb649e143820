#include "doctest.h"
#include "lbcolor/cographs.hpp"
#include "support.hpp"

using namespace lbcolor;

namespace {

std::vector<std::vector<char>> matrix(const support::Graph& g) {
    std::vector<std::vector<char>> adj(g.n, std::vector<char>(g.n, 0));
    for (auto [u, v] : g.edges) adj[u][v] = adj[v][u] = 1;
    return adj;
}

// Induced P4 search over all ordered quadruples.
bool has_induced_p4(const support::Graph& g) {
    const auto adj = matrix(g);
    const int n = g.n;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
                    if (adj[a][b] && adj[b][c] && adj[c][d] && !adj[a][c] && !adj[b][d] && !adj[a][d]) return true;
                }
    return false;
}

Instance with_graph(support::Rng& rng, const support::Graph& g, Mode mode, bool profits) {
    support::Shape shape;
    shape.profits = profits;
    return support::random_instance(rng, g, mode, shape);
}

}  // namespace

TEST_CASE("P3 cotree") {
    const auto r = build_cotree(3, {{0, 1}, {1, 2}});
    REQUIRE(r.is_cograph());
    const auto& ct = *r.cotree;
    const auto& root = ct.nodes[ct.root];
    CHECK(root.kind == CotreeKind::join);
    const auto& l = ct.nodes[root.left];
    const auto& rr = ct.nodes[root.right];
    const auto& leaf = l.kind == CotreeKind::leaf ? l : rr;
    const auto& uni = l.kind == CotreeKind::leaf ? rr : l;
    CHECK(leaf.vertex == 1);
    CHECK(uni.kind == CotreeKind::disjoint_union);
}

TEST_CASE("P4 yields an induced path witness") {
    const auto r = build_cotree(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK_FALSE(r.is_cograph());
    REQUIRE(r.p4);
}

TEST_CASE("cotrees reconstruct their graph") {
    support::Rng rng(51);
    for (int t = 0; t < 200; ++t) {
        const auto g = support::random_cograph(rng, support::uniform(rng, 1, 12));
        const auto r = build_cotree(g.n, g.edges);
        REQUIRE(r.is_cograph());
        CHECK(reconstruct_graph(*r.cotree, g.n) == matrix(g));
        std::vector<int> seen(g.n, 0);
        for (const auto& node : r.cotree->nodes)
            if (node.kind == CotreeKind::leaf) ++seen[node.vertex];
        CHECK(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));
    }
}

TEST_CASE("recognition agrees with the P4 search") {
    support::Rng rng(52);
    for (int t = 0; t < 400; ++t) {
        const auto g = support::random_graph(rng, support::uniform(rng, 1, 7), support::uniform(rng, 1, 9) / 10.0);
        const auto r = build_cotree(g.n, g.edges);
        REQUIRE(r.is_cograph() == !has_induced_p4(g));
        if (r.is_cograph()) {
            CHECK(reconstruct_graph(*r.cotree, g.n) == matrix(g));
        } else {
            REQUIRE(r.p4);
            const auto adj = matrix(g);
            const auto [a, b, c, d] = *r.p4;
            CHECK((adj[a][b] && adj[b][c] && adj[c][d]));
            CHECK_FALSE((adj[a][c] || adj[b][d] || adj[a][d]));
        }
    }
}

TEST_CASE("cotree DP agrees with the oracle") {
    support::Rng rng(53);
    for (int t = 0; t < 300; ++t) {
        const auto g = support::random_cograph(rng, support::uniform(rng, 1, 7));
        const auto inst = with_graph(rng, g, Mode::vertex, true);
        const auto ct = *build_cotree(inst).cotree;
        const auto ref = support::reference_solve(inst);
        for (auto obj : {Objective::decide, Objective::maximize, Objective::minimize}) {
            CographDiagnostics diag;
            CHECK(support::mismatch(inst, dp_cograph(inst, ct, obj, &diag), obj, ref) == "");
            CHECK(diag.join_violations == 0);
        }
    }
}

TEST_CASE("complete graphs agree with the oracle") {
    support::Rng rng(54);
    for (int t = 0; t < 200; ++t) {
        const auto inst = with_graph(rng, support::complete(support::uniform(rng, 1, 5)), Mode::vertex, true);
        const auto ref = support::reference_solve(inst);
        for (auto obj : {Objective::decide, Objective::maximize, Objective::minimize})
            CHECK(support::mismatch(inst, solve_complete_graph(inst, obj), obj, ref) == "");
    }
}

TEST_CASE("complete bipartite graphs agree with the oracle") {
    support::Rng rng(55);
    for (int t = 0; t < 200; ++t) {
        const auto g = support::complete_bipartite(rng, support::uniform(rng, 1, 3), support::uniform(rng, 1, 3));
        const auto inst = with_graph(rng, g, Mode::vertex, true);
        const auto ref = support::reference_solve(inst);
        for (auto obj : {Objective::decide, Objective::maximize, Objective::minimize})
            CHECK(support::mismatch(inst, solve_complete_bipartite(inst, obj), obj, ref) == "");
    }
}

TEST_CASE("complete bipartite sides") {
    const auto s = complete_bipartite_sides(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    REQUIRE(s);
    CHECK(s->first == std::vector<int>{0, 1});
    CHECK(s->second == std::vector<int>{2, 3});
    CHECK_FALSE(complete_bipartite_sides(3, {}).has_value());
    CHECK_FALSE(complete_bipartite_sides(3, {{0, 1}, {1, 2}, {0, 2}}).has_value());
}

TEST_CASE("edge mode on cographs agrees with the oracle") {
    support::Rng rng(56);
    int checked = 0;
    for (int t = 0; t < 400 && checked < 200; ++t) {
        const auto g = support::random_cograph(rng, support::uniform(rng, 2, 6));
        if (g.edges.empty() || g.edges.size() > 8) continue;
        ++checked;
        const auto inst = with_graph(rng, g, Mode::edge, true);
        const auto ref = support::reference_solve(inst);
        for (auto obj : {Objective::decide, Objective::maximize, Objective::minimize})
            CHECK(support::mismatch(inst, solve_cograph_edges(inst, obj), obj, ref) == "");
    }
    CHECK(checked > 100);
}

TEST_CASE("cograph solvers check their preconditions") {
    const auto p4 = support::vertex_instance(4, {{0, 1}, {1, 2}, {2, 3}}, {2, 2});
    const auto p4e = support::edge_instance(4, {{0, 1}, {1, 2}, {2, 3}}, {2, 1});
    CHECK_THROWS_AS(solve_complete_graph(p4), UsageError);
    CHECK_THROWS_AS(solve_complete_bipartite(p4), UsageError);
    CHECK_THROWS_WITH_AS(solve_cograph_edges(p4e), doctest::Contains("not a cograph"), UsageError);
    CHECK_THROWS_AS(solve_cograph_edges(p4), UsageError);
}
