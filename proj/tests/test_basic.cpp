#include "doctest.h"
#include "lbcolor/basic.hpp"
#include "lbcolor/oracle.hpp"
#include "support.hpp"

using namespace lbcolor;

TEST_CASE("isolated unit weights: flow network layout") {
    auto inst = support::vertex_instance(3, {}, {2, 1});
    inst.p = 2;
    inst.part_of = {0, 1, 1};
    inst.bounds = {{1, 0}, {1, 1}};
    inst.allowed = {{0, 1}, {1}, {0, 1}};
    const auto net = isolated_unit_network(inst);
    CHECK(net.left_size == 3);
    CHECK(net.right_size == 4);
    CHECK(net.demand == std::vector<Capacity>{1, 0, 1, 1});
    // Vertex 1 lives in part 1 and only allows color 1: slot 1 * 2 + 1.
    int arcs_of_1 = 0;
    for (const auto& a : net.arcs)
        if (a.left == 1) {
            ++arcs_of_1;
            CHECK(a.right == 3);
        }
    CHECK(arcs_of_1 == 1);
    const auto out = solve_isolated_unit(inst);
    REQUIRE(out.feasible());
    CHECK(out.witness->color_of == std::vector<int>{0, 1, 0});
}

TEST_CASE("isolated unit weights agree with the oracle") {
    support::Rng rng(31);
    support::Shape shape;
    shape.unit_weights = true;
    shape.k_max = 4;
    shape.p_max = 3;
    for (int t = 0; t < 300; ++t) {
        auto inst = support::random_instance(rng, support::edgeless(support::uniform(rng, 0, 7)), Mode::vertex, shape);
        const auto ref = support::reference_solve(inst);
        CHECK(support::mismatch(inst, solve_isolated_unit(inst), Objective::decide, ref) == "");
    }
}

TEST_CASE("isolated vertices with weights agree with the oracle") {
    support::Rng rng(32);
    support::Shape shape;
    shape.profits = true;
    for (int t = 0; t < 300; ++t) {
        auto inst = support::random_instance(rng, support::edgeless(support::uniform(rng, 0, 6)), Mode::vertex, shape);
        const auto ref = support::reference_solve(inst);
        for (auto obj : {Objective::decide, Objective::maximize, Objective::minimize})
            CHECK(support::mismatch(inst, solve_isolated_k_fixed(inst, obj), obj, ref) == "");
    }
}

TEST_CASE("two colors on components agree with the oracle") {
    support::Rng rng(33);
    support::Shape shape;
    shape.k_min = shape.k_max = 2;
    shape.profits = true;
    for (int t = 0; t < 300; ++t) {
        const auto g = t % 2 ? support::random_bipartite(rng, support::uniform(rng, 1, 8), 0.4)
                             : support::random_graph(rng, support::uniform(rng, 1, 7), 0.3);
        auto inst = support::random_instance(rng, g, Mode::vertex, shape);
        const auto ref = support::reference_solve(inst);
        for (auto obj : {Objective::decide, Objective::maximize, Objective::minimize})
            CHECK(support::mismatch(inst, solve_components_k2(inst, obj), obj, ref) == "");
    }
}

TEST_CASE("basic solvers reject instances outside their class") {
    auto path = support::vertex_instance(3, {{0, 1}, {1, 2}}, {2, 1});
    CHECK_THROWS_AS(solve_isolated_unit(path), UsageError);
    CHECK_THROWS_AS(solve_isolated_k_fixed(path), UsageError);
    auto heavy = support::vertex_instance(1, {}, {2}, {2});
    CHECK_THROWS_AS(solve_isolated_unit(heavy), UsageError);
    CHECK_THROWS_AS(solve_components_k2(support::vertex_instance(1, {}, {1, 0, 0})), UsageError);
    CHECK_THROWS_AS(solve_components_k2(support::edge_instance(2, {{0, 1}}, {1, 0})), UsageError);
}
