#include "lbcolor/solve.hpp"

#include "lbcolor/basic.hpp"
#include "lbcolor/classify.hpp"
#include "lbcolor/cographs.hpp"
#include "lbcolor/oracle.hpp"
#include "lbcolor/split.hpp"
#include "lbcolor/treewidth.hpp"

namespace lbcolor {

namespace {

constexpr int kAutoWidthLimit = 8;
constexpr int kAutoBipartiteColors = 12;

void decide_only(Objective objective, const std::string& name) {
    if (objective != Objective::decide) throw UsageError(name + " supports only --objective decide");
}

bool unit_full(const Instance& inst, int v) {
    return inst.weight[v] == 1 && static_cast<int>(inst.allowed[v].size()) == inst.k;
}

bool singular_applies(const Instance& inst, const SplitPartition& sp, bool clique_general) {
    for (int v : sp.independent)
        if (!unit_full(inst, v)) return false;
    if (!clique_general)
        for (int u : sp.clique)
            if (!unit_full(inst, u)) return false;
    const auto spec = infer_singular(inst);
    double guesses = 1;
    for (std::size_t i = 0; i < spec.singular.size(); ++i) guesses *= static_cast<double>(sp.clique.size()) + 1;
    return guesses <= 1e6;
}

}  // namespace

const std::vector<std::string>& solver_names() {
    static const std::vector<std::string> names{
        "oracle",   "components-k2",      "isolated-unit", "isolated-kfixed", "treewidth",
        "cograph",  "complete",           "complete-bipartite", "split-kfixed", "split-singular",
        "treewidth-edge", "cograph-edge", "split-edge"};
    return names;
}

std::string auto_solver(const Instance& inst, Objective objective, bool clique_general) {
    const ClassReport r = classify_instance(inst);
    const bool small_width = r.treewidth <= kAutoWidthLimit || !oracle_in_range(inst);
    if (inst.mode == Mode::edge) {
        if (r.split) return "split-edge";
        if (r.cograph) return "cograph-edge";
        return small_width && inst.k <= 64 ? "treewidth-edge" : "oracle";
    }
    if (r.complete && inst.n > 0) return "complete";
    if (r.complete_bipartite && inst.k <= kAutoBipartiteColors) return "complete-bipartite";
    if (r.edgeless) {
        bool unit = true;
        for (Weight w : inst.weight) unit = unit && w == 1;
        return unit && objective == Objective::decide ? "isolated-unit" : "isolated-kfixed";
    }
    if (r.split) {
        const auto sp = split_partition(inst);
        if (objective == Objective::decide && singular_applies(inst, *sp, clique_general)) return "split-singular";
        return "split-kfixed";
    }
    if (r.cograph) return "cograph";
    return small_width ? "treewidth" : "oracle";
}

SolveOutcome run_solver(const Instance& inst, const std::string& name, Objective objective, bool clique_general) {
    if (name == "oracle") return brute_force_solve(inst, objective);
    if (name == "components-k2") return solve_components_k2(inst, objective);
    if (name == "isolated-unit") {
        decide_only(objective, name);
        return solve_isolated_unit(inst);
    }
    if (name == "isolated-kfixed") return solve_isolated_k_fixed(inst, objective);
    if (name == "treewidth") return dp_vertex(inst, build_nice_decomposition(inst), objective);
    if (name == "treewidth-edge") return dp_edge(inst, build_nice_decomposition(inst), objective);
    if (name == "cograph") {
        if (inst.mode != Mode::vertex) throw UsageError("cograph needs a vertex-mode instance");
        const auto ct = build_cotree(inst);
        if (inst.n > 0 && !ct.is_cograph()) throw UsageError("cograph needs a cograph: not a cograph");
        return dp_cograph(inst, inst.n > 0 ? *ct.cotree : Cotree{}, objective);
    }
    if (name == "complete") return solve_complete_graph(inst, objective);
    if (name == "complete-bipartite") return solve_complete_bipartite(inst, objective);
    if (name == "split-kfixed") return solve_split_k_fixed(inst, objective);
    if (name == "split-singular") {
        decide_only(objective, name);
        return solve_split_singular(inst, clique_general);
    }
    if (name == "cograph-edge") return solve_cograph_edges(inst, objective);
    if (name == "split-edge") return solve_split_edges(inst, objective);
    throw UsageError("unknown solver '" + name + "'");
}

}  // namespace lbcolor
