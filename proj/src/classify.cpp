#include "lbcolor/classify.hpp"

#include "lbcolor/cographs.hpp"
#include "lbcolor/split.hpp"
#include "lbcolor/treewidth.hpp"

namespace lbcolor {

ClassReport classify_graph(int n, const std::vector<Edge>& edges) {
    ClassReport r;
    const long long m = static_cast<long long>(edges.size());
    r.edgeless = m == 0;
    r.complete = m == static_cast<long long>(n) * (n - 1) / 2;
    r.complete_bipartite = complete_bipartite_sides(n, edges).has_value();
    r.split = split_partition(n, edges).has_value();
    r.cograph = n == 0 || build_cotree(n, edges).is_cograph();
    r.treewidth = treewidth_estimate(n, edges);
    return r;
}

ClassReport classify_instance(const Instance& inst) { return classify_graph(inst.n, inst.edges); }

}  // namespace lbcolor
