#pragma once

#include <vector>

#include "lbcolor/instance.hpp"

namespace lbcolor {

struct ClassReport {
    bool edgeless = false;
    bool complete = false;
    bool complete_bipartite = false;
    bool split = false;
    bool cograph = false;
    int treewidth = 0;  // upper bound, exact when n <= 10
};

/// Graph classes of the instance graph. Edgeless graphs count as split and
/// as cographs.
ClassReport classify_graph(int n, const std::vector<Edge>& edges);
ClassReport classify_instance(const Instance& inst);

}  // namespace lbcolor
