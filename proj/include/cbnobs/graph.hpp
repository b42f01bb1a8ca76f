#pragma once

#include <vector>

#include "cbnobs/cbn.hpp"

namespace cbnobs {

// Dependency graph of a Cbn: there is an edge i -> j exactly when X_i is an
// argument of X_j's update. in_adj[j] therefore equals updates[j].
struct DependencyGraph {
    int n = 0;
    std::vector<std::vector<int>> in_adj;   // sorted
    std::vector<std::vector<int>> out_adj;  // sorted
    std::vector<char> observed;             // per-node flag
    std::vector<int> observed_nodes;        // ascending

    bool is_observed(int v) const { return observed[v] != 0; }
};

DependencyGraph build_dependency_graph(const Cbn& cbn);

// Inverse of build_dependency_graph: recover the Cbn a graph came from.
// Together they witness that Cbn and (graph, observed set) are the same data.
Cbn cbn_from_graph(const DependencyGraph& g);

}  // namespace cbnobs
