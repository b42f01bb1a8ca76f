#include "cbnobs/graph.hpp"

namespace cbnobs {

DependencyGraph build_dependency_graph(const Cbn& cbn) {
    cbn.validate();
    DependencyGraph g;
    g.n = cbn.n;
    g.in_adj = cbn.updates;  // arguments of X_j are exactly the in-neighbors of j
    g.out_adj.resize(cbn.n);
    for (int j = 0; j < cbn.n; ++j)
        for (int i : g.in_adj[j]) g.out_adj[i].push_back(j);
    g.observed.assign(cbn.n, 0);
    for (int v : cbn.observed) g.observed[v] = 1;
    g.observed_nodes = cbn.observed;
    return g;
}

Cbn cbn_from_graph(const DependencyGraph& g) {
    Cbn cbn;
    cbn.n = g.n;
    cbn.updates = g.in_adj;
    cbn.observed = g.observed_nodes;
    cbn.validate();
    return cbn;
}

}  // namespace cbnobs
