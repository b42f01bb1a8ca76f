#include "cbnobs/observability.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cbnobs/scc.hpp"

namespace cbnobs {

SolverScratch compute_scratch(const DependencyGraph& g) {
    const int n = g.n;
    SolverScratch s;
    s.sole_feeder.assign(n, -1);
    s.relay.assign(n, 0);
    s.o1_violator.assign(n, 0);

    for (int i = 0; i < n; ++i) {
        if (g.in_adj[i].size() != 1) continue;
        int j = g.in_adj[i][0];
        if (j == i || g.is_observed(j)) continue;
        s.sole_feeder[i] = j;
        s.relay[j] = 1;
    }
    for (int v = 0; v < n; ++v)
        if (!g.is_observed(v) && !s.relay[v]) s.o1_violator[v] = 1;

    // A relay escapes the web when its value is eventually relayed into a
    // node that is not itself a pure relay link (an output, a violator, a
    // join point). Chase feeder links backwards from every such node,
    // un-trapping as we go; each link is consumed once, so this is linear.
    // What survives are the relay cycles with no way out.
    s.trapped = s.relay;
    std::vector<int> feeder = s.sole_feeder;
    for (int i = 0; i < n; ++i) {
        if (s.trapped[i]) continue;
        int k = i;
        while (feeder[k] != -1) {
            int p = feeder[k];
            feeder[k] = -1;
            s.trapped[p] = 0;
            k = p;
        }
    }
    return s;
}

std::vector<std::vector<int>> trapped_cycles(const DependencyGraph& g,
                                             const SolverScratch& scratch) {
    auto components = strongly_connected_components(g.out_adj, scratch.trapped);

    // The survivors must form disjoint simple cycles: every trapped node has
    // exactly one in-edge and one out-edge inside the trapped set. Anything
    // else means the reduction above is broken, so fail loudly.
    std::vector<std::vector<int>> cycles;
    for (auto& component : components) {
        if (component.size() < 2)
            throw std::logic_error("trapped component of size " +
                                   std::to_string(component.size()) +
                                   " is not a cycle");
        std::vector<char> in_component(g.n, 0);
        for (int v : component) in_component[v] = 1;
        int lowest = *std::min_element(component.begin(), component.end());

        std::vector<int> cycle;
        cycle.reserve(component.size());
        int v = lowest;
        do {
            int successor = -1;
            for (int w : g.out_adj[v]) {
                if (!in_component[w]) continue;
                if (successor != -1)
                    throw std::logic_error("trapped node has two out-edges in its component");
                successor = w;
            }
            if (successor == -1 || g.in_adj[successor].size() != 1)
                throw std::logic_error("trapped component is not a simple cycle");
            cycle.push_back(v);
            v = successor;
        } while (v != lowest && cycle.size() <= component.size());
        if (cycle.size() != component.size())
            throw std::logic_error("trapped component is not a single cycle");
        cycles.push_back(std::move(cycle));
    }
    std::sort(cycles.begin(), cycles.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return cycles;
}

std::vector<int> check_o1(const DependencyGraph& g) {
    SolverScratch s = compute_scratch(g);
    std::vector<int> violators;
    for (int v = 0; v < g.n; ++v)
        if (s.o1_violator[v]) violators.push_back(v);
    return violators;
}

std::vector<std::vector<int>> check_o2(const DependencyGraph& g) {
    SolverScratch s = compute_scratch(g);
    return trapped_cycles(g, s);
}

Decomposition decompose(const DependencyGraph& g) {
    Decomposition result;
    std::vector<char> assigned(g.n, 0);
    for (int o : g.observed_nodes) {
        assigned[o] = 1;
        std::vector<int> path{o};
        int current = o;
        while (g.in_adj[current].size() == 1) {
            int v = g.in_adj[current][0];
            if (v == current || g.is_observed(v) || assigned[v]) break;
            assigned[v] = 1;
            path.push_back(v);
            current = v;
        }
        std::reverse(path.begin(), path.end());
        result.paths.push_back({std::move(path)});
    }
    for (int v = 0; v < g.n; ++v)
        if (!assigned[v]) result.uncovered.push_back(v);
    return result;
}

ObservabilityVerdict is_observable(const Cbn& cbn) {
    DependencyGraph g = build_dependency_graph(cbn);
    SolverScratch s = compute_scratch(g);
    ObservabilityVerdict verdict;
    for (int v = 0; v < g.n; ++v)
        if (s.o1_violator[v]) verdict.o1_violations.push_back(v);
    verdict.o2_violations = trapped_cycles(g, s);
    verdict.observable = verdict.o1_violations.empty() && verdict.o2_violations.empty();
    return verdict;
}

}  // namespace cbnobs
