#pragma once

#include <vector>

#include "cbnobs/cbn.hpp"
#include "cbnobs/graph.hpp"

namespace cbnobs {

// A path p_1 -> p_2 -> ... -> p_q in the dependency graph whose last node is
// observed and all others are not.
struct ObservedPath {
    std::vector<int> nodes;

    bool operator==(const ObservedPath&) const = default;
    int output() const { return nodes.back(); }
    int length() const { return static_cast<int>(nodes.size()); }
};

// Result of the path decomposition: one path per observed node (ascending by
// output). The cover is complete when `uncovered` is empty; otherwise
// `uncovered` lists the nodes no path reached, ascending.
struct Decomposition {
    std::vector<ObservedPath> paths;
    std::vector<int> uncovered;

    bool complete() const { return uncovered.empty(); }
};

struct ObservabilityVerdict {
    bool observable = false;
    std::vector<int> o1_violations;               // ascending
    std::vector<std::vector<int>> o2_violations;  // disjoint cycles, see check_o2
};

// Working arrays of the linear-time sensor-placement machinery. All are
// per-node and refer to the "sole feeder" relation: j solely feeds i when
// N_in(i) = {j}, j is unobserved and i != j — then X_j(k) can be read off
// X_i(k+1), so j's value is relayed one step onward.
struct SolverScratch {
    std::vector<int> sole_feeder;   // sole_feeder[i] = j as above, -1 if none
    std::vector<char> relay;        // j solely feeds some i (j unobserved)
    std::vector<char> o1_violator;  // unobserved and relays nothing
    std::vector<char> trapped;      // on a relay cycle that never reaches an output
};

// Builds the arrays above. `trapped` starts from the relay set and is thinned
// by chain-chasing: every node that is not itself relayed-into survives only
// if its value keeps circulating forever, so the survivors are exactly the
// disjoint relay cycles with no escape edge.
SolverScratch compute_scratch(const DependencyGraph& g);

// The cycles induced by scratch.trapped, extracted as strongly connected
// components and verified to be simple cycles (defensive: throws
// std::logic_error if the structure is ever not a disjoint cycle family).
// Each cycle starts at its lowest node and follows edge direction; cycles are
// ordered by lowest node.
std::vector<std::vector<int>> trapped_cycles(const DependencyGraph& g,
                                             const SolverScratch& scratch);

// First observability condition: every unobserved node must solely feed some
// other node. Returns the violators, ascending.
std::vector<int> check_o1(const DependencyGraph& g);

// Second observability condition: no cycle of unobserved nodes may keep its
// values circulating without ever solely feeding a node outside the cycle.
// Returns the offending cycles (vertex-disjoint, ordered as in trapped_cycles).
std::vector<std::vector<int>> check_o2(const DependencyGraph& g);

// Greedy back-tracing path cover: from each observed node walk backwards
// while the current node has exactly one in-neighbor and that neighbor is
// unobserved, unassigned and not the node itself. Succeeds exactly on
// observable networks.
Decomposition decompose(const DependencyGraph& g);

ObservabilityVerdict is_observable(const Cbn& cbn);

}  // namespace cbnobs
