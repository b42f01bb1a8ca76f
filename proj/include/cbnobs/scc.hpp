#pragma once

#include <vector>

namespace cbnobs {

// Tarjan's strongly connected components, iterative (no recursion, safe for
// long chains). `active[v] == 0` masks v and every edge touching it out of
// the graph; pass an empty mask to run on the whole graph. Components come
// out in reverse topological order; nodes inside a component keep DFS order.
std::vector<std::vector<int>> strongly_connected_components(
    const std::vector<std::vector<int>>& out_adj,
    const std::vector<char>& active = {});

}  // namespace cbnobs
