#include "cbnobs/scc.hpp"

#include <algorithm>
#include <utility>

namespace cbnobs {

std::vector<std::vector<int>> strongly_connected_components(
    const std::vector<std::vector<int>>& out_adj, const std::vector<char>& active) {
    const int n = static_cast<int>(out_adj.size());
    auto is_active = [&](int v) { return active.empty() || active[v] != 0; };

    std::vector<int> dfs_index(n, -1);
    std::vector<int> lowlink(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<int> scc_stack;
    std::vector<std::pair<int, size_t>> work;  // (node, next out-edge)
    std::vector<std::vector<int>> components;
    int next_index = 0;

    for (int root = 0; root < n; ++root) {
        if (!is_active(root) || dfs_index[root] != -1) continue;
        work.emplace_back(root, 0);
        while (!work.empty()) {
            int v = work.back().first;
            size_t ei = work.back().second;
            if (ei == 0) {
                dfs_index[v] = lowlink[v] = next_index++;
                scc_stack.push_back(v);
                on_stack[v] = 1;
            }
            bool descended = false;
            while (ei < out_adj[v].size()) {
                int w = out_adj[v][ei];
                ++ei;
                if (!is_active(w)) continue;
                if (dfs_index[w] == -1) {
                    work.back().second = ei;
                    work.emplace_back(w, 0);
                    descended = true;
                    break;
                }
                if (on_stack[w]) lowlink[v] = std::min(lowlink[v], dfs_index[w]);
            }
            if (descended) continue;

            if (lowlink[v] == dfs_index[v]) {
                std::vector<int> component;
                int w;
                do {
                    w = scc_stack.back();
                    scc_stack.pop_back();
                    on_stack[w] = 0;
                    component.push_back(w);
                } while (w != v);
                std::reverse(component.begin(), component.end());
                components.push_back(std::move(component));
            }
            work.pop_back();
            if (!work.empty()) {
                int parent = work.back().first;
                lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
            }
        }
    }
    return components;
}

}  // namespace cbnobs
