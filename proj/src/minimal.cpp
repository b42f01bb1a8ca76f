#include "cbnobs/minimal.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "cbnobs/graph.hpp"
#include "cbnobs/oracle.hpp"

namespace cbnobs {

MinimalSolution solve_minimal(const Cbn& cbn) {
    DependencyGraph g = build_dependency_graph(cbn);
    SolverScratch scratch = compute_scratch(g);

    MinimalSolution solution;
    for (int v = 0; v < g.n; ++v)
        if (scratch.o1_violator[v]) solution.forced.push_back(v);
    solution.cycles = trapped_cycles(g, scratch);

    // Forced nodes relay nothing, so each needs its own sensor; each trapped
    // cycle needs exactly one sensor anywhere on it to open it up. Nothing
    // smaller works and this choice always does.
    solution.chosen = solution.forced;
    for (const auto& cycle : solution.cycles)
        solution.chosen.push_back(cycle.front());  // cycles start at their lowest node
    std::sort(solution.chosen.begin(), solution.chosen.end());
    solution.representative_rule = "lowest-index";
    return solution;
}

SolutionSpace enumerate_solution_space(const MinimalSolution& solution) {
    SolutionSpace space;
    space.forced = solution.forced;
    space.cycle_choices = solution.cycles;
    for (const auto& cycle : space.cycle_choices) {
        std::uint64_t size = cycle.size();
        if (space.count > UINT64_MAX / size) {
            space.count = UINT64_MAX;
            space.count_saturated = true;
            break;
        }
        space.count *= size;
    }
    return space;
}

namespace {

// Calls fn(subset) for every size-k subset of `pool`; stops early when fn
// returns true and reports whether that happened.
bool any_subset(const std::vector<int>& pool, int k,
                const std::function<bool(const std::vector<int>&)>& fn) {
    const int m = static_cast<int>(pool.size());
    if (k > m) return false;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    std::vector<int> subset(k);
    while (true) {
        for (int i = 0; i < k; ++i) subset[i] = pool[idx[i]];
        if (fn(subset)) return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

bool verify_minimality_bruteforce(const Cbn& cbn, const MinimalSolution& solution,
                                  int max_n) {
    cbn.validate();
    if (cbn.n > max_n)
        throw std::invalid_argument("minimality check refuses n=" + std::to_string(cbn.n) +
                                    " (limit " + std::to_string(max_n) + ")");
    if (solution.chosen.size() > 4)
        throw std::invalid_argument("minimality check refuses |chosen| > 4");

    if (!oracle_is_observable(with_observed(cbn, solution.chosen), max_n)) return false;

    const std::vector<int> pool = cbn.unobserved();
    const int target = static_cast<int>(solution.chosen.size());
    for (int size = 0; size < target; ++size) {
        bool smaller_works = any_subset(pool, size, [&](const std::vector<int>& subset) {
            return oracle_is_observable(with_observed(cbn, subset), max_n);
        });
        if (smaller_works) return false;
    }
    return true;
}

}  // namespace cbnobs
