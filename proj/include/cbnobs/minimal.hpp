#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cbnobs/cbn.hpp"
#include "cbnobs/observability.hpp"

namespace cbnobs {

// A minimum-cardinality set of additional sensors that makes the network
// observable. `forced` are the nodes every minimal solution must contain
// (the ones relaying nothing); `cycles` are the trapped relay cycles, each of
// which contributes exactly one freely chosen member. `chosen` picks the
// lowest-index member of every cycle, which is what representative_rule
// records.
struct MinimalSolution {
    std::vector<int> chosen;              // ascending
    std::vector<int> forced;              // ascending
    std::vector<std::vector<int>> cycles; // as in check_o2
    std::string representative_rule;      // "lowest-index"
};

// The full space of minimal solutions: forced part plus one free pick per
// cycle. `count` = product of cycle sizes, saturated at uint64 max.
struct SolutionSpace {
    std::vector<int> forced;
    std::vector<std::vector<int>> cycle_choices;
    std::uint64_t count = 1;
    bool count_saturated = false;
};

// Linear-time minimal sensor placement. Adding `chosen` to the observed set
// always yields an observable network, and no smaller addition can.
MinimalSolution solve_minimal(const Cbn& cbn);

SolutionSpace enumerate_solution_space(const MinimalSolution& solution);

// Exhaustive certificate for small instances: checks via the simulation
// oracle that `solution.chosen` works and that no strictly smaller subset of
// the unobserved nodes does. Guarded: throws std::invalid_argument when
// n > max_n or |chosen| > 4 (the subset enumeration blows up beyond that).
bool verify_minimality_bruteforce(const Cbn& cbn, const MinimalSolution& solution,
                                  int max_n = 10);

}  // namespace cbnobs
