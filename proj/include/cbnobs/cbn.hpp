#pragma once

#include <cstdint>
#include <vector>

namespace cbnobs {

// A conjunctive Boolean network in canonical form: variable i updates to the
// AND of its arguments, X_i(k+1) = prod_{j in updates[i]} X_j(k), and every
// observed variable is read out directly, Y = X_i for i in observed.
//
// An empty argument list is the empty product, i.e. the constant 1.
// All indices are 0-based here; the text format and all reports are 1-based.
// Instances are treated as immutable once built.
struct Cbn {
    int n = 0;
    std::vector<std::vector<int>> updates;  // per variable, sorted, duplicate-free
    std::vector<int> observed;              // sorted, duplicate-free

    bool operator==(const Cbn&) const = default;

    bool is_observed(int v) const;
    std::vector<int> unobserved() const;

    // Throws std::invalid_argument on malformed instances (bad sizes, indices
    // out of range, unsorted/duplicated argument or observed lists).
    void validate() const;
};

// Same structure as a Cbn but with OR updates: X_i(k+1) is the OR of the
// arguments (empty OR = constant 0). Reduced to a Cbn by De Morgan; the
// reduced network runs on complemented states.
struct Dbn {
    Cbn net;

    bool operator==(const Dbn&) const = default;
    void validate() const { net.validate(); }
};

// A conjunctive network with Boolean control inputs: variable i updates to
// the AND of its state arguments (updates) and input arguments (input_args).
// Inputs live in their own 0-based index space [0, input_count).
struct Cbcn {
    Cbn net;
    int input_count = 0;
    std::vector<std::vector<int>> input_args;  // per variable, sorted, duplicate-free

    bool operator==(const Cbcn&) const = default;
    void validate() const;
};

// A conjunctive network whose outputs are AND functions over sets of state
// variables rather than direct readouts: Y_j(k) = prod_{i in outputs[j]} X_i(k).
// The underlying net carries no observed set of its own.
struct GeneralOutputCbn {
    Cbn net;
    std::vector<std::vector<int>> outputs;  // per output, nonempty, sorted, duplicate-free

    bool operator==(const GeneralOutputCbn&) const = default;
    void validate() const;
};

// Copy of `base` with `extra` added to the observed set.
Cbn with_observed(const Cbn& base, const std::vector<int>& extra);

}  // namespace cbnobs
