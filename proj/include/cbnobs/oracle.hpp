#pragma once

#include <cstdint>
#include <vector>

#include "cbnobs/cbn.hpp"

namespace cbnobs {

inline constexpr int kOracleMaxN = 12;

struct OracleResult {
    bool observable = false;
    // First indistinguishable pair found (lexicographic state order) when not
    // observable; empty otherwise.
    std::vector<std::uint8_t> witness_a;
    std::vector<std::uint8_t> witness_b;
};

// Definition-level observability check, independent of the graph conditions:
// two initial states are indistinguishable when their output sequences agree
// until the joint pair state repeats (the pair dynamics are deterministic, so
// agreement up to the first repeat means agreement forever). The network is
// observable iff no distinct pair is indistinguishable. Exponential; refuses
// n > max_n.
OracleResult oracle_check(const Cbn& cbn, int max_n = kOracleMaxN);

bool oracle_is_observable(const Cbn& cbn, int max_n = kOracleMaxN);

}  // namespace cbnobs
