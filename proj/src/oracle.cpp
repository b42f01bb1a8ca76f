#include "cbnobs/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cbnobs {

namespace {

std::vector<std::uint8_t> decode_state(std::uint32_t s, int n) {
    std::vector<std::uint8_t> state(n);
    for (int v = 0; v < n; ++v) state[v] = (s >> v) & 1u;
    return state;
}

}  // namespace

OracleResult oracle_check(const Cbn& cbn, int max_n) {
    cbn.validate();
    if (max_n > 13) max_n = 13;  // the pair memo is 4^n bytes; 13 is already 64 MiB
    if (cbn.n > max_n)
        throw std::invalid_argument("oracle refuses n=" + std::to_string(cbn.n) +
                                    " (limit " + std::to_string(max_n) + ")");

    const int n = cbn.n;
    const std::uint32_t count = 1u << n;
    std::uint32_t obs_mask = 0;
    for (int v : cbn.observed) obs_mask |= 1u << v;

    std::vector<std::uint32_t> arg_mask(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j : cbn.updates[i]) arg_mask[i] |= 1u << j;

    // Full transition table: bit i of next[s] is the AND of s over arg_mask[i]
    // (an empty mask compares equal, giving the constant 1).
    std::vector<std::uint32_t> next(count);
    for (std::uint32_t s = 0; s < count; ++s) {
        std::uint32_t t = 0;
        for (int i = 0; i < n; ++i)
            if ((s & arg_mask[i]) == arg_mask[i]) t |= 1u << i;
        next[s] = t;
    }

    // Walk the deterministic pair dynamics with memoisation. Every pair state
    // is resolved once: 2 = the outputs split somewhere ahead, 3 = they never
    // do (the pair merges or loops without a mismatch).
    std::vector<std::uint8_t> status(static_cast<size_t>(count) * count, 0);
    std::vector<size_t> path;

    OracleResult result;
    result.observable = true;
    for (std::uint32_t a = 0; a < count; ++a) {
        for (std::uint32_t b = a + 1; b < count; ++b) {
            if (status[static_cast<size_t>(a) * count + b] != 0) continue;
            path.clear();
            std::uint32_t x = a, y = b;
            std::uint8_t outcome;
            while (true) {
                if (x == y) {
                    outcome = 3;  // merged: identical outputs forever
                    break;
                }
                std::uint32_t lo = std::min(x, y), hi = std::max(x, y);
                size_t idx = static_cast<size_t>(lo) * count + hi;
                std::uint8_t st = status[idx];
                if (st == 2 || st == 3) {
                    outcome = st;
                    break;
                }
                if (st == 1) {
                    outcome = 3;  // looped back with outputs equal throughout
                    break;
                }
                if ((x & obs_mask) != (y & obs_mask)) {
                    path.push_back(idx);
                    outcome = 2;
                    break;
                }
                status[idx] = 1;
                path.push_back(idx);
                x = next[x];
                y = next[y];
            }
            for (size_t idx : path) status[idx] = outcome;
            if (outcome == 3) {
                result.observable = false;
                result.witness_a = decode_state(a, n);
                result.witness_b = decode_state(b, n);
                return result;
            }
        }
    }
    return result;
}

bool oracle_is_observable(const Cbn& cbn, int max_n) {
    return oracle_check(cbn, max_n).observable;
}

}  // namespace cbnobs
