#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cbnobs/cbn.hpp"
#include "cbnobs/errors.hpp"
#include "cbnobs/observability.hpp"

namespace cbnobs {

using State = std::vector<std::uint8_t>;

// Per-observed-node output sequences Y(0..N-1), all the same length N.
// CSV form: header `k,y<i1>,y<i2>,...` (1-based, ascending), one row per step.
struct OutputTrace {
    std::vector<int> nodes;                        // ascending observed nodes
    std::vector<std::vector<std::uint8_t>> series; // series[c][k], |series[c]| = N

    int horizon() const {
        return series.empty() ? 0 : static_cast<int>(series.front().size());
    }
    // Value y_node(k); the node must be one of `nodes`.
    int value(int node, int k) const;
};

// Static reconstruction table built from a complete path decomposition: the
// variable at position i (1-based) of a path of length q ending at output o
// equals y_o(q - i), so sources[v] = (o, q - i) and horizon = max path length.
struct SourceRef {
    int output_node = -1;
    int offset = 0;

    bool operator==(const SourceRef&) const = default;
};

struct ObserverPlan {
    Cbn cbn;
    Decomposition cover;
    int horizon = 0;
    std::vector<SourceRef> sources;  // one per variable
};

struct NotObservableError : Error {
    explicit NotObservableError(ObservabilityVerdict v);
    ObservabilityVerdict verdict;
};

struct TraceTooShortError : Error {
    TraceTooShortError(int required_, int got_);
    int required = 0;
    int got = 0;
};

struct InconsistentTraceError : Error {
    using Error::Error;
};

// Throws NotObservableError (carrying the verdict) on unobservable input.
ObserverPlan build_observer(const Cbn& cbn);

// Reads X(0) straight out of the trace via plan.sources, then re-simulates
// and compares against the whole trace; a mismatch means the trace is not
// producible by any initial state and raises InconsistentTraceError. A trace
// shorter than plan.horizon raises TraceTooShortError.
State reconstruct_initial_state(const ObserverPlan& plan, const OutputTrace& trace);

// States X(0..steps), steps+1 entries.
std::vector<State> simulate(const Cbn& cbn, const State& x0, int steps);

// Observed readout of a simulated trajectory: Y(0..samples-1).
OutputTrace record_trace(const Cbn& cbn, const State& x0, int samples);

std::string write_trace_csv(const OutputTrace& trace);
OutputTrace parse_trace_csv(std::string_view text);

}  // namespace cbnobs
