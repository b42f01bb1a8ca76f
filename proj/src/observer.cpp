#include "cbnobs/observer.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

#include "cbnobs/graph.hpp"

namespace cbnobs {

NotObservableError::NotObservableError(ObservabilityVerdict v)
    : Error("network is not observable"), verdict(std::move(v)) {}

TraceTooShortError::TraceTooShortError(int required_, int got_)
    : Error("trace too short: observer needs " + std::to_string(required_) +
            " samples, got " + std::to_string(got_)),
      required(required_),
      got(got_) {}

int OutputTrace::value(int node, int k) const {
    auto it = std::lower_bound(nodes.begin(), nodes.end(), node);
    if (it == nodes.end() || *it != node)
        throw std::invalid_argument("trace has no column for x" + std::to_string(node + 1));
    const auto& column = series[it - nodes.begin()];
    if (k < 0 || static_cast<size_t>(k) >= column.size())
        throw std::invalid_argument("trace index k=" + std::to_string(k) + " out of range");
    return column[k];
}

std::vector<State> simulate(const Cbn& cbn, const State& x0, int steps) {
    cbn.validate();
    if (static_cast<int>(x0.size()) != cbn.n)
        throw std::invalid_argument("initial state has wrong dimension");
    for (auto bit : x0)
        if (bit > 1) throw std::invalid_argument("state entries must be 0 or 1");
    if (steps < 0) throw std::invalid_argument("negative step count");

    std::vector<State> states;
    states.reserve(steps + 1);
    states.push_back(x0);
    for (int k = 0; k < steps; ++k) {
        const State& prev = states.back();
        State next(cbn.n, 1);
        for (int i = 0; i < cbn.n; ++i)
            for (int j : cbn.updates[i])
                if (!prev[j]) {
                    next[i] = 0;
                    break;
                }
        states.push_back(std::move(next));
    }
    return states;
}

OutputTrace record_trace(const Cbn& cbn, const State& x0, int samples) {
    if (samples < 1) throw std::invalid_argument("need at least one sample");
    std::vector<State> states = simulate(cbn, x0, samples - 1);
    OutputTrace trace;
    trace.nodes = cbn.observed;
    trace.series.resize(trace.nodes.size());
    for (size_t c = 0; c < trace.nodes.size(); ++c) {
        trace.series[c].resize(samples);
        for (int k = 0; k < samples; ++k) trace.series[c][k] = states[k][trace.nodes[c]];
    }
    return trace;
}

ObserverPlan build_observer(const Cbn& cbn) {
    ObservabilityVerdict verdict = is_observable(cbn);
    if (!verdict.observable) throw NotObservableError(std::move(verdict));

    ObserverPlan plan;
    plan.cbn = cbn;
    plan.cover = decompose(build_dependency_graph(cbn));
    if (!plan.cover.complete())
        throw std::logic_error("decomposition incomplete on an observable network");

    plan.sources.assign(cbn.n, SourceRef{});
    plan.horizon = 0;
    for (const ObservedPath& path : plan.cover.paths) {
        const int q = path.length();
        plan.horizon = std::max(plan.horizon, q);
        // Position i (1-based) of a path ending at output o shows up in the
        // output q-i steps later: X_{p_i}(0) = y_o(q-i).
        for (int idx = 0; idx < q; ++idx)
            plan.sources[path.nodes[idx]] = SourceRef{path.output(), q - 1 - idx};
    }
    return plan;
}

State reconstruct_initial_state(const ObserverPlan& plan, const OutputTrace& trace) {
    if (trace.nodes != plan.cbn.observed)
        throw InconsistentTraceError("trace columns do not match the observed set");
    if (trace.horizon() < plan.horizon)
        throw TraceTooShortError(plan.horizon, trace.horizon());

    State x0(plan.cbn.n);
    for (int v = 0; v < plan.cbn.n; ++v)
        x0[v] = static_cast<std::uint8_t>(
            trace.value(plan.sources[v].output_node, plan.sources[v].offset));

    // One forward run double-checks every cell of the trace; a mismatch means
    // no initial state at all could have produced it.
    const int samples = trace.horizon();
    std::vector<State> states = simulate(plan.cbn, x0, samples - 1);
    for (size_t c = 0; c < trace.nodes.size(); ++c)
        for (int k = 0; k < samples; ++k)
            if (states[k][trace.nodes[c]] != trace.series[c][k])
                throw InconsistentTraceError(
                    "trace is not producible by any initial state (mismatch at y" +
                    std::to_string(trace.nodes[c] + 1) + ", k=" + std::to_string(k) + ")");
    return x0;
}

std::string write_trace_csv(const OutputTrace& trace) {
    std::string out = "k";
    for (int node : trace.nodes) out += ",y" + std::to_string(node + 1);
    out += "\n";
    for (int k = 0; k < trace.horizon(); ++k) {
        out += std::to_string(k);
        for (const auto& column : trace.series) out += column[k] ? ",1" : ",0";
        out += "\n";
    }
    return out;
}

namespace {

std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> cells;
    size_t pos = 0;
    while (true) {
        size_t comma = line.find(',', pos);
        cells.emplace_back(line.substr(pos, comma == std::string_view::npos
                                                ? std::string_view::npos
                                                : comma - pos));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return cells;
}

}  // namespace

OutputTrace parse_trace_csv(std::string_view text) {
    OutputTrace trace;
    int line_no = 0;
    size_t pos = 0;
    int row = 0;
    while (pos < text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                     ? std::string_view::npos
                                                     : eol - pos);
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;

        std::vector<std::string> cells = split_csv_line(line);
        if (line_no == 1) {
            if (cells.empty() || cells[0] != "k")
                throw ParseError("trace header must start with `k`", line_no, 1);
            for (size_t c = 1; c < cells.size(); ++c) {
                const std::string& name = cells[c];
                if (name.size() < 2 || name[0] != 'y')
                    throw ParseError("bad trace column name: " + name, line_no, 1);
                int node = 0;
                for (size_t i = 1; i < name.size(); ++i) {
                    if (!std::isdigit(static_cast<unsigned char>(name[i])))
                        throw ParseError("bad trace column name: " + name, line_no, 1);
                    node = node * 10 + (name[i] - '0');
                }
                if (node < 1) throw ParseError("bad trace column name: " + name, line_no, 1);
                if (!trace.nodes.empty() && trace.nodes.back() >= node - 1)
                    throw ParseError("trace columns must be ascending", line_no, 1);
                trace.nodes.push_back(node - 1);
            }
            trace.series.resize(trace.nodes.size());
            continue;
        }

        if (cells.size() != trace.nodes.size() + 1)
            throw ParseError("trace row has wrong cell count", line_no, 1);
        if (cells[0] != std::to_string(row))
            throw ParseError("trace rows must be numbered 0,1,2,...", line_no, 1);
        for (size_t c = 1; c < cells.size(); ++c) {
            if (cells[c] != "0" && cells[c] != "1")
                throw ParseError("trace values must be 0 or 1", line_no, 1);
            trace.series[c - 1].push_back(cells[c] == "1" ? 1 : 0);
        }
        ++row;
    }
    if (line_no == 0) throw ParseError("empty trace file", 0, 0);
    return trace;
}

}  // namespace cbnobs
