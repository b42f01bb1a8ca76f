#include <doctest.h>

#include "cbnobs/errors.hpp"
#include "cbnobs/format.hpp"
#include "cbnobs/observer.hpp"
#include "support/instances.hpp"

using namespace cbnobs;

namespace {

State bits(std::initializer_list<int> v) { return State(v.begin(), v.end()); }

}  // namespace

TEST_CASE("simulation follows the conjunctive update rule") {
    // In the two-variable example, (1,0) falls to (0,0) and stays there.
    const auto traj = simulate(testsup::duo(), bits({1, 0}), 2);
    REQUIRE(traj.size() == 3);
    CHECK(traj[0] == bits({1, 0}));
    CHECK(traj[1] == bits({0, 0}));
    CHECK(traj[2] == bits({0, 0}));

    // The all-ones state is always a fixed point.
    const auto ones = simulate(testsup::relay_cycles(), bits({1, 1, 1, 1, 1, 1}), 3);
    for (const auto& s : ones) CHECK(s == bits({1, 1, 1, 1, 1, 1}));

    // In the six-variable example started from zero, the output never moves.
    const auto zeros = simulate(testsup::relay_cycles(), bits({0, 0, 0, 0, 0, 0}), 8);
    for (const auto& s : zeros) CHECK(s[0] == 0);
}

TEST_CASE("observer plan for the five-variable example") {
    const ObserverPlan plan = build_observer(testsup::two_paths());
    CHECK(plan.horizon == 3);
    REQUIRE(plan.sources.size() == 5);
    CHECK(plan.sources[0] == SourceRef{0, 0});
    CHECK(plan.sources[1] == SourceRef{1, 0});
    CHECK(plan.sources[2] == SourceRef{0, 1});
    CHECK(plan.sources[3] == SourceRef{0, 2});
    CHECK(plan.sources[4] == SourceRef{1, 1});
}

TEST_CASE("observer plan for the repaired three-variable example") {
    const ObserverPlan plan = build_observer(testsup::ring3_two_sensors());
    CHECK(plan.horizon == 2);
    CHECK(plan.sources[0] == SourceRef{0, 0});
    CHECK(plan.sources[1] == SourceRef{2, 1});
    CHECK(plan.sources[2] == SourceRef{2, 0});
}

TEST_CASE("a fully observed network reads everything at time zero") {
    const Cbn cbn = parse_cbn("x1 <- x2\nx2 <- x1\nobserve x1 x2\n");
    const ObserverPlan plan = build_observer(cbn);
    CHECK(plan.horizon == 1);
    CHECK(plan.sources[0] == SourceRef{0, 0});
    CHECK(plan.sources[1] == SourceRef{1, 0});
}

TEST_CASE("building an observer for an unobservable network fails loudly") {
    try {
        build_observer(testsup::relay_cycles());
        FAIL("expected NotObservableError");
    } catch (const NotObservableError& e) {
        CHECK(e.verdict.o2_violations.size() == 2);
    }
}

TEST_CASE("reconstruction inverts simulation for every initial state") {
    const Cbn cbn = testsup::two_paths();
    const ObserverPlan plan = build_observer(cbn);
    for (std::uint32_t code = 0; code < (1u << cbn.n); ++code) {
        State x0(cbn.n);
        for (int v = 0; v < cbn.n; ++v) x0[v] = (code >> v) & 1u;
        const OutputTrace trace = record_trace(cbn, x0, plan.horizon);
        CHECK(reconstruct_initial_state(plan, trace) == x0);
    }
}

TEST_CASE("longer traces are used for consistency checking") {
    const Cbn cbn = testsup::two_paths();
    const ObserverPlan plan = build_observer(cbn);
    const State x0 = bits({1, 0, 1, 1, 0});
    OutputTrace trace = record_trace(cbn, x0, 7);
    CHECK(reconstruct_initial_state(plan, trace) == x0);

    // Corrupt a sample beyond the horizon: the reconstruction must notice.
    trace.series[1][5] ^= 1;
    CHECK_THROWS_AS(reconstruct_initial_state(plan, trace), InconsistentTraceError);
}

TEST_CASE("short traces are rejected with the required length") {
    const Cbn cbn = testsup::two_paths();
    const ObserverPlan plan = build_observer(cbn);
    const OutputTrace trace = record_trace(cbn, bits({1, 1, 1, 1, 1}), 2);
    try {
        reconstruct_initial_state(plan, trace);
        FAIL("expected TraceTooShortError");
    } catch (const TraceTooShortError& e) {
        CHECK(e.required == 3);
        CHECK(e.got == 2);
    }
}

TEST_CASE("a trace over the wrong outputs is rejected") {
    const ObserverPlan plan = build_observer(testsup::two_paths());
    OutputTrace trace = record_trace(testsup::duo(), bits({1, 1}), 5);
    CHECK_THROWS_AS(reconstruct_initial_state(plan, trace), InconsistentTraceError);
}

TEST_CASE("the horizon is tight: one sample less loses information") {
    // Truncating the five-variable example's trace to two samples leaves x4
    // unreadable, and two initial states share that shorter trace.
    const Cbn cbn = testsup::two_paths();
    const State a = bits({1, 0, 1, 0, 0});
    const State b = bits({1, 0, 1, 1, 0});
    const OutputTrace ta = record_trace(cbn, a, 2);
    const OutputTrace tb = record_trace(cbn, b, 2);
    CHECK(ta.series == tb.series);
    const OutputTrace fa = record_trace(cbn, a, 3);
    const OutputTrace fb = record_trace(cbn, b, 3);
    CHECK(fa.series != fb.series);
}

TEST_CASE("trace csv round-trips") {
    const Cbn cbn = testsup::two_paths();
    const OutputTrace trace = record_trace(cbn, bits({0, 1, 1, 0, 1}), 6);
    const OutputTrace back = parse_trace_csv(write_trace_csv(trace));
    CHECK(back.nodes == trace.nodes);
    CHECK(back.series == trace.series);
}

TEST_CASE("trace csv parser rejects malformed input") {
    CHECK_THROWS_AS(parse_trace_csv(""), ParseError);
    CHECK_THROWS_AS(parse_trace_csv("k,y1\nzero,1\n"), ParseError);
    CHECK_THROWS_AS(parse_trace_csv("k,y1\n1,1\n"), ParseError);       // rows start at 0
    CHECK_THROWS_AS(parse_trace_csv("k,y1\n0,1\n2,0\n"), ParseError);  // and stay consecutive
    CHECK_THROWS_AS(parse_trace_csv("k,y1\n0,2\n"), ParseError);       // cells are 0/1
    CHECK_THROWS_AS(parse_trace_csv("k,y1\n0,1,0\n"), ParseError);     // row width
    CHECK_THROWS_AS(parse_trace_csv("k,y2,y1\n0,1,1\n"), ParseError);  // ascending header
    CHECK_THROWS_AS(parse_trace_csv("t,y1\n0,1\n"), ParseError);       // header shape
    CHECK_NOTHROW(parse_trace_csv("k,y1,y3\n0,1,0\n1,0,0\n"));
}
