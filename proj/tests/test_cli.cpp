#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "cbnobs/observer.hpp"
#include "support/instances.hpp"

using nlohmann::json;
using namespace cbnobs;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

// Runs the installed binary with stderr folded into stdout unless asked not to.
RunResult run(const std::string& args, bool merge_stderr = true) {
    const std::string cmd = std::string(CBNOBS_CLI_PATH) + " " + args +
                            (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string fixture(const std::string& name) {
    return std::string(CBNOBS_FIXTURES_DIR) + "/" + name;
}

bool has(const std::string& text, const std::string& needle) {
    return text.find(needle) != std::string::npos;
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("cbnobs_cli_" + name)).string();
}

void spill(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << content;
}

}  // namespace

TEST_CASE("check reports verdicts with matching exit codes") {
    RunResult r = run("check " + fixture("two_paths.cbn"));
    CHECK(r.code == 0);
    CHECK(r.out == "observable: yes\npaths: x4 x3 x1 | x5 x2\n");

    r = run("check " + fixture("ring3.cbn"));
    CHECK(r.code == 1);
    CHECK(r.out == "observable: no\no1 violations: x3\no2 cycles: (none)\n");

    r = run("check " + fixture("relay_cycles.cbn"));
    CHECK(r.code == 1);
    CHECK(r.out == "observable: no\no1 violations: (none)\no2 cycles: {x2 x3} {x4 x5 x6}\n");

    CHECK(run("check " + fixture("ring3_two_sensors.cbn")).code == 0);
    r = run("check " + fixture("duo.cbn"));
    CHECK(r.code == 0);
    CHECK(r.out == "observable: yes\npaths: x2 x1\n");
}

TEST_CASE("check surfaces constant variables") {
    const std::string path = temp_path("constants.cbn");
    spill(path, "x1 <- true\nx2 <- x1\nobserve x2\n");
    const RunResult r = run("check " + path);
    CHECK(r.code == 0);
    CHECK(r.out == "observable: yes\npaths: x1 x2\nconstants: x1\n");
    std::filesystem::remove(path);
}

TEST_CASE("check --json carries the full verdict") {
    const json j = json::parse(run("check --json " + fixture("relay_cycles.cbn"), false).out);
    CHECK(j["observable"] == false);
    CHECK(j["o1_violations"] == json::array());
    CHECK(j["o2_cycles"] == json({{2, 3}, {4, 5, 6}}));
    CHECK(j["constants"] == json::array());
    CHECK(!j.contains("paths"));

    const json good = json::parse(run("check --json " + fixture("two_paths.cbn"), false).out);
    CHECK(good["observable"] == true);
    CHECK(good["paths"] == json({{4, 3, 1}, {5, 2}}));
}

TEST_CASE("solve names the variables to observe") {
    RunResult r = run("solve " + fixture("ring3.cbn"));
    CHECK(r.code == 0);
    CHECK(r.out == "add: x3\n");

    r = run("solve --all " + fixture("relay_cycles.cbn"));
    CHECK(r.code == 0);
    CHECK(r.out ==
          "add: x2 x4\n"
          "forced: (none)\n"
          "cycle choices: {x2 x3} {x4 x5 x6}\n"
          "solutions: 6\n");

    CHECK(run("solve " + fixture("two_paths.cbn")).out == "add: (none)\n");
}

TEST_CASE("solve --json enumerates the solution space") {
    const json j =
        json::parse(run("solve --all --json " + fixture("relay_cycles.cbn"), false).out);
    CHECK(j["add"] == json({2, 4}));
    CHECK(j["forced"] == json::array());
    CHECK(j["cycles"] == json({{2, 3}, {4, 5, 6}}));
    CHECK(j["representative_rule"] == "lowest-index");
    CHECK(j["solution_count"] == 6);
    CHECK(j["solution_count_saturated"] == false);
}

TEST_CASE("oracle agrees and produces witnesses") {
    CHECK(run("oracle " + fixture("two_paths.cbn")).out == "observable: yes\n");
    const RunResult r = run("oracle " + fixture("relay_cycles.cbn"));
    CHECK(r.code == 1);
    CHECK(r.out ==
          "observable: no\n"
          "witness a: 0 0 0 0 0 0\n"
          "witness b: 0 1 0 0 0 0\n");

    const json j = json::parse(run("oracle --json " + fixture("relay_cycles.cbn"), false).out);
    CHECK(j["observable"] == false);
    CHECK(j["witness"] == json({{0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}}));
}

TEST_CASE("oracle refuses oversized networks") {
    std::string text;
    for (int i = 1; i <= 13; ++i)
        text += "x" + std::to_string(i) + " <- x" + std::to_string(i % 13 + 1) + "\n";
    text += "observe x1\n";
    const std::string path = temp_path("big.cbn");
    spill(path, text);
    const RunResult r = run("oracle " + path);
    CHECK(r.code == 2);
    CHECK(has(r.out, "oracle refuses n=13"));
    std::filesystem::remove(path);
}

TEST_CASE("observe reconstructs the initial state from a trace file") {
    const Cbn cbn = testsup::two_paths();
    const State x0 = {1, 0, 1, 1, 0};
    const std::string trace = temp_path("trace.csv");
    spill(trace, write_trace_csv(record_trace(cbn, x0, 3)));

    const RunResult r = run("observe " + fixture("two_paths.cbn") + " " + trace);
    CHECK(r.code == 0);
    CHECK(r.out ==
          "initial state: 1 0 1 1 0\n"
          "x1 <- y1[0]\n"
          "x2 <- y2[0]\n"
          "x3 <- y1[1]\n"
          "x4 <- y1[2]\n"
          "x5 <- y2[1]\n");

    const json j = json::parse(
        run("observe --json " + fixture("two_paths.cbn") + " " + trace, false).out);
    CHECK(j["initial_state"] == json({1, 0, 1, 1, 0}));
    CHECK(j["horizon"] == 3);
    CHECK(j["sources"][3] == json({{"variable", 4}, {"output", 1}, {"offset", 2}}));
    std::filesystem::remove(trace);
}

TEST_CASE("observe rejects unusable traces with exit code 1") {
    const Cbn cbn = testsup::two_paths();
    const std::string trace = temp_path("bad_trace.csv");

    spill(trace, write_trace_csv(record_trace(cbn, {1, 1, 1, 1, 1}, 2)));
    RunResult r = run("observe " + fixture("two_paths.cbn") + " " + trace);
    CHECK(r.code == 1);
    CHECK(has(r.out, "3 samples"));

    OutputTrace longer = record_trace(cbn, {1, 0, 1, 1, 0}, 6);
    longer.series[1][4] ^= 1;
    spill(trace, write_trace_csv(longer));
    r = run("observe " + fixture("two_paths.cbn") + " " + trace);
    CHECK(r.code == 1);
    CHECK(has(r.out, "mismatch"));

    spill(trace, write_trace_csv(record_trace(testsup::duo(), {1, 1}, 5)));
    r = run("observe " + fixture("two_paths.cbn") + " " + trace);
    CHECK(r.code == 1);
    CHECK(has(r.out, "columns"));
    std::filesystem::remove(trace);
}

TEST_CASE("observe explains unobservable networks") {
    const std::string trace = temp_path("relay_cycles_trace.csv");
    spill(trace, "k,y1\n0,0\n1,0\n2,0\n");
    const RunResult r = run("observe " + fixture("relay_cycles.cbn") + " " + trace);
    CHECK(r.code == 1);
    CHECK(has(r.out, "o2 cycles: {x2 x3} {x4 x5 x6}"));
    std::filesystem::remove(trace);
}

TEST_CASE("reduce rewrites the three variants") {
    RunResult r = run("reduce --dbn " + fixture("dbn_or.cbn"));
    CHECK(r.code == 0);
    CHECK(r.out ==
          "# states of the reduced network are the complements of the original states\n"
          "x1 <- x2 x3\nx2 <- x1\nx3 <- x2\nobserve x1\n");

    r = run("reduce --cbcn " + fixture("cbcn.cbn"));
    CHECK(r.code == 0);
    CHECK(r.out == "x1 <- x2\nx2 <- x1\nobserve x1\n");

    r = run("reduce --aug-outputs " + fixture("general_outputs.cbn"));
    CHECK(r.code == 0);
    CHECK(r.out == "x1 <- x2\nx2 <- x1 x2\nx3 <- x1 x2\nobserve x3\n");
}

TEST_CASE("reduce output feeds straight back into check") {
    const std::string reduced = temp_path("reduced.cbn");
    RunResult r = run("reduce --dbn -o " + reduced + " " + fixture("dbn_or.cbn"));
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    r = run("check " + reduced);
    CHECK(r.code == 1);  // same wiring as the unobservable three-variable net
    CHECK(has(r.out, "o1 violations: x3"));
    std::filesystem::remove(reduced);
}

TEST_CASE("reduce demands exactly one variant flag") {
    CHECK(run("reduce " + fixture("dbn_or.cbn")).code == 2);
    CHECK(run("reduce --dbn --cbcn " + fixture("dbn_or.cbn")).code == 2);
}

TEST_CASE("plain commands refuse variant files with a hint") {
    const RunResult r = run("check " + fixture("dbn_or.cbn"));
    CHECK(r.code == 2);
    CHECK(has(r.out, "--dbn"));
    CHECK(run("check " + fixture("cbcn.cbn")).code == 2);
    CHECK(run("solve " + fixture("general_outputs.cbn")).code == 2);
}

TEST_CASE("experiment prints a csv and a summary") {
    const std::string args = "experiment --n 60 --trials 5 --p-grid 0.02,0.05 --seed 9";
    const RunResult merged = run(args);
    CHECK(merged.code == 0);
    CHECK(has(merged.out, "n,p,trials,mean_s,std_s,lower_bound,upper_bound"));
    CHECK(has(merged.out, "grid points: 2, trials per point: 5"));
    CHECK(has(merged.out, "minimum mean_s"));

    const RunResult a = run(args, false);
    const RunResult b = run(args, false);
    CHECK(a.out == b.out);
    CHECK(has(a.out, "\n60,0.02,5,"));
    CHECK(has(a.out, "\n60,0.05,5,"));
}

TEST_CASE("experiment --json writes the csv aside") {
    const std::string csv_path = temp_path("exp.csv");
    CHECK(run("experiment --n 40 --trials 3 --p-grid 0.05 --json").code == 2);

    const RunResult r = run("experiment --n 40 --trials 3 --p-grid 0.025,0.1 --seed 4 "
                            "--out " + csv_path + " --json", false);
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["n"] == 40);
    CHECK(j["trials"] == 3);
    CHECK(j["points"].size() == 2);
    CHECK(j["best"].contains("p"));

    std::ifstream in(csv_path);
    REQUIRE(in.good());
    std::string header;
    std::getline(in, header);
    CHECK(header == "n,p,trials,mean_s,std_s,lower_bound,upper_bound");
    std::filesystem::remove(csv_path);
}

TEST_CASE("experiment validates its grid") {
    CHECK(run("experiment --n 40 --p-grid 0").code == 2);
    CHECK(run("experiment --n 40 --p-grid 1.5").code == 2);
    CHECK(run("experiment --trials 3").code == 2);  // --n is required
}

TEST_CASE("usage and file errors exit with code 2") {
    CHECK(run("").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("check /no/such/file.cbn").code == 2);
    CHECK(run("--help").code == 0);

    const std::string path = temp_path("broken.cbn");
    spill(path, "x1 <- x2 x2\nx2 <- x1\nobserve x1\n");
    const RunResult r = run("check " + path);
    CHECK(r.code == 2);
    CHECK(has(r.out, "duplicate"));
    std::filesystem::remove(path);
}
