// cbnobs — observability tooling for conjunctive Boolean networks.
//
// Exit codes: 0 = success (and "observable" for check/oracle), 1 = negative
// domain outcome (not observable, unusable trace), 2 = usage/parse errors.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cbnobs/format.hpp"
#include "cbnobs/graph.hpp"
#include "cbnobs/minimal.hpp"
#include "cbnobs/observability.hpp"
#include "cbnobs/observer.hpp"
#include "cbnobs/oracle.hpp"
#include "cbnobs/random.hpp"
#include "cbnobs/reductions.hpp"

using nlohmann::json;
using namespace cbnobs;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << content;
}

std::string xname(int v) { return "x" + std::to_string(v + 1); }

std::string xlist(const std::vector<int>& vs) {
    if (vs.empty()) return "(none)";
    std::string out;
    for (size_t i = 0; i < vs.size(); ++i) out += (i ? " " : "") + xname(vs[i]);
    return out;
}

std::string cycle_list(const std::vector<std::vector<int>>& cycles) {
    if (cycles.empty()) return "(none)";
    std::string out;
    for (size_t c = 0; c < cycles.size(); ++c) {
        out += c ? " {" : "{";
        for (size_t i = 0; i < cycles[c].size(); ++i)
            out += (i ? " " : "") + xname(cycles[c][i]);
        out += "}";
    }
    return out;
}

json indices_json(const std::vector<int>& vs) {
    json arr = json::array();
    for (int v : vs) arr.push_back(v + 1);
    return arr;
}

json cycles_json(const std::vector<std::vector<int>>& cycles) {
    json arr = json::array();
    for (const auto& cycle : cycles) arr.push_back(indices_json(cycle));
    return arr;
}

std::vector<int> constant_variables(const Cbn& cbn) {
    std::vector<int> result;
    for (int v = 0; v < cbn.n; ++v)
        if (cbn.updates[v].empty()) result.push_back(v);
    return result;
}

int cmd_check(const std::string& path, bool as_json) {
    Cbn cbn = parse_cbn(read_file(path));
    ObservabilityVerdict verdict = is_observable(cbn);
    Decomposition cover = decompose(build_dependency_graph(cbn));
    std::vector<int> constants = constant_variables(cbn);

    if (as_json) {
        json j;
        j["observable"] = verdict.observable;
        j["o1_violations"] = indices_json(verdict.o1_violations);
        j["o2_cycles"] = cycles_json(verdict.o2_violations);
        if (verdict.observable) {
            json paths = json::array();
            for (const auto& path : cover.paths) paths.push_back(indices_json(path.nodes));
            j["paths"] = paths;
        }
        j["constants"] = indices_json(constants);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "observable: " << (verdict.observable ? "yes" : "no") << "\n";
        if (verdict.observable) {
            std::cout << "paths:";
            for (size_t i = 0; i < cover.paths.size(); ++i)
                std::cout << (i ? " | " : " ") << xlist(cover.paths[i].nodes);
            std::cout << "\n";
        } else {
            std::cout << "o1 violations: " << xlist(verdict.o1_violations) << "\n";
            std::cout << "o2 cycles: " << cycle_list(verdict.o2_violations) << "\n";
        }
        if (!constants.empty())
            std::cout << "constants: " << xlist(constants) << "\n";
    }
    return verdict.observable ? 0 : 1;
}

int cmd_solve(const std::string& path, bool all, bool as_json) {
    Cbn cbn = parse_cbn(read_file(path));
    MinimalSolution solution = solve_minimal(cbn);
    SolutionSpace space = enumerate_solution_space(solution);

    if (as_json) {
        json j;
        j["add"] = indices_json(solution.chosen);
        j["forced"] = indices_json(solution.forced);
        j["cycles"] = cycles_json(solution.cycles);
        j["representative_rule"] = solution.representative_rule;
        if (all) {
            j["solution_count"] = space.count;
            j["solution_count_saturated"] = space.count_saturated;
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "add: " << xlist(solution.chosen) << "\n";
        if (all) {
            std::cout << "forced: " << xlist(space.forced) << "\n";
            std::cout << "cycle choices: " << cycle_list(space.cycle_choices) << "\n";
            std::cout << "solutions: " << space.count
                      << (space.count_saturated ? "+" : "") << "\n";
        }
    }
    return 0;
}

int cmd_observe(const std::string& path, const std::string& trace_path, bool as_json) {
    Cbn cbn = parse_cbn(read_file(path));
    ObserverPlan plan = build_observer(cbn);
    OutputTrace trace = parse_trace_csv(read_file(trace_path));
    State x0 = reconstruct_initial_state(plan, trace);

    if (as_json) {
        json j;
        json state = json::array();
        for (auto bit : x0) state.push_back(static_cast<int>(bit));
        j["initial_state"] = state;
        j["horizon"] = plan.horizon;
        json sources = json::array();
        for (int v = 0; v < cbn.n; ++v)
            sources.push_back({{"variable", v + 1},
                               {"output", plan.sources[v].output_node + 1},
                               {"offset", plan.sources[v].offset}});
        j["sources"] = sources;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "initial state:";
        for (auto bit : x0) std::cout << " " << static_cast<int>(bit);
        std::cout << "\n";
        for (int v = 0; v < cbn.n; ++v)
            std::cout << xname(v) << " <- y" << plan.sources[v].output_node + 1 << "["
                      << plan.sources[v].offset << "]\n";
    }
    return 0;
}

int cmd_reduce(const std::string& path, bool dbn, bool cbcn, bool aug,
               const std::string& out_path) {
    if (static_cast<int>(dbn) + static_cast<int>(cbcn) + static_cast<int>(aug) != 1)
        throw std::invalid_argument("pick exactly one of --dbn, --cbcn, --aug-outputs");
    NetworkFile file = parse_network(read_file(path));

    std::string header;
    Cbn reduced;
    if (dbn) {
        reduced = reduce_dbn(file.to_dbn());
        header = "# " + std::string(kDbnComplementNote) + "\n";
    } else if (cbcn) {
        reduced = reduce_cbcn(file.to_cbcn());
    } else {
        reduced = reduce_general_outputs(file.to_general_outputs());
    }

    std::string text = header + serialize_cbn(reduced);
    if (out_path.empty())
        std::cout << text;
    else
        write_file(out_path, text);
    return 0;
}

int cmd_experiment(int n, std::vector<double> grid, int trials, std::uint64_t seed,
                   const std::string& out_path, const std::string& per_trial_path,
                   bool self_loops, bool as_json) {
    ErConfig cfg;
    cfg.n = n;
    cfg.p = 0.0;
    cfg.seed = seed;
    cfg.trials = trials;
    cfg.self_loops_allowed = self_loops;
    cfg.validate();
    if (grid.empty()) grid = default_p_grid(n);
    for (double p : grid)
        if (!(p > 0.0 && p <= 1.0))
            throw std::invalid_argument("grid values must be in (0, 1]");
    if (as_json && out_path.empty())
        throw std::invalid_argument("--json needs --out (stdout carries the CSV otherwise)");

    std::vector<ExperimentRecord> records = run_experiment(cfg, grid);
    std::string csv = write_experiment_csv(records);
    if (out_path.empty())
        std::cout << csv;
    else
        write_file(out_path, csv);
    if (!per_trial_path.empty()) write_file(per_trial_path, write_per_trial_csv(records));

    const ExperimentRecord* best = &records.front();
    for (const auto& rec : records)
        if (rec.mean_s < best->mean_s) best = &rec;

    if (as_json) {
        json j;
        j["n"] = n;
        j["trials"] = trials;
        j["seed"] = seed;
        json points = json::array();
        for (const auto& rec : records)
            points.push_back({{"p", rec.p},
                              {"mean_s", rec.mean_s},
                              {"std_s", rec.std_s},
                              {"lower_bound", rec.lower_bound},
                              {"upper_bound", rec.upper_bound}});
        j["points"] = points;
        j["best"] = {{"p", best->p}, {"mean_s", best->mean_s}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cerr << "grid points: " << records.size() << ", trials per point: " << trials
                  << "\n";
        char line[128];
        std::snprintf(line, sizeof(line), "minimum mean_s %.4f at p = %.10g", best->mean_s,
                      best->p);
        std::cerr << line << "\n";
        if (!out_path.empty()) std::cerr << "wrote " << out_path << "\n";
    }
    return 0;
}

int cmd_oracle(const std::string& path, bool as_json) {
    Cbn cbn = parse_cbn(read_file(path));
    OracleResult result = oracle_check(cbn);

    if (as_json) {
        json j;
        j["observable"] = result.observable;
        if (!result.observable) {
            json a = json::array(), b = json::array();
            for (auto bit : result.witness_a) a.push_back(static_cast<int>(bit));
            for (auto bit : result.witness_b) b.push_back(static_cast<int>(bit));
            j["witness"] = {a, b};
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "observable: " << (result.observable ? "yes" : "no") << "\n";
        if (!result.observable) {
            std::cout << "witness a:";
            for (auto bit : result.witness_a) std::cout << " " << static_cast<int>(bit);
            std::cout << "\nwitness b:";
            for (auto bit : result.witness_b) std::cout << " " << static_cast<int>(bit);
            std::cout << "\n";
        }
    }
    return result.observable ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"observability tooling for conjunctive Boolean networks"};
    app.require_subcommand(1);

    std::string path, trace_path, out_path, per_trial_path;
    bool as_json = false, all = false;
    bool dbn = false, cbcn = false, aug = false;
    int n = 0, trials = 100;
    std::uint64_t seed = 1;
    std::vector<double> grid;
    bool self_loops = true;

    CLI::App* check = app.add_subcommand("check", "decide observability from the graph");
    check->add_option("file", path, "network file")->required();
    check->add_flag("--json", as_json, "machine-readable output");

    CLI::App* solve = app.add_subcommand("solve", "minimal set of sensors to add");
    solve->add_option("file", path, "network file")->required();
    solve->add_flag("--all", all, "describe the whole space of minimal solutions");
    solve->add_flag("--json", as_json, "machine-readable output");

    CLI::App* observe =
        app.add_subcommand("observe", "reconstruct the initial state from a trace");
    observe->add_option("file", path, "network file")->required();
    observe->add_option("trace", trace_path, "output trace CSV")->required();
    observe->add_flag("--json", as_json, "machine-readable output");

    CLI::App* reduce = app.add_subcommand("reduce", "rewrite a variant network as a plain one");
    reduce->add_option("file", path, "network file")->required();
    reduce->add_flag("--dbn", dbn, "OR network (states complemented)");
    reduce->add_flag("--cbcn", cbcn, "controlled network (inputs pinned to 1)");
    reduce->add_flag("--aug-outputs", aug, "general outputs become relay variables");
    reduce->add_option("-o,--out", out_path, "write here instead of stdout");

    CLI::App* experiment =
        app.add_subcommand("experiment", "sensor share of random networks across p");
    experiment->add_option("--n", n, "network size")->required();
    experiment->add_option("--p-grid", grid, "comma-separated p values")->delimiter(',');
    experiment->add_option("--trials", trials, "networks per grid point");
    experiment->add_option("--seed", seed, "RNG seed");
    experiment->add_option("--out", out_path, "results CSV path (default stdout)");
    experiment->add_option("--per-trial", per_trial_path, "long-form per-trial CSV path");
    experiment->add_flag("--self-loops,!--no-self-loops", self_loops,
                         "allow self-loop edges (default on)");
    experiment->add_flag("--json", as_json, "machine-readable summary on stdout");

    CLI::App* oracle =
        app.add_subcommand("oracle", "definition-level check by exhaustive simulation");
    oracle->add_option("file", path, "network file")->required();
    oracle->add_flag("--json", as_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*check) return cmd_check(path, as_json);
        if (*solve) return cmd_solve(path, all, as_json);
        if (*observe) return cmd_observe(path, trace_path, as_json);
        if (*reduce) return cmd_reduce(path, dbn, cbcn, aug, out_path);
        if (*experiment)
            return cmd_experiment(n, grid, trials, seed, out_path, per_trial_path,
                                  self_loops, as_json);
        if (*oracle) return cmd_oracle(path, as_json);
    } catch (const NotObservableError& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << "o1 violations: " << xlist(e.verdict.o1_violations) << "\n";
        std::cerr << "o2 cycles: " << cycle_list(e.verdict.o2_violations) << "\n";
        return 1;
    } catch (const TraceTooShortError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const InconsistentTraceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
