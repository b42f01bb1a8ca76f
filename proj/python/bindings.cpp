// Python bindings for the observability toolkit. The module mirrors the C++
// API one to one; all containers cross the boundary as plain lists.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cbnobs/cbn.hpp"
#include "cbnobs/format.hpp"
#include "cbnobs/graph.hpp"
#include "cbnobs/minimal.hpp"
#include "cbnobs/observability.hpp"
#include "cbnobs/observer.hpp"
#include "cbnobs/oracle.hpp"
#include "cbnobs/random.hpp"
#include "cbnobs/reductions.hpp"

namespace py = pybind11;
using namespace cbnobs;

PYBIND11_MODULE(cbnobs, m) {
    m.doc() = "observability analysis for conjunctive Boolean networks";

    py::register_exception<ParseError>(m, "NetworkParseError", PyExc_ValueError);
    py::register_exception<NotObservableError>(m, "NotObservableError", PyExc_RuntimeError);
    py::register_exception<TraceTooShortError>(m, "TraceTooShortError", PyExc_RuntimeError);
    py::register_exception<InconsistentTraceError>(m, "InconsistentTraceError",
                                                   PyExc_RuntimeError);

    py::class_<Cbn>(m, "Cbn")
        .def(py::init<>())
        .def(py::init([](int n, std::vector<std::vector<int>> updates,
                         std::vector<int> observed) {
                 Cbn cbn;
                 cbn.n = n;
                 cbn.updates = std::move(updates);
                 cbn.observed = std::move(observed);
                 cbn.validate();
                 return cbn;
             }),
             py::arg("n"), py::arg("updates"), py::arg("observed") = std::vector<int>{})
        .def_readwrite("n", &Cbn::n)
        .def_readwrite("updates", &Cbn::updates)
        .def_readwrite("observed", &Cbn::observed)
        .def("validate", &Cbn::validate)
        .def("is_observed", &Cbn::is_observed, py::arg("v"))
        .def("unobserved", &Cbn::unobserved)
        .def(py::self == py::self)
        .def("__repr__",
             [](const Cbn& cbn) {
                 return "<Cbn n=" + std::to_string(cbn.n) + " observed=" +
                        std::to_string(cbn.observed.size()) + ">";
             });

    py::class_<Dbn>(m, "Dbn")
        .def(py::init<>())
        .def_readwrite("net", &Dbn::net);

    py::class_<Cbcn>(m, "Cbcn")
        .def(py::init<>())
        .def_readwrite("net", &Cbcn::net)
        .def_readwrite("input_count", &Cbcn::input_count)
        .def_readwrite("input_args", &Cbcn::input_args);

    py::class_<GeneralOutputCbn>(m, "GeneralOutputCbn")
        .def(py::init<>())
        .def_readwrite("net", &GeneralOutputCbn::net)
        .def_readwrite("outputs", &GeneralOutputCbn::outputs);

    py::enum_<UpdateMode>(m, "UpdateMode")
        .value("And", UpdateMode::And)
        .value("Or", UpdateMode::Or);

    py::class_<NetworkFile>(m, "NetworkFile")
        .def_readonly("mode", &NetworkFile::mode)
        .def("has_inputs", &NetworkFile::has_inputs)
        .def("has_general_outputs", &NetworkFile::has_general_outputs)
        .def("plain", &NetworkFile::plain)
        .def("to_cbn", &NetworkFile::to_cbn)
        .def("to_dbn", &NetworkFile::to_dbn)
        .def("to_cbcn", &NetworkFile::to_cbcn)
        .def("to_general_outputs", &NetworkFile::to_general_outputs);

    m.def("parse_network", &parse_network, py::arg("text"),
          "parse the text network format into whichever variant it declares");
    m.def("parse_cbn", &parse_cbn, py::arg("text"));
    m.def("serialize_cbn", &serialize_cbn, py::arg("cbn"));
    m.def("with_observed", &with_observed, py::arg("cbn"), py::arg("extra"));

    py::class_<ObservabilityVerdict>(m, "ObservabilityVerdict")
        .def_readonly("observable", &ObservabilityVerdict::observable)
        .def_readonly("o1_violations", &ObservabilityVerdict::o1_violations)
        .def_readonly("o2_violations", &ObservabilityVerdict::o2_violations);

    py::class_<ObservedPath>(m, "ObservedPath")
        .def_readonly("nodes", &ObservedPath::nodes)
        .def("output", &ObservedPath::output)
        .def("length", &ObservedPath::length);

    py::class_<Decomposition>(m, "Decomposition")
        .def_readonly("paths", &Decomposition::paths)
        .def_readonly("uncovered", &Decomposition::uncovered)
        .def("complete", &Decomposition::complete);

    m.def("is_observable", &is_observable, py::arg("cbn"));
    m.def(
        "decompose",
        [](const Cbn& cbn) { return decompose(build_dependency_graph(cbn)); },
        py::arg("cbn"));

    py::class_<MinimalSolution>(m, "MinimalSolution")
        .def_readonly("chosen", &MinimalSolution::chosen)
        .def_readonly("forced", &MinimalSolution::forced)
        .def_readonly("cycles", &MinimalSolution::cycles)
        .def_readonly("representative_rule", &MinimalSolution::representative_rule);

    py::class_<SolutionSpace>(m, "SolutionSpace")
        .def_readonly("forced", &SolutionSpace::forced)
        .def_readonly("cycle_choices", &SolutionSpace::cycle_choices)
        .def_readonly("count", &SolutionSpace::count)
        .def_readonly("count_saturated", &SolutionSpace::count_saturated);

    m.def("solve_minimal", &solve_minimal, py::arg("cbn"));
    m.def("enumerate_solution_space", &enumerate_solution_space, py::arg("solution"));
    m.def("verify_minimality_bruteforce", &verify_minimality_bruteforce, py::arg("cbn"),
          py::arg("solution"), py::arg("max_n") = 10);

    py::class_<OracleResult>(m, "OracleResult")
        .def_readonly("observable", &OracleResult::observable)
        .def_readonly("witness_a", &OracleResult::witness_a)
        .def_readonly("witness_b", &OracleResult::witness_b);

    m.def("oracle_check", &oracle_check, py::arg("cbn"), py::arg("max_n") = kOracleMaxN);
    m.def("oracle_is_observable", &oracle_is_observable, py::arg("cbn"),
          py::arg("max_n") = kOracleMaxN);

    py::class_<SourceRef>(m, "SourceRef")
        .def_readonly("output_node", &SourceRef::output_node)
        .def_readonly("offset", &SourceRef::offset);

    py::class_<ObserverPlan>(m, "ObserverPlan")
        .def_readonly("cbn", &ObserverPlan::cbn)
        .def_readonly("cover", &ObserverPlan::cover)
        .def_readonly("horizon", &ObserverPlan::horizon)
        .def_readonly("sources", &ObserverPlan::sources);

    py::class_<OutputTrace>(m, "OutputTrace")
        .def(py::init<>())
        .def_readwrite("nodes", &OutputTrace::nodes)
        .def_readwrite("series", &OutputTrace::series)
        .def("horizon", &OutputTrace::horizon)
        .def("value", &OutputTrace::value, py::arg("node"), py::arg("k"));

    m.def("build_observer", &build_observer, py::arg("cbn"));
    m.def("reconstruct_initial_state", &reconstruct_initial_state, py::arg("plan"),
          py::arg("trace"));
    m.def("simulate", &simulate, py::arg("cbn"), py::arg("x0"), py::arg("steps"));
    m.def("record_trace", &record_trace, py::arg("cbn"), py::arg("x0"), py::arg("samples"));
    m.def("write_trace_csv", &write_trace_csv, py::arg("trace"));
    m.def("parse_trace_csv", &parse_trace_csv, py::arg("text"));

    m.def("reduce_dbn", &reduce_dbn, py::arg("dbn"));
    m.def("reduce_cbcn", &reduce_cbcn, py::arg("cbcn"));
    m.def("reduce_general_outputs", &reduce_general_outputs, py::arg("net"));
    m.attr("DBN_COMPLEMENT_NOTE") = kDbnComplementNote;

    py::class_<ErConfig>(m, "ErConfig")
        .def(py::init<>())
        .def_readwrite("n", &ErConfig::n)
        .def_readwrite("p", &ErConfig::p)
        .def_readwrite("seed", &ErConfig::seed)
        .def_readwrite("trials", &ErConfig::trials)
        .def_readwrite("self_loops_allowed", &ErConfig::self_loops_allowed)
        .def("validate", &ErConfig::validate);

    py::class_<ExperimentRecord>(m, "ExperimentRecord")
        .def_readonly("n", &ExperimentRecord::n)
        .def_readonly("p", &ExperimentRecord::p)
        .def_readonly("trials", &ExperimentRecord::trials)
        .def_readonly("mean_s", &ExperimentRecord::mean_s)
        .def_readonly("std_s", &ExperimentRecord::std_s)
        .def_readonly("lower_bound", &ExperimentRecord::lower_bound)
        .def_readonly("upper_bound", &ExperimentRecord::upper_bound)
        .def_readonly("ks", &ExperimentRecord::ks);

    py::class_<SensorShareBounds>(m, "SensorShareBounds")
        .def_readonly("lower", &SensorShareBounds::lower)
        .def_readonly("upper", &SensorShareBounds::upper);

    m.def("generate_random_cbn", &generate_random_cbn, py::arg("config"), py::arg("trial"));
    m.def("q_of_p", &q_of_p, py::arg("n"), py::arg("p"));
    m.def("bounds", &bounds, py::arg("n"), py::arg("p"));
    m.def("curvature_at", &curvature_at, py::arg("n"), py::arg("p"));
    m.def("run_experiment", &run_experiment, py::arg("config"), py::arg("p_grid"));
    m.def("default_p_grid", &default_p_grid, py::arg("n"));
    m.def("write_experiment_csv", &write_experiment_csv, py::arg("records"));
    m.def("write_per_trial_csv", &write_per_trial_csv, py::arg("records"));
}
