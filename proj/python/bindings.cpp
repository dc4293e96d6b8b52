#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <string>
#include <vector>

#include "swgsemo/algorithms.hpp"
#include "swgsemo/coverage.hpp"
#include "swgsemo/diagnostics.hpp"
#include "swgsemo/experiment.hpp"
#include "swgsemo/graph.hpp"
#include "swgsemo/stats.hpp"

namespace py = pybind11;
using namespace swgsemo;

namespace {

auto to_bits(std::vector<bool> const& bits) -> BitVector {
    BitVector x(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) { x.set(i, bits[i]); }
    return x;
}

auto from_bits(BitVector const& x) -> std::vector<bool> {
    std::vector<bool> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) { out[i] = x.test(i); }
    return out;
}

auto front_list(RunResult const& r) -> std::vector<std::pair<double, double>> {
    std::vector<std::pair<double, double>> out;
    for (auto const& p : export_front(r)) { out.emplace_back(p.cost, p.f); }
    return out;
}

auto make_config(std::uint64_t t_max, std::uint64_t seed, std::string const& mutation, std::uint64_t trace)
    -> AlgorithmConfig {
    AlgorithmConfig c;
    c.t_max = t_max;
    c.seed = seed;
    auto const kind = parse_mutation_kind(mutation);
    if (!kind) { throw std::invalid_argument("mutation must be 'plus' or 'standard'"); }
    c.mutation = *kind;
    c.trace_period = trace;
    return c;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "GSEMO and sliding-window GSEMO for budget-constrained maximum coverage";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::class_<Graph>(m, "Graph")
        .def_readonly("n", &Graph::n)
        .def_readonly("edges", &Graph::edges)
        .def_readonly("labels", &Graph::labels)
        .def("to_matrix_market", [](Graph const& g) { return to_matrix_market(g); })
        .def("__repr__", [](Graph const& g) {
            return "<Graph n=" + std::to_string(g.n) + " edges=" + std::to_string(g.edges.size()) + ">";
        });

    m.def("parse_edge_list", [](std::string const& text) { return parse_edge_list(std::string_view{text}); },
          py::arg("text"));
    m.def("read_graph_file", &read_graph_file, py::arg("path"));
    m.def("closed_neighborhoods", &closed_neighborhoods, py::arg("graph"));

    py::class_<CoverageInstance>(m, "CoverageInstance")
        .def_property_readonly("n", &CoverageInstance::dimension)
        .def_property_readonly("budget", &CoverageInstance::budget)
        .def_property_readonly("node_costs",
                               [](CoverageInstance const& c) {
                                   auto s = c.node_costs();
                                   return std::vector<double>(s.begin(), s.end());
                               })
        .def("coverage", [](CoverageInstance const& c, std::vector<bool> const& x) {
            return c.coverage_value(to_bits(x));
        })
        .def("cost", [](CoverageInstance const& c, std::vector<bool> const& x) { return c.cost_value(to_bits(x)); })
        .def("evaluate", [](CoverageInstance const& c, std::vector<bool> const& x) {
            auto const v = c.evaluate(to_bits(x));
            return py::make_tuple(v.f, v.cost, v.feasible);
        });

    m.def(
        "coverage_instance",
        [](Graph const& g, double budget, std::string const& cost, double lo, double hi, std::uint64_t cost_seed) {
            auto const model = cost == "uniform" ? CostModel::uniform() : CostModel::random_interval(lo, hi, cost_seed);
            if (cost != "uniform" && cost != "random") { throw std::invalid_argument("cost must be uniform or random"); }
            return make_coverage_instance(g, model, budget);
        },
        py::arg("graph"), py::arg("budget"), py::arg("cost") = "uniform", py::arg("lo") = 0.5, py::arg("hi") = 1.5,
        py::arg("cost_seed") = 0);

    m.def(
        "effective_budget",
        [](std::string const& rule, std::size_t n) {
            auto const r = parse_budget_rule(rule);
            if (!r) { throw std::invalid_argument("unknown budget rule " + rule); }
            return effective_budget(*r, n);
        },
        py::arg("rule"), py::arg("n"));

    py::class_<RunResult>(m, "RunResult")
        .def_property_readonly("best_f", [](RunResult const& r) { return r.best.objectives.f; })
        .def_property_readonly("best_cost", [](RunResult const& r) { return r.best.objectives.cost; })
        .def_property_readonly("best", [](RunResult const& r) { return from_bits(r.best.genotype); })
        .def_property_readonly("evaluations", [](RunResult const& r) { return r.evaluations; })
        .def_property_readonly("archive_size", [](RunResult const& r) { return r.final_archive.size(); })
        .def_property_readonly("front", &front_list)
        .def_property_readonly("trace", [](RunResult const& r) {
            std::vector<std::tuple<std::uint64_t, double, std::size_t>> out;
            for (auto const& s : r.trace) { out.emplace_back(s.iteration, s.best_f, s.archive_size); }
            return out;
        });

    m.def(
        "run",
        [](CoverageInstance const& instance, std::string const& algorithm, std::uint64_t t_max, std::uint64_t seed,
           std::string const& mutation, std::uint64_t trace) {
            auto const algo = parse_algorithm(algorithm);
            if (!algo) { throw std::invalid_argument("algorithm must be 'gsemo' or 'sw-gsemo'"); }
            auto const config = make_config(t_max, seed, mutation, trace);
            py::gil_scoped_release release;
            return run_algorithm(*algo, instance, config);
        },
        py::arg("instance"), py::arg("algorithm") = "sw-gsemo", py::arg("t_max") = 100000, py::arg("seed") = 0,
        py::arg("mutation") = "plus", py::arg("trace") = 0);

    m.def("recommended_tmax_uniform", &recommended_tmax_uniform, py::arg("n"), py::arg("r"));
    m.def("recommended_tmax_general", &recommended_tmax_general, py::arg("n"), py::arg("budget"), py::arg("delta"));

    m.def(
        "brute_force_optimum",
        [](CoverageInstance const& instance) {
            auto const opt = brute_force_optimum(instance);
            return py::make_tuple(opt.value, from_bits(opt.witness));
        },
        py::arg("instance"));

    m.def(
        "mann_whitney_u",
        [](std::vector<double> const& a, std::vector<double> const& b, std::string const& method) {
            auto mm = MannWhitneyMethod::automatic;
            if (method == "exact") {
                mm = MannWhitneyMethod::exact;
            } else if (method == "normal") {
                mm = MannWhitneyMethod::normal;
            } else if (method != "auto") {
                throw std::invalid_argument("method must be auto, exact or normal");
            }
            auto const r = mann_whitney_u(a, b, mm);
            return py::make_tuple(r.u, r.p_value);
        },
        py::arg("a"), py::arg("b"), py::arg("method") = "auto");

    m.def(
        "summarize",
        [](std::vector<double> const& sample) {
            auto const s = summarize(sample);
            return py::make_tuple(s.mean, s.std);
        },
        py::arg("sample"));

    m.def(
        "run_experiment",
        [](Graph const& graph, std::string const& name, double budget, std::string const& cost, std::uint64_t cost_seed,
           std::vector<std::uint64_t> const& t_max, std::size_t repetitions, std::uint64_t seed,
           std::vector<std::string> const& algorithms, std::size_t workers) {
            ExperimentConfig config;
            config.instance_name = name;
            config.graph = graph;
            config.cost_model = cost == "uniform" ? CostModel::uniform() : CostModel::random_interval(0.5, 1.5, cost_seed);
            config.budget_rule = BudgetRule::explicit_value;
            config.budget_value = budget;
            config.t_max_values = t_max;
            config.repetitions = repetitions;
            config.base_seed = seed;
            config.algorithms.clear();
            for (auto const& a : algorithms) {
                auto const algo = parse_algorithm(a);
                if (!algo) { throw std::invalid_argument("unknown algorithm " + a); }
                config.algorithms.push_back(*algo);
            }
            config.workers = workers;
            ExperimentReport report;
            {
                py::gil_scoped_release release;
                report = run_experiment(config);
            }
            return py::make_tuple(report_to_csv(report), report_to_json(report));
        },
        py::arg("graph"), py::arg("name"), py::arg("budget"), py::arg("cost") = "uniform", py::arg("cost_seed") = 0,
        py::arg("t_max") = std::vector<std::uint64_t>{100000}, py::arg("repetitions") = 30, py::arg("seed") = 0,
        py::arg("algorithms") = std::vector<std::string>{"gsemo", "sw-gsemo"}, py::arg("workers") = 0);
}
