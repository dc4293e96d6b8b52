// swgsemo: command-line driver for GSEMO / SW-GSEMO on maximum coverage.
//
// Exit codes: 0 success, 1 usage error, 2 data or parse error.

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "swgsemo/algorithms.hpp"
#include "swgsemo/coverage.hpp"
#include "swgsemo/diagnostics.hpp"
#include "swgsemo/experiment.hpp"
#include "swgsemo/graph.hpp"

namespace {

using namespace swgsemo;
using Json = nlohmann::ordered_json;

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Flags shared by run, front and oracle.
struct InstanceFlags {
    std::string graph;
    std::string cost{"uniform"};
    double cost_lo{0.5};
    double cost_hi{1.5};
    std::uint64_t cost_seed{0};
    std::optional<double> budget;
    std::string budget_rule;

    void add_to(CLI::App& cmd) {
        cmd.add_option("--graph", graph, "Edge list or MatrixMarket file (.gz accepted)")->required();
        cmd.add_option("--cost", cost, "Node cost model")->check(CLI::IsMember({"uniform", "random"}));
        cmd.add_option("--cost-lo", cost_lo, "Lower end of the random cost interval");
        cmd.add_option("--cost-hi", cost_hi, "Upper end of the random cost interval");
        cmd.add_option("--cost-seed", cost_seed, "Seed of the random node costs (fixed per instance)");
        auto* b = cmd.add_option("--budget", budget, "Explicit budget B");
        auto* r = cmd.add_option("--budget-rule", budget_rule, "B from n: log2n, sqrtn, n20 or n10")
                      ->check(CLI::IsMember({"log2n", "sqrtn", "n20", "n10"}));
        b->excludes(r);
    }

    [[nodiscard]] auto cost_model() const -> CostModel {
        if (cost == "uniform") { return CostModel::uniform(); }
        if (!(cost_lo < cost_hi) || !(cost_lo > 0.0)) {
            throw UsageError("random costs need 0 < --cost-lo < --cost-hi");
        }
        return CostModel::random_interval(cost_lo, cost_hi, cost_seed);
    }

    [[nodiscard]] auto rule() const -> BudgetRule {
        if (budget) {
            if (!(*budget >= 0.0)) { throw UsageError("--budget must be non-negative"); }
            return BudgetRule::explicit_value;
        }
        if (budget_rule.empty()) { throw UsageError("one of --budget or --budget-rule is required"); }
        return *parse_budget_rule(budget_rule);
    }

    void validate() const {
        (void)cost_model();
        (void)rule();
    }
};

struct LoadedInstance {
    Graph graph;
    CoverageInstance instance;
    BudgetRule rule;
};

auto load_graph(std::string const& path) -> Graph {
    try {
        return read_graph_file(path);
    } catch (ParseError const& e) {
        throw DataError(path + ": " + e.what());
    } catch (std::runtime_error const& e) {
        throw DataError(e.what());
    }
}

auto load_instance(InstanceFlags const& flags) -> LoadedInstance {
    auto graph = load_graph(flags.graph);
    auto const rule = flags.rule();
    auto const budget = effective_budget(rule, graph.n, flags.budget.value_or(0.0));
    auto instance = make_coverage_instance(graph, flags.cost_model(), budget);
    return {std::move(graph), std::move(instance), rule};
}

void write_file(std::string const& path, std::string const& content) {
    std::ofstream out(path);
    if (!out) { throw DataError("cannot write " + path); }
    out << content;
}

auto instance_json(InstanceFlags const& flags, LoadedInstance const& loaded) -> Json {
    Json j;
    j["graph"] = flags.graph;
    j["n"] = loaded.graph.n;
    j["edges"] = loaded.graph.edges.size();
    j["cost_model"] = flags.cost;
    j["budget_rule"] = to_string(loaded.rule);
    j["B"] = loaded.instance.budget();
    return j;
}

void print_instance(std::ostream& out, Json const& j) {
    out << "graph:        " << j["graph"].get<std::string>() << " (n=" << j["n"] << ", edges=" << j["edges"] << ")\n"
        << "cost model:   " << j["cost_model"].get<std::string>() << '\n'
        << "budget:       " << format_number(j["B"].get<double>()) << " (rule: "
        << j["budget_rule"].get<std::string>() << ")\n";
}

// --- run / front --------------------------------------------------------------

struct RunFlags {
    InstanceFlags instance;
    std::string algo{"sw-gsemo"};
    std::uint64_t tmax{100'000};
    std::uint64_t seed{0};
    std::string mutation{"plus"};
    std::uint64_t trace{0};
    std::string front_out;
    bool json{false};

    void add_to(CLI::App& cmd) {
        instance.add_to(cmd);
        cmd.add_option("--algo", algo, "Algorithm")->check(CLI::IsMember({"gsemo", "sw-gsemo"}));
        cmd.add_option("--tmax", tmax, "Iteration budget (fitness evaluations)");
        cmd.add_option("--seed", seed, "Run seed");
        cmd.add_option("--mutation", mutation, "Mutation operator")->check(CLI::IsMember({"plus", "standard"}));
        cmd.add_option("--trace", trace, "Snapshot period in iterations (0 = off)");
        cmd.add_option("--front-out", front_out, "Write the final front as cost,f CSV");
        cmd.add_flag("--json", json, "Machine-readable output");
    }
};

auto execute_run(RunFlags const& flags) -> std::pair<LoadedInstance, RunResult> {
    flags.instance.validate();
    auto loaded = load_instance(flags.instance);
    AlgorithmConfig config;
    config.t_max = flags.tmax;
    config.seed = flags.seed;
    config.mutation = *parse_mutation_kind(flags.mutation);
    config.trace_period = flags.trace;
    auto result = run_algorithm(*parse_algorithm(flags.algo), loaded.instance, config);
    return {std::move(loaded), std::move(result)};
}

auto cmd_run(RunFlags const& flags) -> int {
    auto const [loaded, result] = execute_run(flags);
    if (!flags.front_out.empty()) { write_file(flags.front_out, front_to_csv(export_front(result))); }

    Json j = instance_json(flags.instance, loaded);
    j["algorithm"] = flags.algo;
    j["mutation"] = flags.mutation;
    j["t_max"] = flags.tmax;
    j["seed"] = flags.seed;
    j["best_f"] = result.best.objectives.f;
    j["best_cost"] = result.best.objectives.cost;
    j["evaluations"] = result.evaluations;
    j["archive_size"] = result.final_archive.size();
    Json trace = Json::array();
    for (auto const& s : result.trace) {
        trace.push_back(Json{{"iteration", s.iteration}, {"best_f", s.best_f}, {"archive_size", s.archive_size}});
    }
    j["trace"] = std::move(trace);

    if (flags.json) {
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    print_instance(std::cout, j);
    std::cout << "algorithm:    " << flags.algo << " (mutation: " << flags.mutation << ")\n"
              << "t_max:        " << flags.tmax << '\n'
              << "seed:         " << flags.seed << '\n'
              << "best f:       " << format_number(result.best.objectives.f) << '\n'
              << "best cost:    " << format_number(result.best.objectives.cost) << '\n'
              << "evaluations:  " << result.evaluations << '\n'
              << "archive size: " << result.final_archive.size() << '\n';
    if (!result.trace.empty()) {
        std::cout << "trace (iteration best_f archive_size):\n";
        for (auto const& s : result.trace) {
            std::cout << "  " << s.iteration << ' ' << format_number(s.best_f) << ' ' << s.archive_size << '\n';
        }
    }
    return 0;
}

auto cmd_front(RunFlags const& flags) -> int {
    auto const [loaded, result] = execute_run(flags);
    auto const front = export_front(result);
    if (!flags.front_out.empty()) { write_file(flags.front_out, front_to_csv(front)); }
    if (flags.json) {
        Json points = Json::array();
        for (auto const& p : front) { points.push_back(Json{{"cost", p.cost}, {"f", p.f}}); }
        Json j = instance_json(flags.instance, loaded);
        j["algorithm"] = flags.algo;
        j["t_max"] = flags.tmax;
        j["seed"] = flags.seed;
        j["front"] = std::move(points);
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << front_to_csv(front);
    }
    return 0;
}

// --- bench --------------------------------------------------------------------

struct BenchFlags {
    InstanceFlags instance;
    std::string name;
    std::vector<std::uint64_t> tmax{100'000};
    std::size_t reps{30};
    std::uint64_t seed{0};
    std::vector<std::string> algos{"gsemo", "sw-gsemo"};
    std::string mutation{"plus"};
    std::size_t workers{0};
    std::string csv_out;
    std::string json_out;
    bool json{false};

    void add_to(CLI::App& cmd) {
        instance.add_to(cmd);
        cmd.add_option("--name", name, "Instance label in reports (default: graph file stem)");
        cmd.add_option("--tmax", tmax, "Iteration budgets (repeatable)")->expected(1, -1);
        cmd.add_option("--reps", reps, "Runs per algorithm and t_max")->check(CLI::PositiveNumber);
        cmd.add_option("--seed", seed, "Base seed");
        cmd.add_option("--algos", algos, "Algorithms to compare")
            ->expected(1, 2)
            ->check(CLI::IsMember({"gsemo", "sw-gsemo"}));
        cmd.add_option("--mutation", mutation, "Mutation operator")->check(CLI::IsMember({"plus", "standard"}));
        cmd.add_option("--workers", workers, "Worker threads (default: $SWGSEMO_WORKERS or all cores)");
        cmd.add_option("--csv", csv_out, "Write per-run rows to this CSV file");
        cmd.add_option("--json-out", json_out, "Write the JSON summary to this file");
        cmd.add_flag("--json", json, "Print the JSON summary instead of a table");
    }
};

auto cmd_bench(BenchFlags const& flags) -> int {
    flags.instance.validate();
    ExperimentConfig config;
    config.instance_name = flags.name;
    config.graph_path = flags.instance.graph;
    config.cost_model = flags.instance.cost_model();
    config.budget_rule = flags.instance.rule();
    config.budget_value = flags.instance.budget.value_or(0.0);
    config.t_max_values = flags.tmax;
    config.repetitions = flags.reps;
    config.base_seed = flags.seed;
    config.algorithms.clear();
    for (auto const& a : flags.algos) {
        auto const parsed = *parse_algorithm(a);
        if (std::find(config.algorithms.begin(), config.algorithms.end(), parsed) != config.algorithms.end()) {
            throw UsageError("--algos lists " + a + " twice");
        }
        config.algorithms.push_back(parsed);
    }
    config.mutation = *parse_mutation_kind(flags.mutation);
    config.workers = flags.workers;

    config.graph = load_graph(flags.instance.graph);
    auto const report = run_experiment(config);

    if (!flags.csv_out.empty()) { write_file(flags.csv_out, report_to_csv(report)); }
    auto const json = report_to_json(report);
    if (!flags.json_out.empty()) { write_file(flags.json_out, json); }
    if (flags.json) {
        std::cout << json;
        return 0;
    }
    std::cout << report.instance_name << " n=" << report.n << " cost=" << report.cost_model
              << " B=" << format_number(report.budget) << " reps=" << report.repetitions << '\n';
    // The table rounds for reading; --json and --csv carry full precision.
    {
        char header[160];
        std::snprintf(header, sizeof header, "%-10s  %-10s  %10s  %9s  %9s  %s\n", "algorithm", "t_max", "mean", "std",
                      "pop_mean", "p_value");
        std::cout << header;
    }
    for (auto const& r : report.records) {
        char line[160];
        std::snprintf(line, sizeof line, "%-10s  %-10llu  %10.2f  %9.3f  %9.2f  ", std::string(to_string(r.algorithm)).c_str(),
                      static_cast<unsigned long long>(r.t_max), r.best_f_summary.mean, r.best_f_summary.std,
                      r.final_pop_summary.mean);
        std::cout << line;
        if (r.p_value) {
            std::snprintf(line, sizeof line, "%.3g%s", *r.p_value, is_significant(*r.p_value) ? " *" : "");
            std::cout << line;
        } else {
            std::cout << '-';
        }
        std::cout << '\n';
    }
    return 0;
}

// --- tmax ---------------------------------------------------------------------

struct TmaxFlags {
    std::optional<std::uint64_t> n;
    std::optional<std::uint64_t> r;
    std::optional<double> budget;
    std::optional<double> delta;
    bool json{false};

    void add_to(CLI::App& cmd) {
        cmd.add_option("--n", n, "Problem dimension")->required();
        cmd.add_option("--r", r, "Uniform constraint size");
        cmd.add_option("--budget", budget, "Budget B (general constraint)");
        cmd.add_option("--delta", delta, "Minimum marginal cost gain (general constraint)");
        cmd.add_flag("--json", json, "Machine-readable output");
    }
};

auto cmd_tmax(TmaxFlags const& flags) -> int {
    if (!flags.r && !(flags.budget && flags.delta)) { throw UsageError("give --r, or --budget together with --delta"); }
    if (flags.r && (*flags.n < 2 || *flags.r < 1)) { throw UsageError("uniform schedule needs --n >= 2 and --r >= 1"); }
    if (flags.budget || flags.delta) {
        if (!(flags.budget && flags.delta)) { throw UsageError("--budget and --delta go together"); }
        if (!(*flags.delta > 0.0)) { throw UsageError("--delta must be positive"); }
        if (!(*flags.budget > 0.0)) { throw UsageError("--budget must be positive"); }
        if (*flags.n < 1) { throw UsageError("--n must be at least 1"); }
    }

    Json j;
    j["n"] = *flags.n;
    if (flags.r) {
        j["r"] = *flags.r;
        j["uniform"] = recommended_tmax_uniform(*flags.n, *flags.r);
    }
    if (flags.budget) {
        j["B"] = *flags.budget;
        j["delta"] = *flags.delta;
        j["general"] = recommended_tmax_general(*flags.n, *flags.budget, *flags.delta);
    }
    if (flags.json) {
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    if (j.contains("uniform")) { std::cout << j["uniform"].get<std::uint64_t>() << '\n'; }
    if (j.contains("general")) { std::cout << j["general"].get<std::uint64_t>() << '\n'; }
    return 0;
}

// --- oracle -------------------------------------------------------------------

struct OracleFlags {
    InstanceFlags instance;
    bool json{false};

    void add_to(CLI::App& cmd) {
        instance.add_to(cmd);
        cmd.add_flag("--json", json, "Machine-readable output");
    }
};

auto cmd_oracle(OracleFlags const& flags) -> int {
    flags.instance.validate();
    auto const loaded = load_instance(flags.instance);
    Optimum opt;
    try {
        opt = brute_force_optimum(loaded.instance);
    } catch (std::domain_error const& e) {
        throw DataError(e.what());
    }
    std::vector<std::uint64_t> witness;
    opt.witness.for_each_set([&](std::size_t i) { witness.push_back(loaded.graph.labels[i]); });

    Json j = instance_json(flags.instance, loaded);
    j["optimum"] = opt.value;
    j["witness"] = witness;
    j["witness_bits"] = opt.witness.to_string();
    if (flags.json) {
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    print_instance(std::cout, j);
    std::cout << "optimum:      " << format_number(opt.value) << '\n' << "witness:     ";
    for (auto w : witness) { std::cout << ' ' << w; }
    std::cout << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pareto optimization (GSEMO / sliding-window GSEMO) for budget-constrained maximum coverage"};
    app.require_subcommand(1);
    // Config files are read by the root app; bench flags go under [bench].
    app.set_config("--config", "", "TOML/INI file; bench flags go in a [bench] section");

    RunFlags run_flags;
    auto* run = app.add_subcommand("run", "Run one algorithm once and print the best feasible solution");
    run_flags.add_to(*run);

    RunFlags front_flags;
    auto* front = app.add_subcommand("front", "Run once and print the final trade-off front as cost,f CSV");
    front_flags.add_to(*front);

    BenchFlags bench_flags;
    auto* bench = app.add_subcommand("bench", "Repeated seeded runs with summary statistics and U-test p-values");
    bench_flags.add_to(*bench);
    bench->fallthrough(); // lets `bench --config FILE` reach the root option

    TmaxFlags tmax_flags;
    auto* tmax = app.add_subcommand("tmax", "Recommended iteration budgets");
    tmax_flags.add_to(*tmax);

    OracleFlags oracle_flags;
    auto* oracle = app.add_subcommand("oracle", "Exact optimum by enumeration (small instances only)");
    oracle_flags.add_to(*oracle);

    try {
        app.parse(argc, argv);
    } catch (CLI::CallForHelp const& e) {
        return app.exit(e);
    } catch (CLI::CallForAllHelp const& e) {
        return app.exit(e);
    } catch (CLI::ParseError const& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (run->parsed()) { return cmd_run(run_flags); }
        if (front->parsed()) { return cmd_front(front_flags); }
        if (bench->parsed()) { return cmd_bench(bench_flags); }
        if (tmax->parsed()) { return cmd_tmax(tmax_flags); }
        if (oracle->parsed()) { return cmd_oracle(oracle_flags); }
    } catch (UsageError const& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (DataError const& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    } catch (std::invalid_argument const& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (std::exception const& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitUsage;
}
