#include "swgsemo/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

namespace swgsemo {
namespace {

auto algorithm_id(Algorithm a) noexcept -> std::uint64_t { return a == Algorithm::gsemo ? 1 : 2; }

struct Cell {
    std::size_t record;
    std::size_t run;
    Algorithm algorithm;
    std::uint64_t t_max;
};

struct CellResult {
    double best_f{0.0};
    std::size_t final_pop{0};
};

template <typename Task>
void parallel_for(std::size_t count, std::size_t workers, Task const& task) {
    workers = std::max<std::size_t>(1, std::min(workers, count));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto const work = [&] {
        for (auto i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
            try {
                task(i);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) { failure = std::current_exception(); }
                next.store(count);
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) { pool.emplace_back(work); }
    }
    if (failure) { std::rethrow_exception(failure); }
}

} // namespace

auto derive_run_seed(std::uint64_t base_seed, Algorithm algorithm, std::size_t run) noexcept -> std::uint64_t {
    return base_seed ^ mix64((algorithm_id(algorithm) << 32) | static_cast<std::uint64_t>(run));
}

auto default_worker_count() -> std::size_t {
    if (char const* env = std::getenv("SWGSEMO_WORKERS"); env != nullptr) {
        std::size_t value = 0;
        std::string_view text{env};
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec == std::errc{} && ptr == text.data() + text.size() && value > 0) { return value; }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

auto run_experiment(ExperimentConfig const& config) -> ExperimentReport {
    if (config.repetitions < 1) { throw std::invalid_argument("repetitions must be at least 1"); }
    if (config.algorithms.empty()) { throw std::invalid_argument("at least one algorithm is required"); }
    if (config.t_max_values.empty()) { throw std::invalid_argument("at least one t_max value is required"); }

    Graph const graph = config.graph ? *config.graph : read_graph_file(config.graph_path);
    auto const budget = effective_budget(config.budget_rule, graph.n, config.budget_value);
    auto const instance = make_coverage_instance(graph, config.cost_model, budget);

    ExperimentReport report;
    report.instance_name = !config.instance_name.empty() ? config.instance_name : config.graph_path.stem().string();
    report.n = graph.n;
    report.cost_model = config.cost_model.name();
    report.budget_rule = config.budget_rule;
    report.budget = budget;
    report.repetitions = config.repetitions;
    report.base_seed = config.base_seed;

    std::vector<Cell> cells;
    for (auto t_max : config.t_max_values) {
        for (auto algorithm : config.algorithms) {
            ExperimentRecord record;
            record.algorithm = algorithm;
            record.budget = budget;
            record.t_max = t_max;
            for (std::size_t run = 0; run < config.repetitions; ++run) {
                cells.push_back(Cell{report.records.size(), run, algorithm, t_max});
            }
            report.records.push_back(std::move(record));
        }
    }

    std::vector<CellResult> results(cells.size());
    auto const workers = config.workers != 0 ? config.workers : default_worker_count();
    parallel_for(cells.size(), workers, [&](std::size_t i) {
        auto const& cell = cells[i];
        AlgorithmConfig run_config;
        run_config.t_max = cell.t_max;
        run_config.mutation = config.mutation;
        run_config.seed = derive_run_seed(config.base_seed, cell.algorithm, cell.run);
        auto const run = run_algorithm(cell.algorithm, instance, run_config);
        results[i] = CellResult{run.best.objectives.f, run.final_archive.size()};
    });

    for (std::size_t i = 0; i < cells.size(); ++i) {
        auto& record = report.records[cells[i].record];
        record.best_f.push_back(results[i].best_f);
        record.final_pop.push_back(results[i].final_pop);
    }
    for (auto& record : report.records) {
        record.best_f_summary = summarize(record.best_f);
        std::vector<double> pop(record.final_pop.begin(), record.final_pop.end());
        record.final_pop_summary = summarize(pop);
    }

    if (config.algorithms.size() == 2 && config.algorithms[0] != config.algorithms[1]) {
        for (std::size_t r = 0; r + 1 < report.records.size(); r += 2) {
            auto& first = report.records[r];
            auto& second = report.records[r + 1];
            auto const p = mann_whitney_u(first.best_f, second.best_f).p_value;
            first.p_value = p;
            second.p_value = p;
        }
    }
    return report;
}

auto format_number(double value) -> std::string {
    char buffer[64];
    auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    if (ec != std::errc{}) { throw std::runtime_error("number formatting failed"); }
    return std::string(buffer, ptr);
}

auto report_to_csv(ExperimentReport const& report) -> std::string {
    std::ostringstream out;
    out << "graph,B,t_max,algorithm,run,best_f,final_pop\n";
    for (auto const& record : report.records) {
        for (std::size_t run = 0; run < record.best_f.size(); ++run) {
            out << report.instance_name << ',' << format_number(record.budget) << ',' << record.t_max << ','
                << to_string(record.algorithm) << ',' << run << ',' << format_number(record.best_f[run]) << ','
                << record.final_pop[run] << '\n';
        }
    }
    return out.str();
}

auto report_to_json(ExperimentReport const& report) -> std::string {
    nlohmann::ordered_json records = nlohmann::ordered_json::array();
    for (auto const& record : report.records) {
        nlohmann::ordered_json r;
        r["algorithm"] = to_string(record.algorithm);
        r["B"] = record.budget;
        r["t_max"] = record.t_max;
        r["mean"] = record.best_f_summary.mean;
        r["std"] = record.best_f_summary.std;
        r["final_pop_mean"] = record.final_pop_summary.mean;
        r["final_pop_std"] = record.final_pop_summary.std;
        r["p_value"] = record.p_value ? nlohmann::ordered_json(*record.p_value) : nlohmann::ordered_json(nullptr);
        r["significant"] = record.p_value ? nlohmann::ordered_json(is_significant(*record.p_value))
                                          : nlohmann::ordered_json(nullptr);
        r["best_f"] = record.best_f;
        r["final_pop"] = record.final_pop;
        records.push_back(std::move(r));
    }
    nlohmann::ordered_json root;
    root["graph"] = report.instance_name;
    root["n"] = report.n;
    root["cost_model"] = report.cost_model;
    root["budget_rule"] = to_string(report.budget_rule);
    root["B"] = report.budget;
    root["repetitions"] = report.repetitions;
    root["base_seed"] = report.base_seed;
    root["records"] = std::move(records);
    return root.dump(2) + "\n";
}

auto export_front(RunResult const& result) -> std::vector<FrontPoint> {
    std::vector<FrontPoint> front;
    front.reserve(result.final_archive.size());
    for (auto const& m : result.final_archive.members()) { front.push_back({m.objectives.cost, m.objectives.f}); }
    return front;
}

auto front_to_csv(std::vector<FrontPoint> const& front) -> std::string {
    std::ostringstream out;
    out << "cost,f\n";
    for (auto const& p : front) { out << format_number(p.cost) << ',' << format_number(p.f) << '\n'; }
    return out.str();
}

} // namespace swgsemo
