#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "swgsemo/algorithms.hpp"
#include "swgsemo/coverage.hpp"
#include "swgsemo/graph.hpp"
#include "swgsemo/stats.hpp"

namespace swgsemo {

struct ExperimentConfig {
    // Label used in reports; defaults to the graph file stem.
    std::string instance_name;
    std::filesystem::path graph_path;
    // Used instead of graph_path when set.
    std::optional<Graph> graph;

    CostModel cost_model;
    BudgetRule budget_rule{BudgetRule::sqrtn};
    double budget_value{0.0}; // only for BudgetRule::explicit_value

    std::vector<std::uint64_t> t_max_values{100'000};
    std::size_t repetitions{30};
    std::uint64_t base_seed{0};
    std::vector<Algorithm> algorithms{Algorithm::gsemo, Algorithm::sw_gsemo};
    MutationKind mutation{MutationKind::plus};
    // 0 picks SWGSEMO_WORKERS from the environment, else the hardware concurrency.
    std::size_t workers{0};
};

// Run k of algorithm a uses base_seed XOR mix64(id(a) << 32 | k), with
// id(gsemo) = 1 and id(sw-gsemo) = 2. Seeds do not depend on t_max.
[[nodiscard]] auto derive_run_seed(std::uint64_t base_seed, Algorithm algorithm, std::size_t run) noexcept
    -> std::uint64_t;

[[nodiscard]] auto default_worker_count() -> std::size_t;

struct ExperimentRecord {
    Algorithm algorithm{Algorithm::gsemo};
    double budget{0.0};
    std::uint64_t t_max{0};
    std::vector<double> best_f;           // one per run
    std::vector<std::size_t> final_pop;   // one per run
    Summary best_f_summary;
    Summary final_pop_summary;
    // Two-sided Mann-Whitney p-value of best_f against the other algorithm at
    // the same t_max; absent when only one algorithm ran.
    std::optional<double> p_value;
};

struct ExperimentReport {
    std::string instance_name;
    std::size_t n{0};
    std::string cost_model;
    BudgetRule budget_rule{BudgetRule::sqrtn};
    double budget{0.0};
    std::size_t repetitions{0};
    std::uint64_t base_seed{0};
    // Ordered by t_max (as configured), then algorithm (as configured).
    std::vector<ExperimentRecord> records;
};

// Runs every (t_max, algorithm, run) cell on one shared instance; random
// node costs are drawn once from cost_model.seed. Deterministic given the
// config regardless of the worker count.
[[nodiscard]] auto run_experiment(ExperimentConfig const& config) -> ExperimentReport;

// graph,B,t_max,algorithm,run,best_f,final_pop
[[nodiscard]] auto report_to_csv(ExperimentReport const& report) -> std::string;
// Means, stds and p-values plus the raw samples.
[[nodiscard]] auto report_to_json(ExperimentReport const& report) -> std::string;

struct FrontPoint {
    double cost{0.0};
    double f{0.0};
};

// One point per archive member, ascending cost.
[[nodiscard]] auto export_front(RunResult const& result) -> std::vector<FrontPoint>;
[[nodiscard]] auto front_to_csv(std::vector<FrontPoint> const& front) -> std::string;

// Shortest decimal text that parses back to the same double.
[[nodiscard]] auto format_number(double value) -> std::string;

} // namespace swgsemo
