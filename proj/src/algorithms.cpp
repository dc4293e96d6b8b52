#include "swgsemo/algorithms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace swgsemo {

auto to_string(Algorithm algorithm) -> std::string_view {
    return algorithm == Algorithm::gsemo ? "gsemo" : "sw-gsemo";
}

auto parse_algorithm(std::string_view name) -> std::optional<Algorithm> {
    if (name == "gsemo") { return Algorithm::gsemo; }
    if (name == "sw-gsemo" || name == "swgsemo" || name == "sw_gsemo") { return Algorithm::sw_gsemo; }
    return std::nullopt;
}

auto uniform_selection(ParetoArchive const& archive, RandomSource& rng) -> Selection {
    if (archive.empty()) { throw std::invalid_argument("cannot select from an empty archive"); }
    Selection s;
    s.pool_size = archive.size();
    s.index = static_cast<std::size_t>(rng.uniform_index(s.pool_size));
    return s;
}

auto sliding_selection(ParetoArchive const& archive, std::uint64_t t, std::uint64_t t_max, double budget,
                       RandomSource& rng) -> Selection {
    if (archive.empty()) { throw std::invalid_argument("cannot select from an empty archive"); }
    if (t == 0) { throw std::invalid_argument("sliding_selection: iterations count from 1"); }
    if (t > t_max) { return uniform_selection(archive, rng); }

    Selection s;
    s.windowed = true;
    // t * B is exact for the integral budgets used in practice, so an integral
    // c_hat is never perturbed into a two-value window.
    s.target_cost = static_cast<double>(t) * budget / static_cast<double>(t_max);
    auto const [first, last] = archive.cost_window(std::floor(s.target_cost), std::ceil(s.target_cost));
    if (first == last) {
        s.fallback = true;
        s.pool_size = archive.size();
        s.index = static_cast<std::size_t>(rng.uniform_index(s.pool_size));
    } else {
        s.pool_size = last - first;
        s.index = first + static_cast<std::size_t>(rng.uniform_index(s.pool_size));
    }
    return s;
}

auto run_with_selector(Problem const& problem, AlgorithmConfig const& config, ParentSelector const& select)
    -> RunResult {
    auto const n = problem.dimension();
    if (n == 0) { throw std::invalid_argument("problem dimension must be at least 1"); }
    if (!(problem.budget() >= 0.0)) { throw std::invalid_argument("budget must be non-negative"); }

    RandomSource rng(config.seed);
    BitVector zero(n);
    auto const zero_value = problem.evaluate(zero);
    ParetoArchive archive(Individual{std::move(zero), zero_value});

    RunResult result;
    auto const snapshot = [&](std::uint64_t t) {
        result.trace.push_back(TraceSnapshot{t, archive.best_feasible()->objectives.f, archive.size()});
    };

    for (std::uint64_t t = 1; t <= config.t_max; ++t) {
        auto const chosen = select(archive, t, rng);
        auto const& parent = archive[chosen.index];
        if (config.on_select) { config.on_select(SelectionEvent{t, chosen, parent.objectives.cost}); }

        auto child = mutate(config.mutation, parent.genotype, rng);
        auto const value = problem.evaluate(child);
        ++result.evaluations;
        archive.insert(Individual{std::move(child), value});

        if (config.trace_period != 0 && (t % config.trace_period == 0 || t == config.t_max)) { snapshot(t); }
    }

    result.best = *archive.best_feasible();
    result.final_archive = std::move(archive);
    return result;
}

auto gsemo_run(Problem const& problem, AlgorithmConfig const& config) -> RunResult {
    return run_with_selector(problem, config,
                             [](ParetoArchive const& p, std::uint64_t, RandomSource& rng) {
                                 return uniform_selection(p, rng);
                             });
}

auto sw_gsemo_run(Problem const& problem, AlgorithmConfig const& config) -> RunResult {
    auto const t_max = config.t_max;
    auto const budget = problem.budget();
    return run_with_selector(problem, config,
                             [t_max, budget](ParetoArchive const& p, std::uint64_t t, RandomSource& rng) {
                                 return sliding_selection(p, t, t_max, budget, rng);
                             });
}

auto run_algorithm(Algorithm algorithm, Problem const& problem, AlgorithmConfig const& config) -> RunResult {
    return algorithm == Algorithm::gsemo ? gsemo_run(problem, config) : sw_gsemo_run(problem, config);
}

auto recommended_tmax_uniform(std::uint64_t n, std::uint64_t r) -> std::uint64_t {
    if (n < 2) { throw std::invalid_argument("recommended_tmax_uniform: n must be at least 2"); }
    if (r < 1) { throw std::invalid_argument("recommended_tmax_uniform: r must be at least 1"); }
    auto const nn = static_cast<double>(n);
    return static_cast<std::uint64_t>(std::ceil(4.0 * std::numbers::e * static_cast<double>(r) * nn * std::log(nn)));
}

auto recommended_tmax_general(std::uint64_t n, double budget, double delta) -> std::uint64_t {
    if (n < 1) { throw std::invalid_argument("recommended_tmax_general: n must be at least 1"); }
    if (!(budget > 0.0)) { throw std::invalid_argument("recommended_tmax_general: budget must be positive"); }
    if (!(delta > 0.0)) { throw std::invalid_argument("recommended_tmax_general: delta must be positive"); }
    auto const nn = static_cast<double>(n);
    auto const steps = budget / delta;
    return static_cast<std::uint64_t>(std::ceil(2.0 * std::numbers::e * nn * steps * std::log(nn + steps)));
}

} // namespace swgsemo
