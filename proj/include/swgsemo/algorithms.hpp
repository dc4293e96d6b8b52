#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "swgsemo/archive.hpp"
#include "swgsemo/mutation.hpp"
#include "swgsemo/problem.hpp"
#include "swgsemo/random.hpp"

namespace swgsemo {

enum class Algorithm { gsemo, sw_gsemo };

[[nodiscard]] auto to_string(Algorithm algorithm) -> std::string_view;
[[nodiscard]] auto parse_algorithm(std::string_view name) -> std::optional<Algorithm>;

// Outcome of one parent selection.
struct Selection {
    std::size_t index{0};       // into ParetoArchive::members()
    std::size_t pool_size{0};   // |P_hat| the parent was drawn from
    bool windowed{false};       // t <= t_max, so a cost window was computed
    bool fallback{false};       // the window was empty and the whole archive was used
    double target_cost{0.0};    // c_hat = (t / t_max) * B when windowed
};

struct SelectionEvent {
    std::uint64_t iteration{0};
    Selection selection;
    double parent_cost{0.0};
};

struct TraceSnapshot {
    std::uint64_t iteration{0};
    double best_f{0.0};
    std::size_t archive_size{0};
};

struct AlgorithmConfig {
    std::uint64_t t_max{0};
    MutationKind mutation{MutationKind::plus};
    std::uint64_t seed{0};
    // Snapshot every trace_period iterations and at t_max; 0 disables tracing.
    std::uint64_t trace_period{0};
    // Called after every parent selection when set.
    std::function<void(SelectionEvent const&)> on_select;
};

struct RunResult {
    ParetoArchive final_archive;
    Individual best;
    std::uint64_t evaluations{0}; // offspring evaluations; equals t_max
    std::vector<TraceSnapshot> trace;
};

// Picks the index of the parent in `archive` at iteration t (t starts at 1).
using ParentSelector = std::function<Selection(ParetoArchive const& archive, std::uint64_t t, RandomSource& rng)>;

// Uniform choice over the whole archive (GSEMO).
[[nodiscard]] auto uniform_selection(ParetoArchive const& archive, RandomSource& rng) -> Selection;

// For t <= t_max, draws uniformly from members with floor(c_hat) <= c(x) <=
// ceil(c_hat), c_hat = (t / t_max) * B, falling back to the whole archive when
// that window is empty. For t > t_max always uses the whole archive.
[[nodiscard]] auto sliding_selection(ParetoArchive const& archive, std::uint64_t t, std::uint64_t t_max,
                                     double budget, RandomSource& rng) -> Selection;

// Starts from P = {0^n} and runs t_max iterations of select, mutate, insert.
[[nodiscard]] auto run_with_selector(Problem const& problem, AlgorithmConfig const& config,
                                     ParentSelector const& select) -> RunResult;

[[nodiscard]] auto gsemo_run(Problem const& problem, AlgorithmConfig const& config) -> RunResult;
[[nodiscard]] auto sw_gsemo_run(Problem const& problem, AlgorithmConfig const& config) -> RunResult;
[[nodiscard]] auto run_algorithm(Algorithm algorithm, Problem const& problem, AlgorithmConfig const& config)
    -> RunResult;

// ceil(4 e r n ln n); requires n >= 2 and r >= 1.
[[nodiscard]] auto recommended_tmax_uniform(std::uint64_t n, std::uint64_t r) -> std::uint64_t;

// ceil(2 e n (B / delta) ln(n + B / delta)); requires n >= 1, B > 0, delta > 0.
[[nodiscard]] auto recommended_tmax_general(std::uint64_t n, double budget, double delta) -> std::uint64_t;

} // namespace swgsemo
