#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "swgsemo/objective.hpp"

namespace swgsemo {

enum class InsertOutcome { accepted, rejected };

// Population of mutually non-dominated individuals, one per objective vector.
//
// Members are kept sorted by ascending cost. For a non-dominated set of
// two-objective vectors this also orders f strictly ascending and makes all
// costs distinct, which turns both the dominance check and the cost-window
// lookup of sliding selection into binary searches.
class ParetoArchive {
public:
    ParetoArchive() = default;
    explicit ParetoArchive(Individual seed) { members_.push_back(std::move(seed)); }

    // Rejects y if a member strictly dominates it; otherwise inserts y and drops
    // every member y weakly dominates (an equal-vector incumbent is replaced).
    auto insert(Individual y) -> InsertOutcome;

    [[nodiscard]] auto members() const noexcept -> std::span<Individual const> { return members_; }
    [[nodiscard]] auto size() const noexcept -> std::size_t { return members_.size(); }
    [[nodiscard]] auto empty() const noexcept -> bool { return members_.empty(); }
    [[nodiscard]] auto operator[](std::size_t i) const -> Individual const& { return members_[i]; }

    // Index range [first, last) of members with lo <= cost <= hi.
    [[nodiscard]] auto cost_window(double lo, double hi) const -> std::pair<std::size_t, std::size_t>;

    // Feasible member with the largest f, or nullptr when there is none.
    [[nodiscard]] auto best_feasible() const noexcept -> Individual const*;

private:
    std::vector<Individual> members_;
};

// Feasible individual maximizing f; ties go to lower cost, then to the
// earlier position in `pool`.
[[nodiscard]] auto best_feasible(std::span<Individual const> pool) noexcept -> Individual const*;

} // namespace swgsemo
