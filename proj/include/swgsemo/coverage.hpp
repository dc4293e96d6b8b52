#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "swgsemo/problem.hpp"

namespace swgsemo {

struct CostModel {
    enum class Kind { uniform, random_interval };

    Kind kind{Kind::uniform};
    double lo{0.5};
    double hi{1.5};
    std::uint64_t seed{0};

    static auto uniform() -> CostModel { return CostModel{}; }
    static auto random_interval(double lo, double hi, std::uint64_t seed) -> CostModel {
        return CostModel{Kind::random_interval, lo, hi, seed};
    }

    [[nodiscard]] auto name() const -> std::string { return kind == Kind::uniform ? "uniform" : "random"; }
};

// Maximum coverage: selecting node v covers its closed neighborhood N(v);
// f(x) = |union of N(v_i) over x_i = 1|, c(x) = sum of selected node costs.
class CoverageInstance final : public Problem {
public:
    // neighborhoods[v] lists N(v) (must contain v); costs must be positive.
    CoverageInstance(std::vector<std::vector<std::uint32_t>> neighborhoods, std::vector<double> node_costs,
                     double budget);

    [[nodiscard]] auto dimension() const noexcept -> std::size_t override { return offsets_.size() - 1; }
    [[nodiscard]] auto budget() const noexcept -> double override { return budget_; }
    [[nodiscard]] auto objective(BitVector const& x) const -> double override {
        return static_cast<double>(coverage_value(x));
    }
    [[nodiscard]] auto cost(BitVector const& x) const -> double override { return cost_value(x); }
    [[nodiscard]] auto linear_costs() const noexcept -> std::span<double const> override { return node_costs_; }

    // Number of nodes covered by x, via a union bitset and word popcounts.
    [[nodiscard]] auto coverage_value(BitVector const& x) const -> std::size_t;
    [[nodiscard]] auto cost_value(BitVector const& x) const -> double;

    [[nodiscard]] auto neighborhood(std::size_t v) const noexcept -> std::span<std::uint32_t const> {
        return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
    }
    [[nodiscard]] auto node_costs() const noexcept -> std::span<double const> { return node_costs_; }

    // Same instance under a different budget.
    [[nodiscard]] auto with_budget(double budget) const -> CoverageInstance;

private:
    CoverageInstance() = default;

    // Closed neighborhoods in CSR form.
    std::vector<std::size_t> offsets_{0};
    std::vector<std::uint32_t> targets_;
    std::vector<double> node_costs_;
    double budget_{0.0};
};

enum class BudgetRule { log2n, sqrtn, n20, n10, explicit_value };

[[nodiscard]] auto to_string(BudgetRule rule) -> std::string_view;
[[nodiscard]] auto parse_budget_rule(std::string_view name) -> std::optional<BudgetRule>;

// floor(log2 n), floor(sqrt n), floor(n/20), floor(n/10), or `value` as given.
[[nodiscard]] auto effective_budget(BudgetRule rule, std::size_t n, double value = 0.0) -> double;

} // namespace swgsemo
