#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "swgsemo/bit_vector.hpp"
#include "swgsemo/objective.hpp"

namespace swgsemo {

// Constrained maximization instance: monotone objective f, monotone cost c
// and budget B over bit strings of length n. Implementations are immutable
// after construction and safe to share read-only across threads.
class Problem {
public:
    virtual ~Problem() = default;

    [[nodiscard]] virtual auto dimension() const noexcept -> std::size_t = 0;
    [[nodiscard]] virtual auto budget() const noexcept -> double = 0;
    [[nodiscard]] virtual auto objective(BitVector const& x) const -> double = 0;
    [[nodiscard]] virtual auto cost(BitVector const& x) const -> double = 0;

    // Per-element coefficients when c(x) = sum_i w_i x_i; empty otherwise.
    [[nodiscard]] virtual auto linear_costs() const noexcept -> std::span<double const> { return {}; }

    // (f, c, feasible); infeasible points get the -inf fitness sentinel and
    // f is not evaluated for them.
    [[nodiscard]] auto evaluate(BitVector const& x) const -> ObjectiveVector;

protected:
    void check_dimension(BitVector const& x) const;
};

// Problem built from arbitrary callables; used for diagnostics and tests.
class FunctionProblem final : public Problem {
public:
    using Oracle = std::function<double(BitVector const&)>;

    FunctionProblem(std::size_t n, Oracle objective, Oracle cost, double budget,
                    std::vector<double> linear_costs = {});

    [[nodiscard]] auto dimension() const noexcept -> std::size_t override { return n_; }
    [[nodiscard]] auto budget() const noexcept -> double override { return budget_; }
    [[nodiscard]] auto objective(BitVector const& x) const -> double override;
    [[nodiscard]] auto cost(BitVector const& x) const -> double override;
    [[nodiscard]] auto linear_costs() const noexcept -> std::span<double const> override { return linear_costs_; }

private:
    std::size_t n_;
    Oracle objective_;
    Oracle cost_;
    double budget_;
    std::vector<double> linear_costs_;
};

} // namespace swgsemo
