#include "swgsemo/problem.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace swgsemo {

void Problem::check_dimension(BitVector const& x) const {
    if (x.size() != dimension()) {
        throw std::invalid_argument("dimension mismatch: expected " + std::to_string(dimension()) + " bits, got " +
                                    std::to_string(x.size()));
    }
}

auto Problem::evaluate(BitVector const& x) const -> ObjectiveVector {
    auto const c = cost(x);
    if (c > budget()) { return ObjectiveVector::infeasible(c); }
    return ObjectiveVector{objective(x), c, true};
}

FunctionProblem::FunctionProblem(std::size_t n, Oracle objective, Oracle cost, double budget,
                                 std::vector<double> linear_costs)
    : n_{n}, objective_{std::move(objective)}, cost_{std::move(cost)}, budget_{budget},
      linear_costs_{std::move(linear_costs)} {
    if (!linear_costs_.empty() && linear_costs_.size() != n_) {
        throw std::invalid_argument("linear cost vector must have one entry per element");
    }
}

auto FunctionProblem::objective(BitVector const& x) const -> double {
    check_dimension(x);
    return objective_(x);
}

auto FunctionProblem::cost(BitVector const& x) const -> double {
    check_dimension(x);
    return cost_(x);
}

} // namespace swgsemo
