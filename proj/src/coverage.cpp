#include "swgsemo/coverage.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace swgsemo {

CoverageInstance::CoverageInstance(std::vector<std::vector<std::uint32_t>> neighborhoods,
                                   std::vector<double> node_costs, double budget)
    : node_costs_{std::move(node_costs)}, budget_{budget} {
    auto const n = neighborhoods.size();
    if (n == 0) { throw std::invalid_argument("coverage instance needs at least one node"); }
    if (node_costs_.size() != n) { throw std::invalid_argument("need exactly one cost per node"); }
    offsets_.reserve(n + 1);
    for (std::size_t v = 0; v < n; ++v) {
        if (!(node_costs_[v] > 0.0)) { throw std::invalid_argument("node costs must be positive"); }
        bool has_self = false;
        for (auto u : neighborhoods[v]) {
            if (u >= n) { throw std::invalid_argument("neighborhood refers to unknown node"); }
            has_self = has_self || u == v;
            targets_.push_back(u);
        }
        if (!has_self) { throw std::invalid_argument("closed neighborhood N(v) must contain v"); }
        offsets_.push_back(targets_.size());
    }
}

auto CoverageInstance::coverage_value(BitVector const& x) const -> std::size_t {
    check_dimension(x);
    BitVector covered(x.size());
    x.for_each_set([&](std::size_t v) {
        for (auto u : neighborhood(v)) { covered.set(u); }
    });
    return covered.count();
}

auto CoverageInstance::cost_value(BitVector const& x) const -> double {
    check_dimension(x);
    double total = 0.0;
    x.for_each_set([&](std::size_t v) { total += node_costs_[v]; });
    return total;
}

auto CoverageInstance::with_budget(double budget) const -> CoverageInstance {
    CoverageInstance copy = *this;
    copy.budget_ = budget;
    return copy;
}

auto to_string(BudgetRule rule) -> std::string_view {
    switch (rule) {
    case BudgetRule::log2n: return "log2n";
    case BudgetRule::sqrtn: return "sqrtn";
    case BudgetRule::n20: return "n20";
    case BudgetRule::n10: return "n10";
    case BudgetRule::explicit_value: return "explicit";
    }
    return "unknown";
}

auto parse_budget_rule(std::string_view name) -> std::optional<BudgetRule> {
    if (name == "log2n") { return BudgetRule::log2n; }
    if (name == "sqrtn") { return BudgetRule::sqrtn; }
    if (name == "n20") { return BudgetRule::n20; }
    if (name == "n10") { return BudgetRule::n10; }
    return std::nullopt;
}

auto effective_budget(BudgetRule rule, std::size_t n, double value) -> double {
    if (n == 0 && rule != BudgetRule::explicit_value) { throw std::invalid_argument("budget rule needs n >= 1"); }
    switch (rule) {
    case BudgetRule::log2n: return static_cast<double>(std::bit_width(n) - 1);
    case BudgetRule::sqrtn: {
        auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
        while (r * r > n) { --r; }
        while ((r + 1) * (r + 1) <= n) { ++r; }
        return static_cast<double>(r);
    }
    case BudgetRule::n20: return static_cast<double>(n / 20);
    case BudgetRule::n10: return static_cast<double>(n / 10);
    case BudgetRule::explicit_value:
        if (!(value >= 0.0)) { throw std::invalid_argument("budget must be non-negative"); }
        return value;
    }
    throw std::invalid_argument("unknown budget rule");
}

} // namespace swgsemo
