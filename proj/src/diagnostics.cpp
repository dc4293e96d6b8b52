#include "swgsemo/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "swgsemo/random.hpp"

namespace swgsemo {
namespace {

auto has_uniform_costs(Problem const& problem) -> bool {
    auto const w = problem.linear_costs();
    return !w.empty() && std::all_of(w.begin(), w.end(), [](double c) { return c == 1.0; });
}

auto mask_to_bits(std::uint64_t mask, std::size_t n) -> BitVector {
    BitVector x(n);
    for (std::size_t i = 0; i < n; ++i) {
        if ((mask >> i) & 1U) { x.set(i); }
    }
    return x;
}

struct BestTracker {
    Optimum best{-std::numeric_limits<double>::infinity(), {}};

    void offer(Problem const& problem, BitVector const& x) {
        auto const v = problem.evaluate(x);
        if (!v.feasible) { return; }
        if (v.f > best.value || (v.f == best.value && x.lexicographically_less(best.witness))) {
            best = Optimum{v.f, x};
        }
    }
};

// Recursively enumerates all subsets of size <= remaining with elements >= from.
void enumerate_subsets(Problem const& problem, BitVector& x, std::size_t from, std::size_t remaining,
                       BestTracker& tracker) {
    tracker.offer(problem, x);
    if (remaining == 0) { return; }
    for (std::size_t i = from; i < x.size(); ++i) {
        x.set(i);
        enumerate_subsets(problem, x, i + 1, remaining - 1, tracker);
        x.set(i, false);
    }
}

} // namespace

auto brute_force_optimum(Problem const& problem) -> Optimum {
    auto const n = problem.dimension();
    BestTracker tracker;

    auto const budget = problem.budget();
    if (has_uniform_costs(problem) && budget >= 0.0 &&
        std::floor(budget) <= static_cast<double>(kMaxSubsetEnumerationSize)) {
        BitVector x(n);
        enumerate_subsets(problem, x, 0, static_cast<std::size_t>(std::floor(budget)), tracker);
    } else if (n <= kMaxFullEnumerationDimension) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            tracker.offer(problem, mask_to_bits(mask, n));
        }
    } else {
        throw std::domain_error("brute_force_optimum: instance too large for enumeration (n = " + std::to_string(n) +
                                ")");
    }
    if (tracker.best.witness.size() != n) {
        throw std::domain_error("brute_force_optimum: no feasible point (the empty set exceeds the budget)");
    }
    return tracker.best;
}

auto min_marginal_gain(Problem const& problem, std::size_t sample_budget, std::uint64_t seed) -> MarginalGain {
    auto const weights = problem.linear_costs();
    if (!weights.empty()) { return {*std::min_element(weights.begin(), weights.end()), true}; }

    auto const n = problem.dimension();
    RandomSource rng(seed);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < sample_budget; ++s) {
        BitVector x(n);
        std::vector<std::size_t> zeros;
        for (std::size_t i = 0; i < n; ++i) {
            if (rng.bernoulli(0.5)) {
                x.set(i);
            } else {
                zeros.push_back(i);
            }
        }
        if (zeros.empty()) { continue; }
        auto const i = zeros[rng.uniform_index(zeros.size())];
        auto const base = problem.cost(x);
        x.set(i);
        best = std::min(best, problem.cost(x) - base);
    }
    return {best, false};
}

auto submodularity_ratio_bruteforce(Problem const& problem) -> double {
    auto const n = problem.dimension();
    if (n > kMaxSubmodularityRatioDimension) {
        throw std::domain_error("submodularity_ratio_bruteforce: n must be at most " +
                                std::to_string(kMaxSubmodularityRatioDimension));
    }
    auto const points = std::size_t{1} << n;
    std::vector<double> f(points);
    std::vector<double> c(points);
    for (std::size_t mask = 0; mask < points; ++mask) {
        auto const x = mask_to_bits(mask, n);
        f[mask] = problem.objective(x);
        c[mask] = problem.cost(x);
    }

    double ratio = std::numeric_limits<double>::infinity();
    for (std::size_t y = 0; y < points; ++y) {
        // All x <= y: walk the submasks of y, including 0.
        for (std::size_t x = y;; x = (x - 1) & y) {
            for (std::size_t i = 0; i < n; ++i) {
                auto const bit = std::size_t{1} << i;
                if ((y & bit) != 0) { continue; }
                auto const denominator = c[y | bit] - c[y];
                if (!(denominator > 0.0)) {
                    throw std::domain_error("submodularity ratio undefined: cost marginal gain is not positive");
                }
                ratio = std::min(ratio, (f[x | bit] - f[x]) / denominator);
            }
            if (x == 0) { break; }
        }
    }
    return ratio;
}

} // namespace swgsemo
