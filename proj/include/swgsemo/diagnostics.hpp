#pragma once

#include <cstddef>
#include <cstdint>

#include "swgsemo/bit_vector.hpp"
#include "swgsemo/problem.hpp"

namespace swgsemo {

// Largest n for which brute_force_optimum enumerates all 2^n points.
inline constexpr std::size_t kMaxFullEnumerationDimension = 24;
// Largest uniform budget for which subset enumeration is used at any n.
inline constexpr std::size_t kMaxSubsetEnumerationSize = 3;
inline constexpr std::size_t kMaxSubmodularityRatioDimension = 12;

struct Optimum {
    double value{0.0};
    BitVector witness;
};

// Exact max f over feasible points. Ties resolve to the lexicographically
// smallest witness. Throws std::domain_error when the instance is too large
// (n > 24 and not a uniform-cost instance with floor(B) <= 3).
[[nodiscard]] auto brute_force_optimum(Problem const& problem) -> Optimum;

struct MarginalGain {
    double value{0.0};
    bool exact{false}; // false: sampled minimum, i.e. an upper estimate
};

// delta_c = min over x and i with x_i = 0 of c(x + e_i) - c(x).
[[nodiscard]] auto min_marginal_gain(Problem const& problem, std::size_t sample_budget = 10'000,
                                     std::uint64_t seed = 0) -> MarginalGain;

// alpha_f = min over x <= y and i with x_i = y_i = 0 of
// (f(x + e_i) - f(x)) / (c(y + e_i) - c(y)). Exhaustive; n <= 12.
[[nodiscard]] auto submodularity_ratio_bruteforce(Problem const& problem) -> double;

} // namespace swgsemo
