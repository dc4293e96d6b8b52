#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "swgsemo/bit_vector.hpp"
#include "swgsemo/random.hpp"

namespace swgsemo {

enum class MutationKind {
    standard, // flip each bit independently with probability 1/n
    plus,     // standard, resampled until the offspring differs from the parent
};

[[nodiscard]] auto to_string(MutationKind kind) -> std::string_view;
[[nodiscard]] auto parse_mutation_kind(std::string_view name) -> std::optional<MutationKind>;

// Resampling rounds after which standard_bit_mutation_plus reports a fault.
inline constexpr std::uint64_t kMaxResampleRounds = 1'000'000;

// Flip positions are generated by geometric gap sampling, which has exactly
// the distribution of n independent 1/n coin flips but costs O(1 + flips).
[[nodiscard]] auto standard_bit_mutation(BitVector const& x, RandomSource& rng) -> BitVector;

// Throws std::runtime_error if kMaxResampleRounds draws all left x unchanged.
[[nodiscard]] auto standard_bit_mutation_plus(BitVector const& x, RandomSource& rng) -> BitVector;

[[nodiscard]] auto mutate(MutationKind kind, BitVector const& x, RandomSource& rng) -> BitVector;

} // namespace swgsemo
