#include "swgsemo/mutation.hpp"

#include <cmath>
#include <stdexcept>

namespace swgsemo {
namespace {

// Applies one round of 1/n bit flips to y in place; returns the number of flips.
auto flip_round(BitVector& y, RandomSource& rng) -> std::size_t {
    auto const n = y.size();
    if (n == 1) {
        y.flip(0);
        return 1;
    }
    auto const log_keep = std::log1p(-1.0 / static_cast<double>(n));
    // Number of untouched positions before the next flip: Geometric(1/n) on {0, 1, ...}.
    auto const gap = [&]() -> double { return std::floor(std::log(1.0 - rng.uniform01()) / log_keep); };

    std::size_t flips = 0;
    double pos = gap();
    while (pos < static_cast<double>(n)) {
        y.flip(static_cast<std::size_t>(pos));
        ++flips;
        pos += 1.0 + gap();
    }
    return flips;
}

} // namespace

auto to_string(MutationKind kind) -> std::string_view {
    return kind == MutationKind::standard ? "standard" : "plus";
}

auto parse_mutation_kind(std::string_view name) -> std::optional<MutationKind> {
    if (name == "standard") { return MutationKind::standard; }
    if (name == "plus") { return MutationKind::plus; }
    return std::nullopt;
}

auto standard_bit_mutation(BitVector const& x, RandomSource& rng) -> BitVector {
    if (x.size() == 0) { throw std::invalid_argument("mutation requires n >= 1"); }
    BitVector y = x;
    flip_round(y, rng);
    return y;
}

auto standard_bit_mutation_plus(BitVector const& x, RandomSource& rng) -> BitVector {
    if (x.size() == 0) { throw std::invalid_argument("mutation requires n >= 1"); }
    BitVector y = x;
    for (std::uint64_t round = 0; round < kMaxResampleRounds; ++round) {
        // A round that flips nothing leaves y == x, so it can be reused as is.
        if (flip_round(y, rng) > 0) { return y; }
    }
    throw std::runtime_error("standard_bit_mutation_plus: resampling cap exceeded");
}

auto mutate(MutationKind kind, BitVector const& x, RandomSource& rng) -> BitVector {
    return kind == MutationKind::standard ? standard_bit_mutation(x, rng) : standard_bit_mutation_plus(x, rng);
}

} // namespace swgsemo
