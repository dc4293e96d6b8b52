#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace swgsemo {

// Seeded random stream with a platform-independent draw sequence.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the C++
// standard. Standard library distributions are not (their algorithms are
// implementation-defined), so every distribution used here is spelled out:
//   - uniform_index(k): reject draws below 2^64 mod k, then reduce mod k.
//   - uniform01():      top 53 bits of one draw scaled by 2^-53, in [0, 1).
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : seed_{seed}, engine_{seed} {}

    [[nodiscard]] auto seed() const noexcept -> std::uint64_t { return seed_; }

    auto next_u64() -> std::uint64_t { return engine_(); }

    // Uniform integer in [0, bound); bound must be positive.
    auto uniform_index(std::uint64_t bound) -> std::uint64_t;

    auto uniform01() -> double { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    auto uniform_real(double lo, double hi) -> double { return lo + (hi - lo) * uniform01(); }

    auto bernoulli(double p) -> bool { return uniform01() < p; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

// splitmix64 finalizer; used to derive independent per-run seeds.
[[nodiscard]] constexpr auto mix64(std::uint64_t x) noexcept -> std::uint64_t {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace swgsemo
