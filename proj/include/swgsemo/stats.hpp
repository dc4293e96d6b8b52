#pragma once

#include <cstddef>
#include <span>

namespace swgsemo {

inline constexpr double kSignificanceLevel = 0.05;
// Smallest min(|a|, |b|) for which the automatic method uses the normal approximation.
inline constexpr std::size_t kNormalApproximationMinSize = 8;

enum class MannWhitneyMethod { automatic, exact, normal };

struct MannWhitneyResult {
    double u{0.0};       // U statistic of the first sample
    double p_value{1.0}; // two-sided
    bool exact{false};
};

// Two-sided Mann-Whitney U test with midranks for ties.
//
// exact:  permutation distribution of the (mid)rank sum of the smaller sample,
//         counted by dynamic programming; p = P(|S - E S| >= |s - E S|).
// normal: tie-corrected variance with a 0.5 continuity correction.
// automatic picks exact when min(|a|, |b|) < 8. Empty samples throw.
[[nodiscard]] auto mann_whitney_u(std::span<double const> a, std::span<double const> b,
                                  MannWhitneyMethod method = MannWhitneyMethod::automatic) -> MannWhitneyResult;

[[nodiscard]] constexpr auto is_significant(double p_value) noexcept -> bool { return p_value <= kSignificanceLevel; }

struct Summary {
    double mean{0.0};
    double std{0.0}; // sample standard deviation (k - 1 denominator); 0 when k = 1
};

[[nodiscard]] auto summarize(std::span<double const> sample) -> Summary;

} // namespace swgsemo
