#include "swgsemo/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace swgsemo {
namespace {

struct Ranked {
    // Twice the midrank of each pooled value, in input order (a first, then b).
    std::vector<std::int64_t> doubled_ranks;
    double tie_term{0.0}; // sum over tie groups of t^3 - t
};

auto rank_pooled(std::span<double const> a, std::span<double const> b) -> Ranked {
    std::vector<double> pooled(a.begin(), a.end());
    pooled.insert(pooled.end(), b.begin(), b.end());
    std::vector<std::size_t> order(pooled.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return pooled[i] < pooled[j]; });

    Ranked r;
    r.doubled_ranks.resize(pooled.size());
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j + 1 < order.size() && pooled[order[j + 1]] == pooled[order[i]]) { ++j; }
        // Positions i..j (0-based) share midrank ((i+1) + (j+1)) / 2.
        auto const doubled = static_cast<std::int64_t>(i + j + 2);
        for (std::size_t k = i; k <= j; ++k) { r.doubled_ranks[order[k]] = doubled; }
        auto const t = static_cast<double>(j - i + 1);
        r.tie_term += t * t * t - t;
        i = j + 1;
    }
    return r;
}

auto exact_p_value(Ranked const& ranked, std::size_t n1, std::int64_t observed_doubled_sum) -> double {
    auto const total = ranked.doubled_ranks.size();
    // Count subsets of size k of the pooled ranks by their doubled rank sum,
    // using the smaller group size (the distribution is symmetric in the choice).
    auto const k = std::min(n1, total - n1);
    auto const use_complement = k != n1;
    auto const max_sum = static_cast<std::size_t>(
        std::accumulate(ranked.doubled_ranks.begin(), ranked.doubled_ranks.end(), std::int64_t{0}));

    // counts[j][s]: number of j-subsets of the items seen so far with doubled sum s.
    std::vector<std::vector<double>> counts(k + 1, std::vector<double>(max_sum + 1, 0.0));
    counts[0][0] = 1.0;
    for (auto rank : ranked.doubled_ranks) {
        auto const r = static_cast<std::size_t>(rank);
        for (std::size_t j = std::min(k, total); j >= 1; --j) {
            auto& dst = counts[j];
            auto const& src = counts[j - 1];
            for (std::size_t s = max_sum; s >= r; --s) { dst[s] += src[s - r]; }
        }
    }

    auto const observed = use_complement ? static_cast<std::int64_t>(max_sum) - observed_doubled_sum
                                         : observed_doubled_sum;
    // E[doubled sum] = k (N + 1); all quantities are integers.
    auto const expected = static_cast<std::int64_t>(k * (total + 1));
    auto const deviation = std::llabs(observed - expected);

    double extreme = 0.0;
    double all = 0.0;
    for (std::size_t s = 0; s <= max_sum; ++s) {
        auto const c = counts[k][s];
        if (c == 0.0) { continue; }
        all += c;
        if (std::llabs(static_cast<std::int64_t>(s) - expected) >= deviation) { extreme += c; }
    }
    return std::min(1.0, extreme / all);
}

} // namespace

auto mann_whitney_u(std::span<double const> a, std::span<double const> b, MannWhitneyMethod method)
    -> MannWhitneyResult {
    if (a.empty() || b.empty()) { throw std::invalid_argument("mann_whitney_u: samples must be non-empty"); }
    auto const n1 = a.size();
    auto const n2 = b.size();
    auto const ranked = rank_pooled(a, b);

    std::int64_t doubled_sum = 0;
    for (std::size_t i = 0; i < n1; ++i) { doubled_sum += ranked.doubled_ranks[i]; }

    MannWhitneyResult result;
    auto const d1 = static_cast<double>(n1);
    auto const d2 = static_cast<double>(n2);
    result.u = static_cast<double>(doubled_sum) / 2.0 - d1 * (d1 + 1.0) / 2.0;

    auto const use_exact = method == MannWhitneyMethod::exact ||
                           (method == MannWhitneyMethod::automatic && std::min(n1, n2) < kNormalApproximationMinSize);
    if (use_exact) {
        result.exact = true;
        result.p_value = exact_p_value(ranked, n1, doubled_sum);
        return result;
    }

    auto const total = d1 + d2;
    auto const variance = d1 * d2 / 12.0 * ((total + 1.0) - ranked.tie_term / (total * (total - 1.0)));
    if (!(variance > 0.0)) {
        result.p_value = 1.0;
        return result;
    }
    auto const deviation = std::max(0.0, std::abs(result.u - d1 * d2 / 2.0) - 0.5);
    auto const z = deviation / std::sqrt(variance);
    result.p_value = std::min(1.0, std::erfc(z / std::numbers::sqrt2));
    return result;
}

auto summarize(std::span<double const> sample) -> Summary {
    if (sample.empty()) { throw std::invalid_argument("summarize: sample must be non-empty"); }
    auto const k = static_cast<double>(sample.size());
    auto const mean = std::accumulate(sample.begin(), sample.end(), 0.0) / k;
    if (sample.size() == 1) { return {mean, 0.0}; }
    double squares = 0.0;
    for (auto v : sample) { squares += (v - mean) * (v - mean); }
    return {mean, std::sqrt(squares / (k - 1.0))};
}

} // namespace swgsemo
