#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "swgsemo/random.hpp"
#include "swgsemo/stats.hpp"

using namespace swgsemo;

namespace {

// U by pairwise comparison (ties count 1/2).
auto pairwise_u(std::vector<double> const& a, std::vector<double> const& b) -> double {
    double u = 0.0;
    for (double x : a) {
        for (double y : b) { u += x > y ? 1.0 : (x == y ? 0.5 : 0.0); }
    }
    return u;
}

// Two-sided permutation p-value by enumerating every split of the pooled
// sample into groups of the original sizes.
auto permutation_p(std::vector<double> const& a, std::vector<double> const& b) -> double {
    std::vector<double> pooled(a);
    pooled.insert(pooled.end(), b.begin(), b.end());
    auto const n1 = a.size();
    auto const total = pooled.size();
    auto const centre = static_cast<double>(a.size() * b.size()) / 2.0;
    auto const observed = std::abs(pairwise_u(a, b) - centre);
    double extreme = 0;
    double all = 0;
    for (std::uint32_t mask = 0; mask < (1U << total); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != n1) { continue; }
        std::vector<double> x;
        std::vector<double> y;
        for (std::size_t i = 0; i < total; ++i) { ((mask >> i) & 1U ? x : y).push_back(pooled[i]); }
        all += 1;
        if (std::abs(pairwise_u(x, y) - centre) >= observed - 1e-12) { extreme += 1; }
    }
    return extreme / all;
}

} // namespace

TEST_CASE("Mann-Whitney exact examples") {
    std::vector<double> const a{1, 2, 3};
    std::vector<double> const b{4, 5, 6};
    auto const r = mann_whitney_u(a, b);
    CHECK(r.exact);
    CHECK(r.u == 0.0);
    CHECK(std::abs(r.p_value - 0.1) <= 1e-9);

    std::vector<double> const same(5, 7.0);
    CHECK(std::abs(mann_whitney_u(same, same).p_value - 1.0) <= 1e-9);
    std::vector<double> const same30(30, 7.0);
    CHECK(mann_whitney_u(same30, same30).p_value == 1.0);
    CHECK(mann_whitney_u(same30, same30, MannWhitneyMethod::exact).p_value == 1.0);

    std::vector<double> const empty;
    CHECK_THROWS_AS((void)mann_whitney_u(empty, a), std::invalid_argument);
    CHECK_THROWS_AS((void)mann_whitney_u(a, empty), std::invalid_argument);
}

TEST_CASE("exact p-values match full permutation enumeration, ties included") {
    RandomSource rng(91);
    for (int trial = 0; trial < 150; ++trial) {
        auto const n1 = 1 + rng.uniform_index(7);
        auto const n2 = 1 + rng.uniform_index(8);
        std::vector<double> a(n1);
        std::vector<double> b(n2);
        // Small integer support forces ties.
        for (auto& v : a) { v = static_cast<double>(rng.uniform_index(6)); }
        for (auto& v : b) { v = static_cast<double>(rng.uniform_index(6)) + (trial % 3 == 0 ? 1.0 : 0.0); }
        auto const r = mann_whitney_u(a, b, MannWhitneyMethod::exact);
        REQUIRE(r.u == pairwise_u(a, b));
        REQUIRE(std::abs(r.p_value - permutation_p(a, b)) <= 1e-9);
    }
}

TEST_CASE("Mann-Whitney is symmetric in its arguments") {
    RandomSource rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> a(3 + rng.uniform_index(30));
        std::vector<double> b(3 + rng.uniform_index(30));
        for (auto& v : a) { v = std::round(rng.uniform01() * 20); }
        for (auto& v : b) { v = std::round(rng.uniform01() * 20 + 2); }
        auto const ab = mann_whitney_u(a, b);
        auto const ba = mann_whitney_u(b, a);
        REQUIRE(std::abs(ab.p_value - ba.p_value) <= 1e-12);
        REQUIRE(ab.u + ba.u == static_cast<double>(a.size() * b.size()));
        REQUIRE(ab.p_value >= 0.0);
        REQUIRE(ab.p_value <= 1.0);
    }
}

TEST_CASE("normal approximation at size 10 matches reference values") {
    // b = 0..9 and a_i = i - 1.5 give U = 36; reference p-values from an
    // independent implementation (scipy.stats.mannwhitneyu).
    std::vector<double> a(10);
    std::vector<double> b(10);
    for (int i = 0; i < 10; ++i) {
        a[i] = i - 1.5;
        b[i] = i;
    }
    auto const exact = mann_whitney_u(a, b, MannWhitneyMethod::exact);
    auto const normal = mann_whitney_u(a, b, MannWhitneyMethod::normal);
    CHECK(std::min(exact.u, 100.0 - exact.u) == 36.0);
    CHECK(std::abs(exact.p_value - 0.31499924224382436) <= 1e-12);
    CHECK(std::abs(normal.p_value - 0.3074894566186813) <= 1e-12);
    CHECK(mann_whitney_u(a, b).exact == false);
}

TEST_CASE("normal approximation error at size 10 stays below its analytic maximum") {
    // Over all U at sizes 10/10 the largest gap is 0.008575 (U = 40 or 60);
    // it falls below 0.005 once p is small.
    RandomSource rng(2718);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> a(10);
        std::vector<double> b(10);
        auto const shift = rng.uniform01() * 1.5;
        for (auto& v : a) { v = rng.uniform01(); }
        for (auto& v : b) { v = rng.uniform01() + shift; }
        auto const exact = mann_whitney_u(a, b, MannWhitneyMethod::exact).p_value;
        auto const normal = mann_whitney_u(a, b, MannWhitneyMethod::normal).p_value;
        CHECK(std::abs(exact - normal) <= 0.00858);
        if (exact < 0.2) { CHECK(std::abs(exact - normal) <= 0.005); }
    }
}

TEST_CASE("automatic method switches at size 8") {
    std::vector<double> small(7, 1.0);
    std::vector<double> big(8, 1.0);
    small[0] = 0;
    big[0] = 2;
    CHECK(mann_whitney_u(small, big).exact);
    CHECK_FALSE(mann_whitney_u(big, big).exact);
}

TEST_CASE("significance threshold") {
    CHECK(is_significant(0.05));
    CHECK(is_significant(0.001));
    CHECK_FALSE(is_significant(0.0500001));
}

TEST_CASE("summarize") {
    std::vector<double> const fives{5, 5, 5};
    CHECK(summarize(fives).mean == 5);
    CHECK(summarize(fives).std == 0);
    std::vector<double> const ramp{1, 2, 3};
    CHECK(summarize(ramp).mean == 2);
    CHECK(summarize(ramp).std == 1);
    std::vector<double> const single{7};
    CHECK(summarize(single).mean == 7);
    CHECK(summarize(single).std == 0);
    CHECK_THROWS_AS((void)summarize(std::vector<double>{}), std::invalid_argument);
}
