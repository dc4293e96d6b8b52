#include <doctest.h>

#include <stdexcept>

#include "swgsemo/bit_vector.hpp"
#include "swgsemo/random.hpp"

using swgsemo::BitVector;

TEST_CASE("bit vector string round trip and counts") {
    auto const x = BitVector::from_string("1011000000000000000000000000000000000000000000000000000000000000001");
    CHECK(x.size() == 67);
    CHECK(x.word_count() == 2);
    CHECK(x.count() == 4);
    CHECK(x.test(0));
    CHECK_FALSE(x.test(1));
    CHECK(x.test(66));
    CHECK(x.set_positions() == std::vector<std::size_t>{0, 2, 3, 66});
    CHECK(BitVector::from_string(x.to_string()) == x);
    CHECK_THROWS_AS(BitVector::from_string("01x"), std::invalid_argument);
}

TEST_CASE("bit vector ordering and subset relation") {
    auto const a = BitVector::from_string("0100");
    auto const b = BitVector::from_string("1000");
    auto const c = BitVector::from_string("1100");
    CHECK(a.lexicographically_less(b));
    CHECK_FALSE(b.lexicographically_less(a));
    CHECK_FALSE(a.lexicographically_less(a));
    CHECK(a.is_subset_of(c));
    CHECK_FALSE(c.is_subset_of(a));
    CHECK(a.hamming_distance(b) == 2);
    CHECK(BitVector(5).none());
}

TEST_CASE("popcount stays consistent under random flips") {
    swgsemo::RandomSource rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        auto const n = 1 + rng.uniform_index(200);
        BitVector x(n);
        std::vector<bool> shadow(n, false);
        for (int step = 0; step < 300; ++step) {
            auto const i = rng.uniform_index(n);
            x.flip(i);
            shadow[i] = !shadow[i];
        }
        std::size_t expected = 0;
        for (bool b : shadow) { expected += b ? 1 : 0; }
        REQUIRE(x.count() == expected);
        REQUIRE(x.size() == n);
        // Padding bits in the last word stay clear.
        auto const tail = n % BitVector::kWordBits;
        if (tail != 0) { REQUIRE((x.words().back() >> tail) == 0); }
    }
}
