#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace swgsemo {

// Fixed-length bit string packed into 64-bit words. Bits past size() in the
// last word are always zero, so word-level popcount and equality are exact.
class BitVector {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitVector() = default;
    explicit BitVector(std::size_t n) : size_{n}, words_((n + kWordBits - 1) / kWordBits, 0) {}

    // Parses a '0'/'1' string, position 0 first.
    static auto from_string(std::string_view bits) -> BitVector;

    [[nodiscard]] auto size() const noexcept -> std::size_t { return size_; }
    [[nodiscard]] auto word_count() const noexcept -> std::size_t { return words_.size(); }
    [[nodiscard]] auto words() const noexcept -> std::vector<Word> const& { return words_; }

    [[nodiscard]] auto test(std::size_t i) const noexcept -> bool {
        return (words_[i / kWordBits] >> (i % kWordBits)) & 1U;
    }
    void set(std::size_t i, bool value = true) noexcept {
        auto const mask = Word{1} << (i % kWordBits);
        if (value) {
            words_[i / kWordBits] |= mask;
        } else {
            words_[i / kWordBits] &= ~mask;
        }
    }
    void flip(std::size_t i) noexcept { words_[i / kWordBits] ^= Word{1} << (i % kWordBits); }

    [[nodiscard]] auto count() const noexcept -> std::size_t {
        std::size_t total = 0;
        for (auto w : words_) { total += static_cast<std::size_t>(std::popcount(w)); }
        return total;
    }
    [[nodiscard]] auto none() const noexcept -> bool {
        for (auto w : words_) {
            if (w != 0) { return false; }
        }
        return true;
    }

    // Calls fn(i) for every set position in ascending order.
    template <typename Fn>
    void for_each_set(Fn&& fn) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            auto w = words_[k];
            while (w != 0) {
                auto const bit = static_cast<std::size_t>(std::countr_zero(w));
                fn(k * kWordBits + bit);
                w &= w - 1;
            }
        }
    }

    [[nodiscard]] auto set_positions() const -> std::vector<std::size_t>;
    [[nodiscard]] auto to_string() const -> std::string;

    // x <= y component-wise.
    [[nodiscard]] auto is_subset_of(BitVector const& other) const noexcept -> bool;
    [[nodiscard]] auto hamming_distance(BitVector const& other) const noexcept -> std::size_t;

    // Lexicographic order on the bit string read from position 0 ('0' < '1').
    [[nodiscard]] auto lexicographically_less(BitVector const& other) const noexcept -> bool;

    friend auto operator==(BitVector const&, BitVector const&) -> bool = default;

private:
    std::size_t size_{0};
    std::vector<Word> words_;
};

} // namespace swgsemo
