#include "swgsemo/bit_vector.hpp"

#include <stdexcept>

namespace swgsemo {

auto BitVector::from_string(std::string_view bits) -> BitVector {
    BitVector v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i);
        } else if (bits[i] != '0') {
            throw std::invalid_argument("bit string may only contain '0' and '1'");
        }
    }
    return v;
}

auto BitVector::set_positions() const -> std::vector<std::size_t> {
    std::vector<std::size_t> out;
    for_each_set([&](std::size_t i) { out.push_back(i); });
    return out;
}

auto BitVector::to_string() const -> std::string {
    std::string s(size_, '0');
    for_each_set([&](std::size_t i) { s[i] = '1'; });
    return s;
}

auto BitVector::is_subset_of(BitVector const& other) const noexcept -> bool {
    if (size_ != other.size_) { return false; }
    for (std::size_t k = 0; k < words_.size(); ++k) {
        if ((words_[k] & ~other.words_[k]) != 0) { return false; }
    }
    return true;
}

auto BitVector::hamming_distance(BitVector const& other) const noexcept -> std::size_t {
    std::size_t d = 0;
    for (std::size_t k = 0; k < words_.size() && k < other.words_.size(); ++k) {
        d += static_cast<std::size_t>(std::popcount(words_[k] ^ other.words_[k]));
    }
    return d;
}

auto BitVector::lexicographically_less(BitVector const& other) const noexcept -> bool {
    for (std::size_t k = 0; k < words_.size() && k < other.words_.size(); ++k) {
        auto const diff = words_[k] ^ other.words_[k];
        if (diff != 0) {
            // Lowest differing position decides; the smaller string has a 0 there.
            auto const low = diff & (~diff + 1);
            return (words_[k] & low) == 0;
        }
    }
    return size_ < other.size_;
}

} // namespace swgsemo
