#include "swgsemo/random.hpp"

#include <stdexcept>

namespace swgsemo {

auto RandomSource::uniform_index(std::uint64_t bound) -> std::uint64_t {
    if (bound == 0) { throw std::invalid_argument("uniform_index: bound must be positive"); }
    // Draws below 2^64 mod bound would make small residues more likely.
    auto const threshold = (0 - bound) % bound;
    for (;;) {
        auto const x = engine_();
        if (x >= threshold) { return x % bound; }
    }
}

} // namespace swgsemo
