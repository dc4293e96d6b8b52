#pragma once

#include <limits>

#include "swgsemo/bit_vector.hpp"

namespace swgsemo {

// Bi-objective value of a search point: maximize f, minimize cost.
// Infeasible points (cost > B) carry f = -inf, which compares strictly below
// every finite fitness, so dominance needs no special case for them.
struct ObjectiveVector {
    static constexpr double kInfeasibleFitness = -std::numeric_limits<double>::infinity();

    double f{0.0};
    double cost{0.0};
    bool feasible{true};

    static constexpr auto infeasible(double cost) noexcept -> ObjectiveVector {
        return ObjectiveVector{kInfeasibleFitness, cost, false};
    }

    friend constexpr auto operator==(ObjectiveVector const& a, ObjectiveVector const& b) noexcept -> bool {
        return a.f == b.f && a.cost == b.cost;
    }
};

// Relation of `a` to `b`.
enum class Dominance {
    strict,       // a weakly dominates b and the vectors differ
    weak_only,    // equal vectors
    incomparable,
    dominated_by, // b strictly dominates a
};

[[nodiscard]] constexpr auto weakly_dominates(ObjectiveVector const& a, ObjectiveVector const& b) noexcept -> bool {
    return a.f >= b.f && a.cost <= b.cost;
}

[[nodiscard]] constexpr auto strictly_dominates(ObjectiveVector const& a, ObjectiveVector const& b) noexcept -> bool {
    return weakly_dominates(a, b) && !(a == b);
}

[[nodiscard]] constexpr auto dominates(ObjectiveVector const& a, ObjectiveVector const& b) noexcept -> Dominance {
    if (a == b) { return Dominance::weak_only; }
    if (weakly_dominates(a, b)) { return Dominance::strict; }
    if (weakly_dominates(b, a)) { return Dominance::dominated_by; }
    return Dominance::incomparable;
}

[[nodiscard]] auto to_string(Dominance d) -> char const*;

struct Individual {
    BitVector genotype;
    ObjectiveVector objectives;
};

} // namespace swgsemo
