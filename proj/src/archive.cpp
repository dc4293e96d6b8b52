#include "swgsemo/archive.hpp"

#include <algorithm>
#include <iterator>

namespace swgsemo {

auto to_string(Dominance d) -> char const* {
    switch (d) {
    case Dominance::strict: return "strict";
    case Dominance::weak_only: return "weak-only";
    case Dominance::incomparable: return "incomparable";
    case Dominance::dominated_by: return "dominated-by";
    }
    return "unknown";
}

auto ParetoArchive::insert(Individual y) -> InsertOutcome {
    auto const& yv = y.objectives;
    auto const by_cost = [](Individual const& m, double c) { return m.objectives.cost < c; };

    // Members with cost <= y.cost have f <= f(pred), so pred alone decides
    // whether anything strictly dominates y.
    auto above = std::upper_bound(members_.begin(), members_.end(), yv.cost,
                                  [](double c, Individual const& m) { return c < m.objectives.cost; });
    if (above != members_.begin()) {
        auto const& pred = std::prev(above)->objectives;
        if (pred.f >= yv.f && !(pred == yv)) { return InsertOutcome::rejected; }
    }

    // Members weakly dominated by y form a contiguous run starting at the first
    // cost >= y.cost and ending before the first f > y.f.
    auto first = std::lower_bound(members_.begin(), members_.end(), yv.cost, by_cost);
    auto last = first;
    while (last != members_.end() && last->objectives.f <= yv.f) { ++last; }

    if (first != last) {
        *first = std::move(y);
        members_.erase(std::next(first), last);
    } else {
        members_.insert(first, std::move(y));
    }
    return InsertOutcome::accepted;
}

auto ParetoArchive::cost_window(double lo, double hi) const -> std::pair<std::size_t, std::size_t> {
    auto first = std::lower_bound(members_.begin(), members_.end(), lo,
                                  [](Individual const& m, double c) { return m.objectives.cost < c; });
    auto last = std::upper_bound(first, members_.end(), hi,
                                 [](double c, Individual const& m) { return c < m.objectives.cost; });
    return {static_cast<std::size_t>(first - members_.begin()), static_cast<std::size_t>(last - members_.begin())};
}

auto ParetoArchive::best_feasible() const noexcept -> Individual const* {
    // f ascends with cost, so the feasible member with the highest cost wins.
    for (auto it = members_.rbegin(); it != members_.rend(); ++it) {
        if (it->objectives.feasible) { return &*it; }
    }
    return nullptr;
}

auto best_feasible(std::span<Individual const> pool) noexcept -> Individual const* {
    Individual const* best = nullptr;
    for (auto const& m : pool) {
        if (!m.objectives.feasible) { continue; }
        if (best == nullptr || m.objectives.f > best->objectives.f ||
            (m.objectives.f == best->objectives.f && m.objectives.cost < best->objectives.cost)) {
            best = &m;
        }
    }
    return best;
}

} // namespace swgsemo
