#pragma once

// Test-only helpers: instance generators and brute-force oracles that are
// independent of the library code paths they check.

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "swgsemo/archive.hpp"
#include "swgsemo/coverage.hpp"
#include "swgsemo/graph.hpp"
#include "swgsemo/random.hpp"

namespace swgsemo::testing {

// G(n, p) with every pair considered once; ids 0..n-1.
inline auto erdos_renyi(std::size_t n, double p, std::uint64_t seed) -> Graph {
    RandomSource rng(seed);
    Graph g;
    g.n = n;
    for (std::size_t i = 0; i < n; ++i) { g.labels.push_back(i + 1); }
    for (std::uint32_t u = 0; u < n; ++u) {
        for (std::uint32_t v = u + 1; v < n; ++v) {
            if (rng.bernoulli(p)) { g.edges.emplace_back(u, v); }
        }
    }
    return g;
}

// Sparse graph with average degree about `degree`, resembling the
// collaboration networks used for benchmarking.
inline auto sparse_random_graph(std::size_t n, double degree, std::uint64_t seed) -> Graph {
    RandomSource rng(seed);
    std::set<std::pair<std::uint32_t, std::uint32_t>> edges;
    auto const m = static_cast<std::size_t>(degree * static_cast<double>(n) / 2.0);
    while (edges.size() < m) {
        auto u = static_cast<std::uint32_t>(rng.uniform_index(n));
        auto v = static_cast<std::uint32_t>(rng.uniform_index(n));
        if (u == v) { continue; }
        if (u > v) { std::swap(u, v); }
        edges.emplace(u, v);
    }
    Graph g;
    g.n = n;
    for (std::size_t i = 0; i < n; ++i) { g.labels.push_back(i + 1); }
    g.edges.assign(edges.begin(), edges.end());
    return g;
}

inline auto star_graph() -> Graph { return parse_edge_list(std::string_view{"1 2\n1 3\n1 4\n"}); }
inline auto path3_graph() -> Graph { return parse_edge_list(std::string_view{"1 2\n2 3\n"}); }

inline auto uniform_instance(Graph const& g, double budget) -> CoverageInstance {
    return make_coverage_instance(g, CostModel::uniform(), budget);
}

// Coverage by definition: node u is covered if some selected v has u in N(v),
// checked edge by edge without neighbourhood lists or bitsets.
inline auto naive_coverage(Graph const& g, std::vector<bool> const& selected) -> std::size_t {
    std::vector<bool> covered(g.n, false);
    for (std::size_t v = 0; v < g.n; ++v) {
        if (selected[v]) { covered[v] = true; }
    }
    for (auto [u, v] : g.edges) {
        if (selected[u]) { covered[v] = true; }
        if (selected[v]) { covered[u] = true; }
    }
    std::size_t total = 0;
    for (bool c : covered) { total += c ? 1 : 0; }
    return total;
}

// Maximum coverage over subsets of size <= r by direct enumeration of index
// tuples (uniform costs).
inline auto max_coverage_at_most(Graph const& g, std::size_t r) -> std::size_t {
    std::size_t best = 0;
    std::vector<bool> sel(g.n, false);
    auto recurse = [&](auto&& self, std::size_t from, std::size_t left) -> void {
        best = std::max(best, naive_coverage(g, sel));
        if (left == 0) { return; }
        for (std::size_t i = from; i < g.n; ++i) {
            sel[i] = true;
            self(self, i + 1, left - 1);
            sel[i] = false;
        }
    };
    recurse(recurse, 0, r);
    return best;
}

// Non-dominated subset of `seq` with last-equal-vector-wins, by O(|S|^2) scan.
inline auto brute_force_front(std::vector<Individual> const& seq) -> std::vector<Individual> {
    std::vector<Individual> out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        bool keep = true;
        for (std::size_t j = 0; j < seq.size() && keep; ++j) {
            auto const& a = seq[j].objectives;
            auto const& b = seq[i].objectives;
            bool const strictly = a.f >= b.f && a.cost <= b.cost && (a.f != b.f || a.cost != b.cost);
            bool const later_equal = j > i && a.f == b.f && a.cost == b.cost;
            if (strictly || later_equal) { keep = false; }
        }
        if (keep) { out.push_back(seq[i]); }
    }
    return out;
}

inline auto make_individual(std::string const& bits, double f, double cost, bool feasible = true) -> Individual {
    return Individual{BitVector::from_string(bits),
                      feasible ? ObjectiveVector{f, cost, true} : ObjectiveVector::infeasible(cost)};
}

} // namespace swgsemo::testing
