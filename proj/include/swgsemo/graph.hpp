#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "swgsemo/coverage.hpp"

namespace swgsemo {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::string const& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_{line} {}

    [[nodiscard]] auto line() const noexcept -> std::size_t { return line_; }

private:
    std::size_t line_;
};

// Simple undirected graph with contiguous internal ids 0..n-1.
struct Graph {
    std::size_t n{0};
    // Each edge once as (u, v) with u < v, sorted; no self-loops or duplicates.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    // labels[internal id] = id used in the input file.
    std::vector<std::uint64_t> labels;

    [[nodiscard]] auto internal_id(std::uint64_t label) const -> std::size_t;

    friend auto operator==(Graph const&, Graph const&) -> bool = default;
};

// Reads a whitespace-separated edge list. Lines starting with '%' or '#' are
// comments. If the first data line looks like a MatrixMarket size line
// ("rows cols nnz" with rows == cols), node ids are 1-based indices and
// n = rows, so nodes that appear in no edge are kept. Otherwise the distinct
// ids are compacted in ascending order. Extra columns (weights) are ignored;
// self-loops and repeated edges collapse.
[[nodiscard]] auto parse_edge_list(std::istream& in) -> Graph;
[[nodiscard]] auto parse_edge_list(std::string_view text) -> Graph;

// Plain or gzip-compressed (".gz") file.
[[nodiscard]] auto read_graph_file(std::filesystem::path const& path) -> Graph;

// MatrixMarket pattern symmetric text; parses back to an identical graph
// apart from labels, which become 1..n.
[[nodiscard]] auto to_matrix_market(Graph const& graph) -> std::string;

// N(v) = {v} plus all neighbours of v, each sorted ascending.
[[nodiscard]] auto closed_neighborhoods(Graph const& graph) -> std::vector<std::vector<std::uint32_t>>;

// Uniform: every cost 1. Random interval: i.i.d. uniform draws from the
// model's [lo, hi] in node order, seeded by the model seed.
[[nodiscard]] auto assign_costs(std::size_t n, CostModel const& model) -> std::vector<double>;

[[nodiscard]] auto make_coverage_instance(Graph const& graph, CostModel const& model, double budget)
    -> CoverageInstance;

} // namespace swgsemo
