#include "swgsemo/graph.hpp"

#include <zlib.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>

#include "swgsemo/random.hpp"

namespace swgsemo {
namespace {

auto split_tokens(std::string_view line) -> std::vector<std::string_view> {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r' || line[i] == ',')) { ++i; }
        auto const start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != ',') { ++i; }
        if (i > start) { tokens.push_back(line.substr(start, i - start)); }
    }
    return tokens;
}

auto parse_id(std::string_view token, std::size_t line_no) -> std::uint64_t {
    std::uint64_t value = 0;
    auto const* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(token.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError(line_no, "expected a non-negative integer node id, got '" + std::string(token) + "'");
    }
    return value;
}

auto is_integer(std::string_view token) -> bool {
    return !token.empty() && std::all_of(token.begin(), token.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
}

} // namespace

auto Graph::internal_id(std::uint64_t label) const -> std::size_t {
    auto it = std::lower_bound(labels.begin(), labels.end(), label);
    if (it == labels.end() || *it != label) { throw std::out_of_range("unknown node label " + std::to_string(label)); }
    return static_cast<std::size_t>(it - labels.begin());
}

auto parse_edge_list(std::istream& in) -> Graph {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
    bool seen_data = false;
    bool has_header = false;
    std::uint64_t header_rows = 0;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto const tokens = split_tokens(line);
        if (tokens.empty() || tokens[0].front() == '%' || tokens[0].front() == '#') { continue; }

        if (!seen_data) {
            seen_data = true;
            if (tokens.size() == 3 && is_integer(tokens[0]) && is_integer(tokens[1]) && is_integer(tokens[2]) &&
                tokens[0] == tokens[1]) {
                has_header = true;
                header_rows = parse_id(tokens[0], line_no);
                continue;
            }
        }
        if (tokens.size() < 2) { throw ParseError(line_no, "edge record needs two node ids"); }
        auto const u = parse_id(tokens[0], line_no);
        auto const v = parse_id(tokens[1], line_no);
        if (has_header && (u == 0 || v == 0 || u > header_rows || v > header_rows)) {
            throw ParseError(line_no, "node id outside 1.." + std::to_string(header_rows));
        }
        raw.emplace_back(u, v);
    }

    Graph g;
    if (has_header) {
        g.n = header_rows;
        g.labels.resize(g.n);
        for (std::size_t i = 0; i < g.n; ++i) { g.labels[i] = i + 1; }
    } else {
        for (auto [u, v] : raw) {
            g.labels.push_back(u);
            g.labels.push_back(v);
        }
        std::sort(g.labels.begin(), g.labels.end());
        g.labels.erase(std::unique(g.labels.begin(), g.labels.end()), g.labels.end());
        g.n = g.labels.size();
    }
    if (g.n == 0) { throw ParseError(line_no, "graph has no nodes"); }
    if (g.n > std::numeric_limits<std::uint32_t>::max()) { throw ParseError(line_no, "graph too large"); }

    for (auto [a, b] : raw) {
        auto u = static_cast<std::uint32_t>(has_header ? a - 1 : g.internal_id(a));
        auto v = static_cast<std::uint32_t>(has_header ? b - 1 : g.internal_id(b));
        if (u == v) { continue; }
        if (u > v) { std::swap(u, v); }
        g.edges.emplace_back(u, v);
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

auto parse_edge_list(std::string_view text) -> Graph {
    std::istringstream in{std::string(text)};
    return parse_edge_list(in);
}

auto read_graph_file(std::filesystem::path const& path) -> Graph {
    if (path.extension() == ".gz") {
        gzFile file = gzopen(path.string().c_str(), "rb");
        if (file == nullptr) { throw std::runtime_error("cannot open " + path.string()); }
        std::string text;
        char buffer[1 << 16];
        int got = 0;
        while ((got = gzread(file, buffer, sizeof(buffer))) > 0) { text.append(buffer, static_cast<std::size_t>(got)); }
        int err = 0;
        char const* message = gzerror(file, &err);
        std::string const reason = (got < 0 && message != nullptr) ? message : "";
        gzclose(file);
        if (got < 0) { throw std::runtime_error("cannot decompress " + path.string() + ": " + reason); }
        return parse_edge_list(std::string_view{text});
    }
    std::ifstream in(path);
    if (!in) { throw std::runtime_error("cannot open " + path.string()); }
    return parse_edge_list(in);
}

auto to_matrix_market(Graph const& graph) -> std::string {
    std::ostringstream out;
    out << "%%MatrixMarket matrix coordinate pattern symmetric\n";
    out << graph.n << ' ' << graph.n << ' ' << graph.edges.size() << '\n';
    for (auto [u, v] : graph.edges) { out << (v + 1) << ' ' << (u + 1) << '\n'; }
    return out.str();
}

auto closed_neighborhoods(Graph const& graph) -> std::vector<std::vector<std::uint32_t>> {
    std::vector<std::vector<std::uint32_t>> nbh(graph.n);
    for (std::size_t v = 0; v < graph.n; ++v) { nbh[v].push_back(static_cast<std::uint32_t>(v)); }
    for (auto [u, v] : graph.edges) {
        nbh[u].push_back(v);
        nbh[v].push_back(u);
    }
    for (auto& list : nbh) { std::sort(list.begin(), list.end()); }
    return nbh;
}

auto assign_costs(std::size_t n, CostModel const& model) -> std::vector<double> {
    if (model.kind == CostModel::Kind::uniform) { return std::vector<double>(n, 1.0); }
    if (!(model.lo < model.hi)) { throw std::invalid_argument("random cost interval needs lo < hi"); }
    if (!(model.lo > 0.0)) { throw std::invalid_argument("random cost interval needs lo > 0"); }
    RandomSource rng(model.seed);
    std::vector<double> costs(n);
    for (auto& c : costs) { c = rng.uniform_real(model.lo, model.hi); }
    return costs;
}

auto make_coverage_instance(Graph const& graph, CostModel const& model, double budget) -> CoverageInstance {
    return CoverageInstance(closed_neighborhoods(graph), assign_costs(graph.n, model), budget);
}

} // namespace swgsemo
