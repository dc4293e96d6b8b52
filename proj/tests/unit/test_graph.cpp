#include <doctest.h>

#include <stdexcept>
#include <zlib.h>

#include <cstdio>
#include <filesystem>
#include <numeric>

#include "support.hpp"
#include "swgsemo/graph.hpp"

using namespace swgsemo;

namespace {

using Edges = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

auto temp_path(std::string const& name) -> std::filesystem::path {
    return std::filesystem::temp_directory_path() / ("swgsemo_test_" + name);
}

} // namespace

TEST_CASE("parse bare edge lists") {
    auto const path = parse_edge_list(std::string_view{"1 2\n2 3\n"});
    CHECK(path.n == 3);
    CHECK(path.edges == Edges{{0, 1}, {1, 2}});

    auto const dup = parse_edge_list(std::string_view{"% comment\n1 2\n1 2\n2 1\n"});
    CHECK(dup.n == 2);
    CHECK(dup.edges == Edges{{0, 1}});

    auto const sparse = parse_edge_list(std::string_view{"5 9\n"});
    CHECK(sparse.n == 2);
    CHECK(sparse.labels == std::vector<std::uint64_t>{5, 9});
    CHECK(sparse.internal_id(5) == 0);
    CHECK(sparse.internal_id(9) == 1);
    CHECK_THROWS_AS((void)sparse.internal_id(7), std::out_of_range);
}

TEST_CASE("parse tolerates weights, self-loops, hash comments and blank lines") {
    auto const g = parse_edge_list(std::string_view{"# header comment\n\n1 2 0.5\n3 3 1\n2\t3\t7 99\r\n"});
    CHECK(g.n == 3);
    CHECK(g.edges == Edges{{0, 1}, {1, 2}});
}

TEST_CASE("MatrixMarket header keeps isolated nodes") {
    auto const text = "%%MatrixMarket matrix coordinate pattern symmetric\n% more\n6 6 2\n2 1\n5 3\n";
    auto const g = parse_edge_list(std::string_view{text});
    CHECK(g.n == 6);
    CHECK(g.edges == Edges{{0, 1}, {2, 4}});
    CHECK(closed_neighborhoods(g)[5] == std::vector<std::uint32_t>{5});
    CHECK_THROWS_AS((void)parse_edge_list(std::string_view{"3 3 1\n1 4\n"}), ParseError);
}

TEST_CASE("parse errors carry line numbers") {
    try {
        (void)parse_edge_list(std::string_view{"1 2\n% ok\n3 x\n"});
        FAIL("expected a parse error");
    } catch (ParseError const& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS((void)parse_edge_list(std::string_view{"1 2\n7\n"}), ParseError);
    CHECK_THROWS_AS((void)parse_edge_list(std::string_view{"% only comments\n"}), ParseError);
    CHECK_THROWS_AS((void)parse_edge_list(std::string_view{""}), ParseError);
    CHECK_THROWS_AS((void)parse_edge_list(std::string_view{"-1 2\n"}), ParseError);
}

TEST_CASE("closed neighborhoods") {
    auto const star = testing::star_graph();
    auto const nbh = closed_neighborhoods(star);
    CHECK(nbh[0] == std::vector<std::uint32_t>{0, 1, 2, 3});
    CHECK(nbh[1] == std::vector<std::uint32_t>{0, 1});
    CHECK(closed_neighborhoods(testing::path3_graph())[1].size() == 3);
    auto const isolated = parse_edge_list(std::string_view{"2 2 0\n"});
    CHECK(closed_neighborhoods(isolated)[1] == std::vector<std::uint32_t>{1});
}

TEST_CASE("neighborhood sizes sum to n + 2|E| and text round trips") {
    RandomSource rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        auto const n = 2 + rng.uniform_index(300);
        auto const g = testing::sparse_random_graph(n, rng.uniform01() * 5.0, rng.next_u64());
        auto const nbh = closed_neighborhoods(g);
        auto const total = std::accumulate(nbh.begin(), nbh.end(), std::size_t{0},
                                           [](std::size_t acc, auto const& l) { return acc + l.size(); });
        REQUIRE(total == g.n + 2 * g.edges.size());

        auto const again = parse_edge_list(std::string_view{to_matrix_market(g)});
        REQUIRE(again == g);
        REQUIRE(parse_edge_list(std::string_view{to_matrix_market(again)}) == again);
    }
}

TEST_CASE("read plain and gzip files") {
    auto const g = testing::sparse_random_graph(50, 3.0, 5);
    auto const text = to_matrix_market(g);

    auto const plain = temp_path("graph.mtx");
    {
        std::FILE* f = std::fopen(plain.string().c_str(), "w");
        REQUIRE(f != nullptr);
        std::fputs(text.c_str(), f);
        std::fclose(f);
    }
    CHECK(read_graph_file(plain) == g);

    auto const gz = temp_path("graph.mtx.gz");
    {
        gzFile f = gzopen(gz.string().c_str(), "wb");
        REQUIRE(f != nullptr);
        gzwrite(f, text.data(), static_cast<unsigned>(text.size()));
        gzclose(f);
    }
    CHECK(read_graph_file(gz) == g);

    std::filesystem::remove(plain);
    std::filesystem::remove(gz);
    CHECK_THROWS((void)read_graph_file(temp_path("does_not_exist.el")));
}

TEST_CASE("assign costs") {
    CHECK(assign_costs(5, CostModel::uniform()) == std::vector<double>(5, 1.0));

    auto const model = CostModel::random_interval(0.5, 1.5, 123);
    auto const costs = assign_costs(10'000, model);
    double sum = 0.0;
    for (auto c : costs) {
        REQUIRE(c >= 0.5);
        REQUIRE(c <= 1.5);
        sum += c;
    }
    CHECK(std::abs(sum / 10'000.0 - 1.0) <= 0.02);
    CHECK(assign_costs(10'000, model) == costs);
    CHECK(assign_costs(10, CostModel::random_interval(0.5, 1.5, 124)) != assign_costs(10, model));

    CHECK_THROWS_AS((void)assign_costs(3, CostModel::random_interval(1.5, 0.5, 1)), std::invalid_argument);
    CHECK_THROWS_AS((void)assign_costs(3, CostModel::random_interval(1.0, 1.0, 1)), std::invalid_argument);
    CHECK_THROWS_AS((void)assign_costs(3, CostModel::random_interval(0.0, 1.0, 1)), std::invalid_argument);
}
