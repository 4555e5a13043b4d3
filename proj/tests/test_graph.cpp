#include <doctest.h>

#include <sstream>

#include "regconn/error.hpp"
#include "regconn/generators.hpp"
#include "regconn/graph.hpp"
#include "support.hpp"

using namespace regconn;

namespace {

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected regconn::Error");
    return ErrorKind::NumericFailure;
}

}  // namespace

TEST_CASE("from_edge_list builds a cycle and enforces simple-graph rules") {
    const std::vector<Edge> c4{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
    const auto g = Graph::from_edge_list(4, c4);
    CHECK(g.edge_count() == 4);
    for (Vertex u = 0; u < 4; ++u) CHECK(g.degree(u) == 2);
    CHECK(g.has_edge(3, 0));
    CHECK(g.has_edge(0, 3));
    CHECK_FALSE(g.has_edge(0, 2));

    const std::vector<Edge> loop{{0, 0}};
    CHECK(kind_of([&] { Graph::from_edge_list(3, loop); }) == ErrorKind::SelfLoop);

    const std::vector<Edge> far{{0, 5}};
    CHECK(kind_of([&] { Graph::from_edge_list(3, far); }) == ErrorKind::IndexOutOfRange);

    const std::vector<Edge> dup{{0, 1}, {0, 1}, {1, 0}};
    CHECK(Graph::from_edge_list(5, dup).edge_count() == 1);
}

TEST_CASE("degree and regularity") {
    CHECK(complete(4).degree(2) == 3);
    const auto p = petersen();
    for (Vertex u = 0; u < 10; ++u) CHECK(p.degree(u) == 3);
    CHECK(kind_of([&] { (void)p.degree(10); }) == ErrorKind::IndexOutOfRange);

    CHECK(cycle(5).regularity() == 2u);
    CHECK_FALSE(testing::path(3).regularity().has_value());
    CHECK(tight_family(11).regularity() == 6u);
}

TEST_CASE("neighbourhood graphs") {
    SUBCASE("cycle") {
        const auto [local, map] = cycle(5).neighbourhood_graph(0);
        CHECK(local.vertex_count() == 2);
        CHECK(local.edge_count() == 0);
        CHECK(map.vertices()[0] == 1);
        CHECK(map.vertices()[1] == 4);
    }
    SUBCASE("petersen") {
        const auto g = petersen();
        for (Vertex u = 0; u < 10; ++u) {
            const auto [local, map] = g.neighbourhood_graph(u);
            CHECK(local.vertex_count() == 3);
            CHECK(local.edge_count() == 0);
            // Induced-subgraph oracle: no two neighbours of u are adjacent.
            for (Vertex a : map) {
                for (Vertex b : map) CHECK_FALSE(g.has_edge(a, b));
            }
        }
    }
    SUBCASE("tight family larger part is a star") {
        const auto g = tight_family(11);
        const auto [local, map] = g.neighbourhood_graph(5);  // first vertex of the matched part
        CHECK(local.vertex_count() == 6);
        CHECK(local.edge_count() == 5);
        std::vector<std::size_t> degrees;
        for (Vertex w = 0; w < 6; ++w) degrees.push_back(local.degree(w));
        std::sort(degrees.begin(), degrees.end());
        CHECK(degrees == std::vector<std::size_t>{1, 1, 1, 1, 1, 5});
        CHECK(local.is_connected());
    }
    CHECK(kind_of([] { (void)cycle(5).neighbourhood_graph(7); }) == ErrorKind::IndexOutOfRange);
}

TEST_CASE("connected components") {
    const auto c4 = cycle(4).connected_components();
    REQUIRE(c4.size() == 1);
    CHECK(c4[0].size() == 4);

    const std::vector<Edge> two{{0, 2}, {1, 3}};
    const auto comps = Graph::from_edge_list(4, two).connected_components();
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSubset(4, {0, 2}));
    CHECK(comps[1] == VertexSubset(4, {1, 3}));

    // Smaller-part vertex of the tight family: (v+1)/4 components, each an edge.
    const auto [local, map] = tight_family(11).neighbourhood_graph(0);
    const auto parts = local.connected_components();
    REQUIRE(parts.size() == 3);
    for (const auto& c : parts) CHECK(c.size() == 2);
}

TEST_CASE("component blocks are disjoint, cover, and contain every edge") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const auto g = testing::random_gnp(3 + trial % 15, 0.15, rng);
        const auto comps = g.connected_components();
        std::vector<int> owner(g.vertex_count(), -1);
        for (std::size_t c = 0; c < comps.size(); ++c) {
            if (c > 0) CHECK(comps[c - 1][0] < comps[c][0]);
            for (Vertex u : comps[c]) {
                CHECK(owner[u] == -1);
                owner[u] = static_cast<int>(c);
            }
        }
        for (int o : owner) CHECK(o >= 0);
        for (const auto& [a, b] : g.edges()) CHECK(owner[a] == owner[b]);
        std::size_t degree_sum = 0;
        for (Vertex u = 0; u < g.vertex_count(); ++u) degree_sum += g.degree(u);
        CHECK(degree_sum == 2 * g.edge_count());
    }
}

TEST_CASE("average degree is exact") {
    const auto g = cycle(5);
    CHECK(g.average_degree(VertexSubset(5, {3})) == Rational(0));
    CHECK(g.average_degree(VertexSubset(5, {1, 2})) == Rational(1));
    CHECK(kind_of([&] { (void)g.average_degree(VertexSubset(5, {})); }) == ErrorKind::EmptySubset);

    const auto t = tight_family(11);
    const auto [local, map] = t.neighbourhood_graph(5);
    const auto avg = t.average_degree(map);
    CHECK(avg == Rational(5, 3));
    CHECK(avg == Rational(2 * (11 - 1), 11 + 1));
    CHECK(local.average_degree(VertexSubset(6, {0, 1, 2, 3, 4, 5})) == avg);
}

TEST_CASE("edge-list text format") {
    std::istringstream in(
        "# a 5-cycle\n"
        "v 5\n"
        "0 1  # first edge\n"
        "1 2\n"
        "\n"
        "2\t3\n"
        "3 4\n"
        "4 0\n");
    const auto g = read_edge_list(in);
    CHECK(g == cycle(5));

    std::ostringstream out;
    write_edge_list(out, g);
    std::istringstream back(out.str());
    CHECK(read_edge_list(back) == g);

    auto parse = [](const char* text) {
        std::istringstream s(text);
        return read_edge_list(s);
    };
    CHECK(kind_of([&] { parse("0 1\n"); }) == ErrorKind::ParseError);
    CHECK(kind_of([&] { parse("v 3\n0 x\n"); }) == ErrorKind::ParseError);
    CHECK(kind_of([&] { parse("v 3\n0 1 2\n"); }) == ErrorKind::ParseError);
    CHECK(kind_of([&] { parse("v 0\n"); }) == ErrorKind::ParseError);
    CHECK(kind_of([&] { parse("v 3\n0 -1\n"); }) == ErrorKind::ParseError);
    CHECK(kind_of([&] { parse("# nothing\n"); }) == ErrorKind::ParseError);
    CHECK(kind_of([&] { parse("v 3\n0 3\n"); }) == ErrorKind::IndexOutOfRange);
    CHECK(kind_of([&] { parse("v 3\n1 1\n"); }) == ErrorKind::SelfLoop);
}
