#include "support.hpp"

#include <burn/error.hpp>
#include <burn/generators.hpp>
#include <burn/graph.hpp>

#include <doctest.h>

#include <cmath>

using namespace burn;

namespace {

// Floyd-Warshall straight from the edge list.
std::vector<std::vector<std::uint32_t>> floyd(const Graph & g)
{
    const auto n = g.order();
    std::vector<std::vector<std::uint32_t>> d(n, std::vector<std::uint32_t>(n, unreachable));
    for (NodeId v = 0; v < n; ++v)
        d[v][v] = 0;
    for (auto [u, v] : g.edges())
        d[u][v] = d[v][u] = 1;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (d[i][k] != unreachable && d[k][j] != unreachable && d[i][k] + d[k][j] < d[i][j])
                    d[i][j] = d[i][k] + d[k][j];
    return d;
}

// Matrix-tree theorem: any cofactor of the Laplacian, via Bareiss elimination.
long long kirchhoff(const Graph & g)
{
    const auto n = g.order();
    if (n == 1)
        return 1;
    const auto m = n - 1;
    std::vector<std::vector<long long>> a(m, std::vector<long long>(m, 0));
    for (std::size_t i = 0; i < m; ++i) {
        a[i][i] = static_cast<long long>(g.degree(static_cast<NodeId>(i)));
        for (auto w : g.neighbors(static_cast<NodeId>(i)))
            if (w < m)
                a[i][w] = -1;
    }
    long long prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < m; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap = k + 1;
            while (swap < m && a[swap][k] == 0)
                ++swap;
            if (swap == m)
                return 0;
            std::swap(a[k], a[swap]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < m; ++i)
            for (std::size_t j = k + 1; j < m; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[m - 1][m - 1];
}

} // namespace

TEST_CASE("construction rejects bad input")
{
    const std::vector<Edge> loop{{0, 0}};
    const std::vector<Edge> out_of_range{{0, 3}};
    CHECK(error_code_of([] { Graph::from_edge_list(0, {}); }) == ErrorCode::empty_graph);
    CHECK(error_code_of([&] { Graph::from_edge_list(3, loop); }) == ErrorCode::invalid_edge);
    CHECK(error_code_of([&] { Graph::from_edge_list(3, out_of_range); }) == ErrorCode::invalid_node);
}

TEST_CASE("duplicate edges collapse and neighbours are sorted")
{
    const std::vector<Edge> edges{{2, 0}, {0, 2}, {1, 0}, {2, 1}};
    auto g = Graph::from_edge_list(3, edges);
    CHECK(g.size() == 3);
    CHECK(std::vector<NodeId>(g.neighbors(0).begin(), g.neighbors(0).end()) == std::vector<NodeId>{1, 2});
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(g.adjacent(2, 1));
    CHECK(g.label(0) == "v1");
}

TEST_CASE("distances match Floyd-Warshall")
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto g = gen::gnp_random(2 + seed % 20, 0.15, seed);
        auto dm = all_pairs_distances(g);
        auto ref = floyd(g);
        for (NodeId u = 0; u < g.order(); ++u)
            for (NodeId v = 0; v < g.order(); ++v)
                REQUIRE(dm(u, v) == ref[u][v]);
        CHECK(dm == all_pairs_distances_serial(g));
    }
}

TEST_CASE("metrics of small families")
{
    auto p5 = gen::path(5);
    auto m = metrics(p5, all_pairs_distances(p5));
    CHECK(m.connected);
    CHECK(*m.radius == 2);
    CHECK(*m.diameter == 4);
    CHECK(m.center == std::vector<NodeId>{2});

    auto sp = gen::spider(3, 2);
    auto ms = metrics(sp, all_pairs_distances(sp));
    CHECK(*ms.radius == 2);
    CHECK(ms.max_degree == 3);

    std::vector<Graph> parts{gen::path(2), gen::path(3)};
    auto u = disjoint_union(parts);
    auto mu = metrics(u, all_pairs_distances(u));
    CHECK_FALSE(mu.connected);
    CHECK_FALSE(mu.radius.has_value());
    REQUIRE(mu.components.size() == 2);
    CHECK(mu.components[1].diameter == 2);
    CHECK(mu.components[1].center == std::vector<NodeId>{3});
}

TEST_CASE("radius <= diameter <= 2 radius on connected graphs")
{
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto g = gen::random_connected(1 + seed % 25, 0.1, seed);
        auto m = metrics(g, all_pairs_distances(g));
        REQUIRE(m.connected);
        CHECK(*m.radius <= *m.diameter);
        CHECK(*m.diameter <= 2 * *m.radius);
    }
}

TEST_CASE("balls nest and stay within 2r+1 on paths")
{
    auto g = gen::path(30);
    auto dm = all_pairs_distances(g);
    for (NodeId v = 0; v < 30; ++v)
        for (std::uint32_t r = 0; r < 20; ++r) {
            auto b = ball(g, dm, v, r);
            CHECK(b.is_subset_of(ball(g, dm, v, r + 1)));
            CHECK(b.count() <= 2 * r + 1);
            CHECK(b.contains(v));
        }
}

TEST_CASE("complement is an involution")
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto g = gen::gnp_random(1 + seed % 12, 0.4, seed);
        auto c = complement(g);
        CHECK(c.size() + g.size() == g.order() * (g.order() - 1) / 2);
        CHECK(complement(c) == g);
    }
}

TEST_CASE("induced subgraphs and components")
{
    auto c6 = gen::cycle(6);
    const std::vector<NodeId> nodes{0, 1, 3, 4};
    auto h = induced_subgraph(c6, nodes);
    CHECK(h.edges() == std::vector<Edge>{{0, 1}, {2, 3}});
    CHECK(components(h) == std::vector<std::vector<NodeId>>{{0, 1}, {2, 3}});
    CHECK_FALSE(is_connected(h));
    CHECK(is_connected(c6));
}

TEST_CASE("isometric subgraphs")
{
    auto c5 = gen::cycle(5);
    auto w5 = gen::wheel(5);
    const std::vector<NodeId> rim{0, 1, 2, 3, 4};
    CHECK(is_isometric_subgraph(c5, w5, rim));
    // the 6-rim is not: opposite rim nodes meet through the hub
    const std::vector<NodeId> rim6{0, 1, 2, 3, 4, 5};
    CHECK_FALSE(is_isometric_subgraph(gen::cycle(6), gen::wheel(6), rim6));

    auto p3 = gen::path(3);
    const std::vector<NodeId> arc{0, 1, 2};
    CHECK(is_isometric_subgraph(p3, c5, arc));

    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto g = gen::gnp_random(8, 0.4, seed);
        std::vector<NodeId> id(8);
        for (NodeId v = 0; v < 8; ++v)
            id[v] = v;
        CHECK(is_isometric_subgraph(g, g, id));
    }

    // every subtree of a tree is isometric
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto t = gen::random_tree(15, seed);
        auto sub = random_subtree(t, 1 + seed % 15, seed);
        CHECK(is_isometric_subgraph(induced_subgraph(t, sub), t, sub));
    }

    const std::vector<NodeId> clash{0, 0, 1};
    CHECK(error_code_of([&] { (void)is_isometric_subgraph(p3, c5, clash); }) == ErrorCode::invalid_embedding);
    const std::vector<NodeId> dropped{0, 2, 4};
    CHECK(error_code_of([&] { (void)is_isometric_subgraph(p3, gen::empty(5), dropped); }) ==
          ErrorCode::invalid_embedding);
}

TEST_CASE("spanning tree counts match the matrix-tree theorem")
{
    CHECK(enumerate_spanning_trees(gen::cycle(4)).size() == 4);
    CHECK(enumerate_spanning_trees(gen::complete(4)).size() == 16);
    CHECK(enumerate_spanning_trees(gen::wheel(5)).size() == 121);
    CHECK(kirchhoff(gen::wheel(5)) == 121);

    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        auto g = gen::random_connected(2 + seed % 7, 0.35, seed);
        auto trees = enumerate_spanning_trees(g);
        CHECK(static_cast<long long>(trees.size()) == kirchhoff(g));
        for (const auto & t : trees) {
            CHECK(t.size() == g.order() - 1);
            CHECK(is_connected(t));
            for (auto [u, v] : t.edges())
                CHECK(g.adjacent(u, v));
        }
    }
}

TEST_CASE("spanning tree enumeration limits")
{
    CHECK(error_code_of([] { (void)enumerate_spanning_trees(gen::complete(6), 100); }) == ErrorCode::limit_exceeded);
    CHECK(error_code_of([] { (void)enumerate_spanning_trees(gen::empty(3)); }) == ErrorCode::disconnected);
}

TEST_CASE("ceil_sqrt")
{
    CHECK(ceil_sqrt(0) == 0);
    CHECK(ceil_sqrt(1) == 1);
    for (std::size_t n = 1; n < 5000; ++n) {
        auto k = ceil_sqrt(n);
        CHECK(k * k >= n);
        CHECK((k - 1) * (k - 1) < n);
    }
}

TEST_CASE("disjoint union offsets ids")
{
    std::vector<Graph> parts{gen::path(2), gen::cycle(3)};
    auto u = disjoint_union(parts);
    CHECK(u.order() == 5);
    CHECK(u.edges() == std::vector<Edge>{{0, 1}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(error_code_of([] { (void)disjoint_union(std::span<const Graph>{}); }) == ErrorCode::empty_graph);
}
