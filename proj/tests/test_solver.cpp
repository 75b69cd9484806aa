#include "support.hpp"

#include <burn/generators.hpp>
#include <burn/oracle.hpp>
#include <burn/solver.hpp>

#include <doctest.h>

#include <random>

using namespace burn;

namespace {

constexpr SolverOptions search_only{.allow_closed_form = false, .parallel = false};

std::size_t solve(const Graph & g, const SolverOptions & opts = search_only)
{
    auto r = burning_number(g, all_pairs_distances(g), opts);
    REQUIRE(r.witness.size() == r.burning_number);
    REQUIRE(simulate(g, r.witness).valid());
    return r.burning_number;
}

} // namespace

TEST_CASE("path witness burns P_n in ceil(sqrt n) rounds")
{
    for (std::size_t n = 1; n <= 400; ++n) {
        auto w = path_witness(n);
        REQUIRE(w.size() == ceil_sqrt(n));
        REQUIRE(simulate(gen::path(n), w).valid());
    }
}

TEST_CASE("closed forms are only used on tagged graphs and agree with search")
{
    for (std::size_t n = 1; n <= 20; ++n) {
        auto p = gen::path(n);
        auto r = burning_number(p, all_pairs_distances(p));
        CHECK(r.method == SolveMethod::closed_form);
        CHECK(r.burning_number == solve(p));
    }
    for (std::size_t n = 3; n <= 20; ++n) {
        auto c = gen::cycle(n);
        auto r = burning_number(c, all_pairs_distances(c));
        CHECK(r.method == SolveMethod::closed_form);
        CHECK(simulate(c, r.witness).valid());
        CHECK(r.burning_number == solve(c));
    }
    auto k1 = gen::complete(1);
    CHECK(burning_number(k1, all_pairs_distances(k1)).burning_number == 1);

    // same edges, no tag: the search runs
    auto untagged = relabel(gen::path(9), random_permutation(9, 1));
    auto r = burning_number(untagged, all_pairs_distances(untagged));
    CHECK(r.method == SolveMethod::exact);
    CHECK(r.burning_number == 3);
    CHECK(to_string(SolveMethod::closed_form) == "closed-form");
}

TEST_CASE("known burning numbers")
{
    CHECK(solve(gen::cycle(5)) == 3);
    CHECK(solve(gen::wheel(5)) == 2);
    CHECK(solve(gen::star(6)) == 2);
    CHECK(solve(gen::spider(3, 2)) == 3);
    CHECK(solve(gen::spider(4, 3)) == 4);
    CHECK(solve(gen::empty(4)) == 4);
    CHECK(solve(gen::path(25)) == 5);
    CHECK(solve(gen::path(26)) == 6);
    for (std::size_t t = 1; t <= 5; ++t) {
        std::vector<Graph> parts(t, gen::path(2));
        CHECK(solve(disjoint_union(parts)) == t + 1);
    }
}

TEST_CASE("exact solver matches the brute-force oracle")
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 250; ++trial) {
        auto g = gen::gnp_random(1 + rng() % 12, 0.05 + 0.05 * static_cast<double>(rng() % 12), rng());
        REQUIRE(solve(g) == oracle::brute_force_burning_number(g));
    }
}

TEST_CASE("optimal sequences are enumerated completely")
{
    auto k2 = gen::complete(2);
    auto two = enumerate_optimal_sequences(k2, all_pairs_distances(k2));
    CHECK(two.burning_number == 2);
    CHECK(two.sequences == std::vector<BurningSequence>{{{0, 1}}, {{1, 0}}});

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 80; ++trial) {
        auto g = gen::gnp_random(1 + rng() % 9, 0.3, rng());
        auto dm = all_pairs_distances(g);
        auto all = enumerate_optimal_sequences(g, dm);
        REQUIRE_FALSE(all.limit_exceeded);
        CHECK(all.sequences.size() == oracle::count_burning_sequences(g, all.burning_number));
        CHECK(std::is_sorted(all.sequences.begin(), all.sequences.end()));
    }

    auto big = gen::empty(7);
    auto capped = enumerate_optimal_sequences(big, all_pairs_distances(big), 100);
    CHECK(capped.limit_exceeded);
}

TEST_CASE("decisions are monotone in k")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = gen::random_connected(2 + rng() % 20, 0.1, rng());
        auto dm = all_pairs_distances(g);
        const auto b = solve(g);
        CHECK_FALSE(decide_serial(g, dm, b - 1).witness.has_value());
        for (std::size_t k = b; k <= b + 2; ++k) {
            auto d = decide_serial(g, dm, k);
            REQUIRE(d.witness.has_value());
            CHECK(d.witness->size() <= k);
            CHECK(simulate(g, *d.witness).valid());
        }
    }
}

TEST_CASE("greedy upper bound is an upper bound")
{
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = gen::gnp_random(1 + rng() % 16, 0.2, rng());
        auto dm = all_pairs_distances(g);
        auto h = greedy_upper_bound(g, dm);
        CHECK(h.method == SolveMethod::heuristic_upper);
        CHECK(simulate(g, h.witness).valid());
        CHECK(h.burning_number >= solve(g));
    }
}

TEST_CASE("spanning trees: b(G) is the minimum over spanning trees")
{
    for (const auto & g : {gen::cycle(4), gen::cycle(5), gen::complete(4), gen::wheel(5)}) {
        auto dm = all_pairs_distances(g);
        CHECK(burning_number_via_spanning_trees(g, dm) == solve(g));
    }
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 30; ++trial) {
        auto g = gen::random_connected(3 + rng() % 6, 0.3, rng());
        CHECK(burning_number_via_spanning_trees(g, all_pairs_distances(g)) == solve(g));
    }
}

TEST_CASE("spanning subgraphs never burn faster")
{
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 80; ++trial) {
        auto g = gen::gnp_random(2 + rng() % 11, 0.4, rng());
        auto edges = g.edges();
        std::vector<Edge> kept;
        for (auto e : edges)
            if (rng() % 3 != 0)
                kept.push_back(e);
        auto h = Graph::from_edge_list(g.order(), kept);
        CHECK(solve(g) <= solve(h));
    }
}

TEST_CASE("isometric subtrees burn no slower than their host")
{
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 80; ++trial) {
        auto t = gen::random_tree(3 + rng() % 18, rng());
        auto nodes = random_subtree(t, 1 + rng() % t.order(), rng());
        auto h = induced_subgraph(t, nodes);
        CHECK(solve(h) <= solve(t));
    }
    // general isometric subgraphs are not monotone: C_5 sits isometrically in W_5
    CHECK(solve(gen::cycle(5)) > solve(gen::wheel(5)));
}

TEST_CASE("parallel decide finds the serial witness")
{
    std::mt19937_64 rng(81);
    for (int trial = 0; trial < 12; ++trial) {
        auto g = gen::random_connected(24 + rng() % 16, 0.06, rng());
        auto dm = all_pairs_distances(g);
        const auto b = burning_number(g, dm, search_only).burning_number;
        for (std::size_t k = b - 1; k <= b; ++k) {
            auto par = decide(g, dm, k);
            auto ser = decide_serial(g, dm, k);
            CHECK(par.witness == ser.witness);
            CHECK(par.nodes_explored == decide(g, dm, k).nodes_explored);
        }
    }
}

TEST_CASE("batch solving matches one-by-one")
{
    std::vector<Graph> graphs;
    for (std::uint64_t seed = 0; seed < 40; ++seed)
        graphs.push_back(gen::gnp_random(2 + seed % 12, 0.3, seed));
    auto batch = burning_numbers(graphs);
    REQUIRE(batch.size() == graphs.size());
    for (std::size_t i = 0; i < graphs.size(); ++i)
        CHECK(batch[i] == solve(graphs[i]));
}
