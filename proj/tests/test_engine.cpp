#include "support.hpp"

#include <burn/engine.hpp>
#include <burn/generators.hpp>
#include <burn/oracle.hpp>
#include <burn/solver.hpp>

#include <doctest.h>

#include <random>

using namespace burn;

namespace {

BurningSequence seq_of(std::initializer_list<NodeId> ids)
{
    return BurningSequence{std::vector<NodeId>(ids)};
}

// Random distinct-source sequence of length len.
BurningSequence random_sequence(std::size_t n, std::size_t len, std::mt19937_64 & rng)
{
    std::vector<NodeId> perm(n);
    for (NodeId v = 0; v < n; ++v)
        perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    perm.resize(std::min(len, n));
    return BurningSequence{perm};
}

} // namespace

TEST_CASE("sequence literals")
{
    CHECK(parse_sequence("1,3") == seq_of({1, 3}));
    CHECK(parse_sequence(" 4 , 0 ") == seq_of({4, 0}));
    CHECK(format_sequence(seq_of({2, 5, 8})) == "2,5,8");
    CHECK(error_code_of([] { parse_sequence("1,1"); }) == ErrorCode::invalid_sequence);
    for (const char * bad : {"", "1,", ",1", "a", "1;2", "-1"})
        CHECK_MESSAGE(error_code_of([&] { parse_sequence(bad); }) == ErrorCode::parse_error, bad);
}

TEST_CASE("burning P_4")
{
    auto p4 = gen::path(4);
    auto dm = all_pairs_distances(p4);

    auto ok = simulate(p4, seq_of({1, 3}));
    CHECK(ok.valid());
    CHECK(ok.schedule.burn_round == std::vector<std::uint32_t>{2, 1, 2, 2});
    CHECK(ok.schedule.last_round() == 2);
    CHECK(is_valid_characterization(p4, dm, seq_of({1, 3})).valid);

    // (v1, v2): adjacent sources are fine, d = 1 >= 2 - 1
    CHECK(simulate(p4, seq_of({0, 1})).invalid_at == 3);
    auto chr = is_valid_characterization(p4, dm, seq_of({0, 1}));
    CHECK_FALSE(chr.valid);
    CHECK(chr.uncovered == 2);
    CHECK_FALSE(chr.violating_pair.has_value());

    // (v2, v3) leaves v4 unburned after the last round
    auto bad = simulate(p4, seq_of({1, 2}));
    CHECK(bad.invalid_at == 3);
    CHECK(bad.failure == SimulationFailure::unburned_after_last_round);

    auto single = is_valid_characterization(p4, dm, seq_of({0}));
    CHECK_FALSE(single.valid);
    CHECK(single.uncovered == 1);

    CHECK(error_code_of([&] { simulate(p4, seq_of({0, 9})); }) == ErrorCode::invalid_node);
}

TEST_CASE("a source reached before its round is rejected")
{
    auto p5 = gen::path(5);
    auto dm = all_pairs_distances(p5);
    // v1 spreads to v2 in round 2, so v2 is already burning when round 3 starts
    auto seq = seq_of({0, 4, 1});
    auto sim = simulate(p5, seq);
    CHECK(sim.invalid_at == 3);
    CHECK(sim.failure == SimulationFailure::source_already_burned);
    auto chr = is_valid_characterization(p5, dm, seq);
    CHECK_FALSE(chr.valid);
    CHECK(chr.violating_pair == std::pair<std::size_t, std::size_t>{1, 3});
}

TEST_CASE("simulation agrees with the characterization and the oracle")
{
    std::mt19937_64 rng(7);
    std::size_t valid = 0;
    for (int trial = 0; trial < 1500; ++trial) {
        auto g = gen::gnp_random(1 + rng() % 11, 0.1 + 0.05 * static_cast<double>(rng() % 10), rng());
        auto dm = all_pairs_distances(g);
        auto seq = random_sequence(g.order(), 1 + rng() % 5, rng);
        const bool sim = simulate(g, seq).valid();
        valid += sim ? 1 : 0;
        REQUIRE(sim == is_valid_characterization(g, dm, seq).valid);
        REQUIRE(sim == oracle::burns(g, seq.sources));
    }
    CHECK(valid > 50);
}

TEST_CASE("exhaustive agreement on small graphs")
{
    // every sequence of length <= 3 on every graph with 4 labelled nodes
    for (unsigned mask = 0; mask < (1U << 6); ++mask) {
        std::vector<Edge> edges;
        unsigned bit = 0;
        for (NodeId u = 0; u < 4; ++u)
            for (NodeId v = u + 1; v < 4; ++v, ++bit)
                if ((mask >> bit) & 1U)
                    edges.emplace_back(u, v);
        auto g = Graph::from_edge_list(4, edges);
        auto dm = all_pairs_distances(g);
        std::vector<NodeId> cur;
        auto walk = [&](auto && self) -> void {
            if (!cur.empty()) {
                BurningSequence seq{cur};
                REQUIRE(simulate(g, seq).valid() == is_valid_characterization(g, dm, seq).valid);
            }
            if (cur.size() == 3)
                return;
            for (NodeId v = 0; v < 4; ++v)
                if (std::find(cur.begin(), cur.end(), v) == cur.end()) {
                    cur.push_back(v);
                    self(self);
                    cur.pop_back();
                }
        };
        walk(walk);
    }
}

TEST_CASE("schedule of a valid sequence is min over i of i + d(x_i, v)")
{
    std::mt19937_64 rng(11);
    int checked = 0;
    for (int trial = 0; trial < 300; ++trial) {
        auto g = gen::random_connected(2 + rng() % 14, 0.15, rng());
        auto dm = all_pairs_distances(g);
        auto seq = burning_number(g, dm).witness;
        auto sim = simulate(g, seq);
        REQUIRE(sim.valid());
        for (NodeId v = 0; v < g.order(); ++v) {
            std::uint32_t best = unburned;
            for (std::size_t i = 0; i < seq.size(); ++i)
                best = std::min<std::uint32_t>(best, static_cast<std::uint32_t>(i + 1) + dm(seq[i], v));
            CHECK(sim.schedule.burn_round[v] == best);
        }
        for (std::size_t i = 0; i < seq.size(); ++i)
            CHECK(sim.schedule.burn_round[seq[i]] == i + 1);
        ++checked;
    }
    CHECK(checked == 300);
}

TEST_CASE("sequence to partition and back")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        auto g = gen::gnp_random(2 + rng() % 14, 0.25, rng());
        auto dm = all_pairs_distances(g);
        auto seq = burning_number(g, dm).witness;
        auto p = sequence_to_partition(g, dm, seq);
        REQUIRE(p.parts.size() == seq.size());
        for (std::size_t i = 0; i < p.parts.size(); ++i) {
            CHECK(p.parts[i].root == seq[i]);
            CHECK(part_height(p.parts[i]) <= seq.size() - 1 - i);
        }
        auto back = partition_to_sequence(g, dm, p);
        CHECK(back == seq);
        CHECK(simulate(g, back).valid());
    }
    auto p4 = gen::path(4);
    CHECK(error_code_of([&] { sequence_to_partition(p4, all_pairs_distances(p4), seq_of({0})); }) ==
          ErrorCode::invalid_sequence);
}

TEST_CASE("partition validation names the broken condition")
{
    auto p4 = gen::path(4);
    auto dm = all_pairs_distances(p4);
    auto good = sequence_to_partition(p4, dm, seq_of({1, 3}));
    CHECK(partition_to_sequence(p4, dm, good) == seq_of({1, 3}));

    auto tall = good;
    std::swap(tall.parts[0], tall.parts[1]); // the 3-node part now has to fit in height 0
    CHECK(error_code_of([&] { partition_to_sequence(p4, dm, tall); }) == ErrorCode::invalid_partition);

    auto missing = good;
    missing.parts[1].members.clear();
    missing.parts[1].members.push_back(3);
    missing.parts[0].members = {1, 2};
    missing.parts[0].parent.erase(0);
    CHECK(error_code_of([&] { partition_to_sequence(p4, dm, missing); }) == ErrorCode::invalid_partition);

    auto non_edge = good;
    non_edge.parts[0].parent[0] = 2;
    CHECK(error_code_of([&] { partition_to_sequence(p4, dm, non_edge); }) == ErrorCode::invalid_partition);

    RootedTreePartition one_part{{TreePart{1, {0, 1, 2, 3}, {{0, 1}, {2, 1}, {3, 2}}}}};
    CHECK(error_code_of([&] { partition_to_sequence(p4, dm, one_part); }) == ErrorCode::invalid_partition);

    // heights fit but the first and last roots are adjacent
    auto p6 = gen::path(6);
    auto dm6 = all_pairs_distances(p6);
    RootedTreePartition close{{TreePart{2, {0, 1, 2}, {{0, 1}, {1, 2}}}, TreePart{4, {4, 5}, {{5, 4}}},
                               TreePart{3, {3}, {}}}};
    CHECK(error_code_of([&] { partition_to_sequence(p6, dm6, close); }) == ErrorCode::invalid_partition);
    close.parts[0] = TreePart{1, {0, 1, 2}, {{0, 1}, {2, 1}}};
    CHECK(partition_to_sequence(p6, dm6, close) == seq_of({1, 4, 3}));

    RootedTreePartition shared{{TreePart{0, {0, 1}, {{1, 0}}}, TreePart{1, {1, 2, 3}, {{2, 1}, {3, 2}}}}};
    CHECK(error_code_of([&] { partition_to_sequence(p4, dm, shared); }) == ErrorCode::invalid_partition);

    TreePart loop{0, {0, 1, 2}, {{1, 2}, {2, 1}}};
    CHECK(error_code_of([&] { part_height(loop); }) == ErrorCode::invalid_partition);
}

TEST_CASE("cover to sequence")
{
    auto p9 = gen::path(9);
    auto dm = all_pairs_distances(p9);
    auto part = [&](std::initializer_list<NodeId> ids) {
        NodeSet s(9);
        for (auto v : ids)
            s.insert(v);
        return s;
    };
    // graded radii 2, 1, 0
    std::vector<NodeSet> graded{part({0, 1, 2, 3, 4}), part({5, 6, 7}), part({8})};
    auto seq = cover_to_sequence(p9, dm, graded, 3);
    CHECK(seq.size() <= 3);
    CHECK(simulate(p9, seq).valid());

    // three parts of radius <= 1: length at most parts + k
    std::vector<NodeSet> flat{part({0, 1, 2}), part({3, 4, 5}), part({6, 7, 8})};
    auto s2 = cover_to_sequence(p9, dm, flat, 1);
    CHECK(s2.size() <= 4);
    CHECK(simulate(p9, s2).valid());

    std::vector<NodeSet> gap{part({0, 1, 2}), part({4, 5, 6, 7, 8})};
    CHECK(error_code_of([&] { cover_to_sequence(p9, dm, gap, 2); }) == ErrorCode::invalid_cover);
    std::vector<NodeSet> split{part({0, 1, 2, 3, 4, 8}), part({5, 6, 7})};
    CHECK(error_code_of([&] { cover_to_sequence(p9, dm, split, 4); }) == ErrorCode::invalid_cover);
    std::vector<NodeSet> wide{part({0, 1, 2, 3, 4, 5, 6, 7, 8})};
    CHECK(error_code_of([&] { cover_to_sequence(p9, dm, wide, 3); }) == ErrorCode::invalid_cover);

    // random covers by balls of radius <= k
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = gen::random_connected(3 + rng() % 15, 0.1, rng());
        auto gdm = all_pairs_distances(g);
        const auto k = static_cast<std::uint32_t>(1 + rng() % 3);
        std::vector<NodeSet> cover;
        NodeSet covered(g.order());
        while (!covered.is_full()) {
            auto c = static_cast<NodeId>(rng() % g.order());
            auto b = ball(g, gdm, c, k);
            covered |= b;
            cover.push_back(b);
        }
        auto s = cover_to_sequence(g, gdm, cover, k);
        CHECK(s.size() <= cover.size() + k);
        CHECK(simulate(g, s).valid());
    }
}

TEST_CASE("sequence from centres of a graded ball cover")
{
    auto p16 = gen::path(16);
    const std::vector<NodeId> centres{3, 9, 13, 15};
    auto seq = sequence_from_centres(p16, centres);
    CHECK(seq.size() <= 4);
    CHECK(simulate(p16, seq).valid());
}

TEST_CASE("cone substitution keeps sequences valid")
{
    std::mt19937_64 rng(17);
    std::size_t applied = 0;
    for (int trial = 0; trial < 400; ++trial) {
        auto g = gen::random_connected(3 + rng() % 12, 0.3, rng());
        auto dm = all_pairs_distances(g);
        auto seq = burning_number(g, dm).witness;
        for (std::size_t j = 0; j < seq.size(); ++j)
            for (NodeId x = 0; x < g.order(); ++x)
                if (cone_substitution_applies(g, dm, seq, j, x)) {
                    auto swapped = seq;
                    swapped.sources[j] = x;
                    CHECK(simulate(g, swapped).valid());
                    ++applied;
                }
    }
    CHECK(applied > 20);
}

TEST_CASE("cone substitution with N[x] inside N[x_j] can fail")
{
    // K_{1,3}: (centre, a) burns; leaf b has N[b] inside N[centre] and d(b, a) = 2,
    // yet (b, a) misses the third leaf.
    auto star = gen::star(3);
    auto dm = all_pairs_distances(star);
    auto seq = seq_of({0, 1});
    REQUIRE(simulate(star, seq).valid());
    auto swapped = seq_of({2, 1});
    CHECK(dm(2, 1) >= 1);
    CHECK_FALSE(simulate(star, swapped).valid());
    CHECK_FALSE(cone_substitution_applies(star, dm, seq, 0, 2));
}
