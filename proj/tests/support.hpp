#pragma once

#include <burn/error.hpp>
#include <burn/graph.hpp>

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

// Code of the BurnError thrown by fn, or nullopt if it returns normally.
template <typename Fn>
std::optional<burn::ErrorCode> error_code_of(Fn && fn)
{
    try {
        fn();
    }
    catch (const burn::BurnError & e) {
        return e.code();
    }
    return std::nullopt;
}

// Node set of a connected subtree of t with `size` nodes, grown from a random root.
inline std::vector<burn::NodeId> random_subtree(const burn::Graph & t, std::size_t size, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<burn::NodeId> nodes{static_cast<burn::NodeId>(rng() % t.order())};
    std::vector<bool> in(t.order(), false);
    in[nodes[0]] = true;
    while (nodes.size() < size) {
        std::vector<burn::NodeId> frontier;
        for (auto v : nodes)
            for (auto w : t.neighbors(v))
                if (!in[w])
                    frontier.push_back(w);
        if (frontier.empty())
            break;
        auto pick = frontier[rng() % frontier.size()];
        in[pick] = true;
        nodes.push_back(pick);
    }
    return nodes;
}

// g with node v renamed perm[v].
inline burn::Graph relabel(const burn::Graph & g, const std::vector<burn::NodeId> & perm)
{
    std::vector<burn::Edge> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(perm[u], perm[v]);
    return burn::Graph::from_edge_list(g.order(), edges);
}

inline std::vector<burn::NodeId> random_permutation(std::size_t n, std::uint64_t seed)
{
    std::vector<burn::NodeId> perm(n);
    for (burn::NodeId v = 0; v < n; ++v)
        perm[v] = v;
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}
