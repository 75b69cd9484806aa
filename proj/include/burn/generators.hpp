#pragma once

#include <burn/graph.hpp>

#include <cstddef>
#include <cstdint>

namespace burn::gen {

/// Path v1 - v2 - ... - vn on ids 0..n-1. n >= 1.
Graph path(std::size_t n);
/// Cycle on ids 0..n-1 in order. n >= 3.
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
/// Edgeless graph on n nodes.
Graph empty(std::size_t n);
/// Star K_{1,s}; node 0 is the centre. s >= 1.
Graph star(std::size_t s);
/// Spider SP(s, r): centre 0 and s arms of r nodes; arm a holds ids a*r+1 .. a*r+r,
/// outward. s >= 3, r >= 1.
Graph spider(std::size_t s, std::size_t r);
/// Wheel over an n-cycle rim: add_universal_node(cycle(n)). n >= 4.
Graph wheel(std::size_t n);
/// Appends node id n adjacent to every existing node.
Graph add_universal_node(const Graph & g);
/// G(n, p) from a seeded mt19937_64. Each pair (u < v), in lexicographic order,
/// consumes one draw; the edge exists iff the top 53 bits scaled to [0,1) are < p.
Graph gnp_random(std::size_t n, double p, std::uint64_t seed);
/// Uniform random labelled tree (random attachment: node i joins a uniform node < i).
Graph random_tree(std::size_t n, std::uint64_t seed);
/// gnp_random with a random spanning tree overlaid, so the result is connected.
Graph random_connected(std::size_t n, double p, std::uint64_t seed);

} // namespace burn::gen
