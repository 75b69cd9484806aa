#pragma once

#include <burn/graph.hpp>

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

namespace burn::catalog {

inline constexpr std::size_t max_catalog_order = 10;

/// Canonical adjacency code of a graph with at most max_catalog_order nodes:
/// the minimum, over labellings produced by individualization-refinement,
/// of the upper-triangle bit string read row by row.
std::uint64_t canonical_code(const Graph & g);

/// Graph whose upper-triangle bits (row by row) are `code`.
Graph decode(std::size_t n, std::uint64_t code);

/// All connected graphs on 1..max_n nodes up to isomorphism, in canonical
/// labelling, ordered by (n, code).
std::vector<Graph> connected_graphs(std::size_t max_n);

/// Reads the cached catalog at `cache` when present and matching max_n,
/// otherwise builds it and writes the cache.
std::vector<Graph> load_or_build(std::size_t max_n, const std::optional<std::filesystem::path> & cache);

} // namespace burn::catalog
