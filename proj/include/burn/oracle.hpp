#pragma once

#include <burn/graph.hpp>

#include <cstddef>
#include <span>

namespace burn::oracle {

// Brute-force references. They use only adjacency lists and a round-by-round
// fire simulation of their own; no distance matrix, balls or solver code.

/// True iff `sources` burns g in exactly sources.size() rounds under the
/// process rules.
bool burns(const Graph & g, std::span<const NodeId> sources);

/// Smallest k such that some sequence of k distinct nodes burns g, found by
/// enumerating sequences of ascending length.
std::size_t brute_force_burning_number(const Graph & g);

/// Number of length-k sequences that burn g.
std::size_t count_burning_sequences(const Graph & g, std::size_t k);

} // namespace burn::oracle
