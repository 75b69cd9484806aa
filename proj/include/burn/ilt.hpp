#pragma once

#include <burn/engine.hpp>
#include <burn/graph.hpp>

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <vector>

namespace burn {

struct IltStep {
    Graph graph;
    /// clone[x] = x + n for every node x of the previous graph (n its order).
    std::vector<NodeId> clone;
};

/// One ILT step: each node x gains a clone x' joined to x and to N(x).
IltStep ilt_step(const Graph & g);

struct IltTrace {
    Graph g0;
    std::vector<IltStep> steps;

    /// G_t for t in [0, steps.size()].
    [[nodiscard]] const Graph & at(std::size_t t) const noexcept { return t == 0 ? g0 : steps[t - 1].graph; }
};

inline constexpr std::size_t default_ilt_node_cap = std::size_t{1} << 20;

/// G_0 .. G_t. Throws disconnected for a disconnected g0 and limit_exceeded
/// when G_t would exceed max_nodes.
IltTrace ilt_iterate(const Graph & g0, std::size_t t, std::size_t max_nodes = default_ilt_node_cap);

struct IltPrediction {
    std::size_t b0 = 0;
    std::size_t predicted = 0;
    std::size_t optimal_sequences = 0;
    /// An optimal sequence whose last source has a neighbour burned by round k-1.
    std::optional<BurningSequence> early_neighbour_witness;
};

/// b(G_t), t >= 1, from the optimal burning sequences of g0.
/// Throws limit_exceeded when g0 has more than `limit` optimal sequences.
IltPrediction ilt_predict(const Graph & g0, const DistanceMatrix & dm, std::size_t limit = 1'000'000);

struct IltRow {
    std::size_t t = 0;
    std::size_t order = 0;
    std::size_t exact = 0;
    std::size_t predicted = 0;
    bool match = false;
};

struct IltVerification {
    IltPrediction prediction;
    std::vector<IltRow> rows; // t = 1 .. t_max
    bool all_match = false;
    bool constant = false;
};

/// Exact b(G_t) for t = 1..t_max (solved in parallel) against ilt_predict(g0).
IltVerification ilt_verify(const Graph & g0, std::size_t t_max);

void to_json(nlohmann::json & j, const IltPrediction & p);
void to_json(nlohmann::json & j, const IltVerification & v);

} // namespace burn
