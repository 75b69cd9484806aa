#pragma once

#include <burn/node_set.hpp>

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace burn {

using Edge = std::pair<NodeId, NodeId>;

/// Generator provenance. Closed-form dispatch in the solver keys off this tag,
/// never off isomorphism testing; any derived graph drops it.
enum class GraphFamily { none, path, cycle, complete };

/// Immutable simple undirected graph on dense ids [0, n).
class Graph {
public:
    /// Throws BurnError: empty_graph for n == 0, invalid_node for ids out of
    /// range, invalid_edge for self-loops. Duplicate edges are collapsed.
    static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);

    [[nodiscard]] std::size_t order() const noexcept { return adjacency_.size(); }
    [[nodiscard]] std::size_t size() const noexcept { return edge_count_; }

    [[nodiscard]] std::span<const NodeId> neighbors(NodeId v) const noexcept { return adjacency_[v]; }
    [[nodiscard]] std::size_t degree(NodeId v) const noexcept { return adjacency_[v].size(); }
    [[nodiscard]] std::size_t max_degree() const noexcept;
    [[nodiscard]] bool adjacent(NodeId u, NodeId v) const noexcept;

    /// Edges with u < v, sorted ascending.
    [[nodiscard]] std::vector<Edge> edges() const;

    [[nodiscard]] const std::vector<std::string> & labels() const noexcept { return labels_; }
    /// Display name; falls back to "v<id+1>".
    [[nodiscard]] std::string label(NodeId v) const;
    [[nodiscard]] Graph with_labels(std::vector<std::string> labels) const;

    [[nodiscard]] GraphFamily family() const noexcept { return family_; }
    [[nodiscard]] Graph with_family(GraphFamily family) const;

    friend bool operator==(const Graph & a, const Graph & b) noexcept { return a.adjacency_ == b.adjacency_; }

private:
    Graph() = default;

    std::vector<std::vector<NodeId>> adjacency_;
    std::size_t edge_count_ = 0;
    std::vector<std::string> labels_;
    GraphFamily family_ = GraphFamily::none;
};

inline constexpr std::uint32_t unreachable = std::numeric_limits<std::uint32_t>::max();

/// Dense n x n hop-count matrix; `unreachable` across components.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::size_t n) : n_(n), dist_(n * n, unreachable) {}

    [[nodiscard]] std::size_t order() const noexcept { return n_; }
    [[nodiscard]] std::uint32_t operator()(NodeId u, NodeId v) const noexcept { return dist_[u * n_ + v]; }
    [[nodiscard]] std::span<const std::uint32_t> row(NodeId u) const noexcept { return {dist_.data() + u * n_, n_}; }
    [[nodiscard]] std::span<std::uint32_t> row(NodeId u) noexcept { return {dist_.data() + u * n_, n_}; }

    /// Largest finite distance from v (eccentricity within v's component).
    [[nodiscard]] std::uint32_t eccentricity(NodeId v) const noexcept;
    [[nodiscard]] bool connected() const noexcept;

    friend bool operator==(const DistanceMatrix &, const DistanceMatrix &) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint32_t> dist_;
};

/// BFS from every node; sources are distributed over OpenMP threads.
DistanceMatrix all_pairs_distances(const Graph & g);
/// Single-threaded reference for all_pairs_distances.
DistanceMatrix all_pairs_distances_serial(const Graph & g);

struct ComponentMetrics {
    std::vector<NodeId> nodes;
    std::uint32_t radius = 0;
    std::uint32_t diameter = 0;
    std::vector<NodeId> center;
};

struct GraphMetrics {
    bool connected = false;
    std::size_t max_degree = 0;
    /// Whole-graph values, absent when disconnected.
    std::optional<std::uint32_t> radius;
    std::optional<std::uint32_t> diameter;
    std::vector<NodeId> center;
    /// Per-component values, ordered by lowest member id.
    std::vector<ComponentMetrics> components;
};

GraphMetrics metrics(const Graph & g, const DistanceMatrix & dm);

/// Closed k-th neighbourhood N_r[v].
NodeSet ball(const Graph & g, const DistanceMatrix & dm, NodeId v, std::uint32_t r);

/// Connected components as sorted node lists, ordered by lowest member.
std::vector<std::vector<NodeId>> components(const Graph & g);
bool is_connected(const Graph & g);

Graph complement(const Graph & g);
Graph disjoint_union(std::span<const Graph> gs);
/// Subgraph induced by `nodes`; node i of the result is nodes[i].
Graph induced_subgraph(const Graph & g, std::span<const NodeId> nodes);

/// True iff distances in h equal distances in g under `embed` (h-node -> g-node).
/// Throws invalid_embedding when embed is not injective or drops an edge of h.
bool is_isometric_subgraph(const Graph & h, const Graph & g, std::span<const NodeId> embed);

inline constexpr std::size_t default_spanning_tree_limit = 10'000;

/// All spanning trees of a connected graph, by edge inclusion/exclusion.
/// Throws disconnected, or limit_exceeded when more than `limit` trees exist.
std::vector<Graph> enumerate_spanning_trees(const Graph & g, std::size_t limit = default_spanning_tree_limit);

/// Smallest k with k*k >= n.
std::size_t ceil_sqrt(std::size_t n) noexcept;

} // namespace burn
