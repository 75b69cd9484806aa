#include <burn/error.hpp>
#include <burn/graph.hpp>

#include <algorithm>
#include <numeric>
#include <queue>

namespace burn {

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges)
{
    if (n == 0)
        throw BurnError(ErrorCode::empty_graph, "graph must have at least one node");
    if (n > std::size_t{unreachable} - 1)
        throw BurnError(ErrorCode::invalid_parameter, "too many nodes");

    Graph g;
    g.adjacency_.resize(n);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw BurnError(ErrorCode::invalid_node,
                            "edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside [0," + std::to_string(n) + ")");
        if (u == v)
            throw BurnError(ErrorCode::invalid_edge, "self-loop at node " + std::to_string(u));
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (auto & nbrs : g.adjacency_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        g.edge_count_ += nbrs.size();
    }
    g.edge_count_ /= 2;
    return g;
}

std::size_t Graph::max_degree() const noexcept
{
    std::size_t d = 0;
    for (const auto & nbrs : adjacency_)
        d = std::max(d, nbrs.size());
    return d;
}

bool Graph::adjacent(NodeId u, NodeId v) const noexcept
{
    const auto & nbrs = adjacency_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (NodeId u = 0; u < adjacency_.size(); ++u)
        for (auto v : adjacency_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

std::string Graph::label(NodeId v) const
{
    if (v < labels_.size() && !labels_[v].empty())
        return labels_[v];
    return "v" + std::to_string(v + 1);
}

Graph Graph::with_labels(std::vector<std::string> labels) const
{
    if (labels.size() != order())
        throw BurnError(ErrorCode::invalid_parameter, "label count does not match node count");
    Graph g = *this;
    g.labels_ = std::move(labels);
    return g;
}

Graph Graph::with_family(GraphFamily family) const
{
    Graph g = *this;
    g.family_ = family;
    return g;
}

std::uint32_t DistanceMatrix::eccentricity(NodeId v) const noexcept
{
    std::uint32_t e = 0;
    for (auto d : row(v))
        if (d != unreachable)
            e = std::max(e, d);
    return e;
}

bool DistanceMatrix::connected() const noexcept
{
    return n_ == 0 || std::none_of(dist_.begin(), dist_.begin() + static_cast<std::ptrdiff_t>(n_),
                                   [](auto d) { return d == unreachable; });
}

GraphMetrics metrics(const Graph & g, const DistanceMatrix & dm)
{
    GraphMetrics m;
    m.max_degree = g.max_degree();
    for (auto & nodes : components(g)) {
        ComponentMetrics c;
        c.radius = unreachable;
        for (auto v : nodes) {
            auto e = dm.eccentricity(v);
            c.diameter = std::max(c.diameter, e);
            c.radius = std::min(c.radius, e);
        }
        for (auto v : nodes)
            if (dm.eccentricity(v) == c.radius)
                c.center.push_back(v);
        c.nodes = std::move(nodes);
        m.components.push_back(std::move(c));
    }
    m.connected = m.components.size() == 1;
    if (m.connected) {
        m.radius = m.components.front().radius;
        m.diameter = m.components.front().diameter;
        m.center = m.components.front().center;
    }
    return m;
}

NodeSet ball(const Graph & g, const DistanceMatrix & dm, NodeId v, std::uint32_t r)
{
    NodeSet s(g.order());
    auto row = dm.row(v);
    for (NodeId u = 0; u < row.size(); ++u)
        if (row[u] <= r)
            s.insert(u);
    return s;
}

std::vector<std::vector<NodeId>> components(const Graph & g)
{
    std::vector<std::vector<NodeId>> out;
    std::vector<bool> seen(g.order(), false);
    for (NodeId s = 0; s < g.order(); ++s) {
        if (seen[s])
            continue;
        std::vector<NodeId> comp{s};
        seen[s] = true;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (auto w : g.neighbors(comp[head]))
                if (!seen[w]) {
                    seen[w] = true;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph & g)
{
    return components(g).size() == 1;
}

Graph complement(const Graph & g)
{
    std::vector<Edge> edges;
    for (NodeId u = 0; u < g.order(); ++u)
        for (NodeId v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v))
                edges.emplace_back(u, v);
    return Graph::from_edge_list(g.order(), edges);
}

Graph disjoint_union(std::span<const Graph> gs)
{
    if (gs.empty())
        throw BurnError(ErrorCode::empty_graph, "disjoint union of no graphs");
    std::vector<Edge> edges;
    NodeId offset = 0;
    for (const auto & g : gs) {
        for (auto [u, v] : g.edges())
            edges.emplace_back(u + offset, v + offset);
        offset += static_cast<NodeId>(g.order());
    }
    return Graph::from_edge_list(offset, edges);
}

Graph induced_subgraph(const Graph & g, std::span<const NodeId> nodes)
{
    std::vector<NodeId> index(g.order(), unreachable);
    for (NodeId i = 0; i < nodes.size(); ++i) {
        if (nodes[i] >= g.order())
            throw BurnError(ErrorCode::invalid_node, "node " + std::to_string(nodes[i]) + " out of range");
        index[nodes[i]] = i;
    }
    std::vector<Edge> edges;
    for (NodeId i = 0; i < nodes.size(); ++i)
        for (auto w : g.neighbors(nodes[i]))
            if (index[w] != unreachable && i < index[w])
                edges.emplace_back(i, index[w]);
    return Graph::from_edge_list(nodes.size(), edges);
}

bool is_isometric_subgraph(const Graph & h, const Graph & g, std::span<const NodeId> embed)
{
    if (embed.size() != h.order())
        throw BurnError(ErrorCode::invalid_embedding, "embedding must map every node of h");
    std::vector<bool> used(g.order(), false);
    for (auto x : embed) {
        if (x >= g.order())
            throw BurnError(ErrorCode::invalid_embedding, "embedding target " + std::to_string(x) + " out of range");
        if (used[x])
            throw BurnError(ErrorCode::invalid_embedding, "embedding is not injective at " + std::to_string(x));
        used[x] = true;
    }
    for (auto [u, v] : h.edges())
        if (!g.adjacent(embed[u], embed[v]))
            throw BurnError(ErrorCode::invalid_embedding,
                            "edge (" + std::to_string(u) + "," + std::to_string(v) + ") of h is not an edge of g");

    auto dh = all_pairs_distances(h);
    auto dg = all_pairs_distances(g);
    for (NodeId u = 0; u < h.order(); ++u)
        for (NodeId v = u + 1; v < h.order(); ++v)
            if (dh(u, v) != dg(embed[u], embed[v]))
                return false;
    return true;
}

std::size_t ceil_sqrt(std::size_t n) noexcept
{
    std::size_t k = 0;
    while (k * k < n)
        ++k;
    return k;
}

} // namespace burn
