#include <burn/error.hpp>
#include <burn/generators.hpp>

#include <random>
#include <string>

namespace burn::gen {
namespace {

    void require(bool ok, const std::string & what)
    {
        if (!ok)
            throw BurnError(ErrorCode::invalid_parameter, what);
    }

    double unit_draw(std::mt19937_64 & rng)
    {
        return static_cast<double>(rng() >> 11) * 0x1.0p-53;
    }

} // namespace

Graph path(std::size_t n)
{
    require(n >= 1, "path needs n >= 1");
    std::vector<Edge> edges;
    for (NodeId v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    return Graph::from_edge_list(n, edges).with_family(GraphFamily::path);
}

Graph cycle(std::size_t n)
{
    require(n >= 3, "cycle needs n >= 3");
    std::vector<Edge> edges;
    for (NodeId v = 0; v < n; ++v)
        edges.emplace_back(v, static_cast<NodeId>((v + 1) % n));
    return Graph::from_edge_list(n, edges).with_family(GraphFamily::cycle);
}

Graph complete(std::size_t n)
{
    require(n >= 1, "complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges).with_family(GraphFamily::complete);
}

Graph empty(std::size_t n)
{
    require(n >= 1, "empty graph needs n >= 1");
    return Graph::from_edge_list(n, {});
}

Graph star(std::size_t s)
{
    require(s >= 1, "star needs s >= 1");
    std::vector<Edge> edges;
    for (NodeId v = 1; v <= s; ++v)
        edges.emplace_back(0, v);
    return Graph::from_edge_list(s + 1, edges);
}

Graph spider(std::size_t s, std::size_t r)
{
    require(s >= 3, "spider needs s >= 3");
    require(r >= 1, "spider needs r >= 1");
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < s; ++a) {
        NodeId prev = 0;
        for (std::size_t i = 1; i <= r; ++i) {
            auto v = static_cast<NodeId>(a * r + i);
            edges.emplace_back(prev, v);
            prev = v;
        }
    }
    return Graph::from_edge_list(s * r + 1, edges);
}

Graph wheel(std::size_t n)
{
    require(n >= 4, "wheel needs n >= 4");
    return add_universal_node(cycle(n));
}

Graph add_universal_node(const Graph & g)
{
    auto edges = g.edges();
    auto hub = static_cast<NodeId>(g.order());
    for (NodeId v = 0; v < hub; ++v)
        edges.emplace_back(v, hub);
    return Graph::from_edge_list(g.order() + 1, edges);
}

Graph gnp_random(std::size_t n, double p, std::uint64_t seed)
{
    require(n >= 1, "gnp needs n >= 1");
    require(p >= 0.0 && p <= 1.0, "gnp needs 0 <= p <= 1");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (NodeId u = 0; u < n; ++u)
        for (NodeId v = u + 1; v < n; ++v)
            if (unit_draw(rng) < p)
                edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

Graph random_tree(std::size_t n, std::uint64_t seed)
{
    require(n >= 1, "tree needs n >= 1");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (NodeId v = 1; v < n; ++v)
        edges.emplace_back(static_cast<NodeId>(rng() % v), v);
    return Graph::from_edge_list(n, edges);
}

Graph random_connected(std::size_t n, double p, std::uint64_t seed)
{
    auto edges = gnp_random(n, p, seed).edges();
    auto tree = random_tree(n, seed ^ 0x9E37'79B9'7F4A'7C15ULL).edges();
    edges.insert(edges.end(), tree.begin(), tree.end());
    return Graph::from_edge_list(n, edges);
}

} // namespace burn::gen
