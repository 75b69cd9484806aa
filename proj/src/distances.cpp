#include <burn/graph.hpp>

#include <vector>

namespace burn {
namespace {

    void bfs_row(const Graph & g, NodeId source, std::span<std::uint32_t> row, std::vector<NodeId> & queue)
    {
        queue.clear();
        queue.push_back(source);
        row[source] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            auto v = queue[head];
            for (auto w : g.neighbors(v))
                if (row[w] == unreachable) {
                    row[w] = row[v] + 1;
                    queue.push_back(w);
                }
        }
    }

} // namespace

DistanceMatrix all_pairs_distances_serial(const Graph & g)
{
    DistanceMatrix dm(g.order());
    std::vector<NodeId> queue;
    queue.reserve(g.order());
    for (NodeId s = 0; s < g.order(); ++s)
        bfs_row(g, s, dm.row(s), queue);
    return dm;
}

DistanceMatrix all_pairs_distances(const Graph & g)
{
    DistanceMatrix dm(g.order());
    const auto n = static_cast<std::ptrdiff_t>(g.order());
#pragma omp parallel if (n >= 64)
    {
        std::vector<NodeId> queue;
        queue.reserve(g.order());
#pragma omp for schedule(dynamic, 16)
        for (std::ptrdiff_t s = 0; s < n; ++s)
            bfs_row(g, static_cast<NodeId>(s), dm.row(static_cast<NodeId>(s)), queue);
    }
    return dm;
}

} // namespace burn
