#include <burn/error.hpp>
#include <burn/graph.hpp>

#include <numeric>

namespace burn {
namespace {

    struct DisjointSets {
        std::vector<NodeId> parent;

        explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), NodeId{0}); }

        NodeId find(NodeId v)
        {
            while (parent[v] != v)
                v = parent[v];
            return v;
        }
    };

    class TreeEnumerator {
    public:
        TreeEnumerator(const Graph & g, std::size_t limit) : g_(g), edges_(g.edges()), limit_(limit), excluded_(edges_.size(), false) {}

        std::vector<Graph> run()
        {
            DisjointSets sets(g_.order());
            recurse(0, sets);
            return std::move(trees_);
        }

    private:
        // Connectivity of g minus the excluded edges.
        bool still_connected() const
        {
            DisjointSets sets(g_.order());
            std::size_t merged = 0;
            for (std::size_t e = 0; e < edges_.size(); ++e) {
                if (excluded_[e])
                    continue;
                auto a = sets.find(edges_[e].first), b = sets.find(edges_[e].second);
                if (a != b) {
                    sets.parent[a] = b;
                    ++merged;
                }
            }
            return merged + 1 == g_.order();
        }

        void recurse(std::size_t e, DisjointSets & sets)
        {
            if (chosen_.size() + 1 == g_.order()) {
                if (trees_.size() == limit_)
                    throw BurnError(ErrorCode::limit_exceeded,
                                    "more than " + std::to_string(limit_) + " spanning trees");
                trees_.push_back(Graph::from_edge_list(g_.order(), chosen_));
                return;
            }
            if (e == edges_.size())
                return;

            auto [u, v] = edges_[e];
            auto a = sets.find(u), b = sets.find(v);
            if (a != b) {
                auto saved = sets.parent;
                sets.parent[a] = b;
                chosen_.push_back(edges_[e]);
                recurse(e + 1, sets);
                chosen_.pop_back();
                sets.parent = std::move(saved);
            }

            excluded_[e] = true;
            if (still_connected())
                recurse(e + 1, sets);
            excluded_[e] = false;
        }

        const Graph & g_;
        std::vector<Edge> edges_;
        std::size_t limit_;
        std::vector<bool> excluded_;
        std::vector<Edge> chosen_;
        std::vector<Graph> trees_;
    };

} // namespace

std::vector<Graph> enumerate_spanning_trees(const Graph & g, std::size_t limit)
{
    if (!is_connected(g))
        throw BurnError(ErrorCode::disconnected, "spanning trees need a connected graph");
    return TreeEnumerator(g, limit).run();
}

} // namespace burn
