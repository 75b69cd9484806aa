#include <burn/catalog.hpp>
#include <burn/error.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <fstream>
#include <sstream>

namespace burn::catalog {
namespace {

    struct SmallGraph {
        int n = 0;
        std::array<std::uint16_t, max_catalog_order> adj{};

        [[nodiscard]] bool adjacent(int u, int v) const noexcept { return (adj[u] >> v) & 1U; }
    };

    using Cell = std::vector<int>;
    using Partition = std::vector<Cell>;

    SmallGraph to_small(const Graph & g)
    {
        if (g.order() > max_catalog_order)
            throw BurnError(ErrorCode::invalid_parameter,
                            "canonical codes support at most " + std::to_string(max_catalog_order) + " nodes");
        SmallGraph s;
        s.n = static_cast<int>(g.order());
        for (auto [u, v] : g.edges()) {
            s.adj[u] |= static_cast<std::uint16_t>(1U << v);
            s.adj[v] |= static_cast<std::uint16_t>(1U << u);
        }
        return s;
    }

    // Splits cells by neighbour counts into every current cell until stable.
    // Sub-cells are ordered by signature, which keeps the ordered partition
    // independent of the input labelling.
    void refine(const SmallGraph & g, Partition & p)
    {
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<std::uint16_t> masks(p.size(), 0);
            for (std::size_t c = 0; c < p.size(); ++c)
                for (int v : p[c])
                    masks[c] |= static_cast<std::uint16_t>(1U << v);

            for (std::size_t c = 0; c < p.size() && !changed; ++c) {
                if (p[c].size() == 1)
                    continue;
                std::vector<std::pair<std::vector<int>, int>> keyed;
                keyed.reserve(p[c].size());
                for (int v : p[c]) {
                    std::vector<int> sig(p.size());
                    for (std::size_t d = 0; d < p.size(); ++d)
                        sig[d] = std::popcount(static_cast<unsigned>(g.adj[v] & masks[d]));
                    keyed.emplace_back(std::move(sig), v);
                }
                std::sort(keyed.begin(), keyed.end());
                if (keyed.front().first == keyed.back().first)
                    continue;
                Partition split;
                for (std::size_t i = 0; i < keyed.size(); ++i) {
                    if (i == 0 || keyed[i].first != keyed[i - 1].first)
                        split.emplace_back();
                    split.back().push_back(keyed[i].second);
                }
                p.erase(p.begin() + static_cast<std::ptrdiff_t>(c));
                p.insert(p.begin() + static_cast<std::ptrdiff_t>(c), split.begin(), split.end());
                changed = true;
            }
        }
    }

    std::uint64_t leaf_code(const SmallGraph & g, const Partition & p)
    {
        std::uint64_t code = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j)
                code = (code << 1) | (g.adjacent(p[i][0], p[j][0]) ? 1U : 0U);
        return code;
    }

    void search(const SmallGraph & g, Partition p, std::uint64_t & best)
    {
        refine(g, p);
        auto target = std::find_if(p.begin(), p.end(), [](const Cell & c) { return c.size() > 1; });
        if (target == p.end()) {
            best = std::min(best, leaf_code(g, p));
            return;
        }
        const auto index = target - p.begin();
        const Cell cell = *target;
        for (int v : cell) {
            Partition next = p;
            Cell rest;
            for (int w : cell)
                if (w != v)
                    rest.push_back(w);
            next[static_cast<std::size_t>(index)] = Cell{v};
            next.insert(next.begin() + index + 1, std::move(rest));
            search(g, std::move(next), best);
        }
    }

    std::uint64_t canonical_code(const SmallGraph & g)
    {
        Partition p(1);
        for (int v = 0; v < g.n; ++v)
            p[0].push_back(v);
        std::uint64_t best = ~std::uint64_t{0};
        search(g, std::move(p), best);
        return best;
    }

    std::vector<std::uint64_t> extend_level(const std::vector<std::uint64_t> & previous, int n)
    {
        // Every connected graph on n nodes is a connected graph on n-1 nodes plus
        // a vertex with nonempty neighbourhood (delete a non-cut vertex).
        std::vector<std::uint64_t> all;
        const auto count = static_cast<std::ptrdiff_t>(previous.size());
#pragma omp parallel
        {
            std::vector<std::uint64_t> local;
#pragma omp for schedule(dynamic, 4) nowait
            for (std::ptrdiff_t i = 0; i < count; ++i) {
                auto base = to_small(decode(static_cast<std::size_t>(n - 1), previous[static_cast<std::size_t>(i)]));
                base.n = n;
                for (unsigned mask = 1; mask < (1U << (n - 1)); ++mask) {
                    auto g = base;
                    g.adj[n - 1] = static_cast<std::uint16_t>(mask);
                    for (int v = 0; v < n - 1; ++v)
                        if ((mask >> v) & 1U)
                            g.adj[v] |= static_cast<std::uint16_t>(1U << (n - 1));
                    local.push_back(canonical_code(g));
                }
                std::sort(local.begin(), local.end());
                local.erase(std::unique(local.begin(), local.end()), local.end());
            }
#pragma omp critical(burn_catalog_merge)
            all.insert(all.end(), local.begin(), local.end());
        }
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        return all;
    }

    std::vector<std::vector<std::uint64_t>> build_codes(std::size_t max_n)
    {
        std::vector<std::vector<std::uint64_t>> levels{{0}};
        for (std::size_t n = 2; n <= max_n; ++n)
            levels.push_back(extend_level(levels.back(), static_cast<int>(n)));
        return levels;
    }

    std::string header(std::size_t max_n)
    {
        return "# connected graphs up to isomorphism, max_n=" + std::to_string(max_n);
    }

} // namespace

std::uint64_t canonical_code(const Graph & g)
{
    return canonical_code(to_small(g));
}

Graph decode(std::size_t n, std::uint64_t code)
{
    std::vector<Edge> edges;
    const auto pairs = n * (n - 1) / 2;
    std::size_t bit = pairs;
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j)
            if ((code >> --bit) & 1U)
                edges.emplace_back(i, j);
    return Graph::from_edge_list(n, edges);
}

std::vector<Graph> connected_graphs(std::size_t max_n)
{
    if (max_n == 0 || max_n > max_catalog_order)
        throw BurnError(ErrorCode::invalid_parameter,
                        "catalog order must be in [1," + std::to_string(max_catalog_order) + "]");
    std::vector<Graph> out;
    auto levels = build_codes(max_n);
    for (std::size_t n = 1; n <= levels.size(); ++n)
        for (auto code : levels[n - 1])
            out.push_back(decode(n, code));
    return out;
}

std::vector<Graph> load_or_build(std::size_t max_n, const std::optional<std::filesystem::path> & cache)
{
    if (cache && std::filesystem::exists(*cache)) {
        std::ifstream in(*cache);
        std::string line;
        std::getline(in, line);
        if (line == header(max_n)) {
            std::vector<Graph> out;
            std::size_t n = 0;
            std::uint64_t code = 0;
            while (in >> n >> std::hex >> code >> std::dec)
                out.push_back(decode(n, code));
            if (!out.empty())
                return out;
        }
    }

    auto graphs = connected_graphs(max_n);
    if (cache) {
        if (cache->has_parent_path())
            std::filesystem::create_directories(cache->parent_path());
        auto tmp = *cache;
        tmp += ".tmp";
        {
            std::ofstream out(tmp);
            out << header(max_n) << '\n';
            for (const auto & g : graphs)
                out << g.order() << ' ' << std::hex << canonical_code(g) << std::dec << '\n';
        }
        std::filesystem::rename(tmp, *cache);
    }
    return graphs;
}

} // namespace burn::catalog
