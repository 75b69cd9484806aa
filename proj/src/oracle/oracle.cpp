#include <burn/error.hpp>
#include <burn/oracle.hpp>

#include <bit>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace burn::oracle {
namespace {

    using Mask = std::uint64_t;

    struct Fire {
        explicit Fire(const Graph & g) : n(g.order()), nbr(n, 0)
        {
            if (n > 64)
                throw BurnError(ErrorCode::invalid_parameter, "oracle handles at most 64 nodes");
            for (NodeId v = 0; v < n; ++v)
                for (auto w : g.neighbors(v))
                    nbr[v] |= Mask{1} << w;
            full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
        }

        // Nodes burned before this round have already lit all their
        // neighbours, so spreading from the whole burned set is the same as
        // spreading from last round's nodes.
        [[nodiscard]] Mask spread(Mask burned) const
        {
            Mask out = burned;
            for (Mask rest = burned; rest; rest &= rest - 1)
                out |= nbr[static_cast<std::size_t>(std::countr_zero(rest))];
            return out;
        }

        std::size_t n;
        std::vector<Mask> nbr;
        Mask full = 0;
    };

    struct StateKey {
        Mask burned;
        std::size_t round;
        bool operator==(const StateKey &) const = default;
    };

    struct StateHash {
        std::size_t operator()(const StateKey & s) const noexcept
        {
            return std::hash<Mask>{}(s.burned * 0x9E3779B97F4A7C15ULL + s.round);
        }
    };

    // burned is the set after `round` rounds.
    bool can_finish(const Fire & f, Mask burned, std::size_t round, std::size_t k,
                    std::unordered_set<StateKey, StateHash> & dead)
    {
        if (round == k)
            return burned == f.full;
        if (dead.count({burned, round}))
            return false;
        const Mask spread = round == 0 ? 0 : f.spread(burned);
        for (NodeId v = 0; v < f.n; ++v) {
            const Mask bit = Mask{1} << v;
            if (burned & bit)
                continue;
            if (can_finish(f, spread | bit, round + 1, k, dead))
                return true;
        }
        dead.insert({burned, round});
        return false;
    }

    std::size_t count_paths(const Fire & f, Mask burned, std::size_t round, std::size_t k,
                            std::unordered_map<StateKey, std::size_t, StateHash> & memo)
    {
        if (round == k)
            return burned == f.full ? 1 : 0;
        if (auto it = memo.find({burned, round}); it != memo.end())
            return it->second;
        const Mask spread = round == 0 ? 0 : f.spread(burned);
        std::size_t total = 0;
        for (NodeId v = 0; v < f.n; ++v) {
            const Mask bit = Mask{1} << v;
            if (!(burned & bit))
                total += count_paths(f, spread | bit, round + 1, k, memo);
        }
        memo[{burned, round}] = total;
        return total;
    }

} // namespace

bool burns(const Graph & g, std::span<const NodeId> sources)
{
    const Fire f(g);
    Mask burned = 0;
    for (std::size_t i = 0; i < sources.size(); ++i) {
        const auto x = sources[i];
        if (x >= f.n || (burned >> x) & 1U)
            return false;
        burned = (i == 0 ? 0 : f.spread(burned)) | (Mask{1} << x);
    }
    return burned == f.full;
}

std::size_t brute_force_burning_number(const Graph & g)
{
    const Fire f(g);
    for (std::size_t k = 1;; ++k) {
        std::unordered_set<StateKey, StateHash> dead;
        if (can_finish(f, 0, 0, k, dead))
            return k;
    }
}

std::size_t count_burning_sequences(const Graph & g, std::size_t k)
{
    const Fire f(g);
    if (k > f.n)
        return 0;
    std::unordered_map<StateKey, std::size_t, StateHash> memo;
    return count_paths(f, 0, 0, k, memo);
}

} // namespace burn::oracle
