#include <burn/engine.hpp>
#include <burn/error.hpp>

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

namespace burn {
namespace {

    void check_ids(const Graph & g, const BurningSequence & seq)
    {
        for (auto x : seq.sources)
            if (x >= g.order())
                throw BurnError(ErrorCode::invalid_node,
                                "source " + std::to_string(x) + " outside [0," + std::to_string(g.order()) + ")");
    }

    // One round of the process: `source` must already be known to be unburned.
    void advance_round(const Graph & g, std::uint32_t round, NodeId source, std::vector<std::uint32_t> & burn_round,
                       std::vector<NodeId> & frontier, std::vector<NodeId> & next)
    {
        next.clear();
        burn_round[source] = round;
        next.push_back(source);
        for (auto v : frontier)
            for (auto w : g.neighbors(v))
                if (burn_round[w] == unburned) {
                    burn_round[w] = round;
                    next.push_back(w);
                }
        frontier.swap(next);
    }

    // Part j counts as burned once any node of centres[j] is burned; each round
    // burns the smallest centre of the first unburned part, else the lowest-id
    // unburned node, until everything burns.
    BurningSequence burn_parts(const Graph & g, const std::vector<std::vector<NodeId>> & centres)
    {
        const auto n = g.order();
        std::vector<std::uint32_t> burn_round(n, unburned);
        std::vector<NodeId> frontier, next;
        std::size_t burned = 0;
        BurningSequence seq;
        for (std::uint32_t round = 1; burned < n; ++round) {
            std::optional<NodeId> pick;
            for (const auto & part : centres) {
                bool done = std::any_of(part.begin(), part.end(), [&](NodeId c) { return burn_round[c] != unburned; });
                if (!done) {
                    pick = part.front();
                    break;
                }
            }
            if (!pick)
                for (NodeId v = 0; v < n; ++v)
                    if (burn_round[v] == unburned) {
                        pick = v;
                        break;
                    }
            seq.sources.push_back(*pick);
            advance_round(g, round, *pick, burn_round, frontier, next);
            burned = static_cast<std::size_t>(
                std::count_if(burn_round.begin(), burn_round.end(), [](auto r) { return r != unburned; }));
        }
        return seq;
    }

    [[noreturn]] void bad_partition(const std::string & what)
    {
        throw BurnError(ErrorCode::invalid_partition, what);
    }

} // namespace

BurningSequence parse_sequence(std::string_view text)
{
    BurningSequence seq;
    std::set<NodeId> seen;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        while (!item.empty() && item.front() == ' ')
            item.remove_prefix(1);
        while (!item.empty() && item.back() == ' ')
            item.remove_suffix(1);
        NodeId id = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), id);
        if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
            throw BurnError(ErrorCode::parse_error, "bad node id '" + std::string(item) + "' in sequence");
        if (!seen.insert(id).second)
            throw BurnError(ErrorCode::invalid_sequence, "duplicate source " + std::to_string(id));
        seq.sources.push_back(id);
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return seq;
}

std::string format_sequence(const BurningSequence & seq)
{
    std::string out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i != 0)
            out += ',';
        out += std::to_string(seq[i]);
    }
    return out;
}

std::uint32_t BurnSchedule::last_round() const noexcept
{
    std::uint32_t r = 0;
    for (auto x : burn_round)
        if (x != unburned)
            r = std::max(r, x);
    return r;
}

SimulationResult simulate(const Graph & g, const BurningSequence & seq)
{
    check_ids(g, seq);
    SimulationResult result;
    auto & burn_round = result.schedule.burn_round;
    burn_round.assign(g.order(), unburned);
    std::vector<NodeId> frontier, next;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        auto x = seq[i];
        if (burn_round[x] != unburned) {
            result.invalid_at = i + 1;
            result.failure = SimulationFailure::source_already_burned;
            return result;
        }
        advance_round(g, static_cast<std::uint32_t>(i + 1), x, burn_round, frontier, next);
    }
    if (std::find(burn_round.begin(), burn_round.end(), unburned) != burn_round.end()) {
        result.invalid_at = seq.size() + 1;
        result.failure = SimulationFailure::unburned_after_last_round;
    }
    return result;
}

CharacterizationResult is_valid_characterization(const Graph & g, const DistanceMatrix & dm,
                                                 const BurningSequence & seq)
{
    check_ids(g, seq);
    CharacterizationResult result;
    const auto k = seq.size();
    for (std::size_t i = 0; i < k && !result.violating_pair; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (dm(seq[i], seq[j]) < j - i) {
                result.violating_pair = std::pair{i + 1, j + 1};
                break;
            }
    for (NodeId v = 0; v < g.order(); ++v) {
        bool covered = false;
        for (std::size_t i = 0; i < k && !covered; ++i)
            covered = dm(seq[i], v) <= k - 1 - i;
        if (!covered) {
            result.uncovered = v;
            break;
        }
    }
    result.valid = !result.uncovered && !result.violating_pair;
    return result;
}

std::size_t part_height(const TreePart & part)
{
    std::size_t height = 0;
    for (auto v : part.members) {
        std::size_t depth = 0;
        for (auto cur = v; cur != part.root; ++depth) {
            auto it = part.parent.find(cur);
            if (it == part.parent.end())
                bad_partition("node " + std::to_string(cur) + " has no parent in part rooted at " + std::to_string(part.root));
            if (depth > part.members.size())
                bad_partition("parent links of part rooted at " + std::to_string(part.root) + " contain a cycle");
            cur = it->second;
        }
        height = std::max(height, depth);
    }
    return height;
}

RootedTreePartition sequence_to_partition(const Graph & g, const DistanceMatrix & dm, const BurningSequence & seq)
{
    auto sim = simulate(g, seq);
    if (!sim.valid() || !is_valid_characterization(g, dm, seq).valid)
        throw BurnError(ErrorCode::invalid_sequence, "sequence " + format_sequence(seq) + " does not burn the graph");

    const auto n = g.order();
    const auto & round = sim.schedule.burn_round;
    constexpr auto none = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> part_of(n, none);
    for (std::size_t i = 0; i < seq.size(); ++i)
        part_of[seq[i]] = i;

    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), NodeId{0});
    std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return round[a] < round[b]; });

    RootedTreePartition p;
    p.parts.resize(seq.size());
    for (std::size_t i = 0; i < seq.size(); ++i)
        p.parts[i].root = seq[i];

    for (auto v : order) {
        if (part_of[v] != none && seq[part_of[v]] == v) {
            p.parts[part_of[v]].members.push_back(v);
            continue;
        }
        // Neighbours are sorted, so the first predecessor in the chosen part is the lowest id.
        std::size_t best = none;
        NodeId parent = 0;
        for (auto u : g.neighbors(v))
            if (round[u] + 1 == round[v] && part_of[u] < best) {
                best = part_of[u];
                parent = u;
            }
        part_of[v] = best;
        p.parts[best].members.push_back(v);
        p.parts[best].parent.emplace(v, parent);
    }
    for (auto & part : p.parts)
        std::sort(part.members.begin(), part.members.end());
    return p;
}

BurningSequence partition_to_sequence(const Graph & g, const DistanceMatrix & dm, const RootedTreePartition & p)
{
    const auto k = p.parts.size();
    if (k == 0)
        bad_partition("partition has no parts");
    std::vector<bool> seen(g.order(), false);
    for (std::size_t i = 0; i < k; ++i) {
        const auto & part = p.parts[i];
        for (auto v : part.members) {
            if (v >= g.order())
                bad_partition("member " + std::to_string(v) + " out of range");
            if (seen[v])
                bad_partition("node " + std::to_string(v) + " appears in more than one part");
            seen[v] = true;
        }
        if (std::find(part.members.begin(), part.members.end(), part.root) == part.members.end())
            bad_partition("root " + std::to_string(part.root) + " of part " + std::to_string(i + 1) + " is not a member");
        if (part.parent.size() + 1 != part.members.size())
            bad_partition("part " + std::to_string(i + 1) + " needs exactly one parent per non-root member");
        for (auto [child, parent] : part.parent) {
            if (child == part.root)
                bad_partition("root of part " + std::to_string(i + 1) + " has a parent");
            if (std::find(part.members.begin(), part.members.end(), child) == part.members.end())
                bad_partition("parent entry for non-member " + std::to_string(child));
            if (std::find(part.members.begin(), part.members.end(), parent) == part.members.end())
                bad_partition("parent " + std::to_string(parent) + " lies outside part " + std::to_string(i + 1));
            if (!g.adjacent(child, parent))
                bad_partition("tree edge (" + std::to_string(child) + "," + std::to_string(parent) + ") is not an edge of the graph");
        }
        if (part_height(part) > k - 1 - i)
            bad_partition("part " + std::to_string(i + 1) + " has height above " + std::to_string(k - 1 - i));
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end())
        bad_partition("parts do not cover every node");
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            if (dm(p.parts[i].root, p.parts[j].root) < j - i)
                bad_partition("roots of parts " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                              " are closer than " + std::to_string(j - i));

    BurningSequence seq;
    for (const auto & part : p.parts)
        seq.sources.push_back(part.root);
    return seq;
}

BurningSequence cover_to_sequence(const Graph & g, const DistanceMatrix & dm, std::span<const NodeSet> cover,
                                  std::uint32_t k)
{
    (void)dm;
    NodeSet covered(g.order());
    std::vector<std::vector<NodeId>> centres;
    for (std::size_t i = 0; i < cover.size(); ++i) {
        const auto & part = cover[i];
        if (part.universe() != g.order())
            throw BurnError(ErrorCode::invalid_cover, "cover element " + std::to_string(i + 1) + " has the wrong universe");
        auto nodes = part.to_vector();
        if (nodes.empty())
            throw BurnError(ErrorCode::invalid_cover, "cover element " + std::to_string(i + 1) + " is empty");
        auto sub = induced_subgraph(g, nodes);
        auto sub_dm = all_pairs_distances_serial(sub);
        if (!sub_dm.connected())
            throw BurnError(ErrorCode::invalid_cover, "cover element " + std::to_string(i + 1) + " is not connected");
        std::uint32_t radius = unreachable;
        for (NodeId v = 0; v < sub.order(); ++v)
            radius = std::min(radius, sub_dm.eccentricity(v));
        if (radius > k)
            throw BurnError(ErrorCode::invalid_cover, "cover element " + std::to_string(i + 1) + " has radius " +
                                                          std::to_string(radius) + " > " + std::to_string(k));
        std::vector<NodeId> part_centres;
        for (NodeId v = 0; v < sub.order(); ++v)
            if (sub_dm.eccentricity(v) == radius)
                part_centres.push_back(nodes[v]);
        centres.push_back(std::move(part_centres));
        covered |= part;
    }
    if (!covered.is_full())
        throw BurnError(ErrorCode::invalid_cover, "cover misses node " + std::to_string(*covered.complement().first()));
    return burn_parts(g, centres);
}

BurningSequence sequence_from_centres(const Graph & g, std::span<const NodeId> centres)
{
    std::vector<std::vector<NodeId>> parts;
    parts.reserve(centres.size());
    for (auto c : centres) {
        if (c >= g.order())
            throw BurnError(ErrorCode::invalid_node, "centre " + std::to_string(c) + " out of range");
        parts.push_back({c});
    }
    return burn_parts(g, parts);
}

bool cone_substitution_applies(const Graph & g, const DistanceMatrix & dm, const BurningSequence & seq,
                               std::size_t j, NodeId x)
{
    const auto k = seq.size();
    if (j + 1 >= k || x >= g.order())
        return false;
    if (std::find(seq.sources.begin(), seq.sources.end(), x) != seq.sources.end())
        return false;
    auto xj = seq[j];
    if (!g.adjacent(x, xj))
        return false;
    for (auto w : g.neighbors(xj))
        if (w != x && !g.adjacent(x, w))
            return false;
    for (std::size_t i = 0; i < k; ++i) {
        if (i == j)
            continue;
        auto gap = i > j ? i - j : j - i;
        if (dm(x, seq[i]) < gap)
            return false;
    }
    return true;
}

} // namespace burn
