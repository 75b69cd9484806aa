#pragma once

#include <burn/graph.hpp>

#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace burn {

/// Ordered fire sources (x_1, ..., x_k).
struct BurningSequence {
    std::vector<NodeId> sources;

    [[nodiscard]] std::size_t size() const noexcept { return sources.size(); }
    [[nodiscard]] NodeId operator[](std::size_t i) const noexcept { return sources[i]; }

    friend auto operator<=>(const BurningSequence &, const BurningSequence &) = default;
};

/// Parses "1,3" style literals. Throws parse_error on malformed text and
/// invalid_sequence on repeated ids.
BurningSequence parse_sequence(std::string_view text);
std::string format_sequence(const BurningSequence & seq);

inline constexpr std::uint32_t unburned = std::numeric_limits<std::uint32_t>::max();

/// Round (1-based) in which each node burns, or `unburned`.
struct BurnSchedule {
    std::vector<std::uint32_t> burn_round;

    [[nodiscard]] std::uint32_t last_round() const noexcept;
};

enum class SimulationFailure { none, source_already_burned, unburned_after_last_round };

struct SimulationResult {
    BurnSchedule schedule;
    /// 1-based round of the first violation; k + 1 when nodes remain unburned.
    std::optional<std::size_t> invalid_at;
    SimulationFailure failure = SimulationFailure::none;

    [[nodiscard]] bool valid() const noexcept { return !invalid_at.has_value(); }
};

/// Runs the burning process round by round. In round i the source x_i must be
/// unburned at the start of the round; it is burned, and every node burned in
/// round i-1 spreads to its unburned neighbours. A source reached by that same
/// spread is permitted. Throws invalid_node for out-of-range ids.
SimulationResult simulate(const Graph & g, const BurningSequence & seq);

struct CharacterizationResult {
    bool valid = false;
    /// Some node outside every N_{k-i}[x_i].
    std::optional<NodeId> uncovered;
    /// 1-based (i, j), i < j, with d(x_i, x_j) < j - i.
    std::optional<std::pair<std::size_t, std::size_t>> violating_pair;
};

/// Ball-cover equation plus pairwise distance condition d(x_i, x_j) >= j - i.
CharacterizationResult is_valid_characterization(const Graph & g, const DistanceMatrix & dm,
                                                 const BurningSequence & seq);

struct TreePart {
    NodeId root = 0;
    std::vector<NodeId> members; // sorted, includes root
    std::map<NodeId, NodeId> parent; // member -> parent, root excluded
};

struct RootedTreePartition {
    std::vector<TreePart> parts;
};

/// Height of a part (longest parent chain); throws invalid_partition on cycles.
std::size_t part_height(const TreePart & part);

/// Throws invalid_sequence unless seq is a valid burning sequence for g.
RootedTreePartition sequence_to_partition(const Graph & g, const DistanceMatrix & dm, const BurningSequence & seq);

/// Checks the partition conditions (node partition, trees over edges of g,
/// heights, root distances) and returns the roots in part order.
/// Throws invalid_partition naming the failed condition.
BurningSequence partition_to_sequence(const Graph & g, const DistanceMatrix & dm, const RootedTreePartition & p);

/// Constructive covering argument: repeatedly burn the smallest-id centre of the
/// first part with no burned centre, then any unburned node (lowest id) until
/// all nodes burn. Each part must induce a connected subgraph of radius <= k and
/// the parts must cover V(g); throws invalid_cover otherwise. Result length is
/// at most parts + k, and at most k when part i has radius <= k - i.
BurningSequence cover_to_sequence(const Graph & g, const DistanceMatrix & dm, std::span<const NodeSet> cover,
                                  std::uint32_t k);

/// Same construction with one designated centre per part: part j is treated as
/// burned once centres[j] is. With centres whose balls of radii k-1, k-2, ...
/// cover V(g) the result is valid and has length <= k.
BurningSequence sequence_from_centres(const Graph & g, std::span<const NodeId> centres);

/// Conditions for replacing x_j (0-based j) by x: x not in seq, j is not the
/// last position, N[x_j] within N[x], and d(x, x_i) >= |i - j| for i != j.
bool cone_substitution_applies(const Graph & g, const DistanceMatrix & dm, const BurningSequence & seq,
                               std::size_t j, NodeId x);

} // namespace burn
