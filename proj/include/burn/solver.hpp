#pragma once

#include <burn/engine.hpp>
#include <burn/graph.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace burn {

enum class SolveMethod { exact, closed_form, heuristic_upper };

std::string_view to_string(SolveMethod method) noexcept;

struct SolveResult {
    std::size_t burning_number = 0;
    BurningSequence witness;
    SolveMethod method = SolveMethod::exact;
    std::uint64_t nodes_explored = 0;
};

struct DecideResult {
    std::optional<BurningSequence> witness;
    std::uint64_t nodes_explored = 0;
};

/// Is there a cover of V(g) by balls of radii k-1, ..., 0? If so returns a valid
/// burning sequence of length <= k built from it. Top-level branches are
/// searched in parallel; the witness is the one the serial search finds.
DecideResult decide(const Graph & g, const DistanceMatrix & dm, std::size_t k);
/// Single-threaded reference for decide.
DecideResult decide_serial(const Graph & g, const DistanceMatrix & dm, std::size_t k);

struct SolverOptions {
    bool allow_closed_form = true;
    bool parallel = true;
};

/// Exact b(g). Generator-tagged paths, cycles and cliques use closed forms
/// when allowed; otherwise the smallest feasible k between the lower bounds
/// and the greedy upper bound.
SolveResult burning_number(const Graph & g, const DistanceMatrix & dm, const SolverOptions & options = {});

/// Closed form for generator-tagged instances, if any.
std::optional<SolveResult> closed_form(const Graph & g, const DistanceMatrix & dm);

/// Witness for b(P_n) = ceil(sqrt n) on gen::path(n) ids.
BurningSequence path_witness(std::size_t n);

struct OptimalSequences {
    std::size_t burning_number = 0;
    std::vector<BurningSequence> sequences; // lexicographic order
    bool limit_exceeded = false;
};

inline constexpr std::size_t default_sequence_limit = 100'000;

/// Every valid burning sequence of length b(g), up to `limit` of them.
OptimalSequences enumerate_optimal_sequences(const Graph & g, const DistanceMatrix & dm,
                                             std::size_t limit = default_sequence_limit);

/// Greedy max-coverage upper bound; method = heuristic_upper.
SolveResult greedy_upper_bound(const Graph & g, const DistanceMatrix & dm);

/// min over spanning trees T of b(T).
std::size_t burning_number_via_spanning_trees(const Graph & g, const DistanceMatrix & dm,
                                              std::size_t tree_limit = default_spanning_tree_limit);

/// Exact b(g) for every graph, jobs spread over OpenMP threads; results by index.
std::vector<std::size_t> burning_numbers(std::span<const Graph> graphs, const SolverOptions & options = {});

} // namespace burn
