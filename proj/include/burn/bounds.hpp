#pragma once

#include <burn/graph.hpp>

#include <json.hpp>

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace burn {

/// gamma_k(g): fewest radius-k balls covering V(g) (branch and bound).
/// On a disconnected graph this is the sum over components.
std::size_t gamma_k(const Graph & g, const DistanceMatrix & dm, std::uint32_t k);

// Closed-form bounds. Each returns nullopt where it does not apply.

/// ceil(sqrt(d + 1)) <= b; connected graphs.
std::optional<std::size_t> diameter_lower_bound(const GraphMetrics & m);
/// b <= r + 1; connected graphs.
std::optional<std::size_t> radius_upper_bound(const GraphMetrics & m);
/// b <= 2 with a universal node, else b <= n - Delta. Any graph.
std::size_t max_degree_upper_bound(const Graph & g);
/// b <= 2 ceil(sqrt n) - 1; connected graphs.
std::optional<std::size_t> order_upper_bound(const Graph & g, const GraphMetrics & m);

struct NamedBound {
    std::string name;
    std::optional<std::size_t> value; // nullopt: inapplicable
};

struct NgCheck {
    std::string name;
    bool applicable = false;
    bool passed = true;
    /// Conjectures are reported but never asserted.
    bool asserted = true;
};

struct NordhausGaddumReport {
    std::size_t n = 0;
    std::size_t b = 0;
    std::size_t b_complement = 0;
    std::size_t sum = 0;
    std::size_t product = 0;
    bool connected = false;
    bool complement_connected = false;
    std::vector<NgCheck> checks;

    /// All applicable asserted checks passed.
    [[nodiscard]] bool all_passed() const noexcept;
    [[nodiscard]] const NgCheck * find(const std::string & name) const noexcept;
};

struct BoundsReport {
    std::size_t n = 0;
    bool connected = false;
    std::vector<NamedBound> lower;
    std::vector<NamedBound> upper;
    std::map<std::uint32_t, std::size_t> gamma; // k -> gamma_k
    std::optional<std::size_t> m_star;
    std::optional<std::size_t> exact;
    std::optional<NordhausGaddumReport> ng_checks;

    [[nodiscard]] std::optional<std::size_t> best_lower() const noexcept;
    [[nodiscard]] std::optional<std::size_t> best_upper() const noexcept;
    /// Every applicable lower <= exact <= every applicable upper (or lower <= upper without exact).
    [[nodiscard]] bool sandwich_holds() const noexcept;
};

struct BoundsOptions {
    bool with_exact = false;
    /// Adds the complement comparison; needs n >= 2, implies exact solving.
    bool with_ng = false;
    /// Caller-supplied Hamiltonian path; the b <= ceil(sqrt n) bound is emitted
    /// only when it checks out.
    std::optional<std::vector<NodeId>> hamiltonian_path;
};

BoundsReport bounds_report(const Graph & g, const DistanceMatrix & dm, const BoundsOptions & options = {});

/// True iff `path` visits every node exactly once along edges of g.
bool is_hamiltonian_path(const Graph & g, std::span<const NodeId> path);

struct ConjectureCheck {
    bool holds = false;
    std::size_t exact = 0;
    std::size_t bound = 0;
};

/// b(g) <= ceil(sqrt n) on a connected graph; throws disconnected otherwise.
ConjectureCheck conjecture_check(const Graph & g, const DistanceMatrix & dm);

/// Exact b of g and its complement plus the sum/product inequalities. n >= 2.
NordhausGaddumReport nordhaus_gaddum(const Graph & g, const DistanceMatrix & dm);

/// b >= gamma_{b-1}(g), given b = b(g) >= 2.
bool gamb_check(const Graph & g, const DistanceMatrix & dm, std::size_t b);

void to_json(nlohmann::json & j, const NamedBound & b);
void to_json(nlohmann::json & j, const NgCheck & c);
void to_json(nlohmann::json & j, const NordhausGaddumReport & r);
void to_json(nlohmann::json & j, const BoundsReport & r);

} // namespace burn
