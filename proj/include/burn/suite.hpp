#pragma once

#include <burn/graph.hpp>

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace burn::suite {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct SuiteOptions {
    std::uint64_t seed = 0x5EED'B0B5ULL;
    /// Connected-graph catalog cache; built in memory when absent.
    std::optional<std::filesystem::path> catalog_cache;
    std::size_t catalog_max_n = 8;
    /// Called after each criterion finishes.
    std::function<void(const CriterionResult &)> on_result;
};

/// Runs every acceptance criterion, in order.
std::vector<CriterionResult> run_all(const SuiteOptions & options);

/// Runs one criterion by id (1-based). Throws invalid_parameter for unknown ids.
CriterionResult run_one(int id, const SuiteOptions & options);

inline constexpr int criterion_count = 15;

} // namespace burn::suite
