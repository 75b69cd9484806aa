#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace burn {

enum class ErrorCode {
    invalid_edge,
    invalid_node,
    empty_graph,
    invalid_parameter,
    invalid_embedding,
    disconnected,
    limit_exceeded,
    invalid_sequence,
    invalid_partition,
    invalid_cover,
    parse_error,
    internal,
};

std::string_view to_string(ErrorCode code) noexcept;

class BurnError : public std::runtime_error {
public:
    BurnError(ErrorCode code, const std::string & message);

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace burn
