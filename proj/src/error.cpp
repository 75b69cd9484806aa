#include <burn/error.hpp>

namespace burn {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::invalid_edge: return "InvalidEdge";
    case ErrorCode::invalid_node: return "InvalidNode";
    case ErrorCode::empty_graph: return "EmptyGraph";
    case ErrorCode::invalid_parameter: return "InvalidParameter";
    case ErrorCode::invalid_embedding: return "InvalidEmbedding";
    case ErrorCode::disconnected: return "Disconnected";
    case ErrorCode::limit_exceeded: return "LimitExceeded";
    case ErrorCode::invalid_sequence: return "InvalidSequence";
    case ErrorCode::invalid_partition: return "InvalidPartition";
    case ErrorCode::invalid_cover: return "InvalidCover";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::internal: return "Internal";
    }
    return "Unknown";
}

BurnError::BurnError(ErrorCode code, const std::string & message) :
    std::runtime_error(std::string(to_string(code)) + ": " + message),
    code_(code)
{
}

} // namespace burn
