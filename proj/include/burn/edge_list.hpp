#pragma once

#include <burn/graph.hpp>

#include <iosfwd>
#include <string>
#include <string_view>

namespace burn {

/// Edge-list text: first line `n m`, then m lines `u v` (0-based,
/// whitespace separated). `#` starts a comment running to end of line.
/// Throws BurnError(parse_error) on malformed input, and the graph
/// construction errors for invalid content.
Graph read_edge_list(std::istream & in);
Graph read_edge_list_file(const std::string & path);

/// Writes `n m` then one `u v` line per edge (u < v, ascending), '\n' separated.
void write_edge_list(std::ostream & out, const Graph & g);
std::string to_edge_list(const Graph & g);

/// Generator spec grammar: kind ':' args, one of
///   path:N  cycle:N  complete:N  empty:N  star:S  spider:SxR  wheel:N  gnp:N:P:SEED
/// Unknown kinds and malformed arguments throw BurnError(parse_error).
Graph parse_generator_spec(std::string_view spec);

} // namespace burn
