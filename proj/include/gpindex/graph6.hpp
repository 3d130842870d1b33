#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "gpindex/graph.hpp"

namespace gpindex {

// graph6 codec. A leading ">>graph6<<" header is accepted on input and never
// emitted. Throws InvalidInput on malformed or truncated strings and
// CapExceeded when the encoded order exceeds kMaxVertices.
Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

// One graph per non-empty line; a trailing '\r' is ignored.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace gpindex
