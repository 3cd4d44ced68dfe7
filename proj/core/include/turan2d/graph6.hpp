#pragma once

#include <string>
#include <string_view>

#include "turan2d/graph.hpp"

namespace turan2d {

/// Parses a graph6 string.  The optional ">>graph6<<" header and trailing
/// newline are tolerated on input.  Throws invalid_argument on malformed
/// input (bad length prefix, byte outside 63..126, nonzero padding).
Graph parse_graph6(std::string_view text);

/// Encodes in graph6 (short length form for n <= 62, '~' long form above;
/// never emits a header).
std::string to_graph6(const Graph& g);

}  // namespace turan2d
