#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bei/graph.hpp"

namespace bei {

/// Decode one graph6 record (an optional ">>graph6<<" prefix is accepted, and
/// a trailing '\n' or "\r\n" is ignored).  Throws ParseError naming the byte
/// offset of the first bad byte.
Graph parse_graph6(std::string_view record);

/// Encode without header or newline.
std::string to_graph6(const Graph& g);

/// Parse every non-empty line of a graph6 stream.  ParseError offsets are
/// rebased to 1-based line numbers.
std::vector<Graph> parse_graph6_stream(std::string_view text);

/// Edge-list text: "n m" then m lines "u v" with 1 <= u < v <= n.  Several
/// blocks may follow one another.  ParseError offsets are 1-based line numbers.
std::vector<Graph> parse_edge_lists(std::string_view text);

enum class InputFormat { Graph6, EdgeList, Empty };

/// Sniff the first non-blank line: '>' or bytes all in 63..126 mean graph6,
/// two decimal integers mean an edge list; anything else throws ParseError.
InputFormat detect_format(std::string_view text);

/// detect_format followed by the matching parser.
std::vector<Graph> parse_graphs(std::string_view text);

} // namespace bei
