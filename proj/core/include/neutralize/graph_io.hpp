#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "neutralize/graph.hpp"

namespace neutralize {

// DIMACS shortest-path text format:
//
//   c <comment>
//   p sp <n> <m>
//   a <u> <v> <w>        (m times; u, v are 1-indexed)
//
// Vertices are 0-indexed in memory. Blank lines and "c" lines are ignored on
// input. Serialization writes the "p" line and the arcs in edge order with LF
// endings and no trailing whitespace.

/// Throws FormatError (with line number) on malformed input and RangeError on
/// vertex ids outside [1, n].
Graph parse_graph(std::string_view text);
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);

std::string serialize_graph(const Graph& g);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

}  // namespace neutralize
