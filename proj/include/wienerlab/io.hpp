#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "wienerlab/graph.hpp"

namespace wienerlab {

/// Standard graph6 ASCII encoding: size bytes (63+n, or 126 followed by an
/// 18-bit value for n > 62), then the upper triangle packed column by column,
/// six bits per byte, each byte offset by 63.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& line);

/// Plain text: "n m" header, then one "u v" line per edge, 0-indexed.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(const std::string& text);

/// Arc list for digraphs: "n m" header, then "u v" meaning u -> v.
std::string to_arc_list(const Digraph& d);
Digraph from_arc_list(const std::string& text);

/// Reads a whole file that is either graph6 (one graph per line) or a single
/// edge-list document; the format is detected from the content.
std::vector<Graph> read_graph_file(const std::string& path);
Digraph read_digraph_file(const std::string& path);

void write_graph6_file(const std::string& path, std::span<const Graph> graphs,
                       const std::string& header_comment = "");

} // namespace wienerlab
