#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "tdim/graph.hpp"

namespace tdim {

/// Parses the canonical edge-list format: "<n> <m>" then m lines "<u> <v>"
/// with 0 <= u < v < n. Throws ParseError on any violation.
Graph parse_edge_list(std::string_view text);
Graph read_edge_list(const std::string &path);

/// Canonical text: header line, then edges in ascending (u, v) order, LF endings.
std::string format_edge_list(const Graph &g);
void write_edge_list(const std::string &path, const Graph &g);

/// Undirected DOT; highlighted vertices get a `color=black` attribute list.
std::string format_dot(const Graph &g, const VertexSet &highlight = {});

/// FNV-1a 64-bit digest of the canonical edge-list text, as "fnv1a64:<hex>".
std::string content_hash(const Graph &g);

} // namespace tdim
