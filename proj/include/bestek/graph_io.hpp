#pragma once

#include "bestek/graph.hpp"

#include <string>
#include <string_view>

namespace bestek {

/// Reads the graph file format:
///
///   {"vertices":[{"id":"1","m":1.0},...],
///    "edges":[{"u":"1","v":"2","w":1.0},...],
///    "boundary":["1","3"]}
///
/// Unknown keys are rejected. Throws ParseError for syntax/schema problems and
/// the build_graph/attach_boundary errors for invalid graphs.
BoundaryGraph parse_graph_file(std::string_view text);

/// Writes bg in the same format, numbers with 17 significant digits so that
/// parse_graph_file(serialize_graph_file(bg)) reproduces bg exactly.
std::string serialize_graph_file(const BoundaryGraph& bg);

BoundaryGraph read_graph_file(const std::string& path);
void write_graph_file(const std::string& path, const BoundaryGraph& bg);

/// Structural equality: ids, measures, edge set with weights, boundary.
bool same_graph(const BoundaryGraph& a, const BoundaryGraph& b);

}  // namespace bestek
