#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "locyc/graph.hpp"

namespace locyc {

/// Reads the edge-list format: a header line `n m`, then m lines `u v` with
/// 0 <= u < v < n, no duplicates. Blank lines are ignored. Errors carry the
/// 1-based line number.
Graph parse_edge_list(std::istream& in);
Graph read_edge_list(const std::filesystem::path& path);

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list(const std::filesystem::path& path, const Graph& g);

/// Graph read from arbitrary whitespace-separated vertex labels, one edge per
/// line (`#` starts a comment). Labels get dense ids in order of first
/// appearance; labels[id] recovers the original name.
struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;
};

LabeledGraph parse_labeled_edge_list(std::istream& in);

/// One `id label` line per vertex.
void write_label_map(std::ostream& out, const std::vector<std::string>& labels);

}  // namespace locyc
