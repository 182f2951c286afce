#pragma once

// Edge-list graph files and partition files.
//
// Graph file:
//   # comment
//   graph <n> <directed|undirected>
//   <u> <v> [multiplicity]
//
// Vertices are 1..n, multiplicity defaults to 1 and may be negative. In an
// undirected file each line adds the edge in both directions.
//
// Partition file: one cell per line, space-separated labels, optionally
// ending in `rep <label>` to choose the cell's representative.

#include "eqdecomp/graph.hpp"
#include "eqdecomp/partition.hpp"

#include <string>
#include <string_view>

namespace eqdecomp {

/// Throws ParseError with line and column on malformed input.
SignedDigraph parse_graph_file(std::string_view text);

/// Inverse of parse_graph_file. Symmetric graphs are written as undirected.
std::string print_graph(const SignedDigraph& x);

/// Throws ParseError for malformed lines and ValidationError for overlapping
/// or missing labels.
Partition parse_partition_file(std::string_view text, Index n);

std::string print_partition(const Partition& pi);

std::string read_file(const std::string& path);

}  // namespace eqdecomp
