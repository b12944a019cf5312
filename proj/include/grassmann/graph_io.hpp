#pragma once

#include "grassmann/graph.hpp"

#include <iosfwd>
#include <string>

namespace grassmann::graphs {

/// Line-oriented edge list: header "n m", then one "u v" per line,
/// 0-indexed with u < v, sorted lexicographically.
void write_edge_list(std::ostream& os, const Graph& g);
void write_edge_list(const std::string& path, const Graph& g);
Graph read_edge_list(std::istream& is);
Graph read_edge_list(const std::string& path);

/// Order-sensitive FNV-1a over the adjacency row bitsets, little-endian
/// word bytes in vertex order; printed in reports for reproducibility.
uint64_t adjacency_digest(const Graph& g);
std::string adjacency_digest_hex(const Graph& g);

}  // namespace grassmann::graphs
