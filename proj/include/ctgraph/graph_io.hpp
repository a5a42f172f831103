#pragma once

#include <iosfwd>
#include <string>

#include "ctgraph/graph.hpp"

namespace ctgraph {

enum class GraphFormat { Auto, EdgeList, AdjacencyMatrix };

/// Edge list: first line "n m", then m lines "u v" with 0-based ids < n.
/// Adjacency matrix: n lines of n space-separated 0/1 entries; must be
/// symmetric with a zero diagonal. Blank lines and lines starting with '#'
/// are ignored by both. Errors throw ParseError carrying the 1-based line.
Graph parse_edge_list(std::istream& in);
Graph parse_adjacency_matrix(std::istream& in);

/// Auto picks the matrix reader when the first line is all 0/1 tokens and the
/// number of data lines equals its token count.
Graph parse_graph(std::istream& in, GraphFormat format = GraphFormat::Auto);
Graph read_graph_file(const std::string& path, GraphFormat format = GraphFormat::Auto);

/// Writes `g` as an edge list over 0..n-1. When the ids of `g` are not
/// already 0..n-1, a leading "# ids a b c ..." comment maps each position
/// back to its original id.
void write_edge_list(std::ostream& out, const Graph& g);
void write_adjacency_matrix(std::ostream& out, const Graph& g);

}  // namespace ctgraph
