#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ctgraph/vertex_set.hpp"

namespace ctgraph {

/// Undirected edge, stored with `u < v`.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

/// Finite simple undirected graph over sparse integer vertex ids.
///
/// Values are immutable once built; every mutation below returns a new graph.
/// Induced subgraphs keep the ids of the parent graph so that chains, traces
/// and neighborhoods can be compared across graphs that share vertices.
class Graph {
 public:
  Graph() = default;

  /// Throws std::invalid_argument on negative ids, self-loops, repeated edges
  /// or edges whose endpoints are not listed in `vertices`.
  Graph(const std::vector<int>& vertices, const std::vector<Edge>& edges);

  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);
  static Graph edgeless(int n);
  /// Vertices 0..n-1 with the given edges.
  static Graph from_edges(int n, const std::vector<Edge>& edges);

  int order() const { return order_; }
  int size() const { return edge_count_; }
  bool empty() const { return order_ == 0; }

  /// One past the largest vertex id (0 for the empty graph).
  int universe() const { return static_cast<int>(adj_.size()); }

  const VertexSet& vertex_set() const { return vertices_; }
  std::vector<int> vertices() const { return vertices_.to_vector(); }
  /// Edges in ascending lexicographic order.
  std::vector<Edge> edges() const;

  bool has_vertex(int v) const { return vertices_.contains(v); }
  bool has_edge(int u, int v) const;

  /// Open neighborhood of `v` as a raw id set. Throws for unknown ids.
  const VertexSet& adjacent(int v) const;
  int degree(int v) const { return adjacent(v).size(); }

  /// Subgraph induced on `keep ∩ vertices`; ids and labels are preserved.
  Graph induced(const VertexSet& keep) const;

  const std::map<int, std::string>& labels() const { return labels_; }
  Graph with_labels(std::map<int, std::string> labels) const;
  /// Label if present, decimal id otherwise.
  std::string name_of(int v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.edges() == b.edges();
  }

 private:
  friend Graph delete_vertex(const Graph&, int);
  friend Graph delete_edge(const Graph&, Edge);
  friend Graph glue_vertex(const Graph&, int, const VertexSet&);
  friend Graph glue_edge(const Graph&, Edge);

  void require_vertex(int v) const;
  void ensure_universe(int n);

  VertexSet vertices_;
  std::vector<VertexSet> adj_;
  int order_ = 0;
  int edge_count_ = 0;
  std::map<int, std::string> labels_;
};

/// Subgraph induced by the open neighborhood of `v` (`v` excluded).
Graph neighborhood(const Graph& g, int v);
/// Subgraph induced by N(u) ∩ N(v). Requires u != v.
Graph common_neighborhood(const Graph& g, int u, int v);

Graph delete_vertex(const Graph& g, int v);
Graph delete_edge(const Graph& g, Edge e);
/// Adds vertex `id` adjacent to exactly `neighbors`.
Graph glue_vertex(const Graph& g, int id, const VertexSet& neighbors);
/// Adds the edge between two existing, nonadjacent vertices.
Graph glue_edge(const Graph& g, Edge e);

bool is_complete(const Graph& g);
bool is_connected(const Graph& g);
/// Vertex partition, each part ascending, parts ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// Relabels vertices to 0..n-1 following ascending id order.
Graph compacted(const Graph& g);

}  // namespace ctgraph
