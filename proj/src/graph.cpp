#include "ctgraph/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace ctgraph {

namespace {

std::string edge_name(Edge e) {
  return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}";
}

}  // namespace

Graph::Graph(const std::vector<int>& vertices, const std::vector<Edge>& edges) {
  for (int v : vertices) {
    if (v < 0) throw std::invalid_argument("negative vertex id " + std::to_string(v));
    if (vertices_.contains(v)) throw std::invalid_argument("repeated vertex " + std::to_string(v));
    ensure_universe(v + 1);
    vertices_.insert(v);
    ++order_;
  }
  for (const Edge& e : edges) {
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (!vertices_.contains(e.u) || !vertices_.contains(e.v))
      throw std::invalid_argument("edge " + edge_name(e) + " has an endpoint outside the vertex set");
    if (adj_[e.u].contains(e.v)) throw std::invalid_argument("repeated edge " + edge_name(e));
    adj_[e.u].insert(e.v);
    adj_[e.v].insert(e.u);
    ++edge_count_;
  }
}

Graph Graph::complete(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return from_edges(n, edges);
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
  return from_edges(n, edges);
}

Graph Graph::path(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return from_edges(n, edges);
}

Graph Graph::edgeless(int n) { return from_edges(n, {}); }

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  std::vector<int> vs(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) vs[static_cast<std::size_t>(i)] = i;
  return Graph(vs, edges);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u : vertices_)
    for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v)) out.emplace_back(u, v);
  return out;
}

bool Graph::has_edge(int u, int v) const {
  return has_vertex(u) && adj_[u].contains(v);
}

const VertexSet& Graph::adjacent(int v) const {
  require_vertex(v);
  return adj_[v];
}

Graph Graph::induced(const VertexSet& keep) const {
  Graph out;
  const VertexSet kept = vertices_ & keep;
  out.vertices_ = kept;
  out.adj_.resize(adj_.size());
  for (int v : kept) {
    out.adj_[v] = adj_[v] & kept;
    out.edge_count_ += out.adj_[v].size();
    ++out.order_;
    if (auto it = labels_.find(v); it != labels_.end()) out.labels_.insert(*it);
  }
  out.edge_count_ /= 2;
  // Shrink the id universe to the largest surviving id.
  int top = -1;
  for (int v : kept) top = v;
  out.adj_.resize(static_cast<std::size_t>(top + 1));
  return out;
}

Graph Graph::with_labels(std::map<int, std::string> labels) const {
  Graph out = *this;
  for (const auto& [v, name] : labels)
    if (!has_vertex(v)) throw std::invalid_argument("label for unknown vertex " + std::to_string(v));
  out.labels_ = std::move(labels);
  return out;
}

std::string Graph::name_of(int v) const {
  if (auto it = labels_.find(v); it != labels_.end()) return it->second;
  return std::to_string(v);
}

void Graph::require_vertex(int v) const {
  if (!has_vertex(v)) throw std::invalid_argument("unknown vertex " + std::to_string(v));
}

void Graph::ensure_universe(int n) {
  if (static_cast<int>(adj_.size()) < n) adj_.resize(static_cast<std::size_t>(n));
}

Graph neighborhood(const Graph& g, int v) { return g.induced(g.adjacent(v)); }

Graph common_neighborhood(const Graph& g, int u, int v) {
  if (u == v) throw std::invalid_argument("common neighborhood needs two distinct vertices, got " + std::to_string(u) + " twice");
  return g.induced(g.adjacent(u) & g.adjacent(v));
}

Graph delete_vertex(const Graph& g, int v) {
  g.require_vertex(v);
  VertexSet keep = g.vertex_set();
  keep.erase(v);
  return g.induced(keep);
}

Graph delete_edge(const Graph& g, Edge e) {
  if (!g.has_edge(e.u, e.v)) throw std::invalid_argument("no edge " + edge_name(e));
  Graph out = g;
  out.adj_[e.u].erase(e.v);
  out.adj_[e.v].erase(e.u);
  --out.edge_count_;
  return out;
}

Graph glue_vertex(const Graph& g, int id, const VertexSet& neighbors) {
  if (id < 0) throw std::invalid_argument("negative vertex id " + std::to_string(id));
  if (g.has_vertex(id)) throw std::invalid_argument("vertex " + std::to_string(id) + " already exists");
  for (int w : neighbors)
    if (!g.has_vertex(w)) throw std::invalid_argument("glue neighbor " + std::to_string(w) + " is not a vertex");
  Graph out = g;
  out.ensure_universe(id + 1);
  out.vertices_.insert(id);
  ++out.order_;
  for (int w : neighbors) {
    out.adj_[id].insert(w);
    out.adj_[w].insert(id);
    ++out.edge_count_;
  }
  return out;
}

Graph glue_edge(const Graph& g, Edge e) {
  g.require_vertex(e.u);
  g.require_vertex(e.v);
  if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
  if (g.has_edge(e.u, e.v)) throw std::invalid_argument("edge " + edge_name(e) + " already present");
  Graph out = g;
  out.adj_[e.u].insert(e.v);
  out.adj_[e.v].insert(e.u);
  ++out.edge_count_;
  return out;
}

bool is_complete(const Graph& g) {
  const long n = g.order();
  return g.size() == n * (n - 1) / 2;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<std::vector<int>> parts;
  VertexSet seen;
  for (int start : g.vertex_set()) {
    if (seen.contains(start)) continue;
    std::vector<int> part;
    std::vector<int> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      part.push_back(v);
      for (int w : g.adjacent(v))
        if (!seen.contains(w)) {
          seen.insert(w);
          stack.push_back(w);
        }
    }
    std::sort(part.begin(), part.end());
    parts.push_back(std::move(part));
  }
  return parts;
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

Graph compacted(const Graph& g) {
  const auto vs = g.vertices();
  std::vector<int> index(static_cast<std::size_t>(g.universe()), -1);
  for (std::size_t i = 0; i < vs.size(); ++i) index[static_cast<std::size_t>(vs[i])] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (Edge e : g.edges()) edges.emplace_back(index[static_cast<std::size_t>(e.u)], index[static_cast<std::size_t>(e.v)]);
  return Graph::from_edges(static_cast<int>(vs.size()), edges);
}

}  // namespace ctgraph
