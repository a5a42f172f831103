#include "ctgraph/cliques.hpp"

#include <algorithm>

#include "ctgraph/errors.hpp"

namespace ctgraph {

namespace {

// Extends `clique` by candidates above its largest member, so each clique is
// visited exactly once and in lexicographic order.
template <typename Visit>
void extend(const Graph& g, std::vector<int>& clique, const VertexSet& candidates, int max_size, Visit&& visit) {
  for (int v : candidates) {
    clique.push_back(v);
    visit(clique);
    if (max_size < 0 || static_cast<int>(clique.size()) < max_size) {
      VertexSet next = candidates & g.adjacent(v);
      for (int w : candidates) {
        if (w > v) break;
        next.erase(w);
      }
      if (!next.empty()) extend(g, clique, next, max_size, visit);
    }
    clique.pop_back();
  }
}

void bron_kerbosch(const Graph& g, std::vector<int>& r, VertexSet p, VertexSet x, std::vector<std::vector<int>>& out) {
  if (p.empty()) {
    if (x.empty()) {
      auto c = r;
      std::sort(c.begin(), c.end());
      out.push_back(std::move(c));
    }
    return;
  }
  int pivot = -1, best = -1;
  for (int u : p | x) {
    int k = (p & g.adjacent(u)).size();
    if (k > best) best = k, pivot = u;
  }
  for (int v : p - g.adjacent(pivot)) {
    r.push_back(v);
    bron_kerbosch(g, r, p & g.adjacent(v), x & g.adjacent(v), out);
    r.pop_back();
    p.erase(v);
    x.insert(v);
  }
}

}  // namespace

std::vector<std::vector<int>> cliques_of_size(const Graph& g, int size) {
  std::vector<std::vector<int>> out;
  if (size <= 0) return out;
  std::vector<int> clique;
  extend(g, clique, g.vertex_set(), size, [&](const std::vector<int>& c) {
    if (static_cast<int>(c.size()) == size) out.push_back(c);
  });
  return out;
}

std::vector<std::vector<int>> all_cliques(const Graph& g, std::size_t limit) {
  std::vector<std::vector<int>> out;
  std::vector<int> clique;
  extend(g, clique, g.vertex_set(), -1, [&](const std::vector<int>& c) {
    if (out.size() >= limit) throw BudgetExceeded("clique complex exceeds face budget of " + std::to_string(limit));
    out.push_back(c);
  });
  return out;
}

std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> r;
  bron_kerbosch(g, r, g.vertex_set(), VertexSet{}, out);
  std::sort(out.begin(), out.end());
  return out;
}

int clique_number(const Graph& g) {
  int best = 0;
  for (const auto& c : maximal_cliques(g)) best = std::max(best, static_cast<int>(c.size()));
  return best;
}

}  // namespace ctgraph
