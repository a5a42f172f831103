#include "ctgraph/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ctgraph {

namespace {

using Mask = std::uint64_t;
using Cells = std::vector<std::vector<int>>;
using Perm = std::vector<int>;

int count_in(Mask adj, const std::vector<int>& cell) {
  int c = 0;
  for (int w : cell) c += static_cast<int>((adj >> w) & 1u);
  return c;
}

// Equitable refinement. Cells are split by neighbor counts into a splitter
// cell, pieces ordered by ascending count, which keeps the result
// isomorphism-invariant.
void refine(const std::vector<Mask>& adj, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      const std::vector<int> splitter = cells[s];
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (cells[c].size() < 2) continue;
        std::vector<std::pair<int, int>> keyed;
        keyed.reserve(cells[c].size());
        for (int v : cells[c]) keyed.emplace_back(count_in(adj[static_cast<std::size_t>(v)], splitter), v);
        std::sort(keyed.begin(), keyed.end());
        if (keyed.front().first == keyed.back().first) continue;
        Cells pieces;
        for (std::size_t i = 0; i < keyed.size(); ++i) {
          if (i == 0 || keyed[i].first != keyed[i - 1].first) pieces.emplace_back();
          pieces.back().push_back(keyed[i].second);
        }
        cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(c));
        cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(c), pieces.begin(), pieces.end());
        changed = true;
        break;
      }
    }
  }
}

class Search {
 public:
  explicit Search(std::vector<Mask> adj) : adj_(std::move(adj)), n_(static_cast<int>(adj_.size())) {}

  Perm run() {
    Cells root{std::vector<int>(static_cast<std::size_t>(n_))};
    std::iota(root[0].begin(), root[0].end(), 0);
    refine(adj_, root);
    std::vector<int> path;
    explore(root, path);
    return best_order_;
  }

 private:
  static constexpr int kNoJump = -1;

  std::vector<std::uint8_t> encode(const Perm& order) const {
    std::vector<std::uint8_t> bytes((static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_ - 1) / 2 + 7) / 8, 0);
    std::size_t bit = 0;
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j, ++bit)
        if ((adj_[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] >> order[static_cast<std::size_t>(j)]) & 1u)
          bytes[bit / 8] |= static_cast<std::uint8_t>(0x80u >> (bit % 8));
    return bytes;
  }

  // Permutation mapping the vertex at each position of `from` to the vertex
  // at the same position of `to`.
  Perm automorphism(const Perm& from, const Perm& to) const {
    Perm gamma(static_cast<std::size_t>(n_));
    for (int k = 0; k < n_; ++k) gamma[static_cast<std::size_t>(from[static_cast<std::size_t>(k)])] = to[static_cast<std::size_t>(k)];
    return gamma;
  }

  // Orbit representatives among `cell` under the recorded automorphisms that
  // fix every vertex of `path`.
  std::vector<int> orbit_root(const std::vector<int>& path) const {
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      return x;
    };
    for (const Perm& g : automorphisms_) {
      bool fixes = std::all_of(path.begin(), path.end(), [&](int v) { return g[static_cast<std::size_t>(v)] == v; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        int a = find(v), b = find(g[static_cast<std::size_t>(v)]);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[static_cast<std::size_t>(v)] = find(v);
    return parent;
  }

  int explore(const Cells& cells, std::vector<int>& path) {
    const int level = static_cast<int>(path.size());
    if (static_cast<int>(cells.size()) == n_) return leaf(cells, path);

    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c)
      if (cells[c].size() > 1 && (target == cells.size() || cells[c].size() < cells[target].size())) target = c;

    std::vector<int> cell = cells[target];
    std::sort(cell.begin(), cell.end());
    std::vector<int> explored;
    for (int v : cell) {
      const auto orbit = orbit_root(path);
      if (std::any_of(explored.begin(), explored.end(), [&](int e) { return orbit[static_cast<std::size_t>(e)] == orbit[static_cast<std::size_t>(v)]; }))
        continue;
      Cells child = cells;
      auto& split = child[target];
      split.erase(std::find(split.begin(), split.end(), v));
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(target), std::vector<int>{v});
      refine(adj_, child);
      path.push_back(v);
      const int jump = explore(child, path);
      path.pop_back();
      explored.push_back(v);
      if (jump != kNoJump && jump < level) return jump;
    }
    return kNoJump;
  }

  int leaf(const Cells& cells, const std::vector<int>& path) {
    Perm order;
    order.reserve(cells.size());
    for (const auto& c : cells) order.push_back(c.front());
    auto code = encode(order);
    if (first_order_.empty()) {
      first_order_ = best_order_ = order;
      first_code_ = best_code_ = std::move(code);
      first_path_ = path;
      return kNoJump;
    }
    if (code == first_code_) {
      automorphisms_.push_back(automorphism(first_order_, order));
      std::size_t common = 0;
      while (common < path.size() && common < first_path_.size() && path[common] == first_path_[common]) ++common;
      return static_cast<int>(common);
    }
    if (code > best_code_) {
      best_code_ = std::move(code);
      best_order_ = order;
    } else if (code == best_code_) {
      automorphisms_.push_back(automorphism(best_order_, order));
    }
    return kNoJump;
  }

  std::vector<Mask> adj_;
  int n_;
  Perm first_order_, best_order_;
  std::vector<int> first_path_;
  std::vector<std::uint8_t> first_code_, best_code_;
  std::vector<Perm> automorphisms_;
};

constexpr char kHex[] = "0123456789abcdef";

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
  const auto vs = g.vertices();
  const int n = static_cast<int>(vs.size());
  if (n > 64) throw std::invalid_argument("canonical labeling supports at most 64 vertices, got " + std::to_string(n));
  if (n == 0) return {};
  std::vector<int> index(static_cast<std::size_t>(g.universe()), -1);
  for (int i = 0; i < n; ++i) index[static_cast<std::size_t>(vs[static_cast<std::size_t>(i)])] = i;
  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  for (Edge e : g.edges()) {
    const int a = index[static_cast<std::size_t>(e.u)], b = index[static_cast<std::size_t>(e.v)];
    adj[static_cast<std::size_t>(a)] |= Mask{1} << b;
    adj[static_cast<std::size_t>(b)] |= Mask{1} << a;
  }
  auto order = Search(std::move(adj)).run();
  for (int& v : order) v = vs[static_cast<std::size_t>(v)];
  return order;
}

CanonicalForm canonical_form(const Graph& g) {
  const auto order = canonical_labeling(g);
  const std::size_t n = order.size();
  CanonicalForm form;
  form.bytes.assign(1 + (n * (n == 0 ? 0 : n - 1) / 2 + 7) / 8, 0);
  form.bytes[0] = static_cast<std::uint8_t>(n);
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++bit)
      if (g.has_edge(order[i], order[j])) form.bytes[1 + bit / 8] |= static_cast<std::uint8_t>(0x80u >> (bit % 8));
  return form;
}

std::string CanonicalForm::hex() const {
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out.push_back(kHex[b >> 4]);
    out.push_back(kHex[b & 15]);
  }
  return out;
}

CanonicalForm CanonicalForm::from_hex(const std::string& text) {
  if (text.empty() || text.size() % 2 != 0) throw std::invalid_argument("bad canonical form hex '" + text + "'");
  auto nibble = [&](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw std::invalid_argument("bad canonical form hex '" + text + "'");
  };
  CanonicalForm f;
  for (std::size_t i = 0; i < text.size(); i += 2)
    f.bytes.push_back(static_cast<std::uint8_t>(nibble(text[i]) * 16 + nibble(text[i + 1])));
  const std::size_t n = f.bytes[0];
  if (f.bytes.size() != 1 + (n * (n == 0 ? 0 : n - 1) / 2 + 7) / 8)
    throw std::invalid_argument("canonical form length does not match order " + std::to_string(n));
  return f;
}

Graph CanonicalForm::decode() const {
  const int n = bytes.empty() ? 0 : bytes[0];
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (bytes[1 + bit / 8] & (0x80u >> (bit % 8))) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

}  // namespace ctgraph
