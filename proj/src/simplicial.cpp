#include "ctgraph/simplicial.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "ctgraph/cliques.hpp"
#include "ctgraph/errors.hpp"
#include "ctgraph/linalg.hpp"

namespace ctgraph {

Simplex::Simplex(std::vector<int> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw std::invalid_argument("a simplex needs at least one vertex");
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw std::invalid_argument("repeated vertex in simplex");
}

bool Simplex::contains(int v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(), vertices_.end());
}

Simplex Simplex::with(int v) const {
  auto vs = vertices_;
  vs.push_back(v);
  return Simplex(std::move(vs));
}

Simplex Simplex::without(int v) const {
  auto vs = vertices_;
  vs.erase(std::remove(vs.begin(), vs.end(), v), vs.end());
  return Simplex(std::move(vs));
}

std::string to_string(const Simplex& s, const Graph* names) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += names ? names->name_of(s[i]) : std::to_string(s[i]);
  }
  return out + "}";
}

SimplicialComplex SimplicialComplex::from_maximal(const std::vector<Simplex>& faces) {
  SimplicialComplex c;
  for (const auto& f : faces) {
    const auto& vs = f.vertices();
    const std::size_t k = vs.size();
    if (k > 24) throw std::invalid_argument("face too large to close downward");
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << k); ++mask) {
      std::vector<int> sub;
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1u) sub.push_back(vs[i]);
      c.faces_.insert(Simplex(std::move(sub)));
    }
  }
  return c;
}

SimplicialComplex SimplicialComplex::from_faces(std::set<Simplex> faces) {
  SimplicialComplex c;
  c.faces_ = std::move(faces);
  if (!c.is_closed()) throw std::invalid_argument("face set is not closed under subsets");
  return c;
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& f : faces_) d = std::max(d, f.dimension());
  return d;
}

std::vector<int> SimplicialComplex::vertices() const {
  std::vector<int> out;
  for (const auto& f : faces_)
    if (f.dimension() == 0) out.push_back(f[0]);
  return out;
}

std::vector<Simplex> SimplicialComplex::cofaces(const Simplex& s) const {
  std::vector<Simplex> out;
  for (const auto& f : faces_)
    if (f.size() > s.size() && s.is_face_of(f)) out.push_back(f);
  return out;
}

bool SimplicialComplex::is_maximal(const Simplex& s) const {
  if (!contains(s)) return false;
  for (int v : vertices())
    if (!s.contains(v) && contains(s.with(v))) return false;
  return true;
}

std::vector<Simplex> SimplicialComplex::maximal_faces() const {
  const auto vs = vertices();
  std::vector<Simplex> out;
  for (const auto& f : faces_) {
    bool maximal = true;
    for (int v : vs)
      if (!f.contains(v) && contains(f.with(v))) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(f);
  }
  return out;
}

bool SimplicialComplex::is_closed() const {
  for (const auto& f : faces_) {
    if (f.size() == 1) continue;
    for (int v : f.vertices())
      if (!contains(f.without(v))) return false;
  }
  return true;
}

bool is_free_pair(const SimplicialComplex& c, const FreePair& pair) {
  if (!c.contains(pair.sigma) || !c.contains(pair.tau)) return false;
  if (pair.sigma == pair.tau || !pair.sigma.is_face_of(pair.tau)) return false;
  if (!c.is_maximal(pair.tau)) return false;
  // No other maximal face contains σ iff every coface of σ lies in τ.
  for (const auto& f : c.cofaces(pair.sigma))
    if (!f.is_face_of(pair.tau)) return false;
  return true;
}

SimplicialComplex SimplicialComplex::collapse(const FreePair& pair) const {
  if (!is_free_pair(*this, pair))
    throw std::invalid_argument("(" + to_string(pair.sigma) + ", " + to_string(pair.tau) + ") is not a free pair");
  SimplicialComplex out = *this;
  std::erase_if(out.faces_, [&](const Simplex& g) { return pair.sigma.is_face_of(g) && g.is_face_of(pair.tau); });
  return out;
}

SimplicialComplex clique_complex(const Graph& g, std::size_t face_budget) {
  SimplicialComplex c;
  for (auto& clique : all_cliques(g, face_budget)) c.faces_.insert(c.faces_.end(), Simplex(std::move(clique)));
  return c;
}

Graph one_skeleton(const SimplicialComplex& c) {
  std::vector<Edge> edges;
  for (const auto& f : c.faces())
    if (f.dimension() == 1) edges.emplace_back(f[0], f[1]);
  return Graph(c.vertices(), edges);
}

std::vector<FreePair> free_pairs(const SimplicialComplex& c) {
  std::vector<FreePair> out;
  for (const auto& tau : c.maximal_faces()) {
    const auto& vs = tau.vertices();
    const std::size_t k = vs.size();
    std::vector<Simplex> subs;
    for (std::uint32_t mask = 1; mask + 1 < (std::uint32_t{1} << k); ++mask) {
      std::vector<int> sub;
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1u) sub.push_back(vs[i]);
      subs.emplace_back(std::move(sub));
    }
    std::sort(subs.begin(), subs.end());
    for (auto& sigma : subs) {
      FreePair pair{std::move(sigma), tau};
      if (is_free_pair(c, pair)) out.push_back(std::move(pair));
    }
  }
  return out;
}

SimplicialComplex collapse_sequence(const SimplicialComplex& c, const std::vector<FreePair>& pairs) {
  SimplicialComplex out = c;
  for (const auto& p : pairs) out = out.collapse(p);
  return out;
}

std::vector<int> betti_numbers_z2(const SimplicialComplex& c) {
  const int top = c.dimension();
  std::vector<std::vector<Simplex>> by_dim(static_cast<std::size_t>(top + 1));
  for (const auto& f : c.faces()) by_dim[static_cast<std::size_t>(f.dimension())].push_back(f);
  // rank of ∂_d : C_d -> C_{d-1}
  std::vector<Eigen::Index> ranks(static_cast<std::size_t>(top + 2), 0);
  for (int d = 1; d <= top; ++d) {
    const auto& rows = by_dim[static_cast<std::size_t>(d - 1)];
    const auto& cols = by_dim[static_cast<std::size_t>(d)];
    std::map<Simplex, Eigen::Index> index;
    for (std::size_t i = 0; i < rows.size(); ++i) index.emplace(rows[i], static_cast<Eigen::Index>(i));
    IntMatrix m = IntMatrix::Zero(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (int v : cols[j].vertices()) m(index.at(cols[j].without(v)), static_cast<Eigen::Index>(j)) = 1;
    ranks[static_cast<std::size_t>(d)] = rank(m, Coefficients::z2());
  }
  std::vector<int> betti;
  for (int d = 0; d <= top; ++d)
    betti.push_back(static_cast<int>(static_cast<Eigen::Index>(by_dim[static_cast<std::size_t>(d)].size()) -
                                     ranks[static_cast<std::size_t>(d)] - ranks[static_cast<std::size_t>(d + 1)]));
  return betti;
}

namespace {

// Elementary free pairs: σ with exactly one proper coface τ (which is then
// automatically maximal and one dimension higher).
std::vector<FreePair> elementary_free_pairs(const SimplicialComplex& c) {
  std::map<Simplex, std::pair<int, const Simplex*>> count;
  for (const auto& tau : c.faces()) {
    if (tau.size() < 2) continue;
    for (int v : tau.vertices()) {
      auto& slot = count[tau.without(v)];
      ++slot.first;
      slot.second = &tau;
    }
  }
  std::vector<FreePair> out;
  for (const auto& [sigma, slot] : count)
    if (slot.first == 1) out.push_back({sigma, *slot.second});
  std::sort(out.begin(), out.end(), [](const FreePair& a, const FreePair& b) {
    if (a.tau.dimension() != b.tau.dimension()) return a.tau.dimension() > b.tau.dimension();
    return a < b;
  });
  return out;
}

std::string state_key(const SimplicialComplex& c) {
  std::string key;
  for (const auto& f : c.faces()) {
    for (int v : f.vertices()) key += std::to_string(v) + ",";
    key += ";";
  }
  return key;
}

class CollapseSearch {
 public:
  explicit CollapseSearch(std::size_t budget) : budget_(budget) {}

  CollapseResult run(const SimplicialComplex& c) {
    CollapseResult result;
    std::vector<FreePair> path;
    const bool found = dfs(c, path);
    result.states_visited = visited_.size();
    if (found) {
      result.verdict = CollapseResult::Verdict::Collapsible;
      result.witness = std::move(path);
    } else {
      result.verdict = exhausted_ ? CollapseResult::Verdict::Exhausted : CollapseResult::Verdict::NotCollapsible;
    }
    return result;
  }

 private:
  bool dfs(const SimplicialComplex& c, std::vector<FreePair>& path) {
    if (c.is_point()) return true;
    if (!visited_.insert(state_key(c)).second) return false;
    if (visited_.size() > budget_) {
      exhausted_ = true;
      return false;
    }
    for (const auto& pair : elementary_free_pairs(c)) {
      path.push_back(pair);
      if (dfs(c.collapse(pair), path)) return true;
      path.pop_back();
      if (exhausted_) return false;
    }
    return false;
  }

  std::size_t budget_;
  bool exhausted_ = false;
  std::unordered_set<std::string> visited_;
};

}  // namespace

CollapseResult is_collapsible(const SimplicialComplex& c, std::size_t state_budget) {
  if (c.empty()) throw std::invalid_argument("the empty complex has no collapsibility verdict");
  if (c.is_point()) return {CollapseResult::Verdict::Collapsible, {}, 0};
  const auto betti = betti_numbers_z2(c);
  const bool acyclic = betti[0] == 1 && std::all_of(betti.begin() + 1, betti.end(), [](int b) { return b == 0; });
  if (!acyclic) return {CollapseResult::Verdict::NotCollapsible, {}, 0};
  return CollapseSearch(state_budget).run(c);
}

std::vector<FreePair> collapse_via_trace(const Graph& g, const ReductionTrace& trace, const ContractibilityTester& test) {
  std::vector<FreePair> witness;
  Graph current = g;
  for (const auto& step : trace.steps) {
    const Simplex alpha = step.is_vertex() ? Simplex{step.u} : Simplex{step.u, step.v};
    const Graph link = step.is_vertex() ? neighborhood(current, step.u) : common_neighborhood(current, step.u, step.v);
    const Reduction inner = contractible_reduction(link, test);
    if (inner.graph.order() != 1)
      throw std::invalid_argument("link of " + to_string(alpha) + " does not reduce to a point");
    for (const auto& p : collapse_via_trace(link, inner.trace, test)) {
      auto sigma = p.sigma.vertices(), tau = p.tau.vertices();
      sigma.insert(sigma.end(), alpha.vertices().begin(), alpha.vertices().end());
      tau.insert(tau.end(), alpha.vertices().begin(), alpha.vertices().end());
      witness.push_back({Simplex(std::move(sigma)), Simplex(std::move(tau))});
    }
    witness.push_back({alpha, alpha.with(inner.graph.vertex_set().first())});
    current = step.is_vertex() ? delete_vertex(current, step.u) : delete_edge(current, step.as_edge());
  }
  return witness;
}

void write_complex(std::ostream& out, const SimplicialComplex& c) {
  for (const auto& f : c.maximal_faces()) {
    for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
    out << '\n';
  }
}

SimplicialComplex parse_complex(std::istream& in) {
  std::vector<Simplex> faces;
  std::string text;
  int number = 0;
  while (std::getline(in, text)) {
    ++number;
    std::istringstream ss(text);
    std::vector<int> vs;
    std::string tok;
    while (ss >> tok) {
      if (tok.starts_with("#")) break;
      std::size_t used = 0;
      int v = -1;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || v < 0) throw ParseError(number, "expected a vertex id, got '" + tok + "'");
      vs.push_back(v);
    }
    if (vs.empty()) continue;
    try {
      faces.emplace_back(std::move(vs));
    } catch (const std::invalid_argument& e) {
      throw ParseError(number, e.what());
    }
  }
  return SimplicialComplex::from_maximal(faces);
}

}  // namespace ctgraph
