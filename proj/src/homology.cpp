#include "ctgraph/homology.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

#include "ctgraph/cliques.hpp"

namespace ctgraph {

using Index = Eigen::Index;

void ChainVector::add(const Simplex& s, std::int64_t c, const Coefficients& k) {
  if (s.dimension() != dim) throw std::invalid_argument("simplex " + to_string(s) + " has the wrong dimension");
  auto [it, inserted] = terms.try_emplace(s, 0);
  it->second = k.normalize(it->second + k.normalize(c));
  if (it->second == 0) terms.erase(it);
}

ChainVector& ChainVector::add(const ChainVector& other, std::int64_t c, const Coefficients& k) {
  for (const auto& [s, x] : other.terms) add(s, x * c, k);
  return *this;
}

OrientedSimplexBasis::OrientedSimplexBasis(const Graph& g, int max_dim) {
  for (int n = 0; n <= max_dim; ++n) {
    auto cliques = cliques_of_size(g, n + 1);
    if (cliques.empty()) break;
    std::vector<Simplex> level;
    std::map<Simplex, Index> lookup;
    for (auto& c : cliques) {
      lookup.emplace(Simplex(c), static_cast<Index>(level.size()));
      level.emplace_back(std::move(c));
    }
    simplices_.push_back(std::move(level));
    index_.push_back(std::move(lookup));
  }
}

const std::vector<Simplex>& OrientedSimplexBasis::simplices(int n) const {
  static const std::vector<Simplex> none;
  return n < 0 || n > max_dim() ? none : simplices_[static_cast<std::size_t>(n)];
}

Index OrientedSimplexBasis::index(const Simplex& s) const {
  const int n = s.dimension();
  if (n > max_dim()) return -1;
  const auto& lookup = index_[static_cast<std::size_t>(n)];
  auto it = lookup.find(s);
  return it == lookup.end() ? -1 : it->second;
}

IntVector OrientedSimplexBasis::to_dense(const ChainVector& c, const Coefficients& k) const {
  IntVector x = IntVector::Zero(count(c.dim));
  for (const auto& [s, v] : c.terms) {
    const Index i = index(s);
    if (i < 0) throw std::invalid_argument("simplex " + to_string(s) + " is not a clique of the graph");
    x(i) = k.normalize(v);
  }
  return x;
}

ChainVector OrientedSimplexBasis::from_dense(int n, const IntVector& x, const Coefficients& k) const {
  ChainVector c{n, {}};
  const auto& level = simplices(n);
  for (Index i = 0; i < x.size(); ++i)
    if (k.normalize(x(i)) != 0) c.terms.emplace(level[static_cast<std::size_t>(i)], k.normalize(x(i)));
  return c;
}

namespace {

// Faces of s with their boundary signs.
template <typename F>
void for_each_face(const Simplex& s, F&& f) {
  if (s.size() < 2) return;
  for (std::size_t i = 0; i < s.size(); ++i) f(s.without(s[i]), i % 2 == 0 ? 1 : -1);
}

ChainVector boundary_unchecked(const ChainVector& c, const Coefficients& k) {
  ChainVector out{c.dim - 1, {}};
  if (c.dim == 0) return {0, {}};
  for (const auto& [s, x] : c.terms) for_each_face(s, [&](const Simplex& face, int sign) { out.add(face, sign * x, k); });
  return out;
}

bool is_clique(const Graph& g, const Simplex& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!g.has_vertex(s[i])) return false;
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!g.has_edge(s[i], s[j])) return false;
  }
  return true;
}

void require_chain_of(const Graph& g, const ChainVector& c) {
  for (const auto& [s, x] : c.terms) {
    if (s.dimension() != c.dim) throw std::invalid_argument("simplex " + to_string(s) + " has the wrong dimension");
    if (!is_clique(g, s)) throw std::invalid_argument("simplex " + to_string(s) + " is not a clique of the graph");
  }
}

int top_dimension(const Graph& g) { return clique_number(g) - 1; }

}  // namespace

IntMatrix boundary_matrix(const OrientedSimplexBasis& basis, int n, const Coefficients& k) {
  IntMatrix m = IntMatrix::Zero(n == 0 ? 0 : basis.count(n - 1), basis.count(n));
  if (n == 0) return m;
  const auto& cols = basis.simplices(n);
  for (std::size_t j = 0; j < cols.size(); ++j)
    for_each_face(cols[j], [&](const Simplex& face, int sign) {
      m(basis.index(face), static_cast<Index>(j)) = k.normalize(sign);
    });
  return m;
}

ChainVector boundary(const ChainVector& c, const Graph& g, const Coefficients& k) {
  require_chain_of(g, c);
  return boundary_unchecked(c, k);
}

HomologyResult homology(const Graph& g, const Coefficients& k, int max_dim, bool with_representatives) {
  if (max_dim < 0) throw std::invalid_argument("max_dim must be nonnegative");
  if (with_representatives && !k.is_field()) throw std::invalid_argument("representatives need field coefficients");
  HomologyResult out{k, {}, {}, {}};
  const int top = std::min(max_dim, top_dimension(g));
  if (top < 0) return out;
  const OrientedSimplexBasis basis(g, top + 1);

  // rank ∂_n for n = 0..top+1, plus the invariant factors of each.
  std::vector<Index> ranks;
  std::vector<std::vector<std::int64_t>> factors;
  for (int n = 0; n <= top + 1; ++n) {
    const IntMatrix d = boundary_matrix(basis, n, k);
    if (k.is_field() || d.size() == 0) {
      ranks.push_back(rank(d, k));
      factors.emplace_back();
    } else {
      auto s = smith_normal_form(d);
      ranks.push_back(static_cast<Index>(s.invariants.size()));
      std::vector<std::int64_t> big;
      for (auto f : s.invariants)
        if (f > 1) big.push_back(f);
      factors.push_back(std::move(big));
    }
  }
  for (int n = 0; n <= top; ++n) {
    const auto i = static_cast<std::size_t>(n);
    out.betti.push_back(static_cast<int>(basis.count(n) - ranks[i] - ranks[i + 1]));
    out.torsion.push_back(factors[i + 1]);
    if (with_representatives) out.representatives.push_back(HomologyBasis(g, n, k).representatives());
  }
  return out;
}

void write_homology(std::ostream& out, const HomologyResult& h) {
  for (std::size_t n = 0; n < h.betti.size(); ++n) {
    out << "H_" << n << ' ' << h.betti[n];
    if (n < h.torsion.size())
      for (auto t : h.torsion[n]) out << ' ' << t;
    out << '\n';
  }
}

HomologyBasis::HomologyBasis(const Graph& g, int n, const Coefficients& k)
    : n_(n), k_(k), graph_(g), basis_(g, n + 1) {
  if (n < 0) throw std::invalid_argument("homology dimension must be nonnegative");
  if (!k.is_field()) throw std::invalid_argument("homology bases need field coefficients");
  const Index cn = basis_.count(n);
  const IntMatrix z = nullspace(boundary_matrix(basis_, n, k), k.p);
  const IntMatrix b = boundary_matrix(basis_, n + 1, k);
  // Pivots of [B | Z] beyond B pick the cycles independent modulo boundaries.
  IntMatrix joint(cn, b.cols() + z.cols());
  joint << b, z;
  std::vector<Index> chosen;
  for (Index c : row_echelon(joint, k.p).pivots)
    if (c >= b.cols()) chosen.push_back(c - b.cols());
  cycles_ = IntMatrix(cn, static_cast<Index>(chosen.size()));
  for (std::size_t i = 0; i < chosen.size(); ++i) cycles_.col(static_cast<Index>(i)) = z.col(chosen[i]);
  span_ = IntMatrix(cn, cycles_.cols() + b.cols());
  span_ << cycles_, b;
}

std::vector<ChainVector> HomologyBasis::representatives() const {
  std::vector<ChainVector> out;
  for (Index j = 0; j < cycles_.cols(); ++j) out.push_back(basis_.from_dense(n_, cycles_.col(j), k_));
  return out;
}

IntVector HomologyBasis::coordinates(const ChainVector& z) const {
  if (z.dim != n_) throw std::invalid_argument("chain has the wrong dimension");
  require_chain_of(graph_, z);
  if (!boundary_unchecked(z, k_).is_zero()) throw std::invalid_argument("chain is not a cycle");
  const auto x = solve(span_, basis_.to_dense(z, k_), k_);
  if (!x) throw std::logic_error("cycle not in the span of the homology basis");
  return x->head(cycles_.cols());
}

bool HomologyBasis::is_boundary(const ChainVector& z) const { return coordinates(z).isZero(); }

namespace {

// z + ∂w with w supported on the (n+1)-cliques containing alpha, chosen so no
// n-simplex containing alpha survives.
ChainVector push_off(const Graph& g, const Simplex& alpha, const Graph& link, const ChainVector& z,
                     const Coefficients& k, const ContractibilityTester& test) {
  require_chain_of(g, z);
  if (!boundary_unchecked(z, k).is_zero()) throw std::invalid_argument("chain is not a cycle");
  if (!test(link)) throw std::invalid_argument("link of " + to_string(alpha) + " is not strongly contractible");

  std::vector<Simplex> rows;
  for (const auto& [s, x] : z.terms)
    if (alpha.is_face_of(s)) rows.push_back(s);
  if (rows.empty()) return z;

  // Cofaces of alpha in dimension n+1: alpha joined with n+1-|alpha| link vertices.
  const int extra = z.dim + 2 - static_cast<int>(alpha.size());
  std::vector<Simplex> cols;
  for (auto& c : cliques_of_size(link, extra)) {
    c.insert(c.end(), alpha.vertices().begin(), alpha.vertices().end());
    cols.emplace_back(std::move(c));
  }
  // All n-faces containing alpha of those cofaces become rows too.
  std::map<Simplex, Index> row_index;
  for (const auto& tau : cols)
    for_each_face(tau, [&](const Simplex& face, int) {
      if (alpha.is_face_of(face)) row_index.emplace(face, 0);
    });
  for (const auto& s : rows) row_index.emplace(s, 0);
  Index r = 0;
  for (auto& [s, i] : row_index) i = r++;

  IntMatrix d = IntMatrix::Zero(r, static_cast<Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for_each_face(cols[j], [&](const Simplex& face, int sign) {
      auto it = row_index.find(face);
      if (it != row_index.end()) d(it->second, static_cast<Index>(j)) = k.normalize(sign);
    });
  IntVector rhs = IntVector::Zero(r);
  for (const auto& s : rows) rhs(row_index.at(s)) = k.normalize(-z.terms.at(s));

  const auto w = solve(d, rhs, k);
  if (!w) throw std::logic_error("no chain pushes the cycle off " + to_string(alpha));
  ChainVector filler{z.dim + 1, {}};
  for (std::size_t j = 0; j < cols.size(); ++j) filler.add(cols[j], (*w)(static_cast<Index>(j)), k);
  ChainVector out = z;
  out.add(boundary_unchecked(filler, k), 1, k);
  for (const auto& [s, x] : out.terms)
    if (alpha.is_face_of(s)) throw std::logic_error("pushed cycle still meets " + to_string(alpha));
  return out;
}

}  // namespace

ChainVector push_cycle(const Graph& g, int v, const ChainVector& z, const Coefficients& k,
                       const ContractibilityTester& test) {
  if (!g.has_vertex(v)) throw std::invalid_argument("vertex " + std::to_string(v) + " is not in the graph");
  return push_off(g, Simplex{v}, neighborhood(g, v), z, k, test);
}

ChainVector push_cycle(const Graph& g, Edge e, const ChainVector& z, const Coefficients& k,
                       const ContractibilityTester& test) {
  if (!g.has_edge(e.u, e.v))
    throw std::invalid_argument("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not in the graph");
  return push_off(g, Simplex{e.u, e.v}, common_neighborhood(g, e.u, e.v), z, k, test);
}

ChainVector push_cycle_sequence(const Graph& g, const ReductionTrace& trace, const ChainVector& z,
                                const Coefficients& k, const ContractibilityTester& test) {
  Graph current = g;
  ChainVector out = z;
  for (const auto& step : trace.steps) {
    if (step.is_vertex()) {
      out = push_cycle(current, step.u, out, k, test);
      current = delete_vertex(current, step.u);
    } else {
      out = push_cycle(current, step.as_edge(), out, k, test);
      current = delete_edge(current, step.as_edge());
    }
  }
  return out;
}

bool is_subgraph(const Graph& h, const Graph& g) {
  if (!h.vertex_set().is_subset_of(g.vertex_set())) return false;
  for (Edge e : h.edges())
    if (!g.has_edge(e.u, e.v)) return false;
  return true;
}

IntMatrix induced_map(const Graph& r0, const Graph& g1, const ReductionTrace& s1, const Graph& r1, int p,
                      const Coefficients& k, const ContractibilityTester& test) {
  if (!k.is_field()) throw std::invalid_argument("induced maps need field coefficients");
  if (!is_subgraph(r0, g1)) throw std::invalid_argument("source graph is not a subgraph of the target");
  const HomologyBasis source(r0, p, k), target(r1, p, k);
  IntMatrix m = IntMatrix::Zero(target.rank(), source.rank());
  const auto reps = source.representatives();
  for (std::size_t j = 0; j < reps.size(); ++j)
    m.col(static_cast<Index>(j)) = target.coordinates(push_cycle_sequence(g1, s1, reps[j], k, test));
  return m;
}

IntMatrix induced_map(const Graph& g0, const Graph& g1, const ReductionTrace& s0, const ReductionTrace& s1, int p,
                      const Coefficients& k, const ContractibilityTester& test) {
  if (!is_subgraph(g0, g1)) throw std::invalid_argument("source graph is not a subgraph of the target");
  return induced_map(replay(g0, s0), g1, s1, replay(g1, s1), p, k, test);
}

}  // namespace ctgraph
