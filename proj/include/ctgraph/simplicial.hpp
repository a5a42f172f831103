#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "ctgraph/contractible.hpp"
#include "ctgraph/graph.hpp"

namespace ctgraph {

/// Nonempty sorted set of vertex ids. Ordered lexicographically.
class Simplex {
 public:
  Simplex() = default;
  /// Sorts and validates; throws std::invalid_argument when empty or when an
  /// id repeats.
  explicit Simplex(std::vector<int> vertices);
  Simplex(std::initializer_list<int> vertices) : Simplex(std::vector<int>(vertices)) {}

  int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<int>& vertices() const { return vertices_; }
  int operator[](std::size_t i) const { return vertices_[i]; }

  bool contains(int v) const;
  /// True when every vertex of this simplex lies in `other`.
  bool is_face_of(const Simplex& other) const;
  Simplex with(int v) const;
  Simplex without(int v) const;

  auto operator<=>(const Simplex&) const = default;

 private:
  std::vector<int> vertices_;
};

std::string to_string(const Simplex& s, const Graph* names = nullptr);

/// (σ, τ) with σ ⊊ τ, τ maximal, and τ the only maximal face containing σ.
struct FreePair {
  Simplex sigma;
  Simplex tau;

  bool is_elementary() const { return tau.dimension() == sigma.dimension() + 1; }
  auto operator<=>(const FreePair&) const = default;
};

/// Finite abstract simplicial complex stored as its full face set.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Downward closure of the given faces.
  static SimplicialComplex from_maximal(const std::vector<Simplex>& faces);
  /// Takes the faces as given; throws std::invalid_argument unless the set is
  /// closed under taking nonempty subsets.
  static SimplicialComplex from_faces(std::set<Simplex> faces);

  const std::set<Simplex>& faces() const { return faces_; }
  std::size_t size() const { return faces_.size(); }
  bool empty() const { return faces_.empty(); }
  bool contains(const Simplex& s) const { return faces_.contains(s); }
  int dimension() const;
  std::vector<int> vertices() const;

  /// Faces contained in no other face, ascending.
  std::vector<Simplex> maximal_faces() const;
  /// Faces strictly containing `s`.
  std::vector<Simplex> cofaces(const Simplex& s) const;
  bool is_maximal(const Simplex& s) const;
  /// Every nonempty subset of every face is a face.
  bool is_closed() const;
  /// A single vertex.
  bool is_point() const { return faces_.size() == 1; }

  /// Removes every face γ with σ ⊆ γ ⊆ τ. Throws std::invalid_argument when
  /// the pair is not free.
  SimplicialComplex collapse(const FreePair& pair) const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  friend SimplicialComplex clique_complex(const Graph&, std::size_t);
  std::set<Simplex> faces_;
};

inline constexpr std::size_t kDefaultFaceBudget = std::size_t{1} << 22;

/// Every nonempty clique of `g` as a face. Throws BudgetExceeded past
/// `face_budget` faces.
SimplicialComplex clique_complex(const Graph& g, std::size_t face_budget = kDefaultFaceBudget);

/// Vertices are the 0-faces, edges the 1-faces.
Graph one_skeleton(const SimplicialComplex& c);

/// All free pairs, including non-elementary ones, ordered by τ then σ.
std::vector<FreePair> free_pairs(const SimplicialComplex& c);
bool is_free_pair(const SimplicialComplex& c, const FreePair& pair);

/// Applies the pairs in order (throws on the first non-free pair).
SimplicialComplex collapse_sequence(const SimplicialComplex& c, const std::vector<FreePair>& pairs);

/// Betti numbers of the complex over Z_2, one per dimension.
std::vector<int> betti_numbers_z2(const SimplicialComplex& c);

struct CollapseResult {
  enum class Verdict { Collapsible, NotCollapsible, Exhausted };

  Verdict verdict = Verdict::Exhausted;
  /// Elementary pairs ending at a single vertex when collapsible.
  std::vector<FreePair> witness;
  std::size_t states_visited = 0;
};

inline constexpr std::size_t kDefaultCollapseBudget = 200000;

/// Backtracking search over elementary collapses, highest-dimensional τ first
/// and lexicographic otherwise, skipping complexes already visited.
///
/// Collapses preserve homology, so a complex that is not Z_2-acyclic is
/// reported NotCollapsible without searching. `state_budget` bounds the number
/// of distinct complexes expanded; hitting it yields Exhausted. Throws
/// std::invalid_argument for the empty complex.
CollapseResult is_collapsible(const SimplicialComplex& c, std::size_t state_budget = kDefaultCollapseBudget);

/// Collapse witness read off a reduction trace: each deleted vertex or edge α
/// with strongly contractible link contributes the link's own witness joined
/// with α, then (α, α ∪ {w}) for the final link vertex w. Applied to Δ(g) the
/// pairs end at Δ(replay(g, trace)). Throws std::invalid_argument if some link
/// does not reduce to a point.
std::vector<FreePair> collapse_via_trace(const Graph& g, const ReductionTrace& trace,
                                         const ContractibilityTester& test = default_tester());

/// Serialization: one maximal face per line, ids ascending.
void write_complex(std::ostream& out, const SimplicialComplex& c);
SimplicialComplex parse_complex(std::istream& in);

}  // namespace ctgraph
