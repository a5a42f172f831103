#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <map>
#include <vector>

#include "ctgraph/contractible.hpp"
#include "ctgraph/graph.hpp"
#include "ctgraph/linalg.hpp"
#include "ctgraph/simplicial.hpp"

namespace ctgraph {

/// Sparse n-chain. Simplices are oriented by ascending vertex order; zero
/// coefficients are never stored.
struct ChainVector {
  int dim = 0;
  std::map<Simplex, std::int64_t> terms;

  bool is_zero() const { return terms.empty(); }
  /// Adds c·s, reducing into the ring and dropping zeros.
  void add(const Simplex& s, std::int64_t c, const Coefficients& k);
  ChainVector& add(const ChainVector& other, std::int64_t c, const Coefficients& k);

  bool operator==(const ChainVector&) const = default;
};

/// The cliques of a graph by dimension, lexicographically ordered.
class OrientedSimplexBasis {
 public:
  /// Cliques of dimension 0..max_dim.
  OrientedSimplexBasis(const Graph& g, int max_dim);

  int max_dim() const { return static_cast<int>(simplices_.size()) - 1; }
  /// Empty for dimensions outside [0, max_dim].
  const std::vector<Simplex>& simplices(int n) const;
  Eigen::Index count(int n) const { return static_cast<Eigen::Index>(simplices(n).size()); }
  /// Position of s in its dimension, or -1.
  Eigen::Index index(const Simplex& s) const;

  IntVector to_dense(const ChainVector& c, const Coefficients& k) const;
  ChainVector from_dense(int n, const IntVector& x, const Coefficients& k) const;

 private:
  std::vector<std::vector<Simplex>> simplices_;
  std::vector<std::map<Simplex, Eigen::Index>> index_;
};

/// ∂_n : C_n → C_{n-1} against the basis; rows C_{n-1}, columns C_n. For
/// n = 0 the matrix has no rows.
IntMatrix boundary_matrix(const OrientedSimplexBasis& basis, int n, const Coefficients& k);

/// Throws std::invalid_argument if c uses a simplex that is not a clique of g.
ChainVector boundary(const ChainVector& c, const Graph& g, const Coefficients& k = Coefficients::z2());

inline constexpr int kAllDimensions = std::numeric_limits<int>::max();

struct HomologyResult {
  Coefficients coefficients;
  std::vector<int> betti;
  /// Invariant factors above 1, per dimension; always empty over a field.
  std::vector<std::vector<std::int64_t>> torsion;
  /// Cycle basis per dimension when requested (fields only).
  std::vector<std::vector<ChainVector>> representatives;
};

/// Homology in dimensions 0..min(max_dim, dimension of the clique complex).
/// Throws std::invalid_argument for max_dim < 0, or when representatives are
/// requested over the integers.
HomologyResult homology(const Graph& g, const Coefficients& k = Coefficients::z2(), int max_dim = kAllDimensions,
                        bool with_representatives = false);

/// Writes one line per dimension: "H_n rank [torsion ...]".
void write_homology(std::ostream& out, const HomologyResult& h);

/// H_n of a graph over a field with a fixed cycle basis.
///
/// The representatives are the nullspace basis vectors of ∂_n that are
/// independent modulo boundaries, taken in order, so the same graph always
/// yields the same basis.
class HomologyBasis {
 public:
  HomologyBasis(const Graph& g, int n, const Coefficients& k);

  int dim() const { return n_; }
  Eigen::Index rank() const { return cycles_.cols(); }
  const Coefficients& coefficients() const { return k_; }
  const OrientedSimplexBasis& simplices() const { return basis_; }
  std::vector<ChainVector> representatives() const;

  /// Coordinates of the class of cycle z. Throws std::invalid_argument if z is
  /// not a cycle of the graph.
  IntVector coordinates(const ChainVector& z) const;
  bool is_boundary(const ChainVector& z) const;

 private:
  int n_;
  Coefficients k_;
  Graph graph_;
  OrientedSimplexBasis basis_;
  IntMatrix cycles_;
  IntMatrix span_;  // [cycles | boundaries]
};

/// Moves cycle z of g off the vertex v by adding the boundary of a chain in
/// the star of v; the result is a homologous cycle of g − v.
///
/// Throws std::invalid_argument if z is not a cycle or N(v) is not strongly
/// contractible, and std::logic_error if the local system has no solution.
ChainVector push_cycle(const Graph& g, int v, const ChainVector& z, const Coefficients& k = Coefficients::z2(),
                       const ContractibilityTester& test = default_tester());

/// Edge counterpart of push_cycle, using the common neighborhood of e.
ChainVector push_cycle(const Graph& g, Edge e, const ChainVector& z, const Coefficients& k = Coefficients::z2(),
                       const ContractibilityTester& test = default_tester());

/// Applies push_cycle along every step of the trace.
ChainVector push_cycle_sequence(const Graph& g, const ReductionTrace& trace, const ChainVector& z,
                                const Coefficients& k = Coefficients::z2(),
                                const ContractibilityTester& test = default_tester());

/// Matrix of H_p(replay(g0, s0)) → H_p(replay(g1, s1)) induced by g0 ⊆ g1,
/// against the HomologyBasis bases (columns index the source). Field
/// coefficients only. Throws std::invalid_argument if g0 is not a subgraph of
/// g1 or the coefficients are the integers.
IntMatrix induced_map(const Graph& g0, const Graph& g1, const ReductionTrace& s0, const ReductionTrace& s1, int p,
                      const Coefficients& k = Coefficients::z2(),
                      const ContractibilityTester& test = default_tester());

/// Same map with the reduced graphs already at hand.
IntMatrix induced_map(const Graph& r0, const Graph& g1, const ReductionTrace& s1, const Graph& r1, int p,
                      const Coefficients& k, const ContractibilityTester& test);

bool is_subgraph(const Graph& h, const Graph& g);

}  // namespace ctgraph
