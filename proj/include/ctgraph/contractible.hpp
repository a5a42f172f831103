#pragma once

#include <cstddef>
#include <iosfwd>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "ctgraph/canonical.hpp"
#include "ctgraph/graph.hpp"

namespace ctgraph {

/// One deletion in a reduction: a vertex, or an edge {u, v}.
struct ReductionStep {
  enum class Kind { Vertex, Edge };

  Kind kind = Kind::Vertex;
  int u = 0;
  int v = -1;
  /// Vertex set of the (common) neighborhood at the moment of deletion.
  std::vector<int> link;

  static ReductionStep vertex(int v, std::vector<int> link = {}) { return {Kind::Vertex, v, -1, std::move(link)}; }
  static ReductionStep edge(Edge e, std::vector<int> link = {}) { return {Kind::Edge, e.u, e.v, std::move(link)}; }

  bool is_vertex() const { return kind == Kind::Vertex; }
  Edge as_edge() const { return {u, v}; }

  bool operator==(const ReductionStep&) const = default;
};

/// Ordered deletions S taking G to I(G; S).
struct ReductionTrace {
  std::vector<ReductionStep> steps;

  std::size_t size() const { return steps.size(); }
  bool empty() const { return steps.empty(); }
  bool operator==(const ReductionTrace&) const = default;
};

/// Applies the deletions in order. Throws std::invalid_argument naming the
/// step when an element is missing.
Graph replay(const Graph& g, const ReductionTrace& trace);

/// Recomputes the per-step link snapshots by replaying on `g`.
ReductionTrace with_links(const Graph& g, ReductionTrace trace);

/// "trace k" header followed by "V v" / "E u v" lines. Links are not written.
void write_trace(std::ostream& out, const ReductionTrace& trace);
ReductionTrace parse_trace(std::istream& in);

/// Membership test for strong contractibility.
///
/// The default mode is the greedy first-hit recursion: an empty graph is
/// rejected, K(1) accepted, and otherwise the first vertex (ascending id)
/// whose neighborhood passes decides the answer by recursing on G - v.
/// The exhaustive mode backtracks over every deletion order instead and is
/// used to certify negatives.
///
/// Results are memoized by canonical form. Lookups take a shared lock and
/// inserts an exclusive one, so one tester may be used from several threads.
class ContractibilityTester {
 public:
  struct Options {
    bool memoize = true;
    bool exhaustive = false;
    std::size_t cache_capacity = std::size_t{1} << 20;
  };

  ContractibilityTester() : ContractibilityTester(Options{}) {}
  explicit ContractibilityTester(Options options) : options_(options) {}

  ContractibilityTester(const ContractibilityTester&) = delete;
  ContractibilityTester& operator=(const ContractibilityTester&) = delete;

  bool operator()(const Graph& g) const;

  const Options& options() const { return options_; }
  std::size_t cache_size() const;
  void clear_cache() const;

 private:
  bool compute(const Graph& g) const;

  Options options_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<CanonicalForm, bool> cache_;
};

/// Process-wide greedy tester with memoization.
const ContractibilityTester& default_tester();
/// Process-wide exhaustive (backtracking) tester.
const ContractibilityTester& exhaustive_tester();

bool is_strong_contractible(const Graph& g);

struct Reduction {
  Graph graph;
  ReductionTrace trace;
};

/// Repeatedly deletes the smallest-id vertex whose neighborhood passes the
/// tester, restarting the scan after every deletion, until a full pass
/// deletes nothing.
Reduction contractible_reduction(const Graph& g, const ContractibilityTester& test = default_tester());

/// As contractible_reduction, but when no vertex qualifies the edges are
/// scanned in lexicographic order and the first whose common neighborhood
/// passes is deleted; vertices are retried after every edge deletion.
Reduction edge_extended_reduction(const Graph& g, const ContractibilityTester& test = default_tester());

struct Transformation {
  enum class Kind { DeleteVertex, GlueVertex, DeleteEdge, GlueEdge };

  Kind kind;
  /// Deleted vertex, or the fresh id for GlueVertex.
  int vertex = -1;
  Edge edge{};
  /// Neighborhood of the glued vertex.
  VertexSet neighbors;

  bool operator==(const Transformation&) const = default;
};

/// Every vertex/edge deletion and edge gluing currently allowed, plus vertex
/// gluings onto passing induced subgraphs of at most `glue_bound` vertices.
/// The glued vertex gets id `g.universe()`.
std::vector<Transformation> legal_transformations(const Graph& g, int glue_bound = 3,
                                                  const ContractibilityTester& test = default_tester());

std::string to_string(Transformation::Kind kind);

}  // namespace ctgraph
