#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "ctgraph/contractible.hpp"
#include "ctgraph/graph.hpp"
#include "ctgraph/linalg.hpp"

namespace ctgraph {

/// Relative slack used both to merge nearly equal distances into one
/// threshold and to decide d(u, v) <= eps.
inline constexpr double kDistanceTolerance = 1e-12;

/// Finite metric space given by coordinates (Euclidean) or a distance matrix.
class PointCloud {
 public:
  /// One point per row.
  static PointCloud from_points(Eigen::MatrixXd points);
  /// Throws std::invalid_argument unless the matrix is square, symmetric,
  /// nonnegative, zero on the diagonal and satisfies the triangle inequality.
  static PointCloud from_distances(Eigen::MatrixXd distances);

  int size() const { return static_cast<int>(squared_.rows()); }
  bool is_euclidean() const { return euclidean_; }
  double distance(int i, int j) const;
  double squared_distance(int i, int j) const { return squared_(i, j); }

 private:
  PointCloud() = default;
  Eigen::MatrixXd squared_;
  bool euclidean_ = true;
};

/// Point cloud text formats: CSV rows of coordinates, or whitespace/comma
/// separated rows of a distance matrix. Blank lines and '#' comments are
/// ignored. Throws ParseError.
PointCloud parse_point_cloud(std::istream& in, bool distance_matrix = false);

struct Filtration {
  std::vector<double> thresholds;
  /// graphs[i] joins u and v iff d(u, v) <= thresholds[i].
  std::vector<Graph> graphs;

  int stages() const { return static_cast<int>(graphs.size()); }
};

/// Rips 1-skeletons. By default the thresholds are 0 and every distinct
/// pairwise distance; explicit thresholds must start at 0 and increase
/// strictly. Throws std::invalid_argument for an empty cloud or bad thresholds.
Filtration vr_filtration(const PointCloud& cloud, const std::optional<std::vector<double>>& thresholds = std::nullopt);

struct ReducedStage {
  ReductionTrace trace;
  Graph reduced;
};

/// Worker threads for stage-parallel work; 0 means hardware concurrency.
struct ParallelOptions {
  unsigned jobs = 1;
};

std::vector<ReducedStage> reduce_filtration(const Filtration& f, const ParallelOptions& parallel = {},
                                            const ContractibilityTester& test = default_tester());

struct Bar {
  int dim = 0;
  int birth = 0;
  /// -1 for classes that never die.
  int death = -1;
  double birth_eps = 0;
  double death_eps = 0;

  bool is_essential() const { return death < 0; }
  bool operator==(const Bar&) const = default;
};

/// Bars sorted by dimension, birth, then death (essential last).
struct Barcode {
  std::vector<Bar> bars;

  std::vector<Bar> in_dimension(int p) const;
  bool operator==(const Barcode&) const = default;
};

/// CSV with header "dim,birth_index,death_index,birth_eps,death_eps";
/// essential classes print death_index -1 and death_eps inf.
void write_barcode_csv(std::ostream& out, const Barcode& b);

/// Persistent homology over Z_2 from per-stage contractible reductions.
///
/// Consecutive stages are linked by the maps induced on the homology of the
/// reduced graphs; rank^{i,j} is the rank of the composite from i to j.
class PersistencePipeline {
 public:
  PersistencePipeline(Filtration f, int max_p, const ParallelOptions& parallel = {},
                      const ContractibilityTester& test = default_tester());

  const Filtration& filtration() const { return filtration_; }
  const std::vector<ReducedStage>& stages() const { return stages_; }
  int max_p() const { return max_p_; }

  /// Betti number of stage i in dimension p.
  int betti(int p, int i) const;
  /// Throws std::out_of_range unless 0 <= i <= j < stages and 0 <= p <= max_p.
  int persistent_betti(int p, int i, int j) const;
  Barcode barcode() const;

 private:
  Filtration filtration_;
  int max_p_;
  std::vector<ReducedStage> stages_;
  // ranks_[p][i][j - i]
  std::vector<std::vector<std::vector<int>>> ranks_;
};

int persistent_betti(const Filtration& f, int p, int i, int j);
Barcode barcode(const Filtration& f, int max_p = 1, const ParallelOptions& parallel = {});

inline constexpr std::size_t kDefaultOracleBudget = std::size_t{1} << 22;

/// Standard Z_2 column reduction over the whole filtered clique complex up to
/// dimension max_p + 1, with simplices ordered by (birth, dimension,
/// lexicographic). Zero-length bars are dropped. Throws BudgetExceeded past
/// `face_budget` simplices.
Barcode oracle_persistence(const Filtration& f, int max_p = 1, std::size_t face_budget = kDefaultOracleBudget);

}  // namespace ctgraph
