#include "ctgraph/persistence.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>

#include "ctgraph/cliques.hpp"
#include "ctgraph/errors.hpp"
#include "ctgraph/homology.hpp"
#include "ctgraph/parallel.hpp"

namespace ctgraph {

PointCloud PointCloud::from_points(Eigen::MatrixXd points) {
  if (!points.allFinite()) throw std::invalid_argument("point coordinates must be finite");
  PointCloud c;
  const auto n = points.rows();
  c.squared_ = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) c.squared_(i, j) = c.squared_(j, i) = (points.row(i) - points.row(j)).squaredNorm();
  return c;
}

PointCloud PointCloud::from_distances(Eigen::MatrixXd d) {
  if (d.rows() != d.cols()) throw std::invalid_argument("distance matrix must be square");
  if (!d.allFinite()) throw std::invalid_argument("distances must be finite");
  const auto n = d.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (d(i, i) != 0) throw std::invalid_argument("distance matrix diagonal must be zero");
    for (Eigen::Index j = 0; j < n; ++j) {
      if (d(i, j) < 0) throw std::invalid_argument("distances must be nonnegative");
      if (d(i, j) != d(j, i)) throw std::invalid_argument("distance matrix must be symmetric");
    }
  }
  const double scale = n == 0 ? 0 : d.maxCoeff();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index k = 0; k < n; ++k)
        if (d(i, k) > d(i, j) + d(j, k) + 1e-9 * scale)
          throw std::invalid_argument("distance matrix violates the triangle inequality at (" + std::to_string(i) + "," +
                                      std::to_string(j) + "," + std::to_string(k) + ")");
  PointCloud c;
  c.euclidean_ = false;
  c.squared_ = d.cwiseProduct(d);
  return c;
}

double PointCloud::distance(int i, int j) const { return std::sqrt(squared_(i, j)); }

PointCloud parse_point_cloud(std::istream& in, bool distance_matrix) {
  std::vector<std::vector<double>> rows;
  std::string text;
  int number = 0;
  std::size_t width = 0;
  int first_line = 0;
  while (std::getline(in, text)) {
    ++number;
    std::replace(text.begin(), text.end(), ',', ' ');
    std::istringstream ss(text);
    std::vector<std::string> tokens;
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    if (tokens.empty() || tokens.front().starts_with("#")) continue;
    std::vector<double> row;
    for (const auto& t : tokens) {
      std::size_t used = 0;
      double x = 0;
      try {
        x = std::stod(t, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != t.size() || !std::isfinite(x)) throw ParseError(number, "expected a number, got '" + t + "'");
      row.push_back(x);
    }
    if (rows.empty()) {
      width = row.size();
      first_line = number;
    } else if (row.size() != width) {
      throw ParseError(number, "expected " + std::to_string(width) + " values, got " + std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError(0, "no points");
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(width));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < width; ++j) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = rows[i][j];
  if (!distance_matrix) return PointCloud::from_points(std::move(m));
  try {
    return PointCloud::from_distances(std::move(m));
  } catch (const std::invalid_argument& e) {
    throw ParseError(first_line, e.what());
  }
}

namespace {

bool within(double d2, double eps) { return d2 <= eps * eps * (1 + kDistanceTolerance); }

}  // namespace

Filtration vr_filtration(const PointCloud& cloud, const std::optional<std::vector<double>>& thresholds) {
  const int n = cloud.size();
  if (n == 0) throw std::invalid_argument("point cloud is empty");
  Filtration f;
  if (thresholds) {
    const auto& t = *thresholds;
    if (t.empty() || t.front() != 0) throw std::invalid_argument("thresholds must start at 0");
    for (std::size_t i = 1; i < t.size(); ++i)
      if (!(t[i] > t[i - 1]) || !std::isfinite(t[i])) throw std::invalid_argument("thresholds must increase strictly");
    f.thresholds = t;
  } else {
    std::vector<double> d2;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) d2.push_back(cloud.squared_distance(i, j));
    std::sort(d2.begin(), d2.end());
    f.thresholds.push_back(0);
    double last = 0;
    for (double x : d2) {
      // Values within the tolerance of the current group share its threshold.
      if (x <= last * (1 + 2 * kDistanceTolerance)) {
        f.thresholds.back() = std::max(f.thresholds.back(), std::sqrt(x));
        continue;
      }
      f.thresholds.push_back(std::sqrt(x));
      last = x;
    }
  }
  for (double eps : f.thresholds) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (within(cloud.squared_distance(i, j), eps)) edges.emplace_back(i, j);
    f.graphs.push_back(Graph::from_edges(n, edges));
  }
  return f;
}

std::vector<ReducedStage> reduce_filtration(const Filtration& f, const ParallelOptions& parallel,
                                            const ContractibilityTester& test) {
  std::vector<ReducedStage> out(f.graphs.size());
  parallel_for(f.graphs.size(), parallel.jobs, [&](std::size_t i) {
    auto r = contractible_reduction(f.graphs[i], test);
    out[i] = {std::move(r.trace), std::move(r.graph)};
  });
  return out;
}

std::vector<Bar> Barcode::in_dimension(int p) const {
  std::vector<Bar> out;
  for (const auto& b : bars)
    if (b.dim == p) out.push_back(b);
  return out;
}

namespace {

// Shortest text that reads back to the same double.
std::string shortest(double x) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

}  // namespace

void write_barcode_csv(std::ostream& out, const Barcode& b) {
  out << "dim,birth_index,death_index,birth_eps,death_eps\n";
  for (const auto& bar : b.bars)
    out << bar.dim << ',' << bar.birth << ',' << bar.death << ',' << shortest(bar.birth_eps) << ','
        << (bar.is_essential() ? "inf" : shortest(bar.death_eps)) << '\n';
}

namespace {

const Coefficients kZ2 = Coefficients::z2();

Bar make_bar(const Filtration& f, int dim, int birth, int death) {
  const auto eps = [&](int i) { return f.thresholds[static_cast<std::size_t>(i)]; };
  return {dim, birth, death, eps(birth), death < 0 ? std::numeric_limits<double>::infinity() : eps(death)};
}

void sort_bars(std::vector<Bar>& bars) {
  std::sort(bars.begin(), bars.end(), [](const Bar& a, const Bar& b) {
    const auto key = [](const Bar& x) {
      return std::tuple(x.dim, x.birth, x.death < 0 ? std::numeric_limits<int>::max() : x.death);
    };
    return key(a) < key(b);
  });
}

}  // namespace

PersistencePipeline::PersistencePipeline(Filtration f, int max_p, const ParallelOptions& parallel,
                                         const ContractibilityTester& test)
    : filtration_(std::move(f)), max_p_(max_p) {
  if (max_p < 0) throw std::invalid_argument("max_p must be nonnegative");
  if (filtration_.graphs.empty()) throw std::invalid_argument("filtration has no stages");
  stages_ = reduce_filtration(filtration_, parallel, test);
  const int m = filtration_.stages();

  // maps[p][i]: H_p(R_i) -> H_p(R_{i+1})
  std::vector<std::vector<IntMatrix>> maps(static_cast<std::size_t>(max_p + 1),
                                           std::vector<IntMatrix>(static_cast<std::size_t>(m - 1)));
  std::vector<std::vector<int>> dims(static_cast<std::size_t>(max_p + 1), std::vector<int>(static_cast<std::size_t>(m)));
  parallel_for(static_cast<std::size_t>(m), parallel.jobs, [&](std::size_t i) {
    for (int p = 0; p <= max_p; ++p) {
      const auto pi = static_cast<std::size_t>(p);
      dims[pi][i] = static_cast<int>(HomologyBasis(stages_[i].reduced, p, kZ2).rank());
      if (i + 1 < static_cast<std::size_t>(m))
        maps[pi][i] = induced_map(stages_[i].reduced, filtration_.graphs[i + 1], stages_[i + 1].trace,
                                  stages_[i + 1].reduced, p, kZ2, test);
    }
  });

  ranks_.resize(static_cast<std::size_t>(max_p + 1));
  for (int p = 0; p <= max_p; ++p) {
    const auto pi = static_cast<std::size_t>(p);
    auto& table = ranks_[pi];
    table.resize(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
      const auto ii = static_cast<std::size_t>(i);
      table[ii].push_back(dims[pi][ii]);
      IntMatrix composite = IntMatrix::Identity(dims[pi][ii], dims[pi][ii]);
      for (int j = i + 1; j < m; ++j) {
        composite = multiply(maps[pi][static_cast<std::size_t>(j - 1)], composite, kZ2);
        table[ii].push_back(static_cast<int>(rank(composite, kZ2)));
      }
    }
  }
}

int PersistencePipeline::betti(int p, int i) const { return persistent_betti(p, i, i); }

int PersistencePipeline::persistent_betti(int p, int i, int j) const {
  if (p < 0 || p > max_p_) throw std::out_of_range("dimension " + std::to_string(p) + " outside computed range");
  if (i < 0 || j < i || j >= filtration_.stages())
    throw std::out_of_range("stage pair (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
  return ranks_[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)][static_cast<std::size_t>(j - i)];
}

Barcode PersistencePipeline::barcode() const {
  const int m = filtration_.stages();
  Barcode out;
  for (int p = 0; p <= max_p_; ++p) {
    const auto r = [&](int i, int j) { return i < 0 ? 0 : persistent_betti(p, i, j); };
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        const int mu = (r(i, j - 1) - r(i, j)) - (r(i - 1, j - 1) - r(i - 1, j));
        if (mu < 0) throw std::logic_error("negative bar multiplicity");
        for (int c = 0; c < mu; ++c) out.bars.push_back(make_bar(filtration_, p, i, j));
      }
      const int essential = r(i, m - 1) - r(i - 1, m - 1);
      if (essential < 0) throw std::logic_error("negative bar multiplicity");
      for (int c = 0; c < essential; ++c) out.bars.push_back(make_bar(filtration_, p, i, -1));
    }
  }
  sort_bars(out.bars);
  return out;
}

int persistent_betti(const Filtration& f, int p, int i, int j) {
  if (p < 0) throw std::out_of_range("negative dimension");
  return PersistencePipeline(f, p).persistent_betti(p, i, j);
}

Barcode barcode(const Filtration& f, int max_p, const ParallelOptions& parallel) {
  return PersistencePipeline(f, max_p, parallel).barcode();
}

Barcode oracle_persistence(const Filtration& f, int max_p, std::size_t face_budget) {
  if (max_p < 0) throw std::invalid_argument("max_p must be nonnegative");
  if (f.graphs.empty()) throw std::invalid_argument("filtration has no stages");
  const Graph& last = f.graphs.back();

  std::map<Edge, int> edge_birth;
  for (int i = f.stages() - 1; i >= 0; --i)
    for (Edge e : f.graphs[static_cast<std::size_t>(i)].edges()) edge_birth[e] = i;

  struct Cell {
    int birth;
    int dim;
    std::vector<int> vertices;
  };
  std::vector<Cell> cells;
  for (int size = 1; size <= max_p + 2; ++size) {
    for (auto& c : cliques_of_size(last, size)) {
      if (cells.size() >= face_budget) throw BudgetExceeded("filtered complex exceeds the face budget");
      int birth = 0;
      for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t b = a + 1; b < c.size(); ++b) birth = std::max(birth, edge_birth.at(Edge(c[a], c[b])));
      cells.push_back({birth, size - 1, std::move(c)});
    }
  }
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
    return std::tie(a.birth, a.dim, a.vertices) < std::tie(b.birth, b.dim, b.vertices);
  });
  std::map<std::vector<int>, int> position;
  for (std::size_t i = 0; i < cells.size(); ++i) position.emplace(cells[i].vertices, static_cast<int>(i));

  // Columns as ascending row lists; low(j) is the last entry.
  std::vector<std::vector<int>> columns(cells.size());
  for (std::size_t j = 0; j < cells.size(); ++j) {
    const auto& v = cells[j].vertices;
    if (v.size() < 2) continue;
    for (std::size_t drop = 0; drop < v.size(); ++drop) {
      std::vector<int> face;
      for (std::size_t t = 0; t < v.size(); ++t)
        if (t != drop) face.push_back(v[t]);
      columns[j].push_back(position.at(face));
    }
    std::sort(columns[j].begin(), columns[j].end());
  }
  std::map<int, int> owner;  // low row -> column
  std::vector<bool> paired(cells.size(), false);
  Barcode out;
  for (std::size_t j = 0; j < cells.size(); ++j) {
    auto& col = columns[j];
    while (!col.empty()) {
      auto it = owner.find(col.back());
      if (it == owner.end()) break;
      std::vector<int> sum;
      const auto& other = columns[static_cast<std::size_t>(it->second)];
      std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(), std::back_inserter(sum));
      col = std::move(sum);
    }
    if (col.empty()) continue;
    const int low = col.back();
    owner[low] = static_cast<int>(j);
    paired[static_cast<std::size_t>(low)] = paired[j] = true;
    const Cell& born = cells[static_cast<std::size_t>(low)];
    if (born.dim <= max_p && born.birth < cells[j].birth)
      out.bars.push_back(make_bar(f, born.dim, born.birth, cells[j].birth));
  }
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (!paired[i] && cells[i].dim <= max_p) out.bars.push_back(make_bar(f, cells[i].dim, cells[i].birth, -1));
  sort_bars(out.bars);
  return out;
}

}  // namespace ctgraph
