#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace ctgraph {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;
using IntMatrixRef = Eigen::Ref<const IntMatrix>;

/// Coefficient ring for chains: a prime field Z_p or the integers.
struct Coefficients {
  enum class Ring { Field, Integers };

  Ring ring = Ring::Field;
  std::int64_t p = 2;

  /// Throws std::invalid_argument unless p is a prime below 2^31.
  static Coefficients zp(std::int64_t p);
  static Coefficients z2() { return {}; }
  static Coefficients integers() { return {Ring::Integers, 0}; }

  bool is_field() const { return ring == Ring::Field; }
  /// Canonical representative: [0, p) over a field, unchanged over Z.
  std::int64_t normalize(std::int64_t x) const;
  std::string name() const;

  bool operator==(const Coefficients&) const = default;
};

/// Entrywise canonical representatives.
IntMatrix normalized(IntMatrixRef a, const Coefficients& k);

/// Product with every entry reduced into the ring; overflow-checked over Z.
IntMatrix multiply(IntMatrixRef a, IntMatrixRef b, const Coefficients& k);

/// Reduced row echelon form over Z_p with its pivot columns.
struct RowEchelon {
  IntMatrix matrix;
  std::vector<Eigen::Index> pivots;
};
RowEchelon row_echelon(IntMatrixRef a, std::int64_t p);

/// Rank over Z_p, or over Q for the integers.
Eigen::Index rank(IntMatrixRef a, const Coefficients& k);

/// Kernel basis over Z_p, one column per free variable of the RREF.
IntMatrix nullspace(IntMatrixRef a, std::int64_t p);

/// Some x with a x = b over the ring, or nullopt.
std::optional<IntVector> solve(IntMatrixRef a, const IntVector& b, const Coefficients& k);

/// u * a * v == diag(invariant factors) with u, v unimodular. The invariant
/// factors are positive and each divides the next. Throws std::overflow_error
/// if intermediate entries leave the int64 range.
struct SmithForm {
  IntMatrix u;
  IntMatrix v;
  std::vector<std::int64_t> invariants;
};
SmithForm smith_normal_form(IntMatrixRef a);

}  // namespace ctgraph
