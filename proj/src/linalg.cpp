#include "ctgraph/linalg.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace ctgraph {

namespace {

using Index = Eigen::Index;

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return t < 0 ? t + p : t;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer matrix entry overflow");
  return out;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("integer matrix entry overflow");
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer matrix entry overflow");
  return out;
}

// row(dst) -= q * row(src)
void row_axpy(IntMatrix& m, Index dst, Index src, std::int64_t q) {
  for (Index c = 0; c < m.cols(); ++c) m(dst, c) = checked_sub(m(dst, c), checked_mul(q, m(src, c)));
}

void col_axpy(IntMatrix& m, Index dst, Index src, std::int64_t q) {
  for (Index r = 0; r < m.rows(); ++r) m(r, dst) = checked_sub(m(r, dst), checked_mul(q, m(r, src)));
}

}  // namespace

Coefficients Coefficients::zp(std::int64_t p) {
  if (p < 2 || p >= (std::int64_t{1} << 31)) throw std::invalid_argument("modulus " + std::to_string(p) + " out of range");
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  return {Ring::Field, p};
}

std::int64_t Coefficients::normalize(std::int64_t x) const {
  if (!is_field()) return x;
  x %= p;
  return x < 0 ? x + p : x;
}

std::string Coefficients::name() const { return is_field() ? "Z" + std::to_string(p) : "Z"; }

IntMatrix normalized(IntMatrixRef a, const Coefficients& k) {
  IntMatrix out = a;
  if (k.is_field()) out = out.unaryExpr([&](std::int64_t x) { return k.normalize(x); });
  return out;
}

IntMatrix multiply(IntMatrixRef a, IntMatrixRef b, const Coefficients& k) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
  IntMatrix out = IntMatrix::Zero(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < b.cols(); ++j) {
      std::int64_t acc = 0;
      for (Index t = 0; t < a.cols(); ++t) {
        if (k.is_field())
          acc = (acc + mulmod(k.normalize(a(i, t)), k.normalize(b(t, j)), k.p)) % k.p;
        else
          acc = checked_add(acc, checked_mul(a(i, t), b(t, j)));
      }
      out(i, j) = acc;
    }
  return out;
}

RowEchelon row_echelon(IntMatrixRef a, std::int64_t p) {
  const Coefficients k{Coefficients::Ring::Field, p};
  RowEchelon e{normalized(a, k), {}};
  IntMatrix& m = e.matrix;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    m.row(pivot).swap(m.row(row));
    const std::int64_t inv = inverse_mod(m(row, col), p);
    for (Index c = col; c < m.cols(); ++c) m(row, c) = mulmod(m(row, c), inv, p);
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const std::int64_t f = m(r, col);
      for (Index c = col; c < m.cols(); ++c) m(r, c) = k.normalize(m(r, c) - mulmod(f, m(row, c), p));
    }
    e.pivots.push_back(col);
    ++row;
  }
  return e;
}

Eigen::Index rank(IntMatrixRef a, const Coefficients& k) {
  if (a.size() == 0) return 0;
  if (k.is_field()) return static_cast<Index>(row_echelon(a, k.p).pivots.size());
  return static_cast<Index>(smith_normal_form(a).invariants.size());
}

IntMatrix nullspace(IntMatrixRef a, std::int64_t p) {
  const auto e = row_echelon(a, p);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (Index c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  IntMatrix basis = IntMatrix::Zero(a.cols(), a.cols() - static_cast<Index>(e.pivots.size()));
  Index out = 0;
  for (Index f = 0; f < a.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    basis(f, out) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      const std::int64_t x = e.matrix(static_cast<Index>(r), f);
      basis(e.pivots[r], out) = x == 0 ? 0 : p - x;
    }
    ++out;
  }
  return basis;
}

std::optional<IntVector> solve(IntMatrixRef a, const IntVector& b, const Coefficients& k) {
  if (b.size() != a.rows()) throw std::invalid_argument("right-hand side has wrong length");
  if (k.is_field()) {
    IntMatrix aug(a.rows(), a.cols() + 1);
    aug << a, b;
    const auto e = row_echelon(aug, k.p);
    IntVector x = IntVector::Zero(a.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      if (e.pivots[r] == a.cols()) return std::nullopt;
      x(e.pivots[r]) = e.matrix(static_cast<Index>(r), a.cols());
    }
    return x;
  }
  const SmithForm s = smith_normal_form(a);
  const IntVector c = multiply(s.u, b, k);
  IntVector y = IntVector::Zero(a.cols());
  for (Index i = 0; i < c.size(); ++i) {
    const auto r = static_cast<std::size_t>(i);
    if (r < s.invariants.size()) {
      if (c(i) % s.invariants[r] != 0) return std::nullopt;
      y(i) = c(i) / s.invariants[r];
    } else if (c(i) != 0) {
      return std::nullopt;
    }
  }
  return IntVector(multiply(s.v, y, k));
}

SmithForm smith_normal_form(IntMatrixRef a) {
  const Index m = a.rows(), n = a.cols();
  IntMatrix d = a;
  SmithForm s{IntMatrix::Identity(m, m), IntMatrix::Identity(n, n), {}};
  for (Index t = 0; t < std::min(m, n); ++t) {
    while (true) {
      // Smallest nonzero magnitude in the trailing block becomes the pivot.
      Index pi = -1, pj = -1;
      for (Index j = t; j < n; ++j)
        for (Index i = t; i < m; ++i)
          if (d(i, j) != 0 && (pi < 0 || std::llabs(d(i, j)) < std::llabs(d(pi, pj)))) pi = i, pj = j;
      if (pi < 0) return s;
      d.row(pi).swap(d.row(t));
      s.u.row(pi).swap(s.u.row(t));
      d.col(pj).swap(d.col(t));
      s.v.col(pj).swap(s.v.col(t));

      bool clean = true;
      for (Index i = t + 1; i < m; ++i) {
        const std::int64_t q = d(i, t) / d(t, t);
        if (q != 0) {
          row_axpy(d, i, t, q);
          row_axpy(s.u, i, t, q);
        }
        clean = clean && d(i, t) == 0;
      }
      for (Index j = t + 1; j < n; ++j) {
        const std::int64_t q = d(t, j) / d(t, t);
        if (q != 0) {
          col_axpy(d, j, t, q);
          col_axpy(s.v, j, t, q);
        }
        clean = clean && d(t, j) == 0;
      }
      if (!clean) continue;

      Index bad = -1;
      for (Index i = t + 1; i < m && bad < 0; ++i)
        for (Index j = t + 1; j < n; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      row_axpy(d, t, bad, -1);
      row_axpy(s.u, t, bad, -1);
    }
    if (d(t, t) < 0) {
      d.row(t) *= -1;
      s.u.row(t) *= -1;
    }
    s.invariants.push_back(d(t, t));
  }
  return s;
}

}  // namespace ctgraph
