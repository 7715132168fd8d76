#pragma once

// Dense exact linear algebra on Eigen containers: integer and rational
// matrices, primitive scaling of directions, Gaussian elimination for
// determinants, ranks and linear solves. All operations are exact.

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include <optional>
#include <vector>

#include "frobcone/numeric.hpp"

namespace frobcone {

using MatZ = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using VecZ = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using MatQ = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using Index = Eigen::Index;

inline MatQ to_rational(const MatZ& m) { return m.cast<Rat>(); }
inline VecQ to_rational(const VecZ& v) { return v.cast<Rat>(); }

inline VecZ vecz_from(const std::vector<long long>& entries) {
  VecZ v(static_cast<Index>(entries.size()));
  for (Index i = 0; i < v.size(); ++i) v(i) = entries[static_cast<std::size_t>(i)];
  return v;
}

inline bool is_zero(const VecZ& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

inline bool is_zero(const VecQ& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (v(i) != 0) return false;
  return true;
}

// Lexicographic comparison; usable as std::map comparator.
inline int lex_compare(const VecZ& a, const VecZ& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (Index i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return -1;
    if (a(i) > b(i)) return 1;
  }
  return 0;
}

inline int lex_compare(const VecQ& a, const VecQ& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (Index i = 0; i < a.size(); ++i) {
    if (a(i) < b(i)) return -1;
    if (a(i) > b(i)) return 1;
  }
  return 0;
}

struct VecZLess {
  bool operator()(const VecZ& a, const VecZ& b) const { return lex_compare(a, b) < 0; }
};

inline Int content(const VecZ& v) {
  Int g = 0;
  for (Index i = 0; i < v.size(); ++i) g = boost::multiprecision::gcd(g, v(i));
  return g;
}

// Scale a rational direction to the primitive integer vector pointing the
// same way. The zero vector stays zero.
inline VecZ primitive(const VecQ& v) {
  Int lcm = 1;
  for (Index i = 0; i < v.size(); ++i)
    lcm = boost::multiprecision::lcm(lcm, denominator(v(i)));
  VecZ w(v.size());
  for (Index i = 0; i < v.size(); ++i) w(i) = numerator(v(i)) * (lcm / denominator(v(i)));
  Int g = content(w);
  if (g > 1)
    for (Index i = 0; i < w.size(); ++i) w(i) /= g;
  return w;
}

inline VecZ primitive(const VecZ& v) { return primitive(to_rational(v)); }

inline bool is_primitive(const VecZ& v) { return content(v) == 1; }

// Exact determinant by fraction-free-ish rational elimination with partial
// pivoting on the first nonzero entry.
inline Rat det_rational(MatQ a) {
  internal_check(a.rows() == a.cols(), "det of non-square matrix");
  const Index n = a.rows();
  Rat det = 1;
  for (Index k = 0; k < n; ++k) {
    Index pivot = -1;
    for (Index i = k; i < n; ++i)
      if (a(i, k) != 0) { pivot = i; break; }
    if (pivot < 0) return Rat(0);
    if (pivot != k) {
      a.row(pivot).swap(a.row(k));
      det = -det;
    }
    det *= a(k, k);
    for (Index i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rat factor = a(i, k) / a(k, k);
      for (Index j = k; j < n; ++j) a(i, j) -= factor * a(k, j);
    }
  }
  return det;
}

inline Rat det_rational(const MatZ& a) { return det_rational(to_rational(a)); }

inline int rank_rational(MatQ a) {
  const Index rows = a.rows(), cols = a.cols();
  int rank = 0;
  Index row = 0;
  for (Index col = 0; col < cols && row < rows; ++col) {
    Index pivot = -1;
    for (Index i = row; i < rows; ++i)
      if (a(i, col) != 0) { pivot = i; break; }
    if (pivot < 0) continue;
    if (pivot != row) a.row(pivot).swap(a.row(row));
    for (Index i = row + 1; i < rows; ++i) {
      if (a(i, col) == 0) continue;
      Rat factor = a(i, col) / a(row, col);
      for (Index j = col; j < cols; ++j) a(i, j) -= factor * a(row, j);
    }
    ++row;
    ++rank;
  }
  return rank;
}

inline int rank_rational(const MatZ& a) { return rank_rational(to_rational(a)); }

// One solution of A x = b when consistent (free variables set to zero).
inline std::optional<VecQ> solve_linear(MatQ a, VecQ b) {
  const Index rows = a.rows(), cols = a.cols();
  std::vector<Index> pivot_col;
  Index row = 0;
  for (Index col = 0; col < cols && row < rows; ++col) {
    Index pivot = -1;
    for (Index i = row; i < rows; ++i)
      if (a(i, col) != 0) { pivot = i; break; }
    if (pivot < 0) continue;
    if (pivot != row) {
      a.row(pivot).swap(a.row(row));
      std::swap(b(pivot), b(row));
    }
    for (Index i = 0; i < rows; ++i) {
      if (i == row || a(i, col) == 0) continue;
      Rat factor = a(i, col) / a(row, col);
      for (Index j = col; j < cols; ++j) a(i, j) -= factor * a(row, j);
      b(i) -= factor * b(row);
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (Index i = row; i < rows; ++i)
    if (b(i) != 0) return std::nullopt;
  VecQ x = VecQ::Zero(cols);
  for (Index r = 0; r < row; ++r) x(pivot_col[static_cast<std::size_t>(r)]) = b(r) / a(r, pivot_col[static_cast<std::size_t>(r)]);
  return x;
}

}  // namespace frobcone
