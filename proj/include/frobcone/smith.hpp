#pragma once

// Smith normal form over the integers with unimodular transforms:
// U * A * V = S, S diagonal with an invariant-factor divisibility chain.
// Pivot rule is fixed (smallest nonzero absolute value, ties broken by
// row-major position) so the output is deterministic.

#include "frobcone/linalg.hpp"

namespace frobcone {

struct SNFResult {
  MatZ u;  // rows x rows, |det| = 1
  MatZ s;  // rows x cols, diagonal, d_1 | d_2 | ...
  MatZ v;  // cols x cols, |det| = 1
};

namespace detail {

inline bool snf_find_pivot(const MatZ& s, Index t, Index& pi, Index& pj) {
  bool found = false;
  Int best = 0;
  for (Index i = t; i < s.rows(); ++i) {
    for (Index j = t; j < s.cols(); ++j) {
      if (s(i, j) == 0) continue;
      Int a = boost::multiprecision::abs(s(i, j));
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  }
  return found;
}

}  // namespace detail

inline SNFResult snf(const MatZ& a) {
  if (a.rows() == 0 || a.cols() == 0) fail_validation("EmptyMatrix", "snf requires a nonempty matrix");
  const Index rows = a.rows(), cols = a.cols();
  SNFResult r;
  r.u = MatZ::Identity(rows, rows);
  r.v = MatZ::Identity(cols, cols);
  r.s = a;
  MatZ& s = r.s;

  const Index steps = std::min(rows, cols);
  for (Index t = 0; t < steps; ++t) {
    Index pi = t, pj = t;
    if (!detail::snf_find_pivot(s, t, pi, pj)) break;  // remaining block is zero
    if (pi != t) { s.row(pi).swap(s.row(t)); r.u.row(pi).swap(r.u.row(t)); }
    if (pj != t) { s.col(pj).swap(s.col(t)); r.v.col(pj).swap(r.v.col(t)); }

    for (;;) {
      bool clean = true;
      for (Index i = t + 1; i < rows; ++i) {
        if (s(i, t) == 0) continue;
        Int q = s(i, t) / s(t, t);
        s.row(i) -= (q * s.row(t)).eval();
        r.u.row(i) -= (q * r.u.row(t)).eval();
        if (s(i, t) != 0) clean = false;
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (s(t, j) == 0) continue;
        Int q = s(t, j) / s(t, t);
        s.col(j) -= (q * s.col(t)).eval();
        r.v.col(j) -= (q * r.v.col(t)).eval();
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A nonzero remainder became a smaller pivot candidate; re-pivot.
        Index qi = t, qj = t;
        detail::snf_find_pivot(s, t, qi, qj);
        if (qi != t) { s.row(qi).swap(s.row(t)); r.u.row(qi).swap(r.u.row(t)); }
        if (qj != t) { s.col(qj).swap(s.col(t)); r.v.col(qj).swap(r.v.col(t)); }
        continue;
      }
      // Row and column are clear; enforce divisibility over the trailing block.
      bool divisible = true;
      Index bi = t, bj = t;
      for (Index i = t + 1; i < rows && divisible; ++i)
        for (Index j = t + 1; j < cols && divisible; ++j)
          if (s(i, j) % s(t, t) != 0) { divisible = false; bi = i; bj = j; }
      if (divisible) break;
      s.col(t) += s.col(bj);
      r.v.col(t) += r.v.col(bj);
      (void)bi;
    }
    if (s(t, t) < 0) {
      s.row(t) = (-s.row(t)).eval();
      r.u.row(t) = (-r.u.row(t)).eval();
    }
  }
  return r;
}

inline std::vector<Int> invariant_factors(const SNFResult& r) {
  std::vector<Int> out;
  const Index steps = std::min(r.s.rows(), r.s.cols());
  for (Index t = 0; t < steps; ++t)
    if (r.s(t, t) != 0) out.push_back(r.s(t, t));
  return out;
}

}  // namespace frobcone
