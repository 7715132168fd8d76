#pragma once

// Half-open chambers inside the unit box and exact polytope volumes.
//
// The half-open convention is fixed project-wide as lo < f(t) <= hi, which
// matches ceiling semantics: ceil(x) = s  <=>  s - 1 < x <= s. Boundaries
// have measure zero, so volumes are computed on closures.
//
// Volumes use Lasserre's recursion: for P = {x : Mx <= b} bounded,
//   d * Vol_d(P) = sum_i (b_i / |M_ij|) * Vol_{d-1}(P restricted to the
//   i-th hyperplane, eliminating variable j),
// which stays in exact rational arithmetic (the metric factors cancel).
// Degenerate (lower-dimensional or empty) inputs yield exactly 0.

#include <vector>

#include "frobcone/linprog.hpp"

namespace frobcone {

struct HalfOpenChamber {
  struct Band {
    VecQ normal;  // f(t) = ⟨normal, t⟩
    Rat lo;       // strict lower bound: lo < f(t)
    Rat hi;       // weak upper bound:   f(t) <= hi
  };

  int dim = 0;
  std::vector<Band> bands;  // always interpreted inside the unit box [0,1)^dim

  HalfOpenChamber(int d, std::vector<Band> b = {}) : dim(d), bands(std::move(b)) {}
};

namespace detail {

inline Rat lasserre_volume(const MatQ& m, const VecQ& b, Index n) {
  if (n == 0) {
    for (Index i = 0; i < b.size(); ++i)
      if (b(i) < 0) return Rat(0);
    return Rat(1);
  }
  // Zero rows either cut nothing or empty the polytope.
  for (Index i = 0; i < m.rows(); ++i) {
    bool zero = true;
    for (Index j = 0; j < n; ++j)
      if (m(i, j) != 0) { zero = false; break; }
    if (zero && b(i) < 0) return Rat(0);
  }

  Rat total = 0;
  for (Index i = 0; i < m.rows(); ++i) {
    Index pivot = -1;
    for (Index j = 0; j < n; ++j)
      if (m(i, j) != 0) { pivot = j; break; }
    if (pivot < 0) continue;
    if (b(i) == 0) continue;  // the facet term vanishes

    // Substitute x_pivot from ⟨m_i, x⟩ = b_i into every other row.
    MatQ sub(m.rows() - 1, n - 1);
    VecQ sub_b(m.rows() - 1);
    Index out = 0;
    for (Index l = 0; l < m.rows(); ++l) {
      if (l == i) continue;
      Rat factor = m(l, pivot) / m(i, pivot);
      Index col = 0;
      for (Index j = 0; j < n; ++j) {
        if (j == pivot) continue;
        sub(out, col) = m(l, j) - factor * m(i, j);
        ++col;
      }
      sub_b(out) = b(l) - factor * b(i);
      ++out;
    }
    Rat face = lasserre_volume(sub, sub_b, n - 1);
    if (face != 0) total += b(i) / abs_rat(m(i, pivot)) * face;
  }
  return total / Rat(n);
}

}  // namespace detail

// Exact Lebesgue volume of {x : Mx <= b}. Throws when the polyhedron is
// unbounded (checked by exact LP before recursing).
inline Rat polytope_volume(const MatQ& m, const VecQ& b, int dim) {
  internal_check(m.cols() == dim && m.rows() == b.size(), "polytope dimension mismatch");
  LpProblem feas;
  feas.add_vars(dim, false);
  for (Index i = 0; i < m.rows(); ++i) feas.add_le(VecQ(m.row(i).transpose()), b(i));
  if (feas.feasible().status == LpStatus::Infeasible) return Rat(0);
  for (int k = 0; k < dim; ++k) {
    VecQ obj = VecQ::Zero(dim);
    obj(k) = 1;
    if (feas.maximize(obj).status == LpStatus::Unbounded ||
        feas.minimize(obj).status == LpStatus::Unbounded)
      fail_validation("UnboundedChamber", "polytope is unbounded; volume undefined");
  }
  return detail::lasserre_volume(m, b, dim);
}

// Closure rows of a chamber: band constraints plus the unit box.
inline void chamber_closure(const HalfOpenChamber& ch, MatQ& m, VecQ& b) {
  const int d = ch.dim;
  const Index rows = static_cast<Index>(2 * ch.bands.size()) + 2 * d;
  m = MatQ::Zero(rows, d);
  b = VecQ::Zero(rows);
  Index r = 0;
  for (const auto& band : ch.bands) {
    internal_check(band.normal.size() == d, "band dimension mismatch");
    m.row(r) = band.normal.transpose();
    b(r) = band.hi;  // f(t) <= hi
    ++r;
    m.row(r) = (-band.normal).transpose().eval();
    b(r) = -band.lo;  // f(t) >= lo (closure of the strict bound)
    ++r;
  }
  for (int j = 0; j < d; ++j) {
    m(r, j) = 1;
    b(r) = 1;
    ++r;
    m(r, j) = -1;
    b(r) = 0;
    ++r;
  }
}

// Exact dim-dimensional volume of the chamber clipped to the unit box.
// Lower-dimensional chambers return 0.
inline Rat chamber_volume(const HalfOpenChamber& ch) {
  if (ch.dim < 1) fail_validation("ZeroDimensionalAmbient", "chamber dimension must be >= 1");
  MatQ m;
  VecQ b;
  chamber_closure(ch, m, b);
  // The unit-box rows make the closure structurally bounded.
  return detail::lasserre_volume(m, b, ch.dim);
}

}  // namespace frobcone
