#pragma once

// Exact rational cone geometry. Cones carry up to two representations
// (generators and inequality normals); conversion runs the double
// description method with explicit lineality tracking. Membership is
// decided by an exact feasibility solve and always returns a verifiable
// witness: nonnegative generator coefficients, or a separating functional.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "frobcone/linprog.hpp"

namespace frobcone {

struct RationalCone {
  int dim = 0;
  std::optional<MatQ> generators;    // rows
  std::optional<MatQ> inequalities;  // rows h, meaning ⟨h, x⟩ ≥ 0; implicit
                                     // equalities appear as ±h pairs

  static RationalCone from_generators(int dim, MatQ gens) {
    RationalCone c;
    c.dim = dim;
    c.generators = std::move(gens);
    return c;
  }
  static RationalCone from_inequalities(int dim, MatQ ineqs) {
    RationalCone c;
    c.dim = dim;
    c.inequalities = std::move(ineqs);
    return c;
  }
};

struct MembershipCertificate {
  enum class Verdict { Inside, Interior, Outside };
  Verdict verdict = Verdict::Outside;
  VecQ coefficients;  // per generator row, when Inside/Interior
  VecQ separating;    // when Outside: ≥ 0 on every generator, < 0 on the query
};

namespace detail {

struct TightSet {
  std::vector<std::uint64_t> words;

  explicit TightSet(int capacity = 0) : words((static_cast<std::size_t>(capacity) + 63) / 64, 0) {}
  void set(int i) { words[static_cast<std::size_t>(i) / 64] |= (std::uint64_t{1} << (i % 64)); }
  bool contains(const TightSet& other) const {
    for (std::size_t k = 0; k < words.size(); ++k)
      if (other.words[k] & ~words[k]) return false;
    return true;
  }
  static TightSet intersect(const TightSet& a, const TightSet& b) {
    TightSet r;
    r.words.resize(a.words.size());
    for (std::size_t k = 0; k < a.words.size(); ++k) r.words[k] = a.words[k] & b.words[k];
    return r;
  }
};

struct DdRay {
  VecZ dir;
  TightSet tight;
};

// Row-echelon basis of an integer row span (primitive rows, deterministic).
inline std::vector<VecZ> echelon_basis(std::vector<VecZ> rows) {
  std::vector<VecZ> basis;
  const Index n = rows.empty() ? 0 : rows.front().size();
  Index col = 0;
  while (col < n && !rows.empty()) {
    std::size_t pivot = rows.size();
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (rows[i](col) != 0) { pivot = i; break; }
    if (pivot == rows.size()) { ++col; continue; }
    VecZ p = primitive(rows[pivot]);
    if (p(col) < 0) p = (-p).eval();
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(pivot));
    for (auto& r : rows) {
      if (r(col) == 0) continue;
      r = (p(col) * r - r(col) * p).eval();
    }
    basis.push_back(p);
    ++col;
  }
  return basis;
}

// Reduce v modulo the span of echelon basis rows (exact, deterministic).
inline VecZ reduce_mod(const VecZ& v, const std::vector<VecZ>& basis) {
  VecQ w = to_rational(v);
  for (const VecZ& b : basis) {
    Index col = 0;
    while (col < b.size() && b(col) == 0) ++col;
    if (col == b.size() || w(col) == 0) continue;
    Rat factor = w(col) / Rat(b(col));
    for (Index j = 0; j < w.size(); ++j) w(j) -= factor * Rat(b(j));
  }
  return primitive(w);
}

}  // namespace detail

struct RayDescription {
  std::vector<VecZ> lineality;  // primitive echelon basis
  std::vector<VecZ> rays;       // primitive, sorted lexicographically
};

// Extreme rays and lineality of {x : ⟨row_i, x⟩ ≥ 0 for all i} by the
// double description method, constraints inserted in input order.
inline RayDescription extreme_rays(const MatQ& constraints, int dim) {
  if (dim < 1) fail_validation("ZeroDimensionalAmbient", "cone ambient dimension must be >= 1");
  const int m = static_cast<int>(constraints.rows());

  std::vector<VecZ> lineality;
  for (int i = 0; i < dim; ++i) {
    VecZ e = VecZ::Zero(dim);
    e(i) = 1;
    lineality.push_back(e);
  }
  std::vector<detail::DdRay> rays;

  auto dot = [&](const VecQ& a, const VecZ& r) {
    Rat acc = 0;
    for (Index j = 0; j < a.size(); ++j) acc += a(j) * Rat(r(j));
    return acc;
  };

  for (int ci = 0; ci < m; ++ci) {
    VecQ a = constraints.row(ci).transpose();
    if (is_zero(a)) continue;  // trivial constraint

    std::size_t hit = lineality.size();
    for (std::size_t k = 0; k < lineality.size(); ++k)
      if (dot(a, lineality[k]) != 0) { hit = k; break; }

    if (hit < lineality.size()) {
      VecZ l0 = lineality[hit];
      lineality.erase(lineality.begin() + static_cast<std::ptrdiff_t>(hit));
      Rat al0 = dot(a, l0);
      if (al0 < 0) { l0 = (-l0).eval(); al0 = -al0; }
      for (auto& l : lineality) {
        Rat al = dot(a, l);
        if (al == 0) continue;
        VecQ adj = al0 * to_rational(l) - al * to_rational(l0);
        l = primitive(adj);
      }
      for (auto& r : rays) {
        Rat ar = dot(a, r.dir);
        if (ar == 0) continue;
        VecQ adj = al0 * to_rational(r.dir) - ar * to_rational(l0);
        r.dir = primitive(adj);
      }
      detail::DdRay fresh;
      fresh.dir = primitive(l0);
      fresh.tight = detail::TightSet(m);
      for (int j = 0; j < ci; ++j) fresh.tight.set(j);  // still orthogonal to all processed rows
      rays.push_back(std::move(fresh));
      continue;
    }

    std::vector<std::size_t> pos, zero, neg;
    std::vector<Rat> vals(rays.size());
    for (std::size_t k = 0; k < rays.size(); ++k) {
      vals[k] = dot(a, rays[k].dir);
      if (vals[k] > 0) pos.push_back(k);
      else if (vals[k] < 0) neg.push_back(k);
      else zero.push_back(k);
    }
    if (neg.empty()) {
      for (std::size_t k : zero) rays[k].tight.set(ci);
      continue;
    }

    std::vector<detail::DdRay> next;
    for (std::size_t k : pos) next.push_back(rays[k]);
    for (std::size_t k : zero) {
      rays[k].tight.set(ci);
      next.push_back(rays[k]);
    }
    for (std::size_t kp : pos) {
      for (std::size_t kn : neg) {
        detail::TightSet common = detail::TightSet::intersect(rays[kp].tight, rays[kn].tight);
        bool adjacent = true;
        for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
          if (k == kp || k == kn) continue;
          if (rays[k].tight.contains(common)) adjacent = false;
        }
        if (!adjacent) continue;
        VecQ combo = vals[kp] * to_rational(rays[kn].dir) - vals[kn] * to_rational(rays[kp].dir);
        detail::DdRay born;
        born.dir = primitive(combo);
        if (is_zero(born.dir)) continue;
        born.tight = common;
        born.tight.set(ci);
        next.push_back(std::move(born));
      }
    }
    rays = std::move(next);
  }

  RayDescription out;
  out.lineality = detail::echelon_basis(lineality);
  for (auto& r : rays) {
    VecZ canon = out.lineality.empty() ? primitive(r.dir) : detail::reduce_mod(r.dir, out.lineality);
    if (!is_zero(canon)) out.rays.push_back(canon);
  }
  std::sort(out.rays.begin(), out.rays.end(), VecZLess{});
  out.rays.erase(std::unique(out.rays.begin(), out.rays.end(),
                             [](const VecZ& x, const VecZ& y) { return lex_compare(x, y) == 0; }),
                 out.rays.end());
  return out;
}

namespace detail {

inline MatQ rows_to_matrix(const std::vector<VecZ>& rays, const std::vector<VecZ>& lineality, int dim) {
  std::vector<VecZ> rows = rays;
  for (const VecZ& l : lineality) {
    rows.push_back(l);
    rows.push_back((-l).eval());
  }
  std::sort(rows.begin(), rows.end(), VecZLess{});
  MatQ m(static_cast<Index>(rows.size()), dim);
  for (std::size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Index>(i)) = to_rational(rows[i]).transpose();
  return m;
}

}  // namespace detail

// Fills both representations canonically: irredundant, primitive integer
// rows, sorted; implicit equalities appear as ± pairs.
inline RationalCone dualize(const RationalCone& cone) {
  if (cone.dim < 1) fail_validation("ZeroDimensionalAmbient", "cannot dualize in ambient dimension 0");
  if (!cone.generators && !cone.inequalities)
    fail_validation("EmptyCone", "cone has no representation");

  MatQ gen_rows;
  if (cone.generators) {
    gen_rows = *cone.generators;
  } else {
    RayDescription self = extreme_rays(*cone.inequalities, cone.dim);
    gen_rows = detail::rows_to_matrix(self.rays, self.lineality, cone.dim);
  }

  RayDescription dual = extreme_rays(gen_rows, cone.dim);
  MatQ ineq_canon = detail::rows_to_matrix(dual.rays, dual.lineality, cone.dim);
  RayDescription self = extreme_rays(ineq_canon, cone.dim);
  MatQ gen_canon = detail::rows_to_matrix(self.rays, self.lineality, cone.dim);

  RationalCone out;
  out.dim = cone.dim;
  out.generators = gen_canon;
  out.inequalities = ineq_canon;
  return out;
}

namespace detail {

// Rows whose negation is also present (implicit equality constraints).
inline std::vector<bool> equality_rows(const MatQ& rows) {
  std::vector<VecZ> prim;
  prim.reserve(static_cast<std::size_t>(rows.rows()));
  for (Index i = 0; i < rows.rows(); ++i) prim.push_back(primitive(VecQ(rows.row(i).transpose())));
  std::vector<bool> eq(prim.size(), false);
  for (std::size_t i = 0; i < prim.size(); ++i)
    for (std::size_t j = 0; j < prim.size(); ++j)
      if (i != j && lex_compare(prim[i], VecZ((-prim[j]).eval())) == 0) eq[i] = true;
  return eq;
}

}  // namespace detail

inline MembershipCertificate member(const RationalCone& cone, const VecQ& v) {
  if (v.size() != cone.dim) fail_validation("DimensionMismatch", "query vector has wrong dimension");
  MatQ gens = cone.generators ? *cone.generators : *dualize(cone).generators;

  const Index k = gens.rows();
  MatQ a(cone.dim, k);
  for (Index j = 0; j < k; ++j) a.col(j) = gens.row(j).transpose();
  LpResult res = lp_solve_standard(a, v, VecQ::Zero(k));

  MembershipCertificate cert;
  if (res.status == LpStatus::Optimal) {
    cert.verdict = MembershipCertificate::Verdict::Inside;
    cert.coefficients = res.x;
    return cert;
  }
  internal_check(res.status == LpStatus::Infeasible, "membership solve neither optimal nor infeasible");
  cert.verdict = MembershipCertificate::Verdict::Outside;
  cert.separating = to_rational(primitive(VecQ((-res.farkas).eval())));
  return cert;
}

inline MembershipCertificate member_interior(const RationalCone& cone, const VecQ& v) {
  MembershipCertificate cert = member(cone, v);
  if (cert.verdict == MembershipCertificate::Verdict::Outside) return cert;

  MatQ ineqs = cone.inequalities ? *cone.inequalities : *dualize(cone).inequalities;
  std::vector<bool> eq = detail::equality_rows(ineqs);
  bool full_dim = std::none_of(eq.begin(), eq.end(), [](bool b) { return b; });
  if (!full_dim) return cert;  // Inside, cannot be interior

  for (Index i = 0; i < ineqs.rows(); ++i) {
    Rat val = 0;
    for (Index j = 0; j < ineqs.cols(); ++j) val += ineqs(i, j) * v(j);
    if (val <= 0) return cert;  // boundary (or a trivially zero row)
  }
  cert.verdict = MembershipCertificate::Verdict::Interior;
  return cert;
}

// Independent re-check of a certificate against the cone and query.
inline bool verify_certificate(const RationalCone& cone, const VecQ& v, const MembershipCertificate& cert) {
  using Verdict = MembershipCertificate::Verdict;
  if (cert.verdict == Verdict::Outside) {
    if (cert.separating.size() != cone.dim) return false;
    MatQ gens = cone.generators ? *cone.generators : *dualize(cone).generators;
    for (Index i = 0; i < gens.rows(); ++i) {
      Rat dot = 0;
      for (Index j = 0; j < gens.cols(); ++j) dot += cert.separating(j) * gens(i, j);
      if (dot < 0) return false;
    }
    Rat dv = 0;
    for (Index j = 0; j < v.size(); ++j) dv += cert.separating(j) * v(j);
    return dv < 0;
  }

  if (!cone.generators) return false;
  const MatQ& gens = *cone.generators;
  if (cert.coefficients.size() != gens.rows()) return false;
  VecQ combo = VecQ::Zero(cone.dim);
  for (Index i = 0; i < gens.rows(); ++i) {
    if (cert.coefficients(i) < 0) return false;
    for (Index j = 0; j < cone.dim; ++j) combo(j) += cert.coefficients(i) * gens(i, j);
  }
  for (Index j = 0; j < cone.dim; ++j)
    if (combo(j) != v(j)) return false;

  if (cert.verdict == Verdict::Interior) {
    MatQ ineqs = cone.inequalities ? *cone.inequalities : *dualize(cone).inequalities;
    std::vector<bool> eq = detail::equality_rows(ineqs);
    if (std::any_of(eq.begin(), eq.end(), [](bool b) { return b; })) return false;
    for (Index i = 0; i < ineqs.rows(); ++i) {
      Rat val = 0;
      for (Index j = 0; j < ineqs.cols(); ++j) val += ineqs(i, j) * v(j);
      if (val <= 0) return false;
    }
  }
  return true;
}

}  // namespace frobcone
