#pragma once

// The Frobenius engine for semigroup rings R = k[C ∩ Z^d], C a pointed
// full-dimensional rational cone given by primitive inner facet normals
// (rows of A) and a prime characteristic p.
//
// Conventions fixed here and used everywhere:
//   * The module of signature s is M_s = span{m in Z^d : A m >= s}; its
//     divisor class is the class of -s in Cl = Z^f / A·Z^d. The canonical
//     module is the all-ones signature; the free class is the zero class.
//   * The e-th Frobenius direct image of M_s splits over the residues
//     u in {0..q-1}^d, q = p^e, with summand signature ceil((s - A u)/q),
//     ceilings taken on exact rationals componentwise.
//   * Limit multiplicities are volumes of the half-open chambers on which
//     ceil(-A t) is constant, t in the unit box; the half-open convention
//     is lo < f <= hi throughout.

#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "frobcone/chamber.hpp"
#include "frobcone/cone.hpp"
#include "frobcone/lattice.hpp"
#include "frobcone/limits.hpp"
#include "frobcone/smith.hpp"

namespace frobcone {

struct ToricRing {
  std::string name;
  Int p = 0;
  int d = 0;
  MatZ facets;  // f x d, rows = primitive inner facet normals
};

struct ClGroup {
  MatZ projector;                     // U with U * A * V = S
  std::vector<Int> invariant_factors; // diagonal of S (nonzero entries)
  int free_rank = 0;                  // f - rank(A)

  struct Coord {
    Index row;
    Int modulus;  // 0 for a free coordinate
  };
  std::vector<Coord> coords;  // the nontrivial coordinates of the quotient

  // Canonical coordinates of the class of x in Z^f / A·Z^d.
  VecZ canonical_form(const VecZ& x) const {
    VecZ y = projector * x;
    VecZ form(static_cast<Index>(coords.size()));
    for (std::size_t k = 0; k < coords.size(); ++k) {
      const Coord& c = coords[k];
      if (c.modulus == 0) {
        form(static_cast<Index>(k)) = y(c.row);
      } else {
        Int r = y(c.row) % c.modulus;
        if (r < 0) r += c.modulus;
        form(static_cast<Index>(k)) = r;
      }
    }
    return form;
  }
};

struct ConicClass {
  VecZ form;            // canonical Cl coordinates of the class
  VecZ representative;  // lex-smallest realizable signature (empty if not conic)
  bool is_free = false;
  bool is_canonical = false;
  bool conic = false;  // true when some real shift realizes this class
  std::string name;
};

struct ClassTable {
  std::vector<ConicClass> classes;  // sorted by form, free class first
  std::vector<Rat> volumes;         // exact chamber volume per class; sums to 1
  std::map<VecZ, int, VecZLess> index_by_form;
  int free_index = -1;
  int canonical_index = -1;

  std::optional<int> find(const VecZ& form) const {
    auto it = index_by_form.find(form);
    if (it == index_by_form.end()) return std::nullopt;
    return it->second;
  }
};

namespace detail {

inline std::string format_class_name(const VecZ& form) {
  bool zero = true;
  for (Index i = 0; i < form.size(); ++i)
    if (form(i) != 0) zero = false;
  if (zero) return "free";
  if (form.size() == 1) {
    if (form(0) == 1) return "c";
    return "c" + form(0).str();
  }
  std::string s = "c[";
  for (Index i = 0; i < form.size(); ++i) {
    if (i) s += ",";
    s += form(i).str();
  }
  s += "]";
  return s;
}

}  // namespace detail

class CheckedRing {
public:
  const ToricRing& ring() const { return ring_; }
  const ClGroup& class_group() const { return cl_; }
  const ClassTable& class_table() const { return table_; }
  const std::vector<VecZ>& cone_extreme_rays() const { return rays_; }

  int dim() const { return ring_.d; }
  Index facet_count() const { return ring_.facets.rows(); }
  const Int& p() const { return ring_.p; }
  const MatZ& facets() const { return ring_.facets; }
  const Int& max_row_sum() const { return max_row_sum_; }
  const VecZ& canonical_class_form() const { return canonical_form_; }

  VecZ zero_signature() const { return VecZ::Zero(facet_count()); }
  VecZ ones_signature() const { return VecZ::Constant(facet_count(), 1); }

  friend CheckedRing validate(const ToricRing&);

private:
  ToricRing ring_;
  ClGroup cl_;
  ClassTable table_;
  std::vector<VecZ> rays_;
  Int max_row_sum_ = 0;
  VecZ canonical_form_;
};

namespace detail {

inline ClGroup build_class_group(const MatZ& facets) {
  SNFResult r = snf(facets);
  ClGroup cl;
  cl.projector = r.u;
  cl.invariant_factors = invariant_factors(r);
  const Index f = facets.rows();
  const Index rank = static_cast<Index>(cl.invariant_factors.size());
  cl.free_rank = static_cast<int>(f - rank);
  for (Index i = 0; i < rank; ++i)
    if (cl.invariant_factors[static_cast<std::size_t>(i)] > 1)
      cl.coords.push_back({i, cl.invariant_factors[static_cast<std::size_t>(i)]});
  for (Index i = rank; i < f; ++i) cl.coords.push_back({i, Int(0)});
  return cl;
}

// Enumerate the half-open chamber partition of the unit box by the value of
// ceil(-A t) and aggregate volumes per divisor class.
inline ClassTable build_class_table(const MatZ& facets, const ClGroup& cl, const VecZ& canonical_form) {
  const Index f = facets.rows();
  const int d = static_cast<int>(facets.cols());

  std::vector<Int> lo(static_cast<std::size_t>(f)), hi(static_cast<std::size_t>(f));
  Int candidates = 1;
  for (Index i = 0; i < f; ++i) {
    Int pos = 0, neg = 0;
    for (Index j = 0; j < d; ++j) {
      if (facets(i, j) > 0) pos += facets(i, j);
      else neg -= facets(i, j);
    }
    lo[static_cast<std::size_t>(i)] = -pos;
    hi[static_cast<std::size_t>(i)] = neg;
    candidates *= neg + pos + 1;
  }
  if (candidates > 1'000'000)
    fail_guard("ChamberLimit", "chamber candidate count " + candidates.str() + " exceeds 1000000");

  struct Entry {
    VecZ rep;
    Rat volume;
  };
  std::map<VecZ, Entry, VecZLess> by_form;

  VecZ sigma(f);
  for (Index i = 0; i < f; ++i) sigma(i) = lo[static_cast<std::size_t>(i)];
  Rat total = 0;
  for (;;) {
    HalfOpenChamber ch(d);
    for (Index i = 0; i < f; ++i) {
      HalfOpenChamber::Band band;
      band.normal = (-to_rational(VecZ(facets.row(i).transpose()))).eval();
      band.lo = Rat(sigma(i)) - 1;
      band.hi = Rat(sigma(i));
      ch.bands.push_back(std::move(band));
    }
    Rat vol = chamber_volume(ch);
    if (vol > 0) {
      total += vol;
      VecZ form = cl.canonical_form(VecZ((-sigma).eval()));
      auto it = by_form.find(form);
      if (it == by_form.end()) {
        by_form.emplace(form, Entry{sigma, vol});
      } else {
        it->second.volume += vol;
        if (lex_compare(sigma, it->second.rep) < 0) it->second.rep = sigma;
      }
    }
    Index j = f - 1;
    for (;;) {
      if (sigma(j) < hi[static_cast<std::size_t>(j)]) {
        sigma(j) += 1;
        break;
      }
      sigma(j) = lo[static_cast<std::size_t>(j)];
      if (j == 0) goto done;
      --j;
    }
  }
done:
  internal_check(total == 1, "chamber volumes sum to " + rat_string(total) + ", expected 1");

  ClassTable table;
  for (auto& [form, entry] : by_form) {
    ConicClass c;
    c.form = form;
    c.representative = entry.rep;
    c.conic = true;
    c.is_free = is_zero(form);
    c.is_canonical = lex_compare(form, canonical_form) == 0;
    c.name = format_class_name(form);
    table.index_by_form.emplace(form, static_cast<int>(table.classes.size()));
    if (c.is_free) table.free_index = static_cast<int>(table.classes.size());
    if (c.is_canonical) table.canonical_index = static_cast<int>(table.classes.size());
    table.classes.push_back(std::move(c));
    table.volumes.push_back(entry.volume);
  }
  internal_check(table.free_index >= 0, "free class missing from chamber table");
  internal_check(table.canonical_index >= 0, "canonical class missing from chamber table");
  return table;
}

}  // namespace detail

// Checks that the input is a pointed, full-dimensional cone with primitive
// irredundant facet rows and prime p, then precomputes the class group,
// extreme rays and the conic class table.
inline CheckedRing validate(const ToricRing& ring) {
  if (ring.d < 1 || ring.facets.cols() != ring.d || ring.facets.rows() < 1)
    fail_validation("MalformedRing", "facet matrix must be nonempty with d columns");
  if (!is_prime(ring.p)) fail_validation("NotPrime", "p = " + ring.p.str() + " is not prime");

  const Index f = ring.facets.rows();
  for (Index i = 0; i < f; ++i) {
    VecZ row = ring.facets.row(i).transpose();
    if (is_zero(row) || !is_primitive(row))
      fail_validation("NonPrimitiveFacet", "facet row " + std::to_string(i) + " is not primitive");
  }

  if (rank_rational(ring.facets) < ring.d)
    fail_validation("NotPointed", "facet normals do not span; the cone contains a line");

  {
    LpProblem interior;
    interior.add_vars(ring.d, false);
    for (Index i = 0; i < f; ++i)
      interior.add_ge(to_rational(VecZ(ring.facets.row(i).transpose())), Rat(1));
    if (interior.feasible().status == LpStatus::Infeasible)
      fail_validation("NotFullDim", "cone has empty interior");
  }

  for (Index i = 0; i < f; ++i) {
    LpProblem cut;
    cut.add_vars(ring.d, false);
    for (Index k = 0; k < f; ++k) {
      if (k == i) continue;
      cut.add_ge(to_rational(VecZ(ring.facets.row(k).transpose())), Rat(0));
    }
    cut.add_le(to_rational(VecZ(ring.facets.row(i).transpose())), Rat(-1));
    if (cut.feasible().status == LpStatus::Infeasible)
      fail_validation("RedundantFacet", "facet row " + std::to_string(i) + " is implied by the others");
  }

  CheckedRing checked;
  checked.ring_ = ring;
  checked.cl_ = detail::build_class_group(ring.facets);
  checked.canonical_form_ = checked.cl_.canonical_form(VecZ((-checked.ones_signature()).eval()));

  RayDescription rd = extreme_rays(to_rational(ring.facets), ring.d);
  internal_check(rd.lineality.empty(), "pointed cone reported lineality");
  checked.rays_ = rd.rays;

  for (Index i = 0; i < f; ++i) {
    Int row_sum = 0;
    for (Index j = 0; j < ring.d; ++j) row_sum += boost::multiprecision::abs(ring.facets(i, j));
    if (row_sum > checked.max_row_sum_) checked.max_row_sum_ = row_sum;
  }

  checked.table_ = detail::build_class_table(ring.facets, checked.cl_, checked.canonical_form_);
  return checked;
}

inline const ClGroup& class_group(const CheckedRing& ring) { return ring.class_group(); }

// Class of the divisor sum(-s_i D_i); free iff the class is zero, canonical
// iff it matches the class of the all-ones signature.
inline ConicClass classify(const CheckedRing& ring, const VecZ& signature) {
  if (signature.size() != ring.facet_count())
    fail_validation("DimensionMismatch", "signature length must equal the facet count");
  VecZ form = ring.class_group().canonical_form(VecZ((-signature).eval()));
  if (auto idx = ring.class_table().find(form))
    return ring.class_table().classes[static_cast<std::size_t>(*idx)];
  ConicClass c;
  c.form = form;
  c.conic = false;
  c.is_free = is_zero(form);
  c.is_canonical = lex_compare(form, ring.canonical_class_form()) == 0;
  c.name = detail::format_class_name(form);
  return c;
}

inline bool signature_realizable(const CheckedRing& ring, const VecZ& signature) {
  return classify(ring, signature).conic;
}

struct MultiplicityVector {
  int e = 0;
  Int q;
  std::map<int, Int> counts;  // class-table index -> multiplicity

  Int total() const {
    Int t = 0;
    for (const auto& [idx, c] : counts) t += c;
    return t;
  }
};

namespace detail {

// Counts summand signatures ceil((start - A u)/q) over u in the stripe
// first coordinate in [lo, hi], remaining coordinates full range.
inline void decompose_stripe(const MatZ& facets, const VecZ& start, const Int& q,
                             const Int& lo, const Int& hi,
                             std::map<VecZ, Int, VecZLess>& counts) {
  if (lo > hi) return;
  const Index f = facets.rows();
  const Index d = facets.cols();
  VecZ u = VecZ::Zero(d);
  u(0) = lo;
  VecZ dot = facets * u;
  VecZ sig(f);
  for (;;) {
    for (Index i = 0; i < f; ++i) sig(i) = ceil_div(start(i) - dot(i), q);
    auto it = counts.find(sig);
    if (it == counts.end()) counts.emplace(sig, 1);
    else ++it->second;

    Index j = d - 1;
    for (;;) {
      if (j == 0) {
        if (u(0) >= hi) return;
        u(0) += 1;
        dot += facets.col(0);
        break;
      }
      if (u(j) < q - 1) {
        u(j) += 1;
        dot += facets.col(j);
        break;
      }
      dot -= (facets.col(j) * u(j)).eval();
      u(j) = 0;
      --j;
    }
  }
}

}  // namespace detail

// Splits the e-th Frobenius direct image of the conic module with the given
// start signature into conic summands. The shift box is partitioned across
// workers; worker maps merge additively by key, so the result is identical
// to a single-threaded run.
inline MultiplicityVector frobenius_decompose(const CheckedRing& ring, const VecZ& start, int e,
                                              const Limits& limits = {}) {
  if (e < 1) fail_validation("InvalidExponent", "Frobenius exponent must be >= 1");
  if (!signature_realizable(ring, start))
    fail_validation("UnrealizableStart", "start signature does not name a conic module");

  const Int q = pow_int(ring.p(), static_cast<unsigned>(e));
  Int total = pow_int(q, static_cast<unsigned>(ring.dim()));
  if (total > limits.max_decompose_points)
    fail_guard("DecomposeLimit", "q^d = " + total.str() + " shifts exceed the limit " +
                                     std::to_string(limits.max_decompose_points));

  int workers = limits.threads > 1 ? limits.threads : 1;
  if (Int(workers) > q) workers = static_cast<int>(q);

  std::map<VecZ, Int, VecZLess> by_signature;
  if (workers <= 1) {
    detail::decompose_stripe(ring.facets(), start, q, Int(0), q - 1, by_signature);
  } else {
    std::vector<std::map<VecZ, Int, VecZLess>> partial(static_cast<std::size_t>(workers));
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      Int lo = q * w / workers;
      Int hi = q * (w + 1) / workers - 1;
      pool.emplace_back([&, w, lo, hi]() {
        detail::decompose_stripe(ring.facets(), start, q, lo, hi, partial[static_cast<std::size_t>(w)]);
      });
    }
    for (auto& t : pool) t.join();
    for (auto& part : partial)
      for (auto& [sig, count] : part) by_signature[sig] += count;
  }

  MultiplicityVector mv;
  mv.e = e;
  mv.q = q;
  for (auto& [sig, count] : by_signature) {
    ConicClass c = classify(ring, sig);
    internal_check(c.conic, "decomposition produced a non-conic signature");
    mv.counts[*ring.class_table().find(c.form)] += count;
  }
  internal_check(mv.total() == total, "summand multiplicities do not sum to q^d");
  return mv;
}

// Exact limit of counts/q^d: the chamber-volume vector. Independent of the
// start signature; the argument is validated and otherwise unused.
inline std::map<int, Rat> limit_multiplicities(const CheckedRing& ring, const VecZ& start) {
  if (!signature_realizable(ring, start))
    fail_validation("UnrealizableStart", "start signature does not name a conic module");
  std::map<int, Rat> out;
  for (std::size_t i = 0; i < ring.class_table().classes.size(); ++i)
    out[static_cast<int>(i)] = ring.class_table().volumes[i];
  return out;
}

struct FSignatureReport {
  Rat exact_limit;
  std::vector<std::pair<int, Rat>> sequence;  // (e, frequency)
};

inline FSignatureReport f_signature(const CheckedRing& ring, int e_max, const Limits& limits = {}) {
  FSignatureReport rep;
  rep.exact_limit = ring.class_table().volumes[static_cast<std::size_t>(ring.class_table().free_index)];
  for (int e = 1; e <= e_max; ++e) {
    MultiplicityVector mv = frobenius_decompose(ring, ring.zero_signature(), e, limits);
    Int free_count = 0;
    if (auto it = mv.counts.find(ring.class_table().free_index); it != mv.counts.end())
      free_count = it->second;
    rep.sequence.emplace_back(e, Rat(free_count) / Rat(mv.total()));
  }
  return rep;
}

// Certified lower bound for the dual F-signature s(omega): the canonical
// summands of F^e_*(omega) project onto omega^count, so count_e <= b_e and
// lim count_e/q^{de} bounds limsup b_e/q^{de} from below. The reported
// value is the exact limit frequency of the canonical class, never claimed
// equal to s(omega).
inline FSignatureReport dual_f_signature_lower_bound(const CheckedRing& ring, int e_max,
                                                     const Limits& limits = {}) {
  FSignatureReport rep;
  rep.exact_limit = ring.class_table().volumes[static_cast<std::size_t>(ring.class_table().canonical_index)];
  for (int e = 1; e <= e_max; ++e) {
    MultiplicityVector mv = frobenius_decompose(ring, ring.ones_signature(), e, limits);
    Int canon_count = 0;
    if (auto it = mv.counts.find(ring.class_table().canonical_index); it != mv.counts.end())
      canon_count = it->second;
    rep.sequence.emplace_back(e, Rat(canon_count) / Rat(mv.total()));
  }
  return rep;
}

namespace detail {

inline void require_semigroup_elements(const CheckedRing& ring, const std::vector<VecZ>& elems,
                                       const char* what) {
  if (elems.empty()) fail_validation("EmptyGenerators", std::string(what) + " must be nonempty");
  for (const VecZ& g : elems) {
    if (g.size() != ring.dim())
      fail_validation("DimensionMismatch", std::string(what) + " entries must have length d");
    if (is_zero(g))
      fail_validation("NotInMaximalIdeal", std::string(what) + " must avoid the unit monomial 0");
    VecZ vals = ring.facets() * g;
    for (Index i = 0; i < vals.size(); ++i)
      if (vals(i) < 0)
        fail_validation("NotInSemigroup", std::string(what) + " entry lies outside the cone");
  }
}

// Primary to the maximal ideal <=> every extreme ray of the cone carries a
// generator. Returns the lex-smallest generator on each ray.
inline std::vector<VecZ> primary_ray_generators(const CheckedRing& ring, const std::vector<VecZ>& gens) {
  std::vector<VecZ> chosen;
  for (const VecZ& ray : ring.cone_extreme_rays()) {
    const VecZ* best = nullptr;
    for (const VecZ& g : gens) {
      if (lex_compare(primitive(g), ray) != 0) continue;
      if (!best || lex_compare(g, *best) < 0) best = &g;
    }
    if (!best) {
      std::string dir;
      for (Index i = 0; i < ray.size(); ++i) dir += (i ? "," : "(") + ray(i).str();
      fail_validation("NotPrimary",
                      "no generator on the extreme ray " + dir + "); the quotient complement is unbounded");
    }
    chosen.push_back(*best);
  }
  std::sort(chosen.begin(), chosen.end(), VecZLess{});
  chosen.erase(std::unique(chosen.begin(), chosen.end(),
                           [](const VecZ& a, const VecZ& b) { return lex_compare(a, b) == 0; }),
               chosen.end());
  return chosen;
}

// Counts lattice points of M_s not covered by any shift theta_j + M_s.
// A bounding box is certified by exact LP first: the uncovered region is
// contained in the union over choice maps of cells cut by the per-ray
// generators, and each such cell is bounded (an unbounded cell would embed
// an extreme ray carrying one of the chosen generators, forcing an empty
// constraint). The LP bound max sum_i <a_i, x> over the cells then yields
// per-coordinate bounds.
inline Int monomial_quotient_count(const CheckedRing& ring, const VecZ& s,
                                   const std::vector<VecZ>& theta, const Limits& limits) {
  const MatZ& a = ring.facets();
  const Index f = a.rows();
  const int d = ring.dim();

  std::vector<VecZ> ray_gens = primary_ray_generators(ring, theta);
  std::vector<VecZ> ray_vals;  // A * theta_t per chosen generator
  std::vector<std::vector<Index>> supports;
  Int cell_count = 1;
  for (const VecZ& g : ray_gens) {
    VecZ vals = a * g;
    std::vector<Index> support;
    for (Index i = 0; i < f; ++i)
      if (vals(i) >= 1) support.push_back(i);
    internal_check(!support.empty(), "semigroup generator pairs to zero with every facet");
    cell_count *= static_cast<Int>(support.size());
    ray_vals.push_back(std::move(vals));
    supports.push_back(std::move(support));
  }
  if (cell_count > 100'000)
    fail_guard("CellLimit", "bounding-box cell count " + cell_count.str() + " exceeds 100000");

  // Objective sum_i <a_i, x> is positive definite on the cone, so the level
  // set {A x >= s, sum <= B} is bounded.
  VecQ weight = VecQ::Zero(d);
  for (Index i = 0; i < f; ++i)
    for (Index j = 0; j < d; ++j) weight(j) += Rat(a(i, j));

  std::optional<Rat> best;
  std::vector<std::size_t> choice(ray_gens.size(), 0);
  for (;;) {
    LpProblem cell;
    cell.add_vars(d, false);
    for (Index i = 0; i < f; ++i) cell.add_ge(to_rational(VecZ(a.row(i).transpose())), Rat(s(i)));
    for (std::size_t t = 0; t < ray_gens.size(); ++t) {
      Index i = supports[t][choice[t]];
      cell.add_le(to_rational(VecZ(a.row(i).transpose())), Rat(s(i) + ray_vals[t](i) - 1));
    }
    LpProblem::Outcome out = cell.maximize(weight);
    if (out.status == LpStatus::Optimal) {
      if (!best || out.objective > *best) best = out.objective;
    } else {
      internal_check(out.status == LpStatus::Infeasible, "uncovered cell is unbounded");
    }
    std::size_t t = 0;
    while (t < choice.size()) {
      if (++choice[t] < supports[t].size()) break;
      choice[t] = 0;
      ++t;
    }
    if (t == choice.size()) break;
  }
  if (!best) return Int(0);  // no uncovered region at all

  LpProblem region;
  region.add_vars(d, false);
  for (Index i = 0; i < f; ++i) region.add_ge(to_rational(VecZ(a.row(i).transpose())), Rat(s(i)));
  region.add_le(weight, *best);

  LatticeBox box{VecZ(d), VecZ(d)};
  for (int k = 0; k < d; ++k) {
    VecQ obj = VecQ::Zero(d);
    obj(k) = 1;
    LpProblem::Outcome mx = region.maximize(obj);
    LpProblem::Outcome mn = region.minimize(obj);
    internal_check(mx.status == LpStatus::Optimal && mn.status == LpStatus::Optimal,
                   "certified bounding region is unbounded");
    box.hi(k) = rat_floor(mx.objective);
    box.lo(k) = rat_ceil(mn.objective);
  }

  std::vector<AffineConstraint> member_constraints;
  for (Index i = 0; i < f; ++i)
    member_constraints.push_back({to_rational(VecZ(a.row(i).transpose())), Rat(s(i))});
  std::vector<VecZ> points = lattice_points(member_constraints, box, limits);

  std::vector<VecZ> shifted;  // s + A*theta_j for every generator
  for (const VecZ& g : theta) shifted.push_back(VecZ(s + a * g));

  Int count = 0;
  for (const VecZ& m : points) {
    VecZ vals = a * m;
    bool covered = false;
    for (const VecZ& bound : shifted) {
      bool ge = true;
      for (Index i = 0; i < f; ++i)
        if (vals(i) < bound(i)) { ge = false; break; }
      if (ge) { covered = true; break; }
    }
    if (!covered) ++count;
  }
  return count;
}

}  // namespace detail

// Koszul Euler characteristic of theta on the conic module M_c, computed by
// depth sensitivity as the length of M_c / theta M_c. Exact lattice count;
// strictly positive for every conic class and valid theta.
inline Int sop_quotient_length(const CheckedRing& ring, const ConicClass& c,
                               const std::vector<VecZ>& theta, const Limits& limits = {}) {
  if (!c.conic || c.representative.size() == 0)
    fail_validation("NotConic", "sop_quotient_length requires a conic class with a representative");
  detail::require_semigroup_elements(ring, theta, "system of parameters");
  Int count = detail::monomial_quotient_count(ring, c.representative, theta, limits);
  internal_check(count > 0, "depth sensitivity violated: zero quotient length");
  return count;
}

}  // namespace frobcone
