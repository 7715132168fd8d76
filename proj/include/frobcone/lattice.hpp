#pragma once

// Bounded lattice-point enumeration. Points stream in lexicographic order;
// when the box is partitioned across workers each stripe is enumerated
// independently and stripes are concatenated in order, so the merged output
// is identical to a single-threaded run.

#include <thread>
#include <vector>

#include "frobcone/limits.hpp"
#include "frobcone/linalg.hpp"

namespace frobcone {

// ⟨normal, x⟩ >= rhs
struct AffineConstraint {
  VecQ normal;
  Rat rhs;
};

struct LatticeBox {
  VecZ lo, hi;  // inclusive bounds per coordinate
};

namespace detail {

struct ScaledConstraint {
  VecZ normal;
  Int rhs;  // integer points satisfy ⟨normal, x⟩ >= rhs
};

inline std::vector<ScaledConstraint> scale_constraints(const std::vector<AffineConstraint>& cs, int dim) {
  std::vector<ScaledConstraint> out;
  out.reserve(cs.size());
  for (const auto& c : cs) {
    internal_check(c.normal.size() == dim, "constraint dimension mismatch");
    Int lcm = denominator(c.rhs);
    for (Index j = 0; j < c.normal.size(); ++j)
      lcm = boost::multiprecision::lcm(lcm, denominator(c.normal(j)));
    ScaledConstraint s;
    s.normal = VecZ(c.normal.size());
    for (Index j = 0; j < c.normal.size(); ++j)
      s.normal(j) = numerator(c.normal(j)) * (lcm / denominator(c.normal(j)));
    s.rhs = numerator(c.rhs) * (lcm / denominator(c.rhs));
    out.push_back(std::move(s));
  }
  return out;
}

// Enumerates the sub-box with first coordinate in [first_lo, first_hi].
inline void enumerate_stripe(const std::vector<ScaledConstraint>& cs, const LatticeBox& box,
                             const Int& first_lo, const Int& first_hi, std::vector<VecZ>& out) {
  const Index d = box.lo.size();
  VecZ x = box.lo;
  x(0) = first_lo;
  if (first_lo > first_hi) return;
  for (Index j = 1; j < d; ++j)
    if (box.lo(j) > box.hi(j)) return;

  // Incremental dot products: adjust on each odometer step.
  std::vector<Int> dots(cs.size());
  for (std::size_t k = 0; k < cs.size(); ++k) {
    Int acc = 0;
    for (Index j = 0; j < d; ++j) acc += cs[k].normal(j) * x(j);
    dots[k] = acc;
  }

  for (;;) {
    bool ok = true;
    for (std::size_t k = 0; k < cs.size(); ++k)
      if (dots[k] < cs[k].rhs) { ok = false; break; }
    if (ok) out.push_back(x);

    // Odometer step, least-significant coordinate last (lexicographic order).
    Index j = d - 1;
    for (;;) {
      if (j == 0) {
        if (x(0) >= first_hi) return;
        x(0) += 1;
        for (std::size_t k = 0; k < cs.size(); ++k) dots[k] += cs[k].normal(0);
        break;
      }
      if (x(j) < box.hi(j)) {
        x(j) += 1;
        for (std::size_t k = 0; k < cs.size(); ++k) dots[k] += cs[k].normal(j);
        break;
      }
      Int span = x(j) - box.lo(j);
      x(j) = box.lo(j);
      for (std::size_t k = 0; k < cs.size(); ++k) dots[k] -= cs[k].normal(j) * span;
      --j;
    }
  }
}

}  // namespace detail

inline Int lattice_box_candidates(const LatticeBox& box) {
  Int count = 1;
  for (Index j = 0; j < box.lo.size(); ++j) {
    if (box.hi(j) < box.lo(j)) return Int(0);
    count *= box.hi(j) - box.lo(j) + 1;
  }
  return count;
}

// All integer points of the box satisfying every constraint, sorted
// lexicographically. Refuses boxes above the configured candidate limit.
inline std::vector<VecZ> lattice_points(const std::vector<AffineConstraint>& constraints,
                                        const LatticeBox& box, const Limits& limits) {
  internal_check(box.lo.size() == box.hi.size() && box.lo.size() >= 1, "malformed lattice box");
  const int dim = static_cast<int>(box.lo.size());
  Int candidates = lattice_box_candidates(box);
  if (candidates > limits.max_lattice_points)
    fail_guard("LatticePointLimit",
               "box holds " + candidates.str() + " candidate points, limit is " +
                   std::to_string(limits.max_lattice_points));
  if (candidates == 0) return {};

  auto scaled = detail::scale_constraints(constraints, dim);

  const Int width = box.hi(0) - box.lo(0) + 1;
  int workers = limits.threads > 1 ? limits.threads : 1;
  if (Int(workers) > width) workers = static_cast<int>(width);

  if (workers <= 1) {
    std::vector<VecZ> out;
    detail::enumerate_stripe(scaled, box, box.lo(0), box.hi(0), out);
    return out;
  }

  std::vector<std::vector<VecZ>> partial(static_cast<std::size_t>(workers));
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    Int lo = box.lo(0) + width * w / workers;
    Int hi = box.lo(0) + width * (w + 1) / workers - 1;
    pool.emplace_back([&, w, lo, hi]() {
      detail::enumerate_stripe(scaled, box, lo, hi, partial[static_cast<std::size_t>(w)]);
    });
  }
  for (auto& t : pool) t.join();

  std::vector<VecZ> out;
  for (auto& part : partial)
    out.insert(out.end(), part.begin(), part.end());
  return out;
}

}  // namespace frobcone
