#pragma once

// Class vectors over the conic classes: a concrete coordinate system for
// Grothendieck-group computations. Distinct conic classes are independent
// coordinates; numerical equivalences between them are deliberately not
// imposed. The Cohen-Macaulay cone model is the nonnegative orthant over
// the classes observed in Frobenius decompositions, and the fundamental
// class is the exact chamber-volume vector.

#include <algorithm>
#include <map>
#include <vector>

#include "frobcone/toric.hpp"

namespace frobcone {

struct ClassVector {
  std::map<VecZ, Rat, VecZLess> support;  // class form -> coefficient

  // Every conic class has rank one, so the formal rank is the plain sum.
  Rat formal_rank() const {
    Rat acc = 0;
    for (const auto& [form, value] : support) acc += value;
    return acc;
  }
};

// mu as the exact limit of the Frobenius multiplicity vectors: chamber
// volumes indexed by conic class. Formal rank is exactly 1.
inline ClassVector mu_class(const CheckedRing& ring) {
  ClassVector mu;
  const ClassTable& table = ring.class_table();
  for (std::size_t i = 0; i < table.classes.size(); ++i)
    mu.support[table.classes[i].form] = table.volumes[i];
  internal_check(mu.formal_rank() == 1, "fundamental class has formal rank != 1");
  return mu;
}

struct CMConeModel {
  std::vector<ConicClass> class_order;  // coordinate order, sorted by class form
  RationalCone cone;                    // nonnegative orthant in these coordinates
};

namespace detail {

inline CMConeModel model_from_classes(std::vector<ConicClass> classes) {
  std::sort(classes.begin(), classes.end(),
            [](const ConicClass& a, const ConicClass& b) { return lex_compare(a.form, b.form) < 0; });
  CMConeModel model;
  model.class_order = std::move(classes);
  const int n = static_cast<int>(model.class_order.size());
  MatQ identity = MatQ::Identity(n, n);
  model.cone = RationalCone::from_generators(n, identity);
  model.cone.inequalities = identity;  // the orthant is self-dual
  return model;
}

}  // namespace detail

// Generators = unit vectors of the classes observed in the decompositions
// of eR for e <= e_max. Every conic class is maximal Cohen-Macaulay (a
// divisorial ideal of a normal Cohen-Macaulay toric ring), so these spans
// sit inside the Cohen-Macaulay cone.
inline CMConeModel build_cm_cone(const CheckedRing& ring, int e_max, const Limits& limits = {}) {
  std::map<int, bool> seen;
  for (int e = 1; e <= e_max; ++e)
    for (const auto& [idx, count] : frobenius_decompose(ring, ring.zero_signature(), e, limits).counts)
      if (count > 0) seen[idx] = true;
  std::vector<ConicClass> classes;
  for (const auto& [idx, flag] : seen)
    classes.push_back(ring.class_table().classes[static_cast<std::size_t>(idx)]);
  return detail::model_from_classes(std::move(classes));
}

inline VecQ class_vector_coordinates(const CMConeModel& model, const ClassVector& v) {
  VecQ coords = VecQ::Zero(static_cast<Index>(model.class_order.size()));
  std::map<VecZ, Index, VecZLess> position;
  for (std::size_t i = 0; i < model.class_order.size(); ++i)
    position.emplace(model.class_order[i].form, static_cast<Index>(i));
  for (const auto& [form, value] : v.support) {
    auto it = position.find(form);
    if (it == position.end()) {
      if (value == 0) continue;
      fail_validation("SupportOutsideModel",
                      "class " + detail::format_class_name(form) + " is not a cone generator");
    }
    coords(it->second) = value;
  }
  return coords;
}

// Membership of a class vector in the cone model, with a verifiable
// certificate. Support outside the model is reported, never extended.
inline MembershipCertificate check_mu_membership(const CMConeModel& model, const ClassVector& v,
                                                 bool interior = false) {
  VecQ coords = class_vector_coordinates(model, v);
  MembershipCertificate cert =
      interior ? member_interior(model.cone, coords) : member(model.cone, coords);
  internal_check(verify_certificate(model.cone, coords, cert), "membership certificate failed re-check");
  return cert;
}

struct IntegralRealization {
  Int n;                                   // lcm of the coefficient denominators
  std::map<VecZ, Int, VecZLess> module_spec;  // class form -> multiplicity in N
};

// n * v = [N] with N the direct sum of conic modules prescribed by
// module_spec; for v = mu this realizes the fundamental class integrally.
inline IntegralRealization integral_realization(const ClassVector& v) {
  IntegralRealization out;
  out.n = 1;
  for (const auto& [form, value] : v.support) {
    if (value < 0)
      fail_validation("NegativeCoefficient", "integral realization needs nonnegative coefficients");
    out.n = boost::multiprecision::lcm(out.n, denominator(value));
  }
  for (const auto& [form, value] : v.support) {
    Rat scaled = Rat(out.n) * value;
    internal_check(denominator(scaled) == 1, "scaled coefficient is not integral");
    if (scaled != 0) out.module_spec[form] = numerator(scaled);
  }
  return out;
}

struct XiMap {
  std::map<VecZ, VecZ, VecZLess> permutation;  // class form -> K - form
};

namespace detail {

// Subtraction in canonical class coordinates: componentwise, modulo the
// invariant factor on torsion coordinates.
inline VecZ form_difference(const ClGroup& cl, const VecZ& a, const VecZ& b) {
  VecZ out(a.size());
  for (std::size_t k = 0; k < cl.coords.size(); ++k) {
    const auto& coord = cl.coords[k];
    Int v = a(static_cast<Index>(k)) - b(static_cast<Index>(k));
    if (coord.modulus != 0) {
      v %= coord.modulus;
      if (v < 0) v += coord.modulus;
    }
    out(static_cast<Index>(k)) = v;
  }
  return out;
}

}  // namespace detail

// The involution cl -> K - cl on conic classes (the class-level shadow of
// dualizing into the canonical module). It swaps the free and canonical
// classes and is verified to be an involution that preserves the conic
// family.
inline XiMap xi(const CheckedRing& ring) {
  const ClassTable& table = ring.class_table();
  const VecZ& k_form = ring.canonical_class_form();
  XiMap map;
  for (const ConicClass& c : table.classes) {
    VecZ image = detail::form_difference(ring.class_group(), k_form, c.form);
    internal_check(table.find(image).has_value(), "xi image left the conic class family");
    map.permutation.emplace(c.form, image);
  }
  for (const auto& [from, to] : map.permutation) {
    auto back = map.permutation.find(to);
    internal_check(back != map.permutation.end() && lex_compare(back->second, from) == 0,
                   "xi is not an involution");
  }
  return map;
}

// Extends a cone model by the xi-images of its generators when the observed
// set is not closed under K - (.). Returns the added classes through the
// out-parameter; the result is always xi-stable.
inline CMConeModel xi_close(const CheckedRing& ring, const CMConeModel& model,
                            std::vector<ConicClass>* added = nullptr) {
  XiMap map = xi(ring);
  std::map<VecZ, bool, VecZLess> have;
  for (const ConicClass& c : model.class_order) have[c.form] = true;
  std::vector<ConicClass> classes = model.class_order;
  for (const ConicClass& c : model.class_order) {
    const VecZ& image = map.permutation.at(c.form);
    if (have.count(image)) continue;
    have[image] = true;
    auto idx = ring.class_table().find(image);
    internal_check(idx.has_value(), "xi closure produced an unknown class");
    const ConicClass& missing = ring.class_table().classes[static_cast<std::size_t>(*idx)];
    classes.push_back(missing);
    if (added) added->push_back(missing);
  }
  if (classes.size() == model.class_order.size()) return model;
  return detail::model_from_classes(std::move(classes));
}

}  // namespace frobcone
