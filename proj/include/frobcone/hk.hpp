#pragma once

// Hilbert-Kunz sampling and signed-power fitting. Lengths of R/I^{[q]} for
// monomial ideals are exact lattice counts over an LP-certified bounding
// box; the fit solves the exact linear system in the powers p^{ie} on the
// first d+1 samples and validates against the held-out rest.

#include <vector>

#include "frobcone/toric.hpp"

namespace frobcone {

struct MonomialIdeal {
  std::vector<VecZ> generators;  // semigroup elements
};

struct HKSample {
  int e = 0;
  Int q;
  Int length;
};

struct HKFit {
  int d = 0;
  std::vector<Rat> coefficients;  // c_0 .. c_d with length(e) ~ sum c_i p^{ie}
  std::vector<int> eps;           // sign pattern, eps_i in {-1, 0, 1}
  Rat alpha;                      // |c_d|
  std::vector<Rat> beta;          // |c_i| for i < d
  std::map<int, Rat> residuals;   // e -> length(e) - fit(e), for every sample
  bool exact_fit = false;
};

// length of R / I^{[p^e]}: lattice points of the cone not covered by any
// shift q*g + C.
inline HKSample frobenius_power_length(const CheckedRing& ring, const MonomialIdeal& ideal, int e,
                                       const Limits& limits = {}) {
  if (e < 1) fail_validation("InvalidExponent", "Frobenius exponent must be >= 1");
  detail::require_semigroup_elements(ring, ideal.generators, "ideal generators");
  HKSample sample;
  sample.e = e;
  sample.q = pow_int(ring.p(), static_cast<unsigned>(e));
  std::vector<VecZ> frobenius_gens;
  frobenius_gens.reserve(ideal.generators.size());
  for (const VecZ& g : ideal.generators) frobenius_gens.push_back(VecZ(sample.q * g));
  sample.length = detail::monomial_quotient_count(ring, ring.zero_signature(), frobenius_gens, limits);
  return sample;
}

inline Rat evaluate_fit(const HKFit& fit, const Int& p, int e) {
  Rat acc = 0;
  for (int i = 0; i <= fit.d; ++i)
    acc += fit.coefficients[static_cast<std::size_t>(i)] * Rat(pow_int(p, static_cast<unsigned>(i * e)));
  return acc;
}

// Solves length(e) = sum_i c_i p^{ie} exactly on the first d+1 samples
// (a Vandermonde system in p^e) and validates on the rest. exact_fit is a
// report, not a claim: quasi-polynomial Hilbert-Kunz functions legitimately
// come back with nonzero residuals.
inline HKFit fit_signed_powers(std::vector<HKSample> samples, const Int& p, int d) {
  if (static_cast<int>(samples.size()) < d + 2)
    fail_validation("InsufficientSamples", "need at least d+2 samples");
  std::sort(samples.begin(), samples.end(), [](const HKSample& a, const HKSample& b) { return a.e < b.e; });
  for (std::size_t i = 1; i < samples.size(); ++i)
    if (samples[i].e == samples[i - 1].e)
      fail_validation("SingularSystem", "samples repeat the exponent e = " + std::to_string(samples[i].e));

  const int unknowns = d + 1;
  MatQ system(unknowns, unknowns);
  VecQ rhs(unknowns);
  for (int k = 0; k < unknowns; ++k) {
    for (int i = 0; i < unknowns; ++i)
      system(k, i) = Rat(pow_int(p, static_cast<unsigned>(i * samples[static_cast<std::size_t>(k)].e)));
    rhs(k) = Rat(samples[static_cast<std::size_t>(k)].length);
  }
  auto solution = solve_linear(system, rhs);
  if (!solution) fail_validation("SingularSystem", "interpolation system is singular");

  HKFit fit;
  fit.d = d;
  for (int i = 0; i <= d; ++i) fit.coefficients.push_back((*solution)(i));
  fit.eps.resize(static_cast<std::size_t>(d) + 1);
  fit.beta.resize(static_cast<std::size_t>(d), Rat(0));
  for (int i = 0; i <= d; ++i) {
    const Rat& c = fit.coefficients[static_cast<std::size_t>(i)];
    fit.eps[static_cast<std::size_t>(i)] = sign_of(c);
    if (i == d) fit.alpha = abs_rat(c);
    else fit.beta[static_cast<std::size_t>(i)] = abs_rat(c);
  }
  fit.exact_fit = true;
  for (const HKSample& s : samples) {
    Rat residual = Rat(s.length) - evaluate_fit(fit, p, s.e);
    if (residual != 0) fit.exact_fit = false;
    fit.residuals[s.e] = residual;
  }
  return fit;
}

struct CrossCheckReport {
  Int lhs;  // sum over classes of multiplicity * conic quotient length
  Int rhs;  // direct length of R / theta^{[q]}
  bool equal = false;
  std::map<int, std::pair<Int, Int>> per_class;  // class index -> (count, length)
};

// The whole-system consistency bridge: decomposing eR and measuring each
// conic summand against theta must reproduce the direct Frobenius-power
// length count. Both sides are computed by independent algorithms.
inline CrossCheckReport hk_cross_check(const CheckedRing& ring, const std::vector<VecZ>& theta, int e,
                                       const Limits& limits = {}) {
  CrossCheckReport rep;
  MultiplicityVector mv = frobenius_decompose(ring, ring.zero_signature(), e, limits);
  rep.lhs = 0;
  for (const auto& [idx, count] : mv.counts) {
    if (count == 0) continue;
    const ConicClass& c = ring.class_table().classes[static_cast<std::size_t>(idx)];
    Int len = sop_quotient_length(ring, c, theta, limits);
    rep.per_class[idx] = {count, len};
    rep.lhs += count * len;
  }
  MonomialIdeal ideal{theta};
  rep.rhs = frobenius_power_length(ring, ideal, e, limits).length;
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

}  // namespace frobcone
