#pragma once

// Closed-form truncated-series data for the rank-one determinantal family:
// the ring of 2x2 minors of a generic (m+1) x (n+1) matrix, 0 < m <= n.
// Its rational Chow data lives in Q[a]/(a^{m+1}); the class of R maps to
// the Todd-type product (a/(1-e^{-a}))^m (-a/(1-e^{a}))^n, the canonical
// module to the same product with the exponents swapped, the fundamental
// class to 1, and the canonical divisor to (n-m)a.

#include "frobcone/series.hpp"

namespace frobcone {

struct DetMatReport {
  int m = 0, n = 0;
  TruncSeries tau_r;
  TruncSeries tau_omega;
  TruncSeries mu;
  TruncSeries k_class;

  DetMatReport(int m_, int n_, int trunc)
      : m(m_), n(n_), tau_r(trunc), tau_omega(trunc), mu(trunc), k_class(trunc) {}
};

inline DetMatReport chow_determinantal(int m, int n) {
  if (m < 1 || n < m) fail_validation("InvalidSize", "need 0 < m <= n");
  const int trunc = m + 1;
  DetMatReport rep(m, n, trunc);

  TruncSeries plus = todd_series(ToddSign::Plus, trunc);
  TruncSeries minus = todd_series(ToddSign::Minus, trunc);
  rep.tau_r = ts_mul(ts_pow(plus, m), ts_pow(minus, n));
  rep.tau_omega = ts_mul(ts_pow(minus, m), ts_pow(plus, n));
  rep.mu = TruncSeries::one(trunc);
  rep.k_class = TruncSeries::monomial(Rat(n - m), 1, trunc);

  internal_check(rep.tau_r.coeff(1) == Rat(m - n, 2), "degree-one coefficient of tau_R is off");
  internal_check(rep.tau_omega == rep.tau_r.substitute_neg(), "tau_omega != tau_R(-a)");
  return rep;
}

}  // namespace frobcone
