#pragma once

// Truncated power series over the exact rationals: elements of Q[a]/(a^trunc).
// Arithmetic drops every term of degree >= trunc. Exponentials are expanded
// termwise with exact factorials.

#include <vector>

#include "frobcone/numeric.hpp"

namespace frobcone {

class TruncSeries {
public:
  explicit TruncSeries(int trunc) : coeffs_(static_cast<std::size_t>(check_trunc(trunc)), Rat(0)) {}

  TruncSeries(int trunc, std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    check_trunc(trunc);
    coeffs_.resize(static_cast<std::size_t>(trunc), Rat(0));
  }

  static TruncSeries constant(const Rat& c, int trunc) {
    TruncSeries s(trunc);
    s.coeffs_[0] = c;
    return s;
  }

  static TruncSeries one(int trunc) { return constant(Rat(1), trunc); }

  // c * a^k, truncated away entirely when k >= trunc.
  static TruncSeries monomial(const Rat& c, int k, int trunc) {
    TruncSeries s(trunc);
    if (k >= 0 && k < trunc) s.coeffs_[static_cast<std::size_t>(k)] = c;
    return s;
  }

  int trunc() const { return static_cast<int>(coeffs_.size()); }
  const Rat& coeff(int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  bool operator==(const TruncSeries& other) const { return coeffs_ == other.coeffs_; }
  bool operator!=(const TruncSeries& other) const { return !(*this == other); }

  // a -> -a, flipping the sign of every odd coefficient.
  TruncSeries substitute_neg() const {
    TruncSeries s = *this;
    for (std::size_t k = 1; k < s.coeffs_.size(); k += 2) s.coeffs_[k] = -s.coeffs_[k];
    return s;
  }

  friend TruncSeries operator+(const TruncSeries& f, const TruncSeries& g) {
    require_same_trunc(f, g);
    TruncSeries s = f;
    for (std::size_t k = 0; k < s.coeffs_.size(); ++k) s.coeffs_[k] += g.coeffs_[k];
    return s;
  }

  friend TruncSeries operator-(const TruncSeries& f, const TruncSeries& g) {
    require_same_trunc(f, g);
    TruncSeries s = f;
    for (std::size_t k = 0; k < s.coeffs_.size(); ++k) s.coeffs_[k] -= g.coeffs_[k];
    return s;
  }

  friend TruncSeries operator*(const Rat& c, const TruncSeries& f) {
    TruncSeries s = f;
    for (auto& x : s.coeffs_) x *= c;
    return s;
  }

private:
  static int check_trunc(int trunc) {
    if (trunc < 1) fail_validation("BadTrunc", "truncation order must be >= 1");
    return trunc;
  }
  static void require_same_trunc(const TruncSeries& f, const TruncSeries& g) {
    if (f.trunc() != g.trunc())
      fail_validation("TruncMismatch", "series have different truncation orders");
  }

  friend TruncSeries ts_mul(const TruncSeries&, const TruncSeries&);
  friend TruncSeries ts_inv(const TruncSeries&);

  std::vector<Rat> coeffs_;
};

// Cauchy product truncated at the common order.
inline TruncSeries ts_mul(const TruncSeries& f, const TruncSeries& g) {
  if (f.trunc() != g.trunc())
    fail_validation("TruncMismatch", "series have different truncation orders");
  const int n = f.trunc();
  TruncSeries s(n);
  for (int k = 0; k < n; ++k) {
    Rat acc = 0;
    for (int i = 0; i <= k; ++i) acc += f.coeff(i) * g.coeff(k - i);
    s.coeffs_[static_cast<std::size_t>(k)] = acc;
  }
  return s;
}

// Multiplicative inverse mod a^trunc; the constant term must be a unit.
inline TruncSeries ts_inv(const TruncSeries& f) {
  if (f.coeff(0) == 0) fail_validation("NonUnit", "series has zero constant term");
  const int n = f.trunc();
  TruncSeries s(n);
  s.coeffs_[0] = Rat(1) / f.coeff(0);
  for (int k = 1; k < n; ++k) {
    Rat acc = 0;
    for (int i = 1; i <= k; ++i) acc += f.coeff(i) * s.coeff(k - i);
    s.coeffs_[static_cast<std::size_t>(k)] = -acc / f.coeff(0);
  }
  return s;
}

inline TruncSeries ts_pow(const TruncSeries& f, int e) {
  TruncSeries s = TruncSeries::one(f.trunc());
  for (int i = 0; i < e; ++i) s = ts_mul(s, f);
  return s;
}

enum class ToddSign { Plus, Minus };

// ToddSign::Plus  ->  a/(1 - e^{-a})
// ToddSign::Minus -> -a/(1 - e^{a})
// Both are units: divide out the leading a of the denominator, then invert
// the unit part exactly.
inline TruncSeries todd_series(ToddSign sign, int trunc) {
  TruncSeries unit(trunc);
  Int factorial = 1;
  for (int k = 0; k < trunc; ++k) {
    factorial *= (k + 1);  // (k+1)!
    // (1 - e^{-a})/a has coefficients (-1)^k/(k+1)!,
    // -(1 - e^{a})/a has coefficients 1/(k+1)!.
    Rat c = Rat(1) / Rat(factorial);
    if (sign == ToddSign::Plus && (k % 2 == 1)) c = -c;
    unit = unit + TruncSeries::monomial(c, k, trunc);
  }
  return ts_inv(unit);
}

}  // namespace frobcone
