#pragma once

// Exact rational linear programming: two-phase dense simplex with Bland's
// rule (smallest eligible index enters, smallest basic index leaves on
// ties). No cycling, deterministic pivots, exact arithmetic throughout.
// Infeasibility comes with a Farkas certificate extracted from the phase-1
// optimum and re-verified before it is returned.

#include <vector>

#include "frobcone/linalg.hpp"

namespace frobcone {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  VecQ x;         // Optimal: a basic primal solution
  Rat objective;  // Optimal: min value
  VecQ farkas;    // Infeasible: y with yᵀA ≤ 0 columnwise and yᵀb > 0
  VecQ ray;       // Unbounded: d ≥ 0 with A d = 0 and cᵀd < 0
};

namespace detail {

class SimplexTableau {
public:
  SimplexTableau(const MatQ& a, const VecQ& b) : m_(a.rows()), n_(a.cols()) {
    t_.resize(m_, n_ + m_);
    rhs_.resize(m_);
    basis_.resize(static_cast<std::size_t>(m_));
    row_sign_.resize(static_cast<std::size_t>(m_));
    for (Index i = 0; i < m_; ++i) {
      const int sign = b(i) < 0 ? -1 : 1;
      row_sign_[static_cast<std::size_t>(i)] = sign;
      for (Index j = 0; j < n_; ++j) t_(i, j) = sign * a(i, j);
      for (Index j = 0; j < m_; ++j) t_(i, n_ + j) = (i == j) ? Rat(1) : Rat(0);
      rhs_(i) = sign * b(i);
      basis_[static_cast<std::size_t>(i)] = n_ + i;
    }
  }

  // Runs simplex for the given column costs, restricted to columns < limit.
  // Returns false when an entering column has no positive pivot (unbounded).
  bool iterate(const VecQ& cost, Index limit) {
    for (;;) {
      VecQ z = reduced_costs(cost);
      Index entering = -1;
      for (Index j = 0; j < limit; ++j)
        if (z(j) < 0) { entering = j; break; }
      if (entering < 0) return true;
      Index leaving = -1;
      Rat best_ratio;
      for (Index i = 0; i < m_; ++i) {
        if (t_(i, entering) <= 0) continue;
        Rat ratio = rhs_(i) / t_(i, entering);
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leaving)])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving < 0) {
        unbounded_col_ = entering;
        return false;
      }
      pivot(leaving, entering);
    }
  }

  VecQ reduced_costs(const VecQ& cost) const {
    VecQ z(t_.cols());
    for (Index j = 0; j < t_.cols(); ++j) {
      Rat acc = cost(j);
      for (Index i = 0; i < m_; ++i) acc -= cost(basis_[static_cast<std::size_t>(i)]) * t_(i, j);
      z(j) = acc;
    }
    return z;
  }

  Rat objective(const VecQ& cost) const {
    Rat acc = 0;
    for (Index i = 0; i < m_; ++i) acc += cost(basis_[static_cast<std::size_t>(i)]) * rhs_(i);
    return acc;
  }

  void pivot(Index row, Index col) {
    Rat p = t_(row, col);
    for (Index j = 0; j < t_.cols(); ++j) t_(row, j) /= p;
    rhs_(row) /= p;
    for (Index i = 0; i < m_; ++i) {
      if (i == row || t_(i, col) == 0) continue;
      Rat factor = t_(i, col);
      for (Index j = 0; j < t_.cols(); ++j) t_(i, j) -= factor * t_(row, j);
      rhs_(i) -= factor * rhs_(row);
    }
    basis_[static_cast<std::size_t>(row)] = col;
  }

  // Drive basic artificials out after a degenerate phase-1 optimum; rows
  // that cannot be pivoted are redundant and get deleted.
  void purge_artificials() {
    std::vector<Index> keep;
    for (Index i = 0; i < m_; ++i) {
      if (basis_[static_cast<std::size_t>(i)] < n_) { keep.push_back(i); continue; }
      Index col = -1;
      for (Index j = 0; j < n_; ++j)
        if (t_(i, j) != 0) { col = j; break; }
      if (col >= 0) {
        pivot(i, col);
        keep.push_back(i);
      }
      // else: redundant row, dropped below
    }
    if (static_cast<Index>(keep.size()) != m_) {
      MatQ t2(static_cast<Index>(keep.size()), t_.cols());
      VecQ rhs2(static_cast<Index>(keep.size()));
      std::vector<Index> basis2;
      for (std::size_t k = 0; k < keep.size(); ++k) {
        t2.row(static_cast<Index>(k)) = t_.row(keep[k]);
        rhs2(static_cast<Index>(k)) = rhs_(keep[k]);
        basis2.push_back(basis_[static_cast<std::size_t>(keep[k])]);
      }
      t_ = std::move(t2);
      rhs_ = std::move(rhs2);
      basis_ = std::move(basis2);
      m_ = t_.rows();
    }
  }

  Index rows() const { return m_; }
  Index cols_original() const { return n_; }
  const std::vector<Index>& basis() const { return basis_; }
  const VecQ& rhs() const { return rhs_; }
  const MatQ& tableau() const { return t_; }
  int row_sign(Index original_row) const { return row_sign_[static_cast<std::size_t>(original_row)]; }
  Index unbounded_col() const { return unbounded_col_; }

private:
  Index m_, n_;
  MatQ t_;
  VecQ rhs_;
  std::vector<Index> basis_;
  std::vector<int> row_sign_;
  Index unbounded_col_ = -1;
};

}  // namespace detail

// min cᵀx  s.t.  A x = b, x ≥ 0.
inline LpResult lp_solve_standard(const MatQ& a, const VecQ& b, const VecQ& c) {
  internal_check(a.rows() == b.size() && a.cols() == c.size(), "lp dimension mismatch");
  const Index m = a.rows(), n = a.cols();
  detail::SimplexTableau tab(a, b);

  VecQ phase1_cost = VecQ::Zero(n + m);
  for (Index j = n; j < n + m; ++j) phase1_cost(j) = 1;
  bool bounded = tab.iterate(phase1_cost, n + m);
  internal_check(bounded, "phase-1 simplex reported unbounded");

  LpResult result;
  if (tab.objective(phase1_cost) > 0) {
    result.status = LpStatus::Infeasible;
    VecQ z = tab.reduced_costs(phase1_cost);
    VecQ y(m);
    for (Index i = 0; i < m; ++i) y(i) = tab.row_sign(i) * (Rat(1) - z(n + i));
    // Verify the Farkas certificate exactly before handing it out.
    for (Index j = 0; j < n; ++j) {
      Rat dot = 0;
      for (Index i = 0; i < m; ++i) dot += y(i) * a(i, j);
      internal_check(dot <= 0, "farkas certificate violates yᵀA ≤ 0");
    }
    Rat yb = 0;
    for (Index i = 0; i < m; ++i) yb += y(i) * b(i);
    internal_check(yb > 0, "farkas certificate violates yᵀb > 0");
    result.farkas = y;
    return result;
  }

  tab.purge_artificials();
  VecQ phase2_cost = VecQ::Zero(n + m);
  for (Index j = 0; j < n; ++j) phase2_cost(j) = c(j);
  if (!tab.iterate(phase2_cost, n)) {
    result.status = LpStatus::Unbounded;
    VecQ d = VecQ::Zero(n);
    const Index entering = tab.unbounded_col();
    d(entering) = 1;
    for (Index i = 0; i < tab.rows(); ++i) {
      const Index bv = tab.basis()[static_cast<std::size_t>(i)];
      if (bv < n) d(bv) = -tab.tableau()(i, entering);
    }
    result.ray = d;
    return result;
  }

  result.status = LpStatus::Optimal;
  VecQ x = VecQ::Zero(n);
  for (Index i = 0; i < tab.rows(); ++i) {
    const Index bv = tab.basis()[static_cast<std::size_t>(i)];
    if (bv < n) x(bv) = tab.rhs()(i);
  }
  result.x = x;
  result.objective = tab.objective(phase2_cost);
  return result;
}

// Row-builder front end: free or nonnegative variables, any mix of
// <= / >= / = rows. Solutions come back in the declared variable space.
class LpProblem {
public:
  int add_var(bool nonneg) {
    nonneg_.push_back(nonneg);
    return static_cast<int>(nonneg_.size()) - 1;
  }
  void add_vars(int count, bool nonneg) {
    for (int i = 0; i < count; ++i) add_var(nonneg);
  }

  void add_le(const VecQ& coeffs, const Rat& rhs) { add_row(coeffs, rhs, -1); }
  void add_ge(const VecQ& coeffs, const Rat& rhs) { add_row(coeffs, rhs, +1); }
  void add_eq(const VecQ& coeffs, const Rat& rhs) { add_row(coeffs, rhs, 0); }

  struct Outcome {
    LpStatus status;
    VecQ x;
    Rat objective;  // in the caller's orientation (max problems report max)
  };

  Outcome minimize(const VecQ& objective) const { return run(objective, false); }
  Outcome maximize(const VecQ& objective) const { return run(objective, true); }
  Outcome feasible() const { return run(VecQ::Zero(var_count()), false); }

  Index var_count() const { return static_cast<Index>(nonneg_.size()); }

private:
  struct Row {
    VecQ coeffs;
    Rat rhs;
    int sense;  // -1: <=, 0: =, +1: >=
  };

  void add_row(const VecQ& coeffs, const Rat& rhs, int sense) {
    internal_check(coeffs.size() == var_count(), "constraint arity mismatch");
    rows_.push_back(Row{coeffs, rhs, sense});
  }

  Outcome run(const VecQ& objective, bool maximize) const {
    internal_check(objective.size() == var_count(), "objective arity mismatch");
    // Standard-form columns: x⁺ (and x⁻ for free vars), then one slack per
    // inequality row.
    std::vector<Index> plus_col(nonneg_.size()), minus_col(nonneg_.size(), -1);
    Index ncols = 0;
    for (std::size_t v = 0; v < nonneg_.size(); ++v) {
      plus_col[v] = ncols++;
      if (!nonneg_[v]) minus_col[v] = ncols++;
    }
    std::vector<Index> slack_col(rows_.size(), -1);
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (rows_[r].sense != 0) slack_col[r] = ncols++;

    MatQ a = MatQ::Zero(static_cast<Index>(rows_.size()), ncols);
    VecQ b(static_cast<Index>(rows_.size()));
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Row& row = rows_[r];
      for (Index v = 0; v < var_count(); ++v) {
        a(static_cast<Index>(r), plus_col[static_cast<std::size_t>(v)]) = row.coeffs(v);
        if (minus_col[static_cast<std::size_t>(v)] >= 0)
          a(static_cast<Index>(r), minus_col[static_cast<std::size_t>(v)]) = -row.coeffs(v);
      }
      if (row.sense == -1) a(static_cast<Index>(r), slack_col[r]) = 1;
      if (row.sense == +1) a(static_cast<Index>(r), slack_col[r]) = -1;
      b(static_cast<Index>(r)) = row.rhs;
    }

    VecQ c = VecQ::Zero(ncols);
    for (Index v = 0; v < var_count(); ++v) {
      Rat coeff = maximize ? Rat(-objective(v)) : objective(v);
      c(plus_col[static_cast<std::size_t>(v)]) = coeff;
      if (minus_col[static_cast<std::size_t>(v)] >= 0) c(minus_col[static_cast<std::size_t>(v)]) = -coeff;
    }

    LpResult res = lp_solve_standard(a, b, c);
    Outcome out;
    out.status = res.status;
    if (res.status == LpStatus::Optimal) {
      out.x = VecQ(var_count());
      for (Index v = 0; v < var_count(); ++v) {
        Rat value = res.x(plus_col[static_cast<std::size_t>(v)]);
        if (minus_col[static_cast<std::size_t>(v)] >= 0) value -= res.x(minus_col[static_cast<std::size_t>(v)]);
        out.x(v) = value;
      }
      out.objective = maximize ? Rat(-res.objective) : res.objective;
    }
    return out;
  }

  std::vector<bool> nonneg_;
  std::vector<Row> rows_;
};

}  // namespace frobcone
