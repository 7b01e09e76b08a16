#pragma once

// Dense two-phase simplex for small LPs of the form
//
//     maximize  c . x    subject to  A x <= b,   x free.
//
// Free variables are split into positive/negative parts internally. The
// pivot rule is Dantzig with deterministic tie-breaking, switching to
// Bland's rule after a fixed number of iterations so cycling cannot occur.
// Problems in this codebase have at most a few dozen rows, so a plain
// tableau is the right tool.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "kadets/core.hpp"

namespace kadets {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpProblem {
  Vec objective;          // maximized
  std::vector<Vec> lhs;   // constraint rows, one per entry of rhs
  Vec rhs;

  explicit LpProblem(int num_vars) : objective(num_vars, 0.0) {}

  void add_constraint(Vec row, double bound) {
    if (row.size() != objective.size())
      throw std::invalid_argument("constraint arity mismatch");
    lhs.push_back(std::move(row));
    rhs.push_back(bound);
  }
};

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  double value = -kInf;  // -inf for infeasible, +inf for unbounded
  Vec point;             // certificate, present only when Optimal
};

namespace detail {

class SimplexTableau {
 public:
  SimplexTableau(const LpProblem& p) : n_(static_cast<int>(p.objective.size())) {
    m_ = static_cast<int>(p.lhs.size());
    // columns: u_0..u_{n-1}, v_0..v_{n-1}, slack_0..slack_{m-1}, artificials
    art_begin_ = 2 * n_ + m_;
    int num_art = 0;
    for (double b : p.rhs)
      if (b < 0.0) ++num_art;
    ncols_ = art_begin_ + num_art;
    rows_.assign(m_, Vec(ncols_, 0.0));
    rhs_.assign(m_, 0.0);
    basis_.assign(m_, -1);

    int art = art_begin_;
    for (int i = 0; i < m_; ++i) {
      double sign = p.rhs[i] < 0.0 ? -1.0 : 1.0;
      for (int j = 0; j < n_; ++j) {
        rows_[i][j] = sign * p.lhs[i][j];
        rows_[i][n_ + j] = -sign * p.lhs[i][j];
      }
      rows_[i][2 * n_ + i] = sign;  // slack
      rhs_[i] = sign * p.rhs[i];
      if (sign < 0.0) {
        rows_[i][art] = 1.0;
        basis_[i] = art++;
      } else {
        basis_[i] = 2 * n_ + i;
      }
    }
  }

  bool needs_phase1() const { return ncols_ > art_begin_; }

  // Maximizes the reduced-cost row derived from `cost` over non-dead
  // columns. Returns false when unbounded.
  bool run(const Vec& cost, int first_dead_col) {
    Vec red = cost;
    double obj = 0.0;
    for (int i = 0; i < m_; ++i) {
      double cb = cost[basis_[i]];
      if (cb == 0.0) continue;
      obj += cb * rhs_[i];
      for (int j = 0; j < ncols_; ++j) red[j] -= cb * rows_[i][j];
    }
    (void)obj;

    const int bland_after = 200 + 20 * (m_ + n_);
    for (int iter = 0;; ++iter) {
      if (iter > 20000) throw std::runtime_error("simplex iteration cap exceeded");
      bool bland = iter >= bland_after;
      int enter = -1;
      double best = kEntering;
      for (int j = 0; j < first_dead_col; ++j) {
        if (red[j] > (bland ? kEntering : best)) {
          enter = j;
          best = red[j];
          if (bland) break;
        }
      }
      if (enter < 0) return true;  // optimal

      int leave = -1;
      double best_ratio = 0.0;
      for (int i = 0; i < m_; ++i) {
        double a = rows_[i][enter];
        if (a <= kPivot) continue;
        double ratio = rhs_[i] / a;
        if (leave < 0 || ratio < best_ratio - kPivot ||
            (ratio < best_ratio + kPivot && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave < 0) return false;  // unbounded in `enter` direction

      pivot(leave, enter, red);
    }
  }

  double objective_value(const Vec& cost) const {
    double obj = 0.0;
    for (int i = 0; i < m_; ++i) obj += cost[basis_[i]] * rhs_[i];
    return obj;
  }

  // Pivot basic artificials out (or detect redundant rows) before phase 2.
  void expel_artificials() {
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < art_begin_) continue;
      int enter = -1;
      for (int j = 0; j < art_begin_; ++j) {
        if (std::abs(rows_[i][j]) > kPivot) {
          enter = j;
          break;
        }
      }
      if (enter >= 0) {
        Vec dummy;  // no reduced costs to maintain
        pivot(i, enter, dummy);
      }
      // else: the row is redundant; the artificial stays basic at level 0
      // and its column is dead in phase 2, which is harmless.
    }
  }

  Vec extract_point() const {
    Vec x(n_, 0.0);
    for (int i = 0; i < m_; ++i) {
      int b = basis_[i];
      if (b < n_)
        x[b] += rhs_[i];
      else if (b < 2 * n_)
        x[b - n_] -= rhs_[i];
    }
    return x;
  }

  int ncols() const { return ncols_; }
  int art_begin() const { return art_begin_; }

 private:
  static constexpr double kEntering = 1e-10;
  static constexpr double kPivot = 1e-11;

  void pivot(int r, int e, Vec& red) {
    double inv = 1.0 / rows_[r][e];
    for (int j = 0; j < ncols_; ++j) rows_[r][j] *= inv;
    rhs_[r] *= inv;
    rows_[r][e] = 1.0;  // fight roundoff on the pivot column
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      double f = rows_[i][e];
      if (f == 0.0) continue;
      for (int j = 0; j < ncols_; ++j) rows_[i][j] -= f * rows_[r][j];
      rows_[i][e] = 0.0;
      rhs_[i] -= f * rhs_[r];
    }
    if (!red.empty()) {
      double f = red[e];
      if (f != 0.0) {
        for (int j = 0; j < ncols_; ++j) red[j] -= f * rows_[r][j];
        red[e] = 0.0;
      }
    }
    basis_[r] = e;
  }

  int n_, m_, ncols_, art_begin_;
  std::vector<Vec> rows_;
  Vec rhs_;
  std::vector<int> basis_;
};

}  // namespace detail

inline LpOutcome solve_lp(const LpProblem& p) {
  if (!all_finite(p.objective) || !all_finite(p.rhs))
    throw std::invalid_argument("non-finite LP data");
  for (const Vec& row : p.lhs)
    if (!all_finite(row)) throw std::invalid_argument("non-finite LP data");

  detail::SimplexTableau tab(p);

  if (tab.needs_phase1()) {
    Vec cost1(tab.ncols(), 0.0);
    for (int j = tab.art_begin(); j < tab.ncols(); ++j) cost1[j] = -1.0;
    tab.run(cost1, tab.ncols());
    if (tab.objective_value(cost1) < -1e-8)
      return {LpStatus::Infeasible, -kInf, {}};
    tab.expel_artificials();
  }

  int n = static_cast<int>(p.objective.size());
  Vec cost2(tab.ncols(), 0.0);
  for (int j = 0; j < n; ++j) {
    cost2[j] = p.objective[j];
    cost2[n + j] = -p.objective[j];
  }
  if (!tab.run(cost2, tab.art_begin()))
    return {LpStatus::Unbounded, kInf, {}};

  LpOutcome out;
  out.status = LpStatus::Optimal;
  out.value = tab.objective_value(cost2);
  out.point = tab.extract_point();
  return out;
}

}  // namespace kadets
