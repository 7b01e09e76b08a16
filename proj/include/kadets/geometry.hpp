#pragma once

// H-representation convex sets. An HPolyhedron is a finite intersection of
// closed halfspaces; it may be empty, lower-dimensional or unbounded. The
// emptiness / interior / boundedness flags are computed once at
// construction so instances are immutable and safe to share across threads.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kadets/core.hpp"
#include "kadets/lp.hpp"

namespace kadets {

struct Halfspace {
  Vec normal;    // stored unit length
  double bound;  // the set { x : normal.x <= bound }

  Halfspace(Vec n, double b) : normal(std::move(n)), bound(b) {}
};

struct AffineFunc {
  Vec gradient;
  double offset = 0.0;

  AffineFunc() = default;
  AffineFunc(Vec g, double c) : gradient(std::move(g)), offset(c) {}

  double operator()(const Vec& x) const { return dot(gradient, x) + offset; }
  int dim() const { return static_cast<int>(gradient.size()); }
};

class HPolyhedron {
 public:
  // Whole space in the given dimension.
  explicit HPolyhedron(int dim) : dim_(dim) { classify(); }

  HPolyhedron(int dim, std::vector<Halfspace> rows) : dim_(dim) {
    rows_.reserve(rows.size());
    for (Halfspace& h : rows) push_row(std::move(h.normal), h.bound);
    classify();
  }

  static HPolyhedron from_rows(int dim, const std::vector<std::pair<Vec, double>>& rows) {
    std::vector<Halfspace> hs;
    hs.reserve(rows.size());
    for (const auto& [n, b] : rows) hs.emplace_back(n, b);
    return HPolyhedron(dim, std::move(hs));
  }

  static HPolyhedron box(const Vec& lo, const Vec& hi) {
    int d = static_cast<int>(lo.size());
    std::vector<Halfspace> rows;
    for (int i = 0; i < d; ++i) {
      Vec n(d, 0.0);
      n[i] = 1.0;
      rows.emplace_back(n, hi[i]);
      n[i] = -1.0;
      rows.emplace_back(n, -lo[i]);
    }
    return HPolyhedron(d, std::move(rows));
  }

  int dim() const { return dim_; }
  const std::vector<Halfspace>& rows() const { return rows_; }
  bool empty() const { return empty_; }
  bool empty_interior() const { return empty_interior_; }
  bool bounded() const { return bounded_; }
  // Chebyshev slack: max s with normal.x + s <= bound for all rows
  // (+inf when unconstrained). Negative iff the set is empty.
  double chebyshev_slack() const { return chebyshev_; }

  bool is_body() const { return !empty_ && bounded_ && !empty_interior_; }

  bool contains(const Vec& x, double tol = kEpsGeo) const {
    for (const Halfspace& h : rows_)
      if (dot(h.normal, x) > h.bound + tol) return false;
    return true;
  }

  // Signed violation: <= 0 inside, > 0 by how much the worst row is broken.
  double violation(const Vec& x) const {
    double worst = -kInf;
    for (const Halfspace& h : rows_) worst = std::max(worst, dot(h.normal, x) - h.bound);
    return rows_.empty() ? -kInf : worst;
  }

  HPolyhedron translated(const Vec& t) const {
    std::vector<Halfspace> rows = rows_;
    for (Halfspace& h : rows) h.bound += dot(h.normal, t);
    return HPolyhedron(dim_, std::move(rows));
  }

  HPolyhedron intersect(const HPolyhedron& other) const {
    std::vector<Halfspace> rows = rows_;
    rows.insert(rows.end(), other.rows_.begin(), other.rows_.end());
    return HPolyhedron(dim_, std::move(rows));
  }

  // Bounds shifted row-wise: normal.x <= bound - offsets[j].
  HPolyhedron shifted(const Vec& offsets) const {
    if (offsets.size() != rows_.size())
      throw std::invalid_argument("offset arity must match row count");
    std::vector<Halfspace> rows = rows_;
    for (std::size_t j = 0; j < rows.size(); ++j) rows[j].bound -= offsets[j];
    return HPolyhedron(dim_, std::move(rows));
  }

 private:
  void push_row(Vec n, double b) {
    double len = norm(n);
    if (len < 1e-12) {
      if (b < -kEpsGeo) forced_empty_ = true;  // 0.x <= b < 0: inconsistent
      return;                                  // trivial row otherwise
    }
    rows_.emplace_back(scaled(std::move(n), 1.0 / len), b / len);
  }

  void classify() {
    if (forced_empty_) {
      // Represent inconsistency explicitly so the row list stays honest.
      Vec n(dim_, 0.0);
      n[0] = 1.0;
      rows_.clear();
      rows_.emplace_back(n, -1.0);
      n[0] = -1.0;
      rows_.emplace_back(n, -1.0);
    }
    chebyshev_ = chebyshev_lp();
    empty_ = chebyshev_ < -kEpsGeo;
    empty_interior_ = chebyshev_ <= kEpsGeo;
    bounded_ = empty_ ? true : bounded_lp();
  }

  // max s subject to normal.x + s <= bound; with unit normals this is the
  // (signed) inradius of the set w.r.t. the Euclidean ball.
  double chebyshev_lp() const {
    if (rows_.empty()) return kInf;
    LpProblem p(dim_ + 1);
    p.objective[dim_] = 1.0;
    for (const Halfspace& h : rows_) {
      Vec row = h.normal;
      row.push_back(1.0);
      p.add_constraint(std::move(row), h.bound);
    }
    LpOutcome out = solve_lp(p);
    if (out.status == LpStatus::Unbounded) return kInf;
    if (out.status == LpStatus::Infeasible)
      throw std::runtime_error("slack LP cannot be infeasible");
    return out.value;
  }

  bool bounded_lp() const {
    for (int i = 0; i < dim_; ++i) {
      for (double sign : {1.0, -1.0}) {
        LpProblem p(dim_);
        p.objective[i] = sign;
        for (const Halfspace& h : rows_) p.add_constraint(h.normal, h.bound);
        if (solve_lp(p).status == LpStatus::Unbounded) return false;
      }
    }
    return true;
  }

  int dim_;
  std::vector<Halfspace> rows_;
  bool forced_empty_ = false;
  bool empty_ = false;
  bool empty_interior_ = false;
  bool bounded_ = false;
  double chebyshev_ = 0.0;
};

// sup of u.x over P. Throws on empty or unbounded-in-u input, which callers
// treat as a caller bug for bodies; use support_or_inf when P is a cell
// that may legitimately recede in the -u direction.
inline double support(const HPolyhedron& P, const Vec& u) {
  LpProblem p(P.dim());
  p.objective = u;
  for (const Halfspace& h : P.rows()) p.add_constraint(h.normal, h.bound);
  LpOutcome out = solve_lp(p);
  if (out.status == LpStatus::Infeasible)
    throw std::invalid_argument("support of an empty set");
  if (out.status == LpStatus::Unbounded)
    throw std::invalid_argument("support unbounded in the given direction");
  return out.value;
}

inline double support_or_inf(const HPolyhedron& P, const Vec& u) {
  LpProblem p(P.dim());
  p.objective = u;
  for (const Halfspace& h : P.rows()) p.add_constraint(h.normal, h.bound);
  LpOutcome out = solve_lp(p);
  if (out.status == LpStatus::Infeasible)
    throw std::invalid_argument("support of an empty set");
  return out.status == LpStatus::Unbounded ? kInf : out.value;
}

inline bool empty_interior(const HPolyhedron& P) { return P.empty_interior(); }

// Intersection with a single halfspace followed by removal of redundant
// rows. Pruning lives here (and in rendering) only; bulk intersections are
// built row-concatenated since the inradius LP does not need irredundancy.
inline HPolyhedron clip(const HPolyhedron& P, const Halfspace& h) {
  std::vector<Halfspace> rows = P.rows();
  double len = norm(h.normal);
  if (len >= 1e-12) rows.emplace_back(scaled(h.normal, 1.0 / len), h.bound / len);

  HPolyhedron raw(P.dim(), rows);
  if (raw.empty()) return raw;

  rows = raw.rows();
  std::vector<bool> keep(rows.size(), true);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    LpProblem p(P.dim());
    p.objective = rows[i].normal;
    for (std::size_t j = 0; j < rows.size(); ++j)
      if (j != i && keep[j]) p.add_constraint(rows[j].normal, rows[j].bound);
    LpOutcome out = solve_lp(p);
    if (out.status == LpStatus::Optimal && out.value <= rows[i].bound + kEpsLp)
      keep[i] = false;
  }
  std::vector<Halfspace> pruned;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (keep[i]) pruned.push_back(rows[i]);
  return HPolyhedron(P.dim(), std::move(pruned));
}

}  // namespace kadets
