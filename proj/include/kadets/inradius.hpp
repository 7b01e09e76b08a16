#pragma once

// Relative inradius: the largest h >= 0 such that some translate of h*B
// fits inside C, solved as one joint LP in (t, h). Containment of h*B + t
// in a halfspace {n.x <= b} is exactly n.t + h * sup_{x in B} n.x <= b,
// so the feasible (t, h) region is a polyhedron and the LP value is the
// supremum. Empty C gives -inf, cells with directions to recede give +inf.

#include <optional>
#include <stdexcept>
#include <utility>

#include "kadets/core.hpp"
#include "kadets/geometry.hpp"

namespace kadets {

enum class InradiusStatus { Finite, Empty, Unbounded };

struct InradiusResult {
  double h = 0.0;  // -inf when Empty, +inf when Unbounded
  std::optional<Vec> witness;
  InradiusStatus status = InradiusStatus::Finite;
};

inline InradiusResult relative_inradius(const HPolyhedron& B, const HPolyhedron& C) {
  if (!B.is_body())
    throw std::invalid_argument("relative_inradius: B must be bounded with nonempty interior");
  if (C.dim() != B.dim()) throw std::invalid_argument("dimension mismatch");

  const int d = B.dim();
  LpProblem p(d + 1);  // variables (t, h)
  p.objective[d] = 1.0;
  for (const Halfspace& row : C.rows()) {
    Vec lhs = row.normal;
    lhs.push_back(support(B, row.normal));
    p.add_constraint(std::move(lhs), row.bound);
  }
  {
    Vec lhs(d + 1, 0.0);
    lhs[d] = -1.0;
    p.add_constraint(std::move(lhs), 0.0);  // h >= 0
  }

  LpOutcome out = solve_lp(p);
  InradiusResult res;
  switch (out.status) {
    case LpStatus::Infeasible:
      res.h = -kInf;
      res.status = InradiusStatus::Empty;
      break;
    case LpStatus::Unbounded:
      res.h = kInf;
      res.status = InradiusStatus::Unbounded;
      break;
    case LpStatus::Optimal:
      res.h = out.value;
      res.status = InradiusStatus::Finite;
      res.witness = Vec(out.point.begin(), out.point.begin() + d);
      break;
  }
  return res;
}

// The family C(y): base rows with bounds shifted to b_j - y_j.
struct OffsetFamily {
  HPolyhedron base;

  explicit OffsetFamily(HPolyhedron c) : base(std::move(c)) {}
  int rows() const { return static_cast<int>(base.rows().size()); }

  HPolyhedron at(const Vec& y) const { return base.shifted(y); }
};

inline double inradius_at_offset(const HPolyhedron& B, const OffsetFamily& F, const Vec& y) {
  return relative_inradius(B, F.at(y)).h;
}

// Midpoint concavity defect r((y1+y2)/2) - (r(y1)+r(y2))/2. Concavity of
// r in the offsets means this is >= 0 up to LP tolerance whenever both
// endpoint values are finite; a -inf endpoint makes the claim vacuous and
// is reported as +inf.
inline double concavity_residual(const HPolyhedron& B, const OffsetFamily& F,
                                 const Vec& y1, const Vec& y2) {
  double r1 = inradius_at_offset(B, F, y1);
  double r2 = inradius_at_offset(B, F, y2);
  if (r1 == -kInf || r2 == -kInf) return kInf;
  if (r1 == kInf || r2 == kInf)
    throw std::invalid_argument("concavity_residual: endpoint value is +inf");
  Vec mid(y1.size());
  for (std::size_t i = 0; i < mid.size(); ++i) mid[i] = 0.5 * (y1[i] + y2[i]);
  double rm = inradius_at_offset(B, F, mid);
  if (rm == kInf) return kInf;
  if (rm == -kInf) return -kInf;  // would contradict convexity of the domain
  return rm - 0.5 * (r1 + r2);
}

}  // namespace kadets
