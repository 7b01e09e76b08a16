#pragma once

// 2D vertex representation and conversions from/to halfspace form. Used by
// the plane-extension algorithm, rendering and the Minkowski machinery.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "kadets/core.hpp"
#include "kadets/geometry.hpp"

namespace kadets {

struct PolygonV {
  std::vector<Vec2> vertices;       // strictly convex CCW traversal
  std::vector<bool> on_box;        // truncation artifact flags, parallel to vertices

  int size() const { return static_cast<int>(vertices.size()); }
};

struct BoundingBox2 {
  double x0, y0, x1, y1;

  HPolyhedron to_hpoly() const { return HPolyhedron::box({x0, y0}, {x1, y1}); }
  bool on_edge(Vec2 p, double tol = kEpsGeo) const {
    return std::abs(p.x - x0) <= tol || std::abs(p.x - x1) <= tol ||
           std::abs(p.y - y0) <= tol || std::abs(p.y - y1) <= tol;
  }
};

// All vertices of the (bounded) intersection P ∩ box, CCW, with collinear
// chains merged. Vertices landing on the box frame are flagged so callers
// can tell real facets from truncation artifacts.
inline PolygonV polygon_from_hrep(const HPolyhedron& P, const BoundingBox2& box) {
  if (P.dim() != 2) throw std::invalid_argument("polygon_from_hrep needs a 2D set");
  HPolyhedron clipped = P.intersect(box.to_hpoly());
  if (clipped.empty_interior())
    throw std::runtime_error("polygon_from_hrep: empty intersection with the box");

  const auto& rows = clipped.rows();
  std::vector<Vec2> pts;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      Vec2 ni = to_vec2(rows[i].normal), nj = to_vec2(rows[j].normal);
      double det = cross(ni, nj);
      if (std::abs(det) < 1e-12) continue;
      Vec2 p{(rows[i].bound * nj.y - rows[j].bound * ni.y) / det,
             (rows[j].bound * ni.x - rows[i].bound * nj.x) / det};
      if (clipped.contains({p.x, p.y}, 10 * kEpsGeo)) pts.push_back(p);
    }
  }
  if (pts.size() < 3) throw std::runtime_error("polygon_from_hrep: degenerate intersection");

  // order around the centroid, then dedupe and drop collinear vertices
  Vec2 c{0, 0};
  for (Vec2 p : pts) c = c + p;
  c = c * (1.0 / pts.size());
  std::sort(pts.begin(), pts.end(), [c](Vec2 a, Vec2 b) {
    return std::atan2(a.y - c.y, a.x - c.x) < std::atan2(b.y - c.y, b.x - c.x);
  });

  std::vector<Vec2> dedup;
  for (Vec2 p : pts) {
    if (dedup.empty() || dist(dedup.back(), p) > 1e-9) dedup.push_back(p);
  }
  while (dedup.size() > 1 && dist(dedup.front(), dedup.back()) <= 1e-9) dedup.pop_back();

  std::vector<Vec2> hull;
  int n = static_cast<int>(dedup.size());
  for (int i = 0; i < n; ++i) {
    Vec2 prev = dedup[(i + n - 1) % n], cur = dedup[i], next = dedup[(i + 1) % n];
    if (cross(cur - prev, next - cur) > 1e-9 * (1.0 + norm(next - prev)))
      hull.push_back(cur);
  }
  if (hull.size() < 3) throw std::runtime_error("polygon_from_hrep: degenerate intersection");

  PolygonV poly;
  poly.vertices = std::move(hull);
  poly.on_box.reserve(poly.vertices.size());
  for (Vec2 p : poly.vertices) poly.on_box.push_back(box.on_edge(p));
  return poly;
}

inline HPolyhedron hrep_from_polygon(const PolygonV& poly) {
  std::vector<Halfspace> rows;
  int n = poly.size();
  for (int i = 0; i < n; ++i) {
    Vec2 a = poly.vertices[i], b = poly.vertices[(i + 1) % n];
    Vec2 nrm = perp_right(normalized(b - a));  // outward for CCW
    rows.emplace_back(to_vec(nrm), dot(nrm, a));
  }
  return HPolyhedron(2, std::move(rows));
}

inline double polygon_area(const PolygonV& poly) {
  double a = 0.0;
  int n = poly.size();
  for (int i = 0; i < n; ++i) a += cross(poly.vertices[i], poly.vertices[(i + 1) % n]);
  return 0.5 * a;
}

inline bool polygon_contains(const PolygonV& poly, Vec2 p, double tol = kEpsGeo) {
  int n = poly.size();
  for (int i = 0; i < n; ++i) {
    Vec2 a = poly.vertices[i], b = poly.vertices[(i + 1) % n];
    if (cross(b - a, p - a) < -tol * norm(b - a)) return false;
  }
  return true;
}

inline double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  Vec2 ab = b - a;
  double len2 = dot(ab, ab);
  if (len2 < 1e-24) return dist(p, a);
  double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return dist(p, a + ab * t);
}

// Euclidean distance to a convex polygon given by its cyclic vertex list
// (degenerate cases with < 3 vertices are handled as segment / point).
inline double point_polygon_distance(Vec2 p, const std::vector<Vec2>& verts) {
  if (verts.empty()) return 0.0;
  if (verts.size() == 1) return dist(p, verts[0]);
  if (verts.size() == 2) return point_segment_distance(p, verts[0], verts[1]);
  bool inside = true;
  double best = kInf;
  int n = static_cast<int>(verts.size());
  for (int i = 0; i < n; ++i) {
    Vec2 a = verts[i], b = verts[(i + 1) % n];
    if (cross(b - a, p - a) < 0) inside = false;
    best = std::min(best, point_segment_distance(p, a, b));
  }
  return inside ? 0.0 : best;
}

}  // namespace kadets
