#pragma once

// Small dense vectors, tolerances and a deterministic RNG shared by all
// geometry modules. Dimensions 2..4 are the supported range; nothing here
// actually caps the dimension.

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace kadets {

inline constexpr double kEpsLp = 1e-9;   // LP feasibility / optimality
inline constexpr double kEpsGeo = 1e-7;  // geometric predicates
inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kPi = 3.14159265358979323846;

using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm(const Vec& a) { return std::sqrt(dot(a, a)); }

inline Vec add(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Vec sub(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline Vec scaled(Vec a, double s) {
  for (double& v : a) v *= s;
  return a;
}

inline Vec negated(Vec a) { return scaled(std::move(a), -1.0); }

inline Vec normalized(Vec a) {
  double n = norm(a);
  if (n == 0.0) throw std::invalid_argument("cannot normalize zero vector");
  return scaled(std::move(a), 1.0 / n);
}

inline bool all_finite(const Vec& a) {
  for (double v : a)
    if (!std::isfinite(v)) return false;
  return true;
}

inline double dist(const Vec& a, const Vec& b) { return norm(sub(a, b)); }

// Planar point used by the 2D-only modules (polygons, extension, Poincare
// disk). Kept separate from Vec so 2D code stays allocation-free.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double xx, double yy) : x(xx), y(yy) {}

  Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator-() const { return {-x, -y}; }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double dist(Vec2 a, Vec2 b) { return norm(a - b); }

inline Vec2 normalized(Vec2 a) {
  double n = norm(a);
  if (n == 0.0) throw std::invalid_argument("cannot normalize zero vector");
  return {a.x / n, a.y / n};
}

// right-hand perpendicular; for a CCW edge this points outward
inline Vec2 perp_right(Vec2 a) { return {a.y, -a.x}; }
inline Vec2 perp_left(Vec2 a) { return {-a.y, a.x}; }

inline Vec to_vec(Vec2 a) { return {a.x, a.y}; }
inline Vec2 to_vec2(const Vec& a) {
  if (a.size() != 2) throw std::invalid_argument("expected a 2D vector");
  return {a[0], a[1]};
}

// xoshiro256** seeded via splitmix64. Hand-rolled so that streams are
// reproducible independent of the standard library implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& w : state_) {
      x += 0x9e3779b97f4a7c15ULL;
      std::uint64_t z = x;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      w = z ^ (z >> 31);
    }
  }

  std::uint64_t next_u64() {
    auto rotl = [](std::uint64_t v, int k) {
      return (v << k) | (v >> (64 - k));
    };
    std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  double uniform01() {  // [0, 1)
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  int uniform_int(int lo, int hi) {  // inclusive range
    return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u = 0.0;
    while (u == 0.0) u = uniform01();
    double v = uniform01();
    double r = std::sqrt(-2.0 * std::log(u));
    spare_ = r * std::sin(2.0 * kPi * v);
    has_spare_ = true;
    return r * std::cos(2.0 * kPi * v);
  }

  Vec gaussian_vec(int dim) {
    Vec v(dim);
    for (double& c : v) c = normal();
    return v;
  }

  Vec unit_vector(int dim) {
    while (true) {
      Vec v = gaussian_vec(dim);
      double n = norm(v);
      if (n > 1e-12) return scaled(std::move(v), 1.0 / n);
    }
  }

 private:
  std::array<std::uint64_t, 4> state_{};
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace kadets
