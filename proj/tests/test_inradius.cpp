#include <catch2/catch_amalgamated.hpp>

#include "kadets/geometry.hpp"
#include "kadets/inradius.hpp"

using namespace kadets;

namespace {

HPolyhedron square01() { return HPolyhedron::box({0.0, 0.0}, {1.0, 1.0}); }
HPolyhedron square_pm1() { return HPolyhedron::box({-1.0, -1.0}, {1.0, 1.0}); }

// every row of C must admit the scaled copy: n.t + h * support(B, n) <= b
void check_witness(const HPolyhedron& B, const HPolyhedron& C, const InradiusResult& r) {
  REQUIRE(r.status == InradiusStatus::Finite);
  REQUIRE(r.witness.has_value());
  for (const Halfspace& row : C.rows())
    CHECK(dot(row.normal, *r.witness) + r.h * support(B, row.normal) <=
          row.bound + kEpsGeo);
}

}  // namespace

TEST_CASE("identity case gives coefficient one and zero translation", "[inradius]") {
  HPolyhedron B = square_pm1();  // contains the origin
  InradiusResult r = relative_inradius(B, B);
  REQUIRE(r.status == InradiusStatus::Finite);
  CHECK(r.h == Catch::Approx(1.0).margin(kEpsLp));
  CHECK(norm(*r.witness) <= 1e-7);
  check_witness(B, B, r);
}

TEST_CASE("width-limited half square", "[inradius]") {
  HPolyhedron B = square01();
  HPolyhedron C = HPolyhedron::box({0.0, 0.0}, {0.5, 1.0});
  InradiusResult r = relative_inradius(B, C);
  CHECK(r.h == Catch::Approx(0.5).margin(kEpsLp));
  check_witness(B, C, r);
}

TEST_CASE("empty target reports minus infinity", "[inradius]") {
  HPolyhedron B = square01();
  HPolyhedron C = HPolyhedron::from_rows(2, {{{1.0, 0.0}, -1.0}, {{-1.0, 0.0}, -1.0}});
  InradiusResult r = relative_inradius(B, C);
  CHECK(r.status == InradiusStatus::Empty);
  CHECK(r.h == -kInf);
}

TEST_CASE("cone target is unbounded", "[inradius]") {
  HPolyhedron B = square01();
  HPolyhedron quadrant = HPolyhedron::from_rows(2, {{{-1.0, 0.0}, 0.0}, {{0.0, -1.0}, 0.0}});
  InradiusResult r = relative_inradius(B, quadrant);
  CHECK(r.status == InradiusStatus::Unbounded);
  CHECK(r.h == kInf);
}

TEST_CASE("degenerate B is rejected", "[inradius]") {
  HPolyhedron halfplane = HPolyhedron::from_rows(2, {{{0.0, 1.0}, 0.0}});
  HPolyhedron flat = HPolyhedron::from_rows(2, {{{1.0, 0.0}, 0.0}, {{-1.0, 0.0}, 0.0}});
  CHECK_THROWS_AS(relative_inradius(halfplane, square01()), std::invalid_argument);
  CHECK_THROWS_AS(relative_inradius(flat, square01()), std::invalid_argument);
}

TEST_CASE("translation invariance and homogeneity", "[inradius]") {
  HPolyhedron B = square_pm1();
  HPolyhedron C = HPolyhedron::from_rows(
      2, {{{1.0, 0.3}, 1.0}, {{-0.4, 1.0}, 0.8}, {{-1.0, -0.2}, 0.9}, {{0.2, -1.0}, 1.1}});
  double base = relative_inradius(B, C).h;
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    Vec t = {rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)};
    CHECK(relative_inradius(B, C.translated(t)).h == Catch::Approx(base).margin(1e-7));

    double s = rng.uniform(0.1, 10.0);
    std::vector<Halfspace> scaled_rows = C.rows();
    for (Halfspace& h : scaled_rows) h.bound *= s;  // sC for 0-based rows
    CHECK(relative_inradius(B, HPolyhedron(2, scaled_rows)).h ==
          Catch::Approx(s * base).margin(1e-6));
  }
}

TEST_CASE("monotone under bound relaxation", "[inradius]") {
  HPolyhedron B = square_pm1();
  Rng rng(13);
  for (int i = 0; i < 20; ++i) {
    std::vector<Halfspace> rows;
    for (int j = 0; j < 5; ++j) rows.emplace_back(rng.unit_vector(2), rng.uniform(0.2, 1.0));
    HPolyhedron C(2, rows);
    for (Halfspace& h : rows) h.bound += rng.uniform(0.0, 0.5);
    HPolyhedron C2(2, rows);
    CHECK(relative_inradius(B, C).h <= relative_inradius(B, C2).h + kEpsLp);
  }
}

TEST_CASE("offset family evaluates shifted bounds", "[inradius]") {
  HPolyhedron B = square01();
  OffsetFamily F(square01());

  Vec zero(4, 0.0);
  CHECK(inradius_at_offset(B, F, zero) ==
        Catch::Approx(relative_inradius(B, F.base).h).margin(kEpsLp));

  // shrink all four bounds by 1/4: a square of side 1/2 remains
  Vec quarter(4, 0.25);
  CHECK(inradius_at_offset(B, F, quarter) == Catch::Approx(0.5).margin(kEpsLp));

  Vec inconsistent = {2.0, 0.0, 2.0, 0.0};
  CHECK(inradius_at_offset(B, F, inconsistent) == -kInf);
}

TEST_CASE("zero residual for coincident offsets", "[inradius]") {
  HPolyhedron B = square01();
  OffsetFamily F(square01());
  Vec y(4);
  Rng rng(17);
  for (double& v : y) v = rng.uniform(-0.2, 0.2);
  CHECK(concavity_residual(B, F, y, y) == Catch::Approx(0.0).margin(kEpsLp));
}

TEST_CASE("midpoint concavity on random offset pairs", "[inradius]") {
  HPolyhedron B = square_pm1();
  std::vector<Halfspace> rows;
  Rng rng(29);
  for (int j = 0; j < 6; ++j) rows.emplace_back(rng.unit_vector(2), rng.uniform(0.5, 1.5));
  OffsetFamily F{HPolyhedron(2, rows)};
  int m = F.rows();
  for (int i = 0; i < 100; ++i) {
    Vec y1(m), y2(m);
    for (double& v : y1) v = rng.uniform(-0.6, 0.6);
    for (double& v : y2) v = rng.uniform(-0.6, 0.6);
    double res = concavity_residual(B, F, y1, y2);
    CHECK(res >= -kEpsLp);
  }
}

TEST_CASE("translate intersections encoded as offsets stay concave", "[inradius]") {
  // two unit squares translated against each other; one offset coordinate
  // per (row, translate) pair via y_j = -n_j . t_i
  HPolyhedron B = square_pm1();
  HPolyhedron C1 = HPolyhedron::box({-1.0, -1.0}, {1.0, 1.0});
  HPolyhedron C2 = HPolyhedron::box({-0.8, -0.9}, {1.1, 0.9});
  HPolyhedron inter = C1.intersect(C2);
  OffsetFamily F(inter);

  Rng rng(31);
  auto offsets_for = [&](Vec2 t1, Vec2 t2) {
    Vec y;
    const auto& rows = inter.rows();
    for (std::size_t j = 0; j < rows.size(); ++j) {
      Vec2 n = to_vec2(rows[j].normal);
      Vec2 t = j < C1.rows().size() ? t1 : t2;
      y.push_back(-dot(n, t));
    }
    return y;
  };
  for (int i = 0; i < 50; ++i) {
    Vec2 a1{rng.uniform(-0.4, 0.4), rng.uniform(-0.4, 0.4)};
    Vec2 a2{rng.uniform(-0.4, 0.4), rng.uniform(-0.4, 0.4)};
    Vec2 b1{rng.uniform(-0.4, 0.4), rng.uniform(-0.4, 0.4)};
    Vec2 b2{rng.uniform(-0.4, 0.4), rng.uniform(-0.4, 0.4)};
    CHECK(concavity_residual(B, F, offsets_for(a1, a2), offsets_for(b1, b2)) >= -kEpsLp);
  }
}

TEST_CASE("finite-domain segments stay feasible", "[inradius]") {
  HPolyhedron B = square_pm1();
  std::vector<Halfspace> rows;
  Rng rng(41);
  for (int j = 0; j < 5; ++j) rows.emplace_back(rng.unit_vector(2), rng.uniform(0.5, 1.5));
  OffsetFamily F{HPolyhedron(2, rows)};
  int m = F.rows();
  int tested = 0;
  for (int i = 0; i < 200 && tested < 40; ++i) {
    Vec y1(m), y2(m);
    for (double& v : y1) v = rng.uniform(-1.0, 1.0);
    for (double& v : y2) v = rng.uniform(-1.0, 1.0);
    if (inradius_at_offset(B, F, y1) == -kInf) continue;
    if (inradius_at_offset(B, F, y2) == -kInf) continue;
    ++tested;
    for (double lam : {0.25, 0.5, 0.75}) {
      Vec mid(m);
      for (int j = 0; j < m; ++j) mid[j] = lam * y1[j] + (1 - lam) * y2[j];
      CHECK(inradius_at_offset(B, F, mid) > -kInf);
    }
  }
  CHECK(tested > 0);
}

TEST_CASE("witness check on random instances", "[inradius]") {
  Rng rng(53);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Halfspace> brows;
    Vec c = {rng.uniform(-0.5, 0.5), rng.uniform(-0.5, 0.5)};
    for (int j = 0; j < 6; ++j) {
      Vec u = rng.unit_vector(2);
      brows.emplace_back(u, dot(u, c) + rng.uniform(0.5, 1.5));
    }
    HPolyhedron B(2, brows);
    if (!B.is_body()) continue;
    std::vector<Halfspace> crows;
    for (int j = 0; j < 5; ++j) crows.emplace_back(rng.unit_vector(2), rng.uniform(0.3, 1.2));
    HPolyhedron C(2, crows);
    InradiusResult r = relative_inradius(B, C);
    if (r.status != InradiusStatus::Finite) continue;
    CHECK(r.h >= -kEpsLp);
    for (const Halfspace& row : C.rows())
      CHECK(dot(row.normal, *r.witness) + r.h * support(B, row.normal) <=
            row.bound + kEpsGeo);
  }
}
