#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "hypack/cell.hpp"
#include "hypack/packing.hpp"
#include "oracles.hpp"

using namespace hypack;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> p_samples(Family f, double hi, int n) {
  std::vector<double> ps;
  const double lo = min_p(f) + 0.05;
  for (int i = 0; i < n; ++i) ps.push_back(lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1)));
  return ps;
}

}  // namespace

TEST(Cell, ParamY) {
  EXPECT_NEAR(param_y(Family::Cube, 7), 0.61971198411858375, 1e-14);
  EXPECT_NEAR(param_y(Family::Octahedron, 5), 1.2133160985495821, 1e-14);
  // the rounded values 0.38404 and 1.47213 for y^2
  EXPECT_NEAR(std::pow(param_y(Family::Cube, 7), 2), 0.38404, 1e-5);
  EXPECT_NEAR(std::pow(param_y(Family::Octahedron, 5), 2), 1.47213, 1e-5);
}

TEST(Cell, CubeSevenDistances) {
  const TruncatedRegularCell c = build(Family::Cube, 7);
  EXPECT_EQ(c.n_vertices(), 8);
  EXPECT_EQ(c.side_faces.size(), 6u);
  EXPECT_NEAR(c.h, 1.0379929117181526, 1e-12);
  EXPECT_NEAR(c.w, 2.075985823436306, 1e-12);
  EXPECT_NEAR(c.t, 1.6706903537187181, 1e-12);
  ASSERT_TRUE(c.s.has_value());
  EXPECT_NEAR(*c.s, 1.4490747226775857, 1e-12);
  EXPECT_NEAR(c.s.value() - c.h, 0.41108, 1e-5);
  EXPECT_NEAR(c.volume / 48, 0.16297337, 1e-8);
  EXPECT_NEAR(c.face_area, kPi / 7, 1e-15);
}

TEST(Cell, OctahedronFiveDistances) {
  const TruncatedRegularCell c = build(Family::Octahedron, 5);
  EXPECT_EQ(c.n_vertices(), 6);
  EXPECT_EQ(c.side_faces.size(), 8u);
  EXPECT_NEAR(2 * c.h, 1.3825713090790279, 1e-12);
  EXPECT_NEAR(c.w, 1.7108237110166935, 1e-12);
  EXPECT_NEAR(c.t, 1.1697360352994606, 1e-12);
  EXPECT_FALSE(c.s.has_value());
  EXPECT_NEAR(c.volume / 48, 0.16596371, 1e-8);
  EXPECT_NEAR(c.face_area, 2 * kPi / 5, 1e-15);
}

TEST(Cell, FaceArea) {
  EXPECT_NEAR(face_area(Family::Octahedron, 6), 2 * kPi / 3, 1e-15);
  EXPECT_NEAR(face_area(Family::Cube, 12), kPi / 2, 1e-15);
}

TEST(Cell, HeightByTwoRoutes) {
  for (Family f : {Family::Octahedron, Family::Cube}) {
    for (double p : p_samples(f, 200, 400)) {
      const double h = build(f, p).h;
      const auto oracle = f == Family::Octahedron ? oracle::octahedron_closed_form(p) : oracle::cube_closed_form(p);
      EXPECT_NEAR(h, truncation_height(family_triple(f, p)), 1e-10) << to_string(f) << " p=" << p;
      EXPECT_NEAR(h, oracle.h, 1e-10) << to_string(f) << " p=" << p;
    }
  }
}

TEST(Cell, DistancesMatchClosedForms) {
  for (Family f : {Family::Octahedron, Family::Cube}) {
    for (double p : p_samples(f, 200, 100)) {
      const TruncatedRegularCell c = build(f, p);
      const auto o = f == Family::Octahedron ? oracle::octahedron_closed_form(p) : oracle::cube_closed_form(p);
      EXPECT_NEAR(c.y * c.y, o.y2, 1e-13);
      EXPECT_NEAR(c.w, o.w, 1e-9 * std::max(1.0, o.w));
      EXPECT_NEAR(c.t, o.t, 1e-9 * std::max(1.0, o.t));
      if (f == Family::Cube) {
        EXPECT_NEAR(*c.s, o.s, 1e-9 * std::max(1.0, o.s));
      }
    }
  }
}

TEST(Cell, WidthFromFacePlanes) {
  // w is the distance from a truncating plane, along the common perpendicular,
  // to a side face that does not contain the vertex
  for (double p : {5.0, 6.0, 9.5, 30.0}) {
    const TruncatedRegularCell c = build(Family::Octahedron, p);
    const LVec4 b5 = c.vertices[4];
    const LVec4 face{c.y, 1, 1, -1};
    EXPECT_NEAR(point_plane_distance(polar_projection(face, b5), face), c.w, 1e-10) << p;
  }
  for (double p : {7.0, 8.0, 12.5, 30.0}) {
    const TruncatedRegularCell c = build(Family::Cube, p);
    const LVec4 b6 = c.vertices[5];
    const LVec4 face{c.y, -1, 0, 0};
    EXPECT_NEAR(point_plane_distance(polar_projection(face, b6), face), c.w, 1e-10) << p;
  }
}

TEST(Cell, AdjacentTruncatingPlanesAreTwoHApart) {
  for (double p : {7.0, 8.0, 20.0}) {
    const TruncatedRegularCell c = build(Family::Cube, p);
    EXPECT_NEAR(plane_distance(c.vertices[0], c.vertices[1]), 2 * c.h, 1e-10) << p;
  }
  for (double p : {5.0, 7.0, 20.0}) {
    const TruncatedRegularCell c = build(Family::Octahedron, p);
    EXPECT_NEAR(plane_distance(c.vertices[0], c.vertices[1]), 2 * c.h, 1e-10) << p;
  }
}

TEST(Cell, TruncatingPlanesOrthogonalToIncidentFaces) {
  for (Family f : {Family::Octahedron, Family::Cube}) {
    const TruncatedRegularCell c = build(f, min_tiling_p(f) + 1.5);
    const int degree = f == Family::Octahedron ? 4 : 3;
    for (const LVec4& v : c.vertices) {
      EXPECT_EQ(classify(v), PointKind::Outer);
      int incident = 0;
      for (const LVec4& face : c.side_faces)
        if (std::abs(bilinear(v, face)) < 1e-12) ++incident;
      EXPECT_EQ(incident, degree);
    }
  }
}

TEST(Cell, DistanceOrdering) {
  for (Family f : {Family::Octahedron, Family::Cube}) {
    for (double p : p_samples(f, 500, 60)) {
      const TruncatedRegularCell c = build(f, p);
      EXPECT_GT(c.h, 0.0);
      EXPECT_LT(c.h, c.t) << p;
      EXPECT_LT(c.t, c.w) << p;
      if (c.s) {
        EXPECT_LT(c.h, *c.s) << p;
      }
    }
  }
}

TEST(Cell, DegeneratesAsPGrows) {
  for (Family f : {Family::Octahedron, Family::Cube}) {
    const TruncatedRegularCell c = build(f, 1e6);
    EXPECT_LT(c.h, 1e-5);
    EXPECT_LT(hyperball_piece_volume(c.face_area, c.h) / table_piece_divisor(f), 1e-5);
    EXPECT_NEAR(c.face_area, f == Family::Octahedron ? 2 * kPi : kPi, 1e-4);
    EXPECT_NEAR(c.volume / 48, 0.25096025, 2e-6);
  }
}

TEST(Cell, ContinuousInP) {
  for (Family f : {Family::Octahedron, Family::Cube}) {
    for (double p : p_samples(f, 100, 30)) {
      const TruncatedRegularCell a = build(f, p), b = build(f, p + 1e-8);
      EXPECT_NEAR(a.h, b.h, 1e-6);
      EXPECT_NEAR(a.w, b.w, 1e-6);
      EXPECT_NEAR(a.t, b.t, 1e-6);
      EXPECT_NEAR(a.volume, b.volume, 1e-6);
    }
  }
}

TEST(Cell, RangeErrors) {
  for (auto [f, p] : {std::pair{Family::Octahedron, 4.0}, std::pair{Family::Cube, 6.0},
                      std::pair{Family::Cube, 5.5}, std::pair{Family::Octahedron, -1.0}}) {
    try {
      build(f, p);
      FAIL() << p;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::OutOfRange);
    }
  }
  try {
    build(Family::Cube, std::nan(""));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonFinite);
  }
}

TEST(Cell, FamilyParsing) {
  EXPECT_EQ(parse_family("octahedron"), Family::Octahedron);
  EXPECT_EQ(parse_family("cube"), Family::Cube);
  EXPECT_FALSE(parse_family("dodecahedron"));
  EXPECT_EQ(to_string(Family::Cube), "cube");
}
