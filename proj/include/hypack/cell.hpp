#pragma once

// One truncated regular cell of the {3,4,p} (octahedron) or {4,3,p} (cube)
// tiling. The Euclidean solid is centred at the origin of the projective
// model; its vertices B_i are outer points and each is cut off by its polar
// plane beta_i = pol(B_i), which is then the base plane of a hyperball.
//
// Characteristic distances (all hyperbolic lengths):
//   h  half the distance between the truncating planes of adjacent vertices,
//   w  distance from beta_i to a side face not containing B_i,
//   t  distance from beta_i to the cell centre,
//   s  (cube only) half the distance between face-diagonal truncating planes.

#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypack/error.hpp"
#include "hypack/lobachevsky.hpp"
#include "hypack/minkowski.hpp"
#include "hypack/orthoscheme.hpp"

namespace hypack {

enum class Family { Octahedron, Cube };

constexpr std::string_view to_string(Family f) {
  return f == Family::Octahedron ? "octahedron" : "cube";
}

inline std::optional<Family> parse_family(std::string_view s) {
  if (s == "octahedron") return Family::Octahedron;
  if (s == "cube") return Family::Cube;
  return std::nullopt;
}

/// Real p must exceed this bound for the vertices to be outer points.
constexpr double min_p(Family f) { return f == Family::Octahedron ? 4.0 : 6.0; }

/// Smallest integer p for which the cell actually tiles space.
constexpr int min_tiling_p(Family f) { return f == Family::Octahedron ? 5 : 7; }

/// Number of truncated vertices (= number of hyperballs per cell).
constexpr int vertex_count(Family f) { return f == Family::Octahedron ? 6 : 8; }

/// Divisor of the piece-volume column in the published tables.
constexpr int table_piece_divisor(Family f) { return f == Family::Octahedron ? 8 : 6; }

/// Octahedron {3,4,p} is dual to {p,4,3}; cube {4,3,p} is dual to {p,3,4}.
constexpr SchlafliTriple family_triple(Family f, double p) {
  return f == Family::Octahedron ? SchlafliTriple{p, 4.0, 3.0} : SchlafliTriple{p, 3.0, 4.0};
}

inline OrthoschemeAngles family_angles(Family f, double p) {
  const SchlafliTriple t = family_triple(f, p);
  constexpr double pi = std::numbers::pi;
  return {pi / t.p, pi / t.q, pi / t.r};
}

struct TruncatedRegularCell {
  Family family = Family::Octahedron;
  double p = 0.0;
  double y = 0.0;
  std::vector<LVec4> vertices;    // poles of the truncating planes
  std::vector<LVec4> side_faces;  // poles of the side-face planes
  double h = 0.0;
  double w = 0.0;
  double t = 0.0;
  std::optional<double> s;
  double face_area = 0.0;  // one truncating polygon
  double volume = 0.0;

  int n_vertices() const { return static_cast<int>(vertices.size()); }
};

namespace detail {

inline void require_admissible(Family f, double p, const char* who) {
  if (!std::isfinite(p)) throw Error(ErrorKind::NonFinite, std::string(who) + ": non-finite p");
  if (!(p > min_p(f))) {
    throw Error(ErrorKind::OutOfRange, std::string(who) + ": p outside admissible range (p > " +
                                           std::to_string(static_cast<int>(min_p(f))) + " required)");
  }
}

}  // namespace detail

/// Euclidean vertex coordinate y of the cell in the projective model.
/// Octahedron: y^2 = (3c+1)/(c+1); cube: y^2 = c/(c+1), with c = cos(2 pi / p).
inline double param_y(Family f, double p) {
  detail::require_admissible(f, p, "param_y");
  const double c = std::cos(2.0 * std::numbers::pi / p);
  const double y2 = f == Family::Octahedron ? (3.0 * c + 1.0) / (c + 1.0) : c / (c + 1.0);
  return std::sqrt(y2);
}

/// Area of one truncating polygon: a square (octahedron) or triangle (cube)
/// whose angles all equal the dihedral angle 2 pi / p.
inline double face_area(Family f, double p) {
  detail::require_admissible(f, p, "face_area");
  constexpr double pi = std::numbers::pi;
  const double area = f == Family::Octahedron ? 2.0 * pi * (p - 4.0) / p : pi * (p - 6.0) / p;
  if (!(area > 0.0)) throw Error(ErrorKind::OutOfRange, "face_area: non-positive area");
  return area;
}

inline std::vector<LVec4> cell_vertices(Family f, double y) {
  if (f == Family::Octahedron) {
    return {{1, y, 0, 0}, {1, 0, y, 0}, {1, -y, 0, 0}, {1, 0, -y, 0}, {1, 0, 0, y}, {1, 0, 0, -y}};
  }
  return {{1, y, -y, -y}, {1, y, y, -y}, {1, -y, y, -y}, {1, -y, -y, -y},
          {1, y, -y, y},  {1, y, y, y},  {1, -y, y, y},  {1, -y, -y, y}};
}

// Face plane e.x = y (x0 = 1) has pole (y, e) under the bilinear form.
inline std::vector<LVec4> cell_side_faces(Family f, double y) {
  std::vector<LVec4> faces;
  if (f == Family::Octahedron) {
    for (double a : {1.0, -1.0})
      for (double b : {1.0, -1.0})
        for (double c : {1.0, -1.0}) faces.push_back({y, a, b, c});
  } else {
    for (int axis = 1; axis <= 3; ++axis)
      for (double sgn : {1.0, -1.0}) {
        LVec4 v{y, 0, 0, 0};
        v[axis] = sgn;
        faces.push_back(v);
      }
  }
  return faces;
}

inline TruncatedRegularCell build(Family f, double p, LobachevskyFn L = &lobachevsky) {
  detail::require_admissible(f, p, "build");
  constexpr double pi = std::numbers::pi;

  TruncatedRegularCell cell;
  cell.family = f;
  cell.p = p;
  cell.y = param_y(f, p);
  cell.vertices = cell_vertices(f, cell.y);
  cell.side_faces = cell_side_faces(f, cell.y);

  const double y2 = cell.y * cell.y;
  const double c = std::cos(2.0 * pi / p);
  const double sin_half = std::sin(pi / p);  // 1 - c = 2 sin^2(pi/p), kept exact for large p

  const LVec4 centre{1, 0, 0, 0};
  if (f == Family::Octahedron) {
    // cosh 2h = 1/(y^2 - 1)  <=>  sinh h = sin(pi/p) / sqrt(2c)
    cell.h = std::asinh(sin_half / std::sqrt(2.0 * c));
    cell.w = std::asinh(std::sqrt((y2 * y2 + 3.0) / ((3.0 - y2) * (y2 - 1.0))));
    cell.t = point_distance(centre, polar_projection(centre, cell.vertices[4]));
  } else {
    // cosh 2h = (1 - y^2)/(3y^2 - 1)  <=>  sinh h = sin(pi/p) sqrt(2 / (2c - 1))
    cell.h = std::asinh(sin_half * std::sqrt(2.0 / (2.0 * c - 1.0)));
    cell.w = std::asinh(std::sqrt((3.0 * y2 * y2 + 1.0) / ((1.0 - 3.0 * y2) * (y2 - 1.0))));
    cell.t = point_distance(centre, polar_projection(centre, cell.vertices[1]));
    cell.s = 0.5 * plane_distance(cell.vertices[0], cell.vertices[2]);
  }
  cell.face_area = face_area(f, p);
  cell.volume = 48.0 * orthoscheme_volume(family_angles(f, p), L);
  return cell;
}

}  // namespace hypack
