#pragma once

// Projective (Beltrami-Cayley-Klein) model of hyperbolic 3-space.
//
// Points and planes live in a real 4-space with the signature (1,3) form
//   <x, y> = -x0*y0 + x1*y1 + x2*y2 + x3*y3.
// A vector with negative norm is a proper (inner) point, a null vector lies on
// the absolute, and a vector with positive norm is an outer point. A plane is
// stored as its pole: the plane pol(b) = { x : <x, b> = 0 }.
//
// Nothing here normalizes its arguments; every formula divides by the norms it
// needs, so all results are invariant under rescaling of the inputs.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string>

#include "hypack/error.hpp"

namespace hypack {

struct LVec4 {
  std::array<double, 4> x{};

  constexpr LVec4() = default;
  constexpr LVec4(double x0, double x1, double x2, double x3) : x{x0, x1, x2, x3} {}

  constexpr double operator[](std::size_t i) const { return x[i]; }
  constexpr double& operator[](std::size_t i) { return x[i]; }

  friend constexpr LVec4 operator+(const LVec4& a, const LVec4& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
  }
  friend constexpr LVec4 operator-(const LVec4& a, const LVec4& b) {
    return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
  }
  friend constexpr LVec4 operator*(double s, const LVec4& a) {
    return {s * a[0], s * a[1], s * a[2], s * a[3]};
  }
  friend constexpr bool operator==(const LVec4&, const LVec4&) = default;

  double max_abs() const {
    return std::max({std::abs(x[0]), std::abs(x[1]), std::abs(x[2]), std::abs(x[3])});
  }
  bool is_zero() const { return max_abs() == 0.0; }
};

enum class PointKind { Inner, Boundary, Outer };

namespace minkowski {

/// Relative tolerance on <v,v> / max|v_i|^2 below which a vector counts as null.
inline constexpr double kBoundaryTol = 1e-9;
/// Distance quotients in [1 - kCoshGuard, 1] are clamped to 1.
inline constexpr double kCoshGuard = 1e-9;

}  // namespace minkowski

constexpr double bilinear(const LVec4& a, const LVec4& b) {
  return -a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

constexpr double norm(const LVec4& v) { return bilinear(v, v); }

inline PointKind classify(const LVec4& v, double tol = minkowski::kBoundaryTol) {
  const double scale = v.max_abs();
  if (scale == 0.0) throw Error(ErrorKind::ZeroVector, "classify: zero vector");
  if (!std::isfinite(scale)) throw Error(ErrorKind::NonFinite, "classify: non-finite component");
  const double n = norm(v) / (scale * scale);
  if (std::abs(n) <= tol) return PointKind::Boundary;
  return n < 0.0 ? PointKind::Inner : PointKind::Outer;
}

/// True when a and b span the same projective point (or plane).
inline bool projectively_equal(const LVec4& a, const LVec4& b, double tol = 1e-12) {
  const double sa = a.max_abs();
  const double sb = b.max_abs();
  if (sa == 0.0 || sb == 0.0) return false;
  // align signs on the largest component of a
  std::size_t k = 0;
  for (std::size_t i = 1; i < 4; ++i)
    if (std::abs(a[i]) > std::abs(a[k])) k = i;
  const double sign = (a[k] * b[k] < 0.0) ? -1.0 : 1.0;
  for (std::size_t i = 0; i < 4; ++i)
    if (std::abs(a[i] / sa - sign * b[i] / sb) > tol) return false;
  return true;
}

namespace detail {

inline void require_kind(const LVec4& v, PointKind expected, const char* who) {
  const PointKind got = classify(v);
  if (got != expected) {
    const char* names[] = {"inner", "boundary", "outer"};
    throw Error(ErrorKind::WrongClassification,
                std::string(who) + ": expected " + names[static_cast<int>(expected)] +
                    " vector, got " + names[static_cast<int>(got)]);
  }
}

// arccosh with the tangency guard: [1 - guard, 1] maps to 0, anything lower throws.
inline double guarded_acosh(double q, ErrorKind below_kind, const char* who) {
  if (!std::isfinite(q)) throw Error(ErrorKind::NonFinite, std::string(who) + ": non-finite quotient");
  if (q < 1.0 - minkowski::kCoshGuard)
    throw Error(below_kind, std::string(who) + ": cosh quotient " + std::to_string(q) + " < 1");
  return q <= 1.0 ? 0.0 : std::acosh(q);
}

}  // namespace detail

/// Hyperbolic distance between two proper points.
inline double point_distance(const LVec4& p, const LVec4& q) {
  detail::require_kind(p, PointKind::Inner, "point_distance");
  detail::require_kind(q, PointKind::Inner, "point_distance");
  const double quotient = std::abs(bilinear(p, q)) / std::sqrt(norm(p) * norm(q));
  return detail::guarded_acosh(quotient, ErrorKind::InconsistentInput, "point_distance");
}

/// Distance from a proper point to the plane pol(b).
inline double point_plane_distance(const LVec4& p, const LVec4& b) {
  detail::require_kind(p, PointKind::Inner, "point_plane_distance");
  detail::require_kind(b, PointKind::Outer, "point_plane_distance");
  return std::asinh(std::abs(bilinear(p, b)) / std::sqrt(-norm(p) * norm(b)));
}

/// Length of the common perpendicular of two ultraparallel planes pol(a), pol(b).
/// Intersecting planes and asymptotically parallel planes raise distinct errors.
inline double plane_distance(const LVec4& a, const LVec4& b) {
  detail::require_kind(a, PointKind::Outer, "plane_distance");
  detail::require_kind(b, PointKind::Outer, "plane_distance");
  if (projectively_equal(a, b)) return 0.0;
  const double quotient = std::abs(bilinear(a, b)) / std::sqrt(norm(a) * norm(b));
  if (quotient <= 1.0) {
    if (quotient >= 1.0 - minkowski::kCoshGuard)
      throw Error(ErrorKind::ParallelPlanes, "plane_distance: planes meet on the absolute");
    throw Error(ErrorKind::IntersectingPlanes,
                "plane_distance: planes intersect (cosh quotient " + std::to_string(quotient) + ")");
  }
  return std::acosh(quotient);
}

/// Foot of p on the polar plane of the outer point b: p<b,b> - b<p,b>.
inline LVec4 polar_projection(const LVec4& p, const LVec4& b_pole) {
  detail::require_kind(b_pole, PointKind::Outer, "polar_projection");
  if (p.is_zero()) throw Error(ErrorKind::ZeroVector, "polar_projection: zero point");
  const LVec4 foot = norm(b_pole) * p - bilinear(p, b_pole) * b_pole;
  const double scale = p.max_abs() * b_pole.max_abs() * b_pole.max_abs();
  if (foot.max_abs() <= 1e-14 * scale)
    throw Error(ErrorKind::Degenerate, "polar_projection: point coincides with the pole");
  return foot;
}

}  // namespace hypack
