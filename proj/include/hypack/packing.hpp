#pragma once

// Hyperball packings inside one truncated cell.
//
// Every hyperball is centred on a truncating plane; the part inside the cell
// is the slab over the truncating polygon, whose volume is Bolyai's
//   V(A, h) = A/4 * (sinh 2h + 2h)     (curvature -1).
// A packing variant is a multiset of heights, each an affine function of the
// cell distances h, t and the blow-up parameter x. The density is the sum of
// slab volumes over the cell volume. The per-variant height tables below are
// the only place the variants differ.

#include <algorithm>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hypack/cell.hpp"
#include "hypack/error.hpp"

namespace hypack {

enum class Variant { Congruent, Delta1, Delta2, Delta3 };

constexpr std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::Congruent: return "congruent";
    case Variant::Delta1: return "delta1";
    case Variant::Delta2: return "delta2";
    case Variant::Delta3: return "delta3";
  }
  return "?";
}

inline std::optional<Variant> parse_variant(std::string_view s) {
  if (s == "congruent") return Variant::Congruent;
  if (s == "delta1") return Variant::Delta1;
  if (s == "delta2") return Variant::Delta2;
  if (s == "delta3") return Variant::Delta3;
  return std::nullopt;
}

constexpr bool variant_defined(Family f, Variant v) {
  return !(f == Family::Octahedron && v == Variant::Delta3);
}

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const { return hi - lo; }
  bool contains(double v, double slack = 0.0) const { return v >= lo - slack && v <= hi + slack; }
};

/// One packing arrangement: cell family and parameter, variant, blow-up x.
struct PackingConfig {
  Family family = Family::Octahedron;
  double p = 0.0;
  Variant variant = Variant::Congruent;
  double x = 0.0;
};

/// `multiplicity` hyperballs of height coef_h*h + coef_t*t + coef_x*x.
struct HeightTerm {
  int multiplicity;
  double coef_h;
  double coef_t;
  double coef_x;

  double height(double h, double t, double x) const { return coef_h * h + coef_t * t + coef_x * x; }
};

namespace detail {

inline constexpr HeightTerm kOctaCongruent[] = {{6, 1, 0, 0}};
inline constexpr HeightTerm kOctaDelta1[] = {{2, 1, 0, 1}, {4, 1, 0, -1}};
inline constexpr HeightTerm kOctaDelta2[] = {{1, 0, 1, 1}, {1, 0, 1, -1}, {4, 2, -1, -1}};
inline constexpr HeightTerm kCubeCongruent[] = {{8, 1, 0, 0}};
inline constexpr HeightTerm kCubeDelta1[] = {{2, 1, 0, 1}, {6, 1, 0, -1}};
inline constexpr HeightTerm kCubeDelta2[] = {{1, 0, 1, 1}, {1, 0, 1, -1}, {3, 2, -1, -1}, {3, 2, -1, 1}};
inline constexpr HeightTerm kCubeDelta3[] = {{4, 1, 0, 1}, {4, 1, 0, -1}};

inline constexpr double kIntervalSlack = 1e-12;

inline void require_defined(Family f, Variant v) {
  if (!variant_defined(f, v)) {
    throw Error(ErrorKind::VariantMismatch, std::string(to_string(v)) + " is not defined for the " +
                                                std::string(to_string(f)) + " family");
  }
}

}  // namespace detail

inline std::span<const HeightTerm> height_table(Family f, Variant v) {
  detail::require_defined(f, v);
  if (f == Family::Octahedron) {
    switch (v) {
      case Variant::Congruent: return detail::kOctaCongruent;
      case Variant::Delta1: return detail::kOctaDelta1;
      case Variant::Delta2: return detail::kOctaDelta2;
      case Variant::Delta3: break;
    }
  } else {
    switch (v) {
      case Variant::Congruent: return detail::kCubeCongruent;
      case Variant::Delta1: return detail::kCubeDelta1;
      case Variant::Delta2: return detail::kCubeDelta2;
      case Variant::Delta3: return detail::kCubeDelta3;
    }
  }
  throw Error(ErrorKind::VariantMismatch, "height_table: unreachable");
}

/// Volume of the half hyperball of height h over a polygon of the given area.
inline double hyperball_piece_volume(double area, double h) {
  if (!(area >= 0.0) || !(h >= 0.0))
    throw Error(ErrorKind::OutOfRange, "hyperball_piece_volume: area and height must be non-negative");
  return 0.25 * area * (std::sinh(2.0 * h) + 2.0 * h);
}

/// d/dh of hyperball_piece_volume.
inline double hyperball_piece_volume_dh(double area, double h) {
  return 0.25 * area * (2.0 * std::cosh(2.0 * h) + 2.0);
}

/// Admissible blow-up interval [0, x_max]; nullopt when x_max < 0, i.e. the
/// variant does not occur for this cell.
inline std::optional<Interval> x_interval(const TruncatedRegularCell& cell, Variant v) {
  detail::require_defined(cell.family, v);
  const double h = cell.h;
  const double t = cell.t;
  const double w = cell.w;
  double x_max = 0.0;
  if (cell.family == Family::Octahedron) {
    switch (v) {
      case Variant::Congruent: x_max = 0.0; break;
      case Variant::Delta1: x_max = std::min({h, w - h, t - h}); break;
      case Variant::Delta2: x_max = std::min({2.0 * h - t, t, w - t}); break;
      case Variant::Delta3: break;
    }
  } else {
    const double s = cell.s.value();
    switch (v) {
      case Variant::Congruent: x_max = 0.0; break;
      case Variant::Delta1: x_max = std::min({2.0 * h, w, t}) - h; break;
      case Variant::Delta2: x_max = std::min({2.0 * h - t, t, w - t, s - h}); break;
      case Variant::Delta3: x_max = std::min(h, s - h); break;
    }
  }
  if (x_max < 0.0) return std::nullopt;
  return Interval{0.0, x_max};
}

namespace detail {

inline Interval require_x(const TruncatedRegularCell& cell, Variant v, double x) {
  const auto iv = x_interval(cell, v);
  if (!iv) {
    throw Error(ErrorKind::VariantAbsent, std::string(to_string(v)) + " does not occur for " +
                                              std::string(to_string(cell.family)) + " p = " + std::to_string(cell.p));
  }
  if (!std::isfinite(x) || !iv->contains(x, kIntervalSlack)) {
    throw Error(ErrorKind::OutOfInterval, "x = " + std::to_string(x) + " outside [0, " + std::to_string(iv->hi) + "]");
  }
  return *iv;
}

}  // namespace detail

/// Sum of the slab volumes of all hyperballs in the cell.
inline double packed_volume(const TruncatedRegularCell& cell, Variant v, double x) {
  detail::require_x(cell, v, x);
  double total = 0.0;
  for (const HeightTerm& term : height_table(cell.family, v)) {
    const double height = std::max(0.0, term.height(cell.h, cell.t, x));
    total += term.multiplicity * hyperball_piece_volume(cell.face_area, height);
  }
  return total;
}

inline double density(const TruncatedRegularCell& cell, Variant v, double x) {
  return packed_volume(cell, v, x) / cell.volume;
}

inline double density(const PackingConfig& cfg, LobachevskyFn L = &lobachevsky) {
  return density(build(cfg.family, cfg.p, L), cfg.variant, cfg.x);
}

/// Analytic derivative of the density with respect to x.
inline double density_dx(const TruncatedRegularCell& cell, Variant v, double x) {
  detail::require_x(cell, v, x);
  double total = 0.0;
  for (const HeightTerm& term : height_table(cell.family, v)) {
    const double height = std::max(0.0, term.height(cell.h, cell.t, x));
    total += term.multiplicity * term.coef_x * hyperball_piece_volume_dh(cell.face_area, height);
  }
  return total / cell.volume;
}

}  // namespace hypack
