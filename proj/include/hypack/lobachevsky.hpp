#pragma once

// Lobachevsky function  L(x) = -int_0^x log|2 sin t| dt.
//
// L is odd and pi-periodic, and L(pi - x) = -L(x), so every argument reduces
// to r in [0, pi/2]. There, with theta = 2r in [0, pi],
//
//   L(r) = theta/2 * (1 - log(theta) + sum_{n>=1} zeta(2n) / (n (2n+1)) * (theta / 2pi)^(2n))
//
// which is the Clausen series Cl2(theta)/2 with |B_2n| rewritten through zeta(2n).
// The ratio of successive terms is at most 1/4 on this range, so 30 terms reach
// double precision.

#include <array>
#include <cmath>
#include <numbers>

#include "hypack/error.hpp"

namespace hypack {

using LobachevskyFn = double (*)(double);

namespace detail {

inline constexpr int kLobachevskyTerms = 32;

// zeta(2n) / (n (2n+1)), n = 1..kLobachevskyTerms
inline const std::array<double, kLobachevskyTerms>& lobachevsky_coefficients() {
  static const std::array<double, kLobachevskyTerms> table = [] {
    std::array<double, kLobachevskyTerms> c{};
    for (int n = 1; n <= kLobachevskyTerms; ++n) {
      const double zeta = std::riemann_zeta(2.0 * n);
      c[n - 1] = zeta / (n * (2.0 * n + 1.0));
    }
    return c;
  }();
  return table;
}

// L(r) for r in [0, pi/2]
inline double lobachevsky_reduced(double r) {
  if (r == 0.0) return 0.0;
  const double theta = 2.0 * r;
  const double u = theta / (2.0 * std::numbers::pi);
  const double u2 = u * u;
  const auto& coeff = lobachevsky_coefficients();

  // Horner from the tail keeps the small terms from being swamped.
  double tail = 0.0;
  for (int n = kLobachevskyTerms; n >= 1; --n) tail = (tail + coeff[n - 1]) * u2;
  return 0.5 * theta * (1.0 - std::log(theta) + tail);
}

}  // namespace detail

inline double lobachevsky(double x) {
  if (!std::isfinite(x)) throw Error(ErrorKind::NonFinite, "lobachevsky: non-finite argument");
  constexpr double pi = std::numbers::pi;
  constexpr double half_pi = std::numbers::pi / 2.0;

  const double sign = x < 0.0 ? -1.0 : 1.0;
  double r = std::fmod(std::abs(x), pi);
  if (r <= half_pi) return sign * detail::lobachevsky_reduced(r);
  return -sign * detail::lobachevsky_reduced(pi - r);
}

}  // namespace hypack
