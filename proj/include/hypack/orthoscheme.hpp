#pragma once

// Coxeter-Schlafli matrices of 3-dimensional orthoschemes {p,q,r}, the
// truncation height read off their inverse, and the closed-form volume of a
// complete (at most simply truncated) orthoscheme.

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "hypack/error.hpp"
#include "hypack/lobachevsky.hpp"

namespace hypack {

using Mat4 = std::array<std::array<double, 4>, 4>;

/// Coxeter-Schlafli symbol; entries may be real (the octahedron and cube
/// families are studied for non-integer p as well).
struct SchlafliTriple {
  double p = 0.0;
  double q = 0.0;
  double r = 0.0;
};

struct Signature {
  int negative = 0;
  int zero = 0;
  int positive = 0;
};

struct CoxeterMatrix {
  Mat4 c{};
  Mat4 hinv{};
  Signature signature{};
};

/// Essential dihedral angles of an orthoscheme, in radians.
struct OrthoschemeAngles {
  double a01 = 0.0;
  double a12 = 0.0;
  double a23 = 0.0;
};

namespace detail {

inline constexpr double kZeroEigenTol = 1e-10;

inline double det3(const Mat4& m, int r0, int r1, int r2, int c0, int c1, int c2) {
  return m[r0][c0] * (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]) -
         m[r0][c1] * (m[r1][c0] * m[r2][c2] - m[r1][c2] * m[r2][c0]) +
         m[r0][c2] * (m[r1][c0] * m[r2][c1] - m[r1][c1] * m[r2][c0]);
}

inline double cofactor(const Mat4& m, int row, int col) {
  int rows[3], cols[3];
  for (int i = 0, k = 0; i < 4; ++i)
    if (i != row) rows[k++] = i;
  for (int j = 0, k = 0; j < 4; ++j)
    if (j != col) cols[k++] = j;
  const double minor = det3(m, rows[0], rows[1], rows[2], cols[0], cols[1], cols[2]);
  return ((row + col) % 2 == 0) ? minor : -minor;
}

inline double det4(const Mat4& m) {
  double d = 0.0;
  for (int j = 0; j < 4; ++j) d += m[0][j] * cofactor(m, 0, j);
  return d;
}

inline Mat4 inverse4(const Mat4& m) {
  const double d = det4(m);
  Mat4 inv{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) inv[i][j] = cofactor(m, j, i) / d;
  return inv;
}

// Characteristic polynomial det(C - lambda I) of a symmetric tridiagonal 4x4
// matrix, coefficients in increasing powers of lambda.
inline std::array<double, 5> tridiagonal_charpoly(const Mat4& c) {
  using Poly = std::array<double, 5>;
  auto shift = [](const Poly& a, double diag) {  // (diag - lambda) * a
    Poly r{};
    for (int k = 0; k < 5; ++k) {
      r[k] += diag * a[k];
      if (k + 1 < 5) r[k + 1] -= a[k];
    }
    return r;
  };
  auto axpy = [](const Poly& a, double s, const Poly& b) {
    Poly r{};
    for (int k = 0; k < 5; ++k) r[k] = a[k] + s * b[k];
    return r;
  };
  Poly d_prev{1.0};                  // D_0
  Poly d = shift(d_prev, c[0][0]);   // D_1
  for (int i = 1; i < 4; ++i) {
    const double b = c[i - 1][i];
    Poly next = axpy(shift(d, c[i][i]), -b * b, d_prev);
    d_prev = d;
    d = next;
  }
  return d;
}

// All roots are real for a symmetric matrix, so Descartes' rule of signs is exact.
inline Signature signature_from_charpoly(std::array<double, 5> a, double zero_tol) {
  Signature s;
  int lowest = 0;
  while (lowest < 4 && std::abs(a[lowest]) <= zero_tol) {
    ++s.zero;
    ++lowest;
  }
  auto sign_changes = [&](bool flip_odd) {
    int changes = 0;
    double prev = 0.0;
    for (int k = lowest; k < 5; ++k) {
      const double v = (flip_odd && k % 2 == 1) ? -a[k] : a[k];
      if (v == 0.0) continue;
      if (prev != 0.0 && (v < 0.0) != (prev < 0.0)) ++changes;
      prev = v;
    }
    return changes;
  };
  s.positive = sign_changes(false);
  s.negative = sign_changes(true);
  return s;
}

}  // namespace detail

/// Symmetric Coxeter-Schlafli matrix with unit diagonal and -cos(pi/k) on the
/// first off-diagonal, together with its inverse. Only hyperbolic triples
/// (signature (1,3)) are accepted.
inline CoxeterMatrix coxeter_matrix(const SchlafliTriple& t) {
  if (!(t.p >= 2.0 && t.q >= 2.0 && t.r >= 2.0))
    throw Error(ErrorKind::OutOfRange, "coxeter_matrix: p, q, r must all be >= 2");
  constexpr double pi = std::numbers::pi;
  const double b01 = -std::cos(pi / t.p);
  const double b12 = -std::cos(pi / t.q);
  const double b23 = -std::cos(pi / t.r);

  CoxeterMatrix m;
  m.c = {{{1.0, b01, 0.0, 0.0}, {b01, 1.0, b12, 0.0}, {0.0, b12, 1.0, b23}, {0.0, 0.0, b23, 1.0}}};
  m.signature = detail::signature_from_charpoly(detail::tridiagonal_charpoly(m.c), detail::kZeroEigenTol);
  const Signature& s = m.signature;
  if (s.negative != 1 || s.positive != 3 || s.zero != 0) {
    throw Error(ErrorKind::NonHyperbolic,
                "coxeter_matrix: signature (neg, zero, pos) = (" + std::to_string(s.negative) + ", " +
                    std::to_string(s.zero) + ", " + std::to_string(s.positive) + "), expected (1, 0, 3)");
  }
  m.hinv = detail::inverse4(m.c);
  return m;
}

/// Half the distance between adjacent truncating planes of the dual cell:
/// cosh^2 h = (h22 h33 - h23^2) / (h22 h33) in terms of the inverse matrix.
/// h22 h33 is negative for the hyperbolic triples, so the ratio is >= 1.
inline double truncation_height(const SchlafliTriple& t) {
  const CoxeterMatrix m = coxeter_matrix(t);
  const double h22 = m.hinv[2][2];
  const double h33 = m.hinv[3][3];
  const double h23 = m.hinv[2][3];
  const double prod = h22 * h33;
  const double cosh2 = (prod - h23 * h23) / prod;
  if (!std::isfinite(cosh2) || cosh2 < 1.0)
    throw Error(ErrorKind::InvalidRadicand, "truncation_height: cosh^2 h = (h22 h33 - h23^2) / (h22 h33) is not >= 1");
  return std::acosh(std::sqrt(cosh2));
}

/// Volume of a complete orthoscheme with essential angles a01, a12, a23
/// (Kellerhals' formula).
inline double orthoscheme_volume(const OrthoschemeAngles& a, LobachevskyFn L = &lobachevsky) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  for (double v : {a.a01, a.a12, a.a23})
    if (!(v > 0.0 && v <= half_pi))
      throw Error(ErrorKind::OutOfRange, "orthoscheme_volume: essential angles must lie in (0, pi/2]");

  const double s01 = std::sin(a.a01);
  const double s23 = std::sin(a.a23);
  const double c12 = std::cos(a.a12);
  const double radicand = c12 * c12 - s01 * s01 * s23 * s23;
  if (radicand < 0.0)
    throw Error(ErrorKind::InvalidRadicand, "orthoscheme_volume: cos^2 a12 - sin^2 a01 sin^2 a23 < 0");
  const double theta = std::atan2(std::sqrt(radicand), std::cos(a.a01) * std::cos(a.a23));

  return 0.25 * (L(a.a01 + theta) - L(a.a01 - theta) + L(half_pi + a.a12 - theta) +
                 L(half_pi - a.a12 - theta) + L(a.a23 + theta) - L(a.a23 - theta) +
                 2.0 * L(half_pi - theta));
}

}  // namespace hypack
