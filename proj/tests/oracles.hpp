#pragma once

// Independent reference computations used only by the tests. None of these
// call into the library path they check.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>

#include <Eigen/Eigenvalues>
#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace hypack::oracle {

// Smooth remainder log(sin t / t), continuous at t = 0.
inline double log_sinc(double t) { return t == 0.0 ? 0.0 : std::log(std::sin(t) / t); }

// int_0^a log(2 sin t) dt for a in [0, pi/2]: the log(2t) singularity is
// integrated in closed form, the remainder by adaptive Gauss-Kronrod.
inline double log2sin_integral_half(double a) {
  if (a == 0.0) return 0.0;
  using boost::math::quadrature::gauss_kronrod;
  const double smooth = gauss_kronrod<double, 31>::integrate(log_sinc, 0.0, a, 15, 1e-15);
  return a * std::log(2.0 * a) - a + smooth;
}

/// L(x) = -int_0^x log|2 sin t| dt on [0, pi], by quadrature.
inline double lobachevsky_quadrature(double x) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  if (x <= half_pi) return -log2sin_integral_half(x);
  // integrand symmetric about pi/2: int_0^x = 2 int_0^{pi/2} - int_0^{pi - x}
  return -(2.0 * log2sin_integral_half(half_pi) - log2sin_integral_half(std::numbers::pi - x));
}

/// Determinant by full Leibniz (permutation) expansion.
inline double leibniz_det(const std::array<std::array<double, 4>, 4>& m) {
  std::array<int, 4> perm{0, 1, 2, 3};
  double det = 0.0;
  do {
    int inversions = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (perm[i] > perm[j]) ++inversions;
    double term = inversions % 2 == 0 ? 1.0 : -1.0;
    for (int i = 0; i < 4; ++i) term *= m[i][perm[i]];
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

/// Eigenvalues of a symmetric 4x4 matrix via Eigen's self-adjoint solver.
inline std::array<double, 4> symmetric_eigenvalues(const std::array<std::array<double, 4>, 4>& m) {
  Eigen::Matrix4d a;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a(i, j) = m[i][j];
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> solver(a, Eigen::EigenvaluesOnly);
  const auto ev = solver.eigenvalues();
  return {ev(0), ev(1), ev(2), ev(3)};
}

// Closed-form cell distances, written directly in terms of y^2.
struct CellDistances {
  double y2, h, w, t, s;
};

inline CellDistances octahedron_closed_form(double p) {
  const double c = std::cos(2.0 * std::numbers::pi / p);
  const double y2 = (3.0 * c + 1.0) / (c + 1.0);
  return {y2,
          0.5 * std::acosh(1.0 / (y2 - 1.0)),
          std::asinh(std::sqrt((y2 * y2 + 3.0) / ((3.0 - y2) * (y2 - 1.0)))),
          std::acosh(std::sqrt(y2) / std::sqrt(y2 - 1.0)),
          std::nan("")};
}

inline CellDistances cube_closed_form(double p) {
  const double c = std::cos(2.0 * std::numbers::pi / p);
  const double y2 = c / (c + 1.0);
  return {y2,
          0.5 * std::acosh((1.0 - y2) / (3.0 * y2 - 1.0)),
          std::asinh(std::sqrt((3.0 * y2 * y2 + 1.0) / ((1.0 - 3.0 * y2) * (y2 - 1.0)))),
          std::acosh(std::sqrt(3.0 * y2 / (3.0 * y2 - 1.0))),
          0.5 * std::acosh((1.0 + y2) / (3.0 * y2 - 1.0))};
}

/// Central finite difference.
template <class F>
double central_difference(F&& f, double x, double step) {
  return (f(x + step) - f(x - step)) / (2.0 * step);
}

}  // namespace hypack::oracle
