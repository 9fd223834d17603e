#include <algorithm>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "hypack/cell.hpp"
#include "hypack/orthoscheme.hpp"
#include "oracles.hpp"

using namespace hypack;

namespace {

constexpr double kPi = std::numbers::pi;

struct HeightRow {
  int p;
  double h;
};

// rounded to 8 decimals in the published tables
constexpr HeightRow kOctaHeights[] = {{5, 0.69128565}, {6, 0.48121183}, {7, 0.37938071},
                                      {20, 0.11318462}, {50, 0.04456095}, {100, 0.02223088}};
constexpr HeightRow kCubeHeights[] = {{7, 1.03799291}, {8, 0.76428546}, {9, 0.62216938},
                                      {20, 0.23086908}, {50, 0.08938872}, {100, 0.04449475}};

}  // namespace

TEST(CoxeterMatrix, EntriesForCubeSeven) {
  const CoxeterMatrix m = coxeter_matrix({7, 3, 4});
  EXPECT_EQ(m.c[0][0], 1.0);
  EXPECT_NEAR(m.c[0][1], -std::cos(kPi / 7), 1e-15);
  EXPECT_NEAR(m.c[1][2], -0.5, 1e-15);
  EXPECT_NEAR(m.c[2][3], -std::sqrt(0.5), 1e-15);
  EXPECT_EQ(m.c[0][2], 0.0);
  EXPECT_EQ(m.c[0][3], 0.0);
  EXPECT_EQ(m.c[1][3], 0.0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) EXPECT_EQ(m.c[i][j], m.c[j][i]);
}

TEST(CoxeterMatrix, EuclideanTripleRejected) {
  const double b = -std::cos(kPi / 4);
  const Mat4 c{{{1, b, 0, 0}, {b, 1, -0.5, 0}, {0, -0.5, 1, b}, {0, 0, b, 1}}};
  EXPECT_NEAR(oracle::leibniz_det(c), 0.0, 1e-15);
  try {
    coxeter_matrix({4, 3, 4});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonHyperbolic);
  }
}

TEST(CoxeterMatrix, RejectsEntriesBelowTwo) {
  try {
    coxeter_matrix({1.5, 3, 4});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OutOfRange);
  }
}

TEST(CoxeterMatrix, SignatureMatchesEigenvalues) {
  const CoxeterMatrix m = coxeter_matrix({5, 4, 3});
  const auto ev = oracle::symmetric_eigenvalues(m.c);
  EXPECT_NEAR(ev[0], -0.129737, 1e-6);
  EXPECT_NEAR(ev[1], 0.641944, 1e-6);
  EXPECT_NEAR(ev[2], 1.35806, 1e-5);
  EXPECT_NEAR(ev[3], 2.12974, 1e-5);
  const int neg = static_cast<int>(std::count_if(ev.begin(), ev.end(), [](double v) { return v < 0; }));
  EXPECT_EQ(m.signature.negative, neg);
  EXPECT_EQ(m.signature.positive, 4 - neg);
  EXPECT_EQ(m.signature.zero, 0);
}

TEST(CoxeterMatrix, SignatureAgreesWithEigenOverGrid) {
  for (double p = 4.05; p < 60; p += 0.37) {
    for (SchlafliTriple t : {SchlafliTriple{p, 4, 3}, SchlafliTriple{p + 2, 3, 4}}) {
      Mat4 c{};
      const double b01 = -std::cos(kPi / t.p), b12 = -std::cos(kPi / t.q), b23 = -std::cos(kPi / t.r);
      c = {{{1, b01, 0, 0}, {b01, 1, b12, 0}, {0, b12, 1, b23}, {0, 0, b23, 1}}};
      const auto ev = oracle::symmetric_eigenvalues(c);
      ASSERT_LT(ev[0], -1e-9);
      ASSERT_GT(ev[1], 1e-9);
      EXPECT_NO_THROW(coxeter_matrix(t)) << t.p;
    }
  }
}

TEST(CoxeterMatrix, InverseIsInverse) {
  for (SchlafliTriple t : {SchlafliTriple{5, 4, 3}, SchlafliTriple{7, 3, 4}, SchlafliTriple{20, 3, 4}}) {
    const CoxeterMatrix m = coxeter_matrix(t);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        double acc = 0.0;
        for (int k = 0; k < 4; ++k) acc += m.c[i][k] * m.hinv[k][j];
        EXPECT_NEAR(acc, i == j ? 1.0 : 0.0, 1e-12);
      }
    }
  }
}

TEST(TruncationHeight, MatchesPublishedHeights) {
  for (const auto& r : kOctaHeights)
    EXPECT_NEAR(truncation_height(family_triple(Family::Octahedron, r.p)), r.h, 1e-8) << r.p;
  for (const auto& r : kCubeHeights)
    EXPECT_NEAR(truncation_height(family_triple(Family::Cube, r.p)), r.h, 1e-8) << r.p;
}

TEST(TruncationHeight, SwappedTripleDoesNotMatch) {
  double h = 0.0;
  try {
    h = truncation_height({5, 3, 4});
  } catch (const Error&) {
    h = -1.0;
  }
  EXPECT_GT(std::abs(h - 0.69128565), 1e-3);
}

TEST(OrthoschemeVolume, Examples) {
  EXPECT_NEAR(orthoscheme_volume(family_angles(Family::Octahedron, 5)), 0.16596371, 1e-8);
  EXPECT_NEAR(orthoscheme_volume(family_angles(Family::Cube, 7)), 0.16297337, 1e-8);
}

TEST(OrthoschemeVolume, SymmetricInOuterAngles) {
  for (double p = 4.2; p < 50; p += 0.9) {
    const OrthoschemeAngles a = family_angles(Family::Octahedron, p);
    const OrthoschemeAngles swapped{a.a23, a.a12, a.a01};
    EXPECT_NEAR(orthoscheme_volume(a), orthoscheme_volume(swapped), 1e-13) << p;
  }
}

TEST(OrthoschemeVolume, IncreasingInP) {
  for (Family f : {Family::Octahedron, Family::Cube}) {
    double prev = orthoscheme_volume(family_angles(f, min_tiling_p(f)));
    for (double p = min_tiling_p(f) + 0.25; p <= 100; p += 0.25) {
      const double v = orthoscheme_volume(family_angles(f, p));
      EXPECT_GT(v, prev) << to_string(f) << " p=" << p;
      prev = v;
    }
  }
}

TEST(OrthoschemeVolume, NegativeRadicandRejected) {
  try {
    orthoscheme_volume({kPi / 3, kPi / 2, kPi / 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidRadicand);
  }
  EXPECT_THROW(orthoscheme_volume({0.0, kPi / 4, kPi / 3}), Error);
}
