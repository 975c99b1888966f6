#include "exalg/curves.hpp"

#include <gtest/gtest.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "exalg/fq.hpp"

namespace exalg {
namespace {

CurveModel model(CurveFamily fam, int64_t p = 3, int f = 1, uint64_t zeta = 1, uint64_t c = 0) {
  CurveModel C;
  C.family = fam;
  C.p = p;
  C.f = f;
  C.zeta = zeta;
  C.c = c;
  return C;
}

uint64_t ipow(uint64_t b, int e) {
  uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

TEST(CurveCounts, BruteMatchesHandCountsAtSmallSize) {
  // a^3 - a = s^2 over F_3: s = 0 gives three points, s = +-1 gives none
  EXPECT_EQ(affine_count_brute(model(CurveFamily::ArtinSchreierSquare), 1), 3u);
  // X^3 + X = Y^4 over F_3: X -> X^3 + X is a bijection, one X per Y
  EXPECT_EQ(affine_count_brute(model(CurveFamily::Hermitian), 1), 3u);
  // x^3 y - x y^3 vanishes identically on F_3 x F_3
  EXPECT_EQ(affine_count_brute(model(CurveFamily::Drinfeld), 1), 0u);
  EXPECT_EQ(affine_count_brute(model(CurveFamily::Drinfeld), 2), 0u);
  // over F_9 every fiber of X -> X^3 + X above the image line is full
  EXPECT_EQ(affine_count_brute(model(CurveFamily::Hermitian), 2), 27u);
}

TEST(CurveCounts, FastCountsAgreeWithEnumeration) {
  std::vector<CurveModel> models = {
      model(CurveFamily::ArtinSchreierSquare, 3),
      model(CurveFamily::Hermitian, 3, 1, 1, 0),
      model(CurveFamily::Hermitian, 3, 1, 2, 1),
      model(CurveFamily::Drinfeld, 3, 1, 1),
      model(CurveFamily::Drinfeld, 3, 1, 2),
      model(CurveFamily::ArtinSchreierSquare, 5),
      model(CurveFamily::Hermitian, 5, 1, 3, 2),
      model(CurveFamily::Drinfeld, 5, 1, 2),
  };
  for (const CurveModel& C : models) {
    int max_m = C.p == 3 ? 8 : 5;
    for (int m = 1; m <= max_m; ++m)
      EXPECT_EQ(affine_count(C, m), affine_count_brute(C, m))
          << "family " << int(C.family) << " p " << C.p << " zeta " << C.zeta << " m " << m;
  }
}

TEST(CurveCounts, HermitianOddLevelsAreFullFibers) {
  for (int64_t p : {int64_t(3), int64_t(5)}) {
    CurveModel C = model(CurveFamily::Hermitian, p, 1, 1, 1);
    for (int m = 1; m <= 7; m += 2)
      EXPECT_EQ(affine_count(C, m), ipow(uint64_t(p), m));
  }
}

TEST(CurveCounts, DeterminedCoverCountsFollowThePlaneCurve) {
  for (int64_t p : {int64_t(3), int64_t(5)}) {
    CurveModel cover = model(CurveFamily::DrinfeldDouble, p, 1, 2);
    CurveModel plane = model(CurveFamily::Drinfeld, p, 1, 2);
    for (int m = 1; m <= 4; ++m)
      EXPECT_EQ(affine_count_brute(cover, m), affine_count_brute(plane, m));
  }
}

TEST(CurveCounts, BalancedKummerHasOnePointPerUnit) {
  CurveModel C = model(CurveFamily::BalancedKummer, 3, 1, 2);
  for (int m = 1; m <= 4; ++m)
    EXPECT_EQ(affine_count_brute(C, m), ipow(3, m) - 1);
}

TEST(CurveCounts, EnumerationBudgetIsEnforced) {
  EXPECT_THROW(affine_count_brute(model(CurveFamily::Drinfeld, 3), 10), std::domain_error);
  EXPECT_THROW(affine_count_brute(model(CurveFamily::Drinfeld, 5), 7), std::domain_error);
}

TEST(CurveCounts, FastCountRejectsCoverFamilies) {
  EXPECT_THROW(affine_count(model(CurveFamily::DrinfeldDouble), 2), std::invalid_argument);
  EXPECT_THROW(affine_count(model(CurveFamily::BalancedKummer), 2), std::invalid_argument);
}

TEST(CurveCounts, ModelValidationRejectsBadParameters) {
  EXPECT_THROW(affine_count_brute(model(CurveFamily::Drinfeld, 2), 1), std::invalid_argument);
  EXPECT_THROW(affine_count_brute(model(CurveFamily::Drinfeld, 9), 1), std::invalid_argument);
  EXPECT_THROW(affine_count_brute(model(CurveFamily::Drinfeld, 3, 1, 0), 1),
               std::invalid_argument);
  EXPECT_THROW(affine_count_brute(model(CurveFamily::Drinfeld, 3, 1, 5), 1),
               std::invalid_argument);
  EXPECT_THROW(affine_count_brute(model(CurveFamily::Drinfeld, 3, 5), 1), std::invalid_argument);
}

TEST(CurveSingularities, CoverFamiliesCarryTheExpectedLoci) {
  for (int64_t p : {int64_t(3), int64_t(5)}) {
    uint64_t q = uint64_t(p);
    FqField amb(p, 4);
    uint64_t minus1 = amb.neg(1);

    CurveModel dd = model(CurveFamily::DrinfeldDouble, p, 1, 1);
    auto pts = singular_points(dd, 4);
    EXPECT_EQ(pts.size(), q * (q * q - 1));
    for (const auto& P : pts) {
      ASSERT_EQ(P.size(), 3u);
      EXPECT_EQ(amb.pow(P[0], q * q - 1), minus1);
      EXPECT_EQ(amb.pow(P[1], q * q - 1), minus1);
    }

    CurveModel bk = model(CurveFamily::BalancedKummer, p, 1, 1);
    auto kpts = singular_points(bk, 4);
    EXPECT_EQ(kpts.size(), 2 * (q * q - 1));
    for (const auto& P : kpts) {
      ASSERT_EQ(P.size(), 2u);
      EXPECT_EQ(amb.pow(P[0], 2 * (q * q - 1)), 1u);
    }
  }
}

TEST(CurveSingularities, SmoothFamiliesHaveNone) {
  EXPECT_TRUE(singular_points(model(CurveFamily::ArtinSchreierSquare), 4).empty());
  EXPECT_TRUE(singular_points(model(CurveFamily::Hermitian), 4).empty());
  EXPECT_TRUE(singular_points(model(CurveFamily::Drinfeld), 4).empty());
}

TEST(CurveSingularities, OnlySmoothFamiliesFeedTheZetaPipeline) {
  EXPECT_THROW(genus_bound(model(CurveFamily::DrinfeldDouble)), std::invalid_argument);
  EXPECT_THROW(genus_bound(model(CurveFamily::BalancedKummer)), std::invalid_argument);
  EXPECT_THROW(infinity_count(model(CurveFamily::DrinfeldDouble), 1), std::invalid_argument);
  EXPECT_THROW(infinity_count(model(CurveFamily::BalancedKummer), 1), std::invalid_argument);
}

TEST(CurveAutomorphisms, FixedPointsMatchHandEnumeration) {
  FqField K(3, 2);
  uint64_t i4 = K.primitive_root_of_unity(4);
  uint64_t minus1 = K.neg(1);

  CurveModel as2 = model(CurveFamily::ArtinSchreierSquare);
  // (a, s) -> (a, -s): fixed locus is s = 0, a in F_3
  EXPECT_EQ(fixed_points_affine(as2, {minus1, 0}), 3u);
  EXPECT_EQ(fixed_points_total(as2, {minus1, 0}), 4u);
  // (a, s) -> (-a, i s): only the origin survives
  EXPECT_EQ(fixed_points_affine(as2, {i4, 0}), 1u);
  // (a, s) -> (a + 1, -s): nothing affine is fixed
  EXPECT_EQ(fixed_points_affine(as2, {minus1, 1}), 0u);
  EXPECT_EQ(fixed_points_affine(as2, {1, 1}), 0u);

  CurveModel herm = model(CurveFamily::Hermitian);
  // (X, Y) -> (X, -Y): fixed locus is Y = 0, X^3 + X = 0
  EXPECT_EQ(fixed_points_affine(herm, {minus1, 0}), 3u);
  EXPECT_EQ(fixed_points_total(herm, {minus1, 0}), 4u);
  // adding a nonzero shift to X clears the affine fixed locus
  EXPECT_EQ(fixed_points_affine(herm, {i4, i4}), 0u);
  EXPECT_EQ(fixed_points_affine(herm, {1, i4}), 0u);
}

TEST(CurveAutomorphisms, TracesOnCyclicCoverCohomology) {
  FqField K(3, 2);
  uint64_t i4 = K.primitive_root_of_unity(4);
  uint64_t minus1 = K.neg(1);

  CurveModel as2 = model(CurveFamily::ArtinSchreierSquare);
  EXPECT_EQ(h1_trace(as2, {1, 0}), 2);
  EXPECT_EQ(h1_trace(as2, {minus1, 0}), -2);
  EXPECT_EQ(h1_trace(as2, {i4, 0}), 0);
  EXPECT_EQ(h1_trace(as2, {minus1, 1}), 1);
  EXPECT_THROW(h1_trace(as2, {1, 1}), std::domain_error);
  EXPECT_EQ(h1_trace_refined(as2, {1, 1}), -1);
  EXPECT_EQ(h1_trace_refined(as2, {minus1, 0}), -2);

  CurveModel herm = model(CurveFamily::Hermitian);
  EXPECT_EQ(h1_trace(herm, {1, 0}), 6);
  EXPECT_EQ(h1_trace(herm, {minus1, 0}), -2);
  EXPECT_EQ(h1_trace(herm, {i4, i4}), 1);
  EXPECT_THROW(h1_trace(herm, {1, i4}), std::domain_error);
  EXPECT_EQ(h1_trace_refined(herm, {1, i4}), -3);
}

TEST(CurveAutomorphisms, GroupTraceSumVanishes) {
  for (int64_t p : {int64_t(3), int64_t(5)}) {
    uint64_t q = uint64_t(p);
    FqField K(p, 2);

    CurveModel as2 = model(CurveFamily::ArtinSchreierSquare, p);
    int64_t sum = 0;
    uint64_t elements = 0;
    for (uint64_t b : K.roots_of_unity(2 * (q - 1)))
      for (uint64_t mu = 0; mu < q; ++mu) {
        sum += h1_trace_refined(as2, {b, mu});
        ++elements;
      }
    EXPECT_EQ(elements, 2 * (q - 1) * q);
    EXPECT_EQ(sum, 0);

    CurveModel herm = model(CurveFamily::Hermitian, p);
    sum = 0;
    elements = 0;
    for (uint64_t eta : K.roots_of_unity(q + 1))
      for (uint64_t tau : solve_qlin_plus(K, q, 0)) {
        sum += h1_trace_refined(herm, {eta, tau});
        ++elements;
      }
    EXPECT_EQ(elements, (q + 1) * q);
    EXPECT_EQ(sum, 0);
  }
}

TEST(CurveAutomorphisms, ValidationRejectsBadParameters) {
  FqField K(3, 2);
  uint64_t g8 = K.generator();
  CurveModel as2 = model(CurveFamily::ArtinSchreierSquare);
  CurveModel herm = model(CurveFamily::Hermitian);

  EXPECT_THROW(fixed_points_affine(as2, {0, 0}), std::invalid_argument);
  EXPECT_THROW(fixed_points_affine(as2, {g8, 0}), std::invalid_argument);
  EXPECT_THROW(fixed_points_affine(as2, {1, g8}), std::invalid_argument);
  EXPECT_THROW(fixed_points_affine(herm, {g8, 0}), std::invalid_argument);
  EXPECT_THROW(fixed_points_affine(herm, {1, 1}), std::invalid_argument);
  EXPECT_THROW(fixed_points_affine(model(CurveFamily::Drinfeld), {1, 0}), std::invalid_argument);
  EXPECT_THROW(h1_trace(model(CurveFamily::DrinfeldDouble), {1, 0}), std::invalid_argument);
}

}  // namespace
}  // namespace exalg
