#include <gtest/gtest.h>

#include "exalg/fq.hpp"

using namespace exalg;

TEST(Fq, LexFirstDefiningPolys) {
  FqField F9(3, 2);
  // x^2 + 1 is the first monic irreducible quadratic over F_3
  ASSERT_EQ(F9.defining_poly(), (std::vector<int64_t>{1, 0, 1}));
  FqField F25(5, 2);
  // x^2 + 2 over F_5
  ASSERT_EQ(F25.defining_poly(), (std::vector<int64_t>{2, 0, 1}));
}

TEST(Fq, AxiomsExhaustiveF9) {
  FqField F(3, 2);
  for (uint64_t a = 0; a < 9; ++a)
    for (uint64_t b = 0; b < 9; ++b) {
      EXPECT_EQ(F.add(a, b), F.add(b, a));
      EXPECT_EQ(F.mul(a, b), F.mul(b, a));
      for (uint64_t c = 0; c < 9; ++c) {
        EXPECT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
        EXPECT_EQ(F.mul(a, F.mul(b, c)), F.mul(F.mul(a, b), c));
      }
    }
  for (uint64_t a = 1; a < 9; ++a) EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
}

TEST(Fq, FrobeniusIsPthPower) {
  FqField F(5, 3);
  for (uint64_t a = 0; a < F.size(); ++a) {
    EXPECT_EQ(F.frob_p(a), F.pow(a, 5));
    EXPECT_EQ(F.frob_p(a, 3), a); // full orbit
  }
}

TEST(Fq, TraceNormToSubfield) {
  FqField F(3, 2);
  for (uint64_t a = 0; a < 9; ++a) {
    uint64_t tr = F.trace_to(1, a);
    uint64_t nm = F.norm_to(1, a);
    EXPECT_EQ(tr, F.add(a, F.frob_p(a)));
    EXPECT_EQ(nm, F.mul(a, F.frob_p(a)));
    EXPECT_TRUE(F.in_subfield(1, tr));
    EXPECT_TRUE(F.in_subfield(1, nm));
    EXPECT_EQ(uint64_t(F.prime_trace(a)) % 3, F.trace_to(1, a) % 3);
  }
}

TEST(Fq, GeneratorAndDlog) {
  FqField F(3, 3);
  uint64_t g = F.generator();
  EXPECT_EQ(F.pow(g, 26), 1u);
  EXPECT_NE(F.pow(g, 13), 1u);
  for (uint64_t a = 1; a < F.size(); ++a) {
    EXPECT_EQ(F.exp(F.dlog(a)), a);
    EXPECT_EQ(F.pow(g, F.dlog(a)), a);
  }
}

TEST(Fq, RootsOfUnity) {
  FqField F(5, 2);
  auto mu8 = F.roots_of_unity(8);
  EXPECT_EQ(mu8.size(), 8u);
  for (uint64_t z : mu8) EXPECT_EQ(F.pow(z, 8), 1u);
  uint64_t z = F.primitive_root_of_unity(24);
  EXPECT_EQ(F.pow(z, 24), 1u);
  EXPECT_NE(F.pow(z, 12), 1u);
  EXPECT_NE(F.pow(z, 8), 1u);
}

TEST(Fq, EmbeddingChain) {
  FqField F3(3, 1), F9(3, 2), F81(3, 4);
  FqEmbedding e39(F3, F9), e98(F9, F81);
  for (uint64_t a = 0; a < 3; ++a)
    for (uint64_t b = 0; b < 3; ++b) {
      EXPECT_EQ(e39.map(F3.add(a, b)), F9.add(e39.map(a), e39.map(b)));
      EXPECT_EQ(e39.map(F3.mul(a, b)), F9.mul(e39.map(a), e39.map(b)));
    }
  for (uint64_t a = 0; a < 9; ++a) {
    uint64_t big = e98.map(a);
    EXPECT_EQ(e98.map(F9.mul(a, a)), F81.mul(big, big));
    EXPECT_TRUE(e98.in_image(big));
    EXPECT_EQ(e98.pullback(big), a);
  }
}

TEST(Fq, SqrtOverF25) {
  FqField F(5, 2);
  int squares = 0;
  for (uint64_t a = 0; a < 25; ++a) {
    auto r = F.sqrt(a);
    if (r) {
      ++squares;
      EXPECT_EQ(F.mul(*r, *r), a);
    }
  }
  EXPECT_EQ(squares, 13); // 0 plus half the units
}

TEST(Fq, QLinearSolvers) {
  FqField F(3, 2);
  for (uint64_t c = 0; c < 9; ++c) {
    auto zs = solve_qlin_minus(F, 3, c);
    for (uint64_t z : zs) EXPECT_EQ(F.sub(F.pow(z, 3), z), c);
    EXPECT_TRUE(zs.empty() || zs.size() == 3);
    auto ws = solve_qlin_plus(F, 3, c);
    for (uint64_t w : ws) EXPECT_EQ(F.add(F.pow(w, 3), w), c);
    auto ss = solve_square(F, c);
    for (uint64_t s : ss) EXPECT_EQ(F.mul(s, s), c);
  }
}
