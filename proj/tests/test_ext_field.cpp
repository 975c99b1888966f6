#include "exalg/ext_field.hpp"

#include <gtest/gtest.h>

#include <numeric>

namespace exalg {
namespace {

TEST(ExtField, ModulusIsMonicIrreducibleOfRequestedDegree) {
  FqField F3(3, 1), F5(5, 1), F9(3, 2);
  for (int m : {1, 2, 3, 5, 8, 12}) {
    for (const FqField* B : {&F3, &F5, &F9}) {
      ExtField E(*B, m);
      const auto& h = E.modulus();
      ASSERT_EQ(int(h.size()), m + 1);
      EXPECT_EQ(h[size_t(m)], 1u);
      if (m > 1) {
        EXPECT_NE(h[0], 0u) << "T would divide the modulus";
      }
    }
  }
}

TEST(ExtField, ArithmeticAxiomsSampled) {
  FqField F5(5, 1);
  ExtField E(F5, 3);
  auto elem = [&](uint64_t seed) {
    ExtField::Elem x = E.zero();
    for (int i = 0; i < 3; ++i) {
      x[size_t(i)] = seed % 5;
      seed /= 5;
    }
    return x;
  };
  for (uint64_t a = 0; a < 125; a += 7)
    for (uint64_t b = 0; b < 125; b += 11) {
      auto x = elem(a), y = elem(b);
      EXPECT_EQ(E.mul(x, y), E.mul(y, x));
      EXPECT_EQ(E.add(E.mul(x, y), E.mul(x, elem(3))), E.mul(x, E.add(y, elem(3))));
      if (!E.is_zero(x)) {
        EXPECT_EQ(E.mul(x, E.inv(x)), E.one());
      }
    }
}

TEST(ExtField, FrobeniusMatchesPowAndFixesBase) {
  FqField F9(3, 2);
  ExtField E(F9, 4);
  for (uint64_t c = 0; c < 9; ++c) EXPECT_EQ(E.frob(E.from_base(c)), E.from_base(c));
  ExtField::Elem x = E.gen();
  x[0] = 5;
  x[3] = 2;
  EXPECT_EQ(E.frob(x), E.pow(x, 9));
  EXPECT_EQ(E.frob(E.frob(E.frob(E.frob(x)))), x);
}

TEST(ExtField, TraceDistributionIsUniform) {
  FqField F3(3, 1);
  ExtField E(F3, 2);
  std::vector<int> hist(3, 0);
  for (uint64_t a = 0; a < 3; ++a)
    for (uint64_t b = 0; b < 3; ++b) {
      ExtField::Elem x = {a, b};
      ++hist[size_t(E.trace(x))];
    }
  EXPECT_EQ(hist, (std::vector<int>{3, 3, 3}));
}

TEST(ExtField, RankOfFrobeniusShifts) {
  FqField F3(3, 1);
  for (int m : {1, 2, 3, 4, 5, 6}) {
    ExtField E(F3, m);
    FqMatrix minus = E.frob_matrix(), plus = E.frob_matrix();
    for (int i = 0; i < m; ++i) {
      minus.at(i, i) = F3.sub(minus.at(i, i), 1);
      plus.at(i, i) = F3.add(plus.at(i, i), 1);
    }
    EXPECT_EQ(fq_rank(F3, minus), m - 1) << "x^q - x has kernel F_q, m=" << m;
    EXPECT_EQ(fq_rank(F3, plus), m % 2 == 0 ? m - 1 : m) << "m=" << m;
  }
}

TEST(ExtField, LeftNullVectorAnnihilates) {
  FqField F5(5, 1);
  ExtField E(F5, 4);
  FqMatrix L = E.frob_matrix();
  for (int i = 0; i < 4; ++i) L.at(i, i) = F5.sub(L.at(i, i), 1);
  auto phi = fq_left_null_vector(F5, L);
  bool nonzero = false;
  for (uint64_t v : phi) nonzero |= v != 0;
  EXPECT_TRUE(nonzero);
  for (int j = 0; j < 4; ++j) {
    uint64_t acc = 0;
    for (int i = 0; i < 4; ++i) acc = F5.add(acc, F5.mul(phi[size_t(i)], L.at(i, j)));
    EXPECT_EQ(acc, 0u);
  }
  FqMatrix full(2, 2);
  full.at(0, 0) = 1;
  full.at(1, 1) = 1;
  EXPECT_THROW(fq_left_null_vector(F5, full), std::invalid_argument);
}

uint64_t brute_level_count(const FqField& F, const FqMatrix& G, uint64_t t) {
  int n = G.rows;
  uint64_t q = F.size();
  uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= q;
  uint64_t count = 0;
  std::vector<uint64_t> v(size_t(n), 0);
  for (uint64_t code = 0; code < total; ++code) {
    uint64_t c = code;
    for (int i = 0; i < n; ++i) {
      v[size_t(i)] = c % q;
      c /= q;
    }
    uint64_t val = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        val = F.add(val, F.mul(G.at(i, j), F.mul(v[size_t(i)], v[size_t(j)])));
    if (val == t) ++count;
  }
  return count;
}

TEST(ExtField, QuadraticLevelCountsMatchBruteForce) {
  for (int64_t p : {3, 5}) {
    FqField F(p, 1);
    uint64_t q = uint64_t(p);
    for (int n : {1, 2, 3, 4}) {
      uint64_t seed = 12345;
      for (int trial = 0; trial < 12; ++trial) {
        FqMatrix G(n, n);
        for (int i = 0; i < n; ++i)
          for (int j = i; j < n; ++j) {
            seed = seed * 6364136223846793005ull + 1442695040888963407ull;
            uint64_t v = (seed >> 33) % q;
            if (trial == 0) v = 0;          // identically zero form
            if (trial == 1 && i != j) v = 0;  // diagonal form
            G.at(i, j) = v;
            G.at(j, i) = v;
          }
        for (uint64_t t = 0; t < q; ++t)
          ASSERT_EQ(quadratic_level_count(F, G, t), brute_level_count(F, G, t))
              << "p=" << p << " n=" << n << " trial=" << trial << " t=" << t;
      }
    }
  }
}

TEST(ExtField, QuadraticCountRejectsBadInput) {
  FqField F3(3, 1);
  FqMatrix G(2, 2);
  G.at(0, 1) = 1;  // not symmetric
  EXPECT_THROW(quadratic_level_count(F3, G, 0), std::invalid_argument);
}

}  // namespace
}  // namespace exalg
