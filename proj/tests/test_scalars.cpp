#include <gtest/gtest.h>

#include "exalg/scalars.hpp"

using namespace exalg;

TEST(Scalars, PrimeSearch) {
  FlField S(8, 1000000);
  EXPECT_TRUE(is_prime_u64(S.ell()));
  EXPECT_GE(S.ell(), 1000000u);
  EXPECT_EQ(S.ell() % 8, 1u);
}

TEST(Scalars, RootOfUnityOrders) {
  FlField S(360, 1 << 20);
  for (uint64_t d : {2u, 3u, 5u, 8u, 9u, 45u, 360u}) {
    uint64_t z = S.root_of_unity(d);
    EXPECT_EQ(S.pow(z, d), 1u);
    if (d > 1) {
      EXPECT_NE(S.pow(z, d / 2 + (d % 2)), 1u); // not of smaller order
    }
  }
  EXPECT_THROW(S.root_of_unity(7), std::invalid_argument);
}

TEST(Scalars, FieldOps) {
  FlField S(4, 100);
  uint64_t ell = S.ell();
  for (uint64_t a = 1; a < 50; ++a) {
    EXPECT_EQ(S.mul(a, S.inv(a)), 1u);
    EXPECT_EQ(S.add(a, S.neg(a)), 0u);
  }
  EXPECT_EQ(S.from_int(-3), ell - 3);
}

TEST(Scalars, Lifts) {
  FlField S(6, 1 << 24);
  EXPECT_EQ(S.lift_small(S.from_int(12345), 20000), 12345u);
  EXPECT_EQ(S.lift_signed(S.from_int(-777), 1000), -777);
  EXPECT_THROW(S.lift_small(S.from_int(-1), 10), std::domain_error);
  EXPECT_THROW(S.lift_signed(S.from_int(5000), 1000), std::domain_error);
}

TEST(Scalars, AddCharOrthogonality) {
  FqField F(3, 2);
  FlField S(3 * 8, 1 << 20);
  AddChar psi(S, F);
  for (uint64_t a = 0; a < 9; ++a) {
    uint64_t acc = 0;
    for (uint64_t x = 0; x < 9; ++x) acc = S.add(acc, psi.value(a, x));
    EXPECT_EQ(acc, a == 0 ? S.from_int(9) : 0u);
  }
  for (uint64_t x = 0; x < 9; ++x)
    for (uint64_t y = 0; y < 9; ++y)
      EXPECT_EQ(psi.value(F.add(x, y)), S.mul(psi.value(x), psi.value(y)));
}

TEST(Scalars, MultCharOrthogonality) {
  FqField F(5, 1);
  FlField S(5 * 4, 1 << 20);
  MultChar chi(S, F);
  EXPECT_EQ(chi.order(), 4u);
  for (uint64_t k = 0; k < 4; ++k) {
    uint64_t acc = 0;
    for (uint64_t x = 1; x < 5; ++x) acc = S.add(acc, chi.value(k, x));
    EXPECT_EQ(acc, k == 0 ? 4u : 0u);
    EXPECT_EQ(chi.value(k, 0), 0u);
    for (uint64_t x = 1; x < 5; ++x)
      for (uint64_t y = 1; y < 5; ++y)
        EXPECT_EQ(chi.value(k, F.mul(x, y)), S.mul(chi.value(k, x), chi.value(k, y)));
  }
}
