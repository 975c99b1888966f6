#include "exalg/level2.hpp"

#include <gtest/gtest.h>

#include <random>

using exalg::Level2Model;
using exalg::Level2Ring;

namespace {

void check_ring_axioms(const Level2Ring& R, uint64_t pair_budget) {
  auto elems = R.all_elements();
  std::mt19937_64 rng(7);
  uint64_t n = elems.size();
  auto pick = [&]() { return elems[rng() % n]; };
  for (uint64_t k = 0; k < pair_budget; ++k) {
    auto a = pick(), b = pick(), c = pick();
    EXPECT_EQ(R.add(a, b), R.add(b, a));
    EXPECT_EQ(R.mul(a, b), R.mul(b, a));
    EXPECT_EQ(R.add(R.add(a, b), c), R.add(a, R.add(b, c)));
    EXPECT_EQ(R.mul(R.mul(a, b), c), R.mul(a, R.mul(b, c)));
    EXPECT_EQ(R.mul(a, R.add(b, c)), R.add(R.mul(a, b), R.mul(a, c)));
    EXPECT_EQ(R.add(a, R.neg(a)), R.zero());
    EXPECT_EQ(R.mul(a, R.one()), a);
  }
}

}  // namespace

TEST(Level2, SizesAndPi) {
  for (auto model : {Level2Model::EqualChar, Level2Model::Mixed}) {
    for (auto [p, f] : {std::pair<int64_t, int>{3, 1}, {5, 1}, {3, 2}}) {
      Level2Ring R(p, f, model);
      uint64_t q = R.q();
      EXPECT_EQ(R.size(), q * q);
      EXPECT_EQ(R.unit_count(), q * (q - 1));
      EXPECT_NE(R.pi(), R.zero());
      EXPECT_EQ(R.mul(R.pi(), R.pi()), R.zero());
      EXPECT_EQ(R.all_units().size(), R.unit_count());
    }
  }
}

TEST(Level2, RingAxiomsEqualChar) {
  check_ring_axioms(Level2Ring(3, 1, Level2Model::EqualChar), 3000);
  check_ring_axioms(Level2Ring(5, 1, Level2Model::EqualChar), 3000);
  check_ring_axioms(Level2Ring(3, 2, Level2Model::EqualChar), 3000);
}

TEST(Level2, RingAxiomsMixed) {
  check_ring_axioms(Level2Ring(3, 1, Level2Model::Mixed), 3000);
  check_ring_axioms(Level2Ring(5, 1, Level2Model::Mixed), 3000);
  check_ring_axioms(Level2Ring(3, 2, Level2Model::Mixed), 3000);
}

TEST(Level2, MixedIsCharPSquared) {
  Level2Ring R(3, 1, Level2Model::Mixed);
  EXPECT_EQ(R.from_int(3), R.pi());
  EXPECT_NE(R.add(R.one(), R.add(R.one(), R.one())), R.zero());  // 3 != 0
  EXPECT_EQ(R.from_int(9), R.zero());
}

TEST(Level2, EqualCharKillsP) {
  Level2Ring R(3, 1, Level2Model::EqualChar);
  EXPECT_EQ(R.from_int(3), R.zero());
}

TEST(Level2, TeichmuellerSection) {
  for (auto model : {Level2Model::EqualChar, Level2Model::Mixed}) {
    for (auto [p, f] : {std::pair<int64_t, int>{3, 1}, {5, 1}, {3, 2}}) {
      Level2Ring R(p, f, model);
      const auto& k = R.residue_field();
      for (uint64_t x = 0; x < k.size(); ++x) {
        auto wx = R.teich(x);
        EXPECT_EQ(R.residue(wx), x);
        EXPECT_EQ(R.pow(wx, k.size()), wx);  // w(x)^q = w(x)
        for (uint64_t y = 0; y < k.size(); ++y)
          EXPECT_EQ(R.mul(wx, R.teich(y)), R.teich(k.mul(x, y)));
      }
    }
  }
}

TEST(Level2, DigitsRoundTrip) {
  for (auto model : {Level2Model::EqualChar, Level2Model::Mixed}) {
    for (auto [p, f] : {std::pair<int64_t, int>{3, 1}, {3, 2}}) {
      Level2Ring R(p, f, model);
      for (auto a : R.all_elements()) {
        auto [d0, d1] = R.digits(a);
        EXPECT_EQ(R.from_digits(d0, d1), a);
      }
    }
  }
}

TEST(Level2, UnitPairIsomorphism) {
  // u = w(u0)(1+pi*t) identifies the unit group with F_q^x X F_q,
  // multiplicative in the first slot and additive in the second
  for (auto model : {Level2Model::EqualChar, Level2Model::Mixed}) {
    for (auto [p, f] : {std::pair<int64_t, int>{3, 1}, {5, 1}, {3, 2}}) {
      Level2Ring R(p, f, model);
      const auto& k = R.residue_field();
      auto units = R.all_units();
      for (auto u : units) {
        auto [u0, t] = R.unit_pair(u);
        EXPECT_EQ(R.from_unit_pair(u0, t), u);
        EXPECT_EQ(R.mul(u, R.inv(u)), R.one());
      }
      uint64_t budget = units.size() <= 90 ? units.size() : 90;
      for (uint64_t i = 0; i < budget; ++i)
        for (uint64_t j = 0; j < budget; ++j) {
          auto [a0, s] = R.unit_pair(units[i]);
          auto [b0, t] = R.unit_pair(units[j]);
          auto [c0, r] = R.unit_pair(R.mul(units[i], units[j]));
          EXPECT_EQ(c0, k.mul(a0, b0));
          EXPECT_EQ(r, k.add(s, t));
        }
    }
  }
}

TEST(Level2, PowMatchesGroupOrder) {
  for (auto model : {Level2Model::EqualChar, Level2Model::Mixed}) {
    Level2Ring R(3, 1, model);
    for (auto u : R.all_units()) EXPECT_EQ(R.pow(u, R.unit_count()), R.one());
  }
}
