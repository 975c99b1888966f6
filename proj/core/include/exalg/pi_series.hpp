#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "exalg/local_ring.hpp"

namespace exalg {

// Series in X over O[u], truncated at X^{Dx+1} and u^{Du+1}, restricted to a
// single weight class: every stored monomial u^a X^m satisfies
//   m + a(1-q) = w  (mod q^2-1).
// Within the class the X-exponent determines the u-exponent mod q+1, so the
// coefficients are kept as a dense (t, j) grid with m = m0 + t(q-1) and
// a = a0(t) + j(q+1).  All stored coefficients are integral ring elements.
struct PiSeries {
  int64_t w = 0;
  std::vector<LocalElem> coef;
};

class PiSeriesRing {
 public:
  // mul_mode: 0 = choose per size, 1 = always naive, 2 = always Kronecker
  PiSeriesRing(const LocalRing& R, int64_t dx, int du, int mul_mode = 0);

  const LocalRing& local() const { return *R_; }
  int64_t q() const { return q_; }
  int64_t dx() const { return Dx_; }
  int du() const { return Du_; }
  int64_t tcnt() const { return tcnt_; }
  int64_t ju() const { return ju_; }

  int64_t norm_w(int64_t w) const;
  int64_t weight_of(int64_t m, int64_t a) const;
  int64_t m0(int64_t w) const { return w % (q_ - 1); }
  int64_t a0(int64_t w, int64_t t) const;

  PiSeries zero(int64_t w) const;
  PiSeries x_pow(int64_t m) const;
  PiSeries monomial(int64_t m, int64_t a, const LocalElem& c) const;
  void add_monomial(PiSeries& s, int64_t m, int64_t a, const LocalElem& c) const;
  LocalElem coeff(const PiSeries& s, int64_t m, int64_t a) const;

  PiSeries add(const PiSeries& a, const PiSeries& b) const;
  PiSeries sub(const PiSeries& a, const PiSeries& b) const;
  PiSeries neg(const PiSeries& a) const;
  PiSeries mul(const PiSeries& a, const PiSeries& b) const;
  PiSeries mul_naive(const PiSeries& a, const PiSeries& b) const;
  PiSeries mul_kron(const PiSeries& a, const PiSeries& b) const;
  PiSeries pow(const PiSeries& a, uint64_t k) const;
  PiSeries scale_elem(const PiSeries& a, const LocalElem& c) const;
  PiSeries scale_pi(const PiSeries& a, int k) const;
  PiSeries scale_int(const PiSeries& a, int64_t n) const;
  // X -> c X for a scalar c: multiplies the (m, a) coefficient by c^m
  PiSeries subst_linear(const PiSeries& a, const LocalElem& c) const;

  // Divide every coefficient by pi^k where its stored valuation allows it;
  // zero the coefficients that do not divide and count them.
  PiSeries proj_div_pi(const PiSeries& a, int k, int64_t* zeroed) const;

  bool all_zero_mod(const PiSeries& a, int trust) const;
  bool equal_mod(const PiSeries& a, const PiSeries& b, int trust) const;

  // fn(m, a, coefficient) over structurally nonzero coefficients
  void for_each(const PiSeries& a,
                const std::function<void(int64_t, int64_t, const LocalElem&)>& fn) const;
  size_t nonzero_count(const PiSeries& a) const;
  std::string to_string(const PiSeries& a, size_t max_terms = 12) const;

 private:
  const LocalRing* R_;
  int64_t q_, Dx_;
  int64_t Du_;
  int mode_;
  int64_t Q2_;            // q^2 - 1
  int64_t tcnt_, ju_;

  size_t idx(int64_t t, int64_t j) const { return size_t(t * ju_ + j); }
  bool locate(int64_t w, int64_t m, int64_t a, int64_t* t, int64_t* j) const;
};

}  // namespace exalg
