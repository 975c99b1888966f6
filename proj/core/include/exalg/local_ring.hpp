#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "exalg/fq.hpp"

namespace exalg {

// Element of a truncated local ring, as a digit vector.  Layout depends on
// the owning LocalRing; treat as opaque and use the ring's methods.
using LocalElem = std::vector<int64_t>;

// O/pi^N for a local ring O with residue field F_{p^f} and ramification
// index e over the p-adics, or over F_p((pi)) in equal characteristic.
//
//   equal=true : O = F_q[[pi]].  An element is its N pi-digits, each an
//                F_q code.
//   equal=false: O = W(F_q)[pi]/(pi^e - p).  An element is the coefficient
//                grid c[j + f*i] of x^j pi^i (0 <= j < f, 0 <= i < e) with
//                entries mod p^M, M = ceil(N/e) + 1.  Only the bottom N
//                pi-digits are meaningful; equality and valuation reduce to
//                the canonical form first.
//
// div_pi is exact checked division; the quotient's top digit is zero-filled,
// so callers that divide repeatedly must keep their own precision headroom.
class LocalRing {
 public:
  using Elem = LocalElem;

  LocalRing(int64_t p, int f, int e, int N, bool equal_char);

  int64_t p() const { return p_; }
  int f() const { return f_; }
  int e() const { return e_; }
  int N() const { return N_; }
  bool equal_char() const { return equal_; }
  int64_t q() const { return Fq_.size(); }
  const FqField& residue_field() const { return Fq_; }

  LocalElem zero() const;
  LocalElem one() const;
  LocalElem pi() const;
  LocalElem from_int(int64_t n) const;
  // Multiplicative (Teichmueller) lift of a residue-field element; in equal
  // characteristic this is the constant digit.
  LocalElem teichmuller(uint64_t fq_code) const;
  // Additive lift: digit expansion of the code placed in the pi^0 slot.
  LocalElem lift_residue(uint64_t fq_code) const;

  LocalElem add(const LocalElem& a, const LocalElem& b) const;
  LocalElem sub(const LocalElem& a, const LocalElem& b) const;
  LocalElem neg(const LocalElem& a) const;
  LocalElem mul(const LocalElem& a, const LocalElem& b) const;
  LocalElem mul_int(const LocalElem& a, int64_t n) const;
  LocalElem pow(const LocalElem& a, uint64_t k) const;
  // Inverse of a unit (valuation 0); throws otherwise.
  LocalElem inv(const LocalElem& a) const;

  // pi-adic valuation of the canonical form, capped at N.
  int valuation(const LocalElem& a) const;
  bool is_zero(const LocalElem& a) const;
  bool equal(const LocalElem& a, const LocalElem& b) const;
  // Equality of the bottom k pi-digits (k <= N).
  bool equal_mod_pik(const LocalElem& a, const LocalElem& b, int k) const;
  bool is_zero_mod_pik(const LocalElem& a, int k) const;

  LocalElem mul_pi(const LocalElem& a) const;
  LocalElem mul_pi_k(const LocalElem& a, int k) const;
  // a / pi for a of valuation >= 1; throws if not divisible.
  LocalElem div_pi(const LocalElem& a) const;
  bool divisible_pi(const LocalElem& a) const;

  // Residue-field image (pi^0 digit) as an F_q code.
  uint64_t residue(const LocalElem& a) const;

  // Canonical digit vector: equal char as-is; mixed char with the
  // coefficient of x^j pi^i reduced mod p^{ceil((N-i)/e)}.
  LocalElem canonical(const LocalElem& a) const;
  // Zero every pi-digit at level >= k.
  LocalElem truncate_digits(const LocalElem& a, int k) const;
  // All stored slots zero (no canonical reduction); implies is_zero.
  bool is_zero_fast(const LocalElem& a) const;

  // Mixed characteristic only: fold an unreduced product grid acc[x*pdim + i]
  // of x^x pi^i coefficients (values in [0, p^M)) back into element form by
  // applying pi^e = p and the defining-polynomial reduction.
  LocalElem fold_product_grid(const int64_t* acc, int xdim, int pdim) const;
  std::string to_string(const LocalElem& a) const;

  int M() const { return M_; }
  int64_t pM() const { return pM_; }

 private:
  int64_t p_;
  int f_, e_, N_;
  bool equal_;
  FqField Fq_;
  int M_ = 0;        // p-adic digits stored (mixed)
  int64_t pM_ = 0;   // p^M
  std::vector<int64_t> ghat_;               // monic lift of the defining poly
  std::vector<std::vector<int64_t>> redx_;  // x^{f+k} mod ghat, k = 0..f-2
  std::vector<int64_t> kcap_;               // canonical cap exponent per pi-digit

  size_t slots() const { return equal_ ? size_t(N_) : size_t(f_) * size_t(e_); }
  LocalElem fold_grid128(__int128* acc, int xdim, int pdim) const;
};

}  // namespace exalg
