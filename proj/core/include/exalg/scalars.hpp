#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "exalg/fq.hpp"

namespace exalg {

// Prime scalar field F_ell, ell = 1 (mod M), used as an exact stand-in for the
// cyclotomic values taken by all characters in play. M is chosen so that every
// needed root of unity exists; ell is large enough that the integer quantities
// recovered from it (inner products, multiplicities, dimensions) lift uniquely.
class FlField {
 public:
  // smallest prime ell >= lower with ell = 1 (mod M)
  FlField(uint64_t M, uint64_t lower);

  uint64_t ell() const { return ell_; }
  uint64_t order() const { return M_; }

  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    return s >= ell_ ? s - ell_ : s;
  }
  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + ell_ - b; }
  uint64_t neg(uint64_t a) const { return a ? ell_ - a : 0; }
  uint64_t mul(uint64_t a, uint64_t b) const {
    return uint64_t((unsigned __int128)a * b % ell_);
  }
  uint64_t pow(uint64_t a, uint64_t e) const;
  uint64_t inv(uint64_t a) const;
  uint64_t from_int(int64_t v) const {
    int64_t r = v % int64_t(ell_);
    return uint64_t(r < 0 ? r + int64_t(ell_) : r);
  }

  // primitive root of unity of the given order (must divide M)
  uint64_t root_of_unity(uint64_t order) const;

  // lift a value known to be a small non-negative integer; fatal if it is not
  // (bound guards against wrap-around)
  uint64_t lift_small(uint64_t v, uint64_t bound) const;
  // lift a value known to be a small integer of either sign
  int64_t lift_signed(uint64_t v, uint64_t bound) const;

 private:
  uint64_t ell_, M_, gen_, zM_;
};

bool is_prime_u64(uint64_t n);
uint64_t lcm_u64(uint64_t a, uint64_t b);

// additive character of a finite field F (characteristic p): psi(x) =
// zeta_p^{Tr_{F/F_p}(x)}; the family psi_a(x) = psi(a x) exhausts the dual
class AddChar {
 public:
  AddChar(const FlField& S, const FqField& F);
  // value of psi_a at x
  uint64_t value(uint64_t a, uint64_t x) const;
  uint64_t value(uint64_t x) const { return value(1, x); }
  const FqField& field() const { return *F_; }

 private:
  const FlField* S_;
  const FqField* F_;
  std::vector<uint64_t> zp_;  // zeta_p^i
};

// multiplicative character of F^x labeled by an exponent k mod (|F|-1):
// chi_k(g^t) = zeta_{|F|-1}^{k t}; chi_k(0) = 0 by convention
class MultChar {
 public:
  MultChar(const FlField& S, const FqField& F);
  uint64_t value(uint64_t k, uint64_t x) const;
  uint64_t order() const { return n_; }

 private:
  const FlField* S_;
  const FqField* F_;
  uint64_t n_;  // |F|-1
  std::vector<uint64_t> zpow_;  // zeta_n^i, i < n
};

}  // namespace exalg
