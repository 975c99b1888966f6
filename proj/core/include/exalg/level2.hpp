#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "exalg/fq.hpp"

namespace exalg {

enum class Level2Model { EqualChar, Mixed };

// The ring O/pi^2 where O is the ring of integers of a local field with
// residue field F_q, truncated at level two.  Two models are supported:
//
//   EqualChar: F_q[pi]/(pi^2), elements are coefficient pairs a0 + pi*a1
//              with a0, a1 in F_q; codes are a0 + q*a1.
//   Mixed:     (Z/p^2)[T]/(h) with h a degree-f lift of the defining
//              polynomial of F_q = F_{p^f}; here pi = p.  Codes are
//              sum_i c_i * (p^2)^i with c_i in [0, p^2).
//
// Every element decomposes uniquely as w(d0) + pi*w(d1) where w is the
// Teichmueller lift and d0, d1 are residue-field codes ("digits").  Units
// also decompose as w(u0) * (1 + pi*t) giving the pair (u0, t).
class Level2Ring {
 public:
  using Elem = uint64_t;

  Level2Ring(int64_t p, int f, Level2Model model);

  int64_t p() const { return p_; }
  int f() const { return f_; }
  Level2Model model() const { return model_; }
  const FqField& residue_field() const { return fq_; }
  uint64_t q() const { return fq_.size(); }
  uint64_t size() const { return size_; }        // q^2 elements
  uint64_t unit_count() const { return q() * (q() - 1); }

  Elem zero() const { return 0; }
  Elem one() const { return one_; }
  Elem pi() const { return pi_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem pow(Elem a, uint64_t e) const;
  Elem inv(Elem a) const;  // throws on non-units
  Elem from_int(int64_t c) const;

  bool is_unit(Elem a) const { return residue(a) != 0; }

  uint64_t residue(Elem a) const;     // image in F_q, as an FqField code
  Elem teich(uint64_t r) const;       // w(r), the multiplicative lift
  Elem from_digits(uint64_t d0, uint64_t d1) const;  // w(d0) + pi*w(d1)
  std::pair<uint64_t, uint64_t> digits(Elem a) const;

  // unit pairs: u = w(u0)(1 + pi*t) <-> (u0, t), both residue-field codes
  std::pair<uint64_t, uint64_t> unit_pair(Elem u) const;
  Elem from_unit_pair(uint64_t u0, uint64_t t) const;

  std::vector<Elem> all_elements() const;
  std::vector<Elem> all_units() const;

  std::string to_string(Elem a) const;

 private:
  int64_t p_;
  int f_;
  Level2Model model_;
  FqField fq_;
  uint64_t size_;
  Elem one_, pi_;
  int64_t p2_;  // p^2 (Mixed coefficient modulus)
  std::vector<int64_t> h_;  // Mixed: monic degree-f defining lift

  void decode(Elem a, int64_t* c) const;
  Elem encode(const int64_t* c) const;
};

}  // namespace exalg
