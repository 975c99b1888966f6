#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace exalg {

// F_{p^n} realized as F_p[x]/(g) where g is the lexicographically first monic
// irreducible of degree n (coefficient vectors compared as base-p integers).
// Elements are stored as base-p codes of their coefficient vectors, so code 0
// is 0, code 1 is 1 and code p is the residue class of x.
class FqField {
 public:
  FqField(int64_t p, int n);

  int64_t p() const { return p_; }
  int n() const { return n_; }
  uint64_t size() const { return size_; }  // p^n
  const std::vector<int64_t>& defining_poly() const { return g_; }

  // --- element arithmetic on codes ---
  uint64_t add(uint64_t a, uint64_t b) const;
  uint64_t sub(uint64_t a, uint64_t b) const;
  uint64_t neg(uint64_t a) const;
  uint64_t mul(uint64_t a, uint64_t b) const;
  uint64_t pow(uint64_t a, uint64_t e) const;
  uint64_t inv(uint64_t a) const;
  uint64_t scalar_mul(int64_t c, uint64_t a) const;  // c in F_p
  uint64_t from_int(int64_t c) const;                // prime-field constant

  // raw digit-vector multiply (length n_, used by hot loops)
  void mul_raw(const int64_t* a, const int64_t* b, int64_t* out) const;

  void decode(uint64_t code, int64_t* digits) const;
  uint64_t encode(const int64_t* digits) const;

  // --- Frobenius / trace / norm ---
  uint64_t frob_p(uint64_t a, int k = 1) const;  // a^(p^k)
  // trace and norm onto the subfield of degree d over F_p (d | n); the result
  // is returned as an element of this field (it lies in that subfield)
  uint64_t trace_to(int d, uint64_t a) const;
  uint64_t norm_to(int d, uint64_t a) const;
  int64_t prime_trace(uint64_t a) const;  // Tr to F_p as an integer in [0,p)
  bool in_subfield(int d, uint64_t a) const;

  // --- multiplicative structure ---
  uint64_t generator() const;  // smallest-code generator of the unit group
  // discrete log base generator(); requires log tables (size <= table limit)
  uint64_t dlog(uint64_t a) const;
  uint64_t exp(uint64_t k) const;  // generator()^k
  bool has_log_table() const { return !log_.empty(); }
  // all elements of mu_m (requires m | size-1)
  std::vector<uint64_t> roots_of_unity(uint64_t m) const;
  uint64_t primitive_root_of_unity(uint64_t m) const;

  std::optional<uint64_t> sqrt(uint64_t a) const;

  std::string to_string(uint64_t a) const;

 private:
  int64_t p_;
  int n_;
  uint64_t size_;
  std::vector<int64_t> g_;       // monic, length n+1
  std::vector<int64_t> redrow_;  // x^{n+k} mod g, k = 0..n-2, row-major length n
  mutable uint64_t gen_ = 0;
  mutable std::vector<uint32_t> log_;   // code -> dlog
  mutable std::vector<uint32_t> exp_;   // dlog -> code
  std::vector<uint64_t> unit_factors_;  // prime factors of size-1

  void build_log_tables() const;
};

// Canonical embedding F_{p^a} -> F_{p^b} for a | b: the defining polynomial of
// the small field is mapped to its smallest root (by code) in the big field,
// with maps through the divisor chain composed so towers commute.
class FqEmbedding {
 public:
  // both fields must outlive the embedding; temporaries are rejected
  FqEmbedding(const FqField& sub, const FqField& big);
  FqEmbedding(FqField&& sub, const FqField& big) = delete;
  FqEmbedding(const FqField& sub, FqField&& big) = delete;
  FqEmbedding(FqField&& sub, FqField&& big) = delete;

  const FqField& sub() const { return *sub_; }
  const FqField& big() const { return *big_; }
  uint64_t root() const { return root_; }

  uint64_t map(uint64_t a) const;
  // pull an element of the big field known to lie in the image back to the
  // small field; throws if it is not in the image
  uint64_t pullback(uint64_t a) const;
  bool in_image(uint64_t a) const;

 private:
  const FqField* sub_;
  const FqField* big_;
  uint64_t root_;
  std::vector<uint64_t> pow_root_;       // root^i, i < sub.n
  std::vector<int64_t> pullback_mat_;    // solves digits_big = M * digits_sub
  void build_pullback();
};

// Roots in this field of x^q - x = c, x^q + x = c (q-linear maps) and x^2 = c.
std::vector<uint64_t> solve_qlin_minus(const FqField& F, uint64_t q, uint64_t c);
std::vector<uint64_t> solve_qlin_plus(const FqField& F, uint64_t q, uint64_t c);
std::vector<uint64_t> solve_square(const FqField& F, uint64_t c);

uint64_t ipow_checked(uint64_t b, int e);

}  // namespace exalg
