#pragma once

#include <cstdint>
#include <vector>

#include "exalg/fq.hpp"

namespace exalg {

// Dense matrix over a small finite field; entries are FqField codes.
struct FqMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<uint64_t> a;  // row-major

  FqMatrix() = default;
  FqMatrix(int r, int c) : rows(r), cols(c), a(size_t(r) * c, 0) {}
  uint64_t& at(int i, int j) { return a[size_t(i) * cols + j]; }
  uint64_t at(int i, int j) const { return a[size_t(i) * cols + j]; }
};

int fq_rank(const FqField& F, FqMatrix M);
// Nonzero row vector v with v * M = 0; requires rank(M) < rows.
std::vector<uint64_t> fq_left_null_vector(const FqField& F, const FqMatrix& M);

// #{v in F_q^n : v^T G v = t} for a symmetric Gram matrix G (odd q).
// Evaluated by congruent diagonalization and the classical level-set counts.
uint64_t quadratic_level_count(const FqField& F, const FqMatrix& G, uint64_t t);

// Degree-m extension of a small base field, represented as F_q[T]/(h) with h
// the first monic irreducible of degree m in base-q code order. Elements are
// coefficient vectors (base-field codes, degree < m). Unlike FqField this has
// no element tables, so it stays usable when q^m is far beyond memory.
class ExtField {
 public:
  using Elem = std::vector<uint64_t>;

  // the base field must outlive the extension; temporaries are rejected
  ExtField(const FqField& base, int m);
  ExtField(FqField&& base, int m) = delete;

  const FqField& base() const { return *base_; }
  int m() const { return m_; }
  const std::vector<uint64_t>& modulus() const { return h_; }

  Elem zero() const { return Elem(size_t(m_), 0); }
  Elem one() const;
  Elem gen() const;  // the class of T (equals zero() when m = 1)
  Elem from_base(uint64_t code) const;
  bool is_zero(const Elem& x) const;

  Elem add(const Elem& x, const Elem& y) const;
  Elem sub(const Elem& x, const Elem& y) const;
  Elem neg(const Elem& x) const;
  Elem mul(const Elem& x, const Elem& y) const;
  Elem pow(const Elem& x, uint64_t e) const;
  Elem inv(const Elem& x) const;

  Elem frob(const Elem& x) const;       // x^q via the precomputed matrix
  uint64_t trace(const Elem& x) const;  // sum of x^{q^i}, a base-field code

  // Matrix of x -> x^q in the power basis 1, T, ..., T^{m-1}.
  const FqMatrix& frob_matrix() const { return frob_; }

 private:
  const FqField* base_;
  int m_;
  std::vector<uint64_t> h_;  // monic, length m+1
  FqMatrix frob_;

  void reduce(std::vector<uint64_t>& v) const;  // degree < 2m-1 -> < m
};

}  // namespace exalg
