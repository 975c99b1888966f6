#pragma once

#include <cstdint>
#include <vector>

#include "exalg/fq.hpp"

namespace exalg {

// Affine models over F_q (q = p^f odd). zeta and c are codes in the canonical
// FqField(p, f); zeta must be nonzero where used.
//
//   DrinfeldDouble:           x^q y - x y^q = zeta,  Z^q = x^{q^3} y - x y^{q^3}
//   BalancedKummer (y != 0):  Z^q y^{q^2-1} = zeta (y^{2(q^2-1)} + 1)
//   ArtinSchreierSquare:      a^q - a = s^2
//   Hermitian:                X^q + X = zeta Y^{q+1} - c
//   Drinfeld:                 x^q y - x y^q = zeta
enum class CurveFamily {
  DrinfeldDouble,
  BalancedKummer,
  ArtinSchreierSquare,
  Hermitian,
  Drinfeld
};

struct CurveModel {
  CurveFamily family;
  int64_t p = 3;
  int f = 1;
  uint64_t zeta = 1;
  uint64_t c = 0;
};

uint64_t curve_q(const CurveModel& C);

// Exact number of affine F_{q^m}-points by plain enumeration. Refuses when
// q^{2m} exceeds the iteration budget (2^28).
uint64_t affine_count_brute(const CurveModel& C, int m);

// Exact affine count via the q-linear fiber structure: the count reduces to
// the size of a level set of an F_q-valued quadratic form in m variables.
// Supported for the three smooth families; any m the zeta tables need.
uint64_t affine_count(const CurveModel& C, int m);

// Points at infinity of the smooth projective model over F_{q^m}
// (ArtinSchreierSquare: 1, Hermitian: 1, Drinfeld: q + 1; independent of m).
uint64_t infinity_count(const CurveModel& C, int m);

// Smooth-model genus implied by the family shape; used to size count tables.
int64_t genus_bound(const CurveModel& C);

// All points of F_{q^m}^k where the defining equations hold and the Jacobian
// drops rank. Coordinates are codes in FqField(p, f*m); DrinfeldDouble points
// are (x, y, Z), BalancedKummer points are (y, Z), smooth families return {}.
std::vector<std::vector<uint64_t>> singular_points(const CurveModel& C, int m);

// Finite-order automorphisms, parameters as codes in FqField(p, 2f):
//   ArtinSchreierSquare: (a, s) -> (scale^2 a + shift, scale s),
//                        scale^{2(q-1)} = 1, shift in F_q
//   Hermitian:           (X, Y) -> (X + shift, scale Y),
//                        scale^{q+1} = 1, shift^q + shift = 0
struct CurveAut {
  uint64_t scale = 1;
  uint64_t shift = 0;
};

bool aut_is_identity(const CurveAut& A);

// Fixed points on the smooth projective model: affine part by enumeration
// over F_{q^4}, plus the unique (always fixed) point at infinity.
uint64_t fixed_points_affine(const CurveModel& C, const CurveAut& A);
uint64_t fixed_points_total(const CurveModel& C, const CurveAut& A);

// Trace on H^1 from the fixed-point count: identity gives 2g, otherwise
// 2 - #Fix. Throws when a fixed point is not simple (local derivative 1).
int64_t h1_trace(const CurveModel& C, const CurveAut& A);

// Same, but wildly fixed points enter with their local multiplicity
// v(sigma(t) - t) instead of 1, so translations are admissible.
int64_t h1_trace_refined(const CurveModel& C, const CurveAut& A);

}  // namespace exalg
