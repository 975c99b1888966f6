#pragma once
// One-dimensional formal module laws over the local rings in local_ring.hpp,
// in two presentations:
//
//  * small dense truncations (series.hpp) of the universal addition law and
//    scalar series, with Laurent-in-pi coefficient bookkeeping; suitable for
//    low-degree identity checks, and
//  * the large graded engine (pi_series.hpp) that solves for the
//    multiplication-by-pi series to high X-degree and verifies that its tail
//    lies in an explicit monomial ideal.
//
// The logarithm used throughout is the one attached to the parameter u:
//   log(X) = sum_k b_k X^{q^k},  b_0 = 1,  pi^k b_k =: c_k integral,
//   c_k = c_{k-1} u^{q^{k-1}} + pi c_{k-2}.

#include "exalg/local_ring.hpp"
#include "exalg/pi_series.hpp"
#include "exalg/series.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace exalg {

// ---------------------------------------------------------------------------
// Graded engine: c_k coefficients and the multiplication-by-pi solve.
// ---------------------------------------------------------------------------

// c_0, ..., c_kmax with c_k = pi^k * (k-th logarithm coefficient), as graded
// u-series of X-degree 0. Entries beyond the u-truncation vanish silently.
std::vector<PiSeries> log_pi_coeffs(const PiSeriesRing& PS, int kmax);

struct MulPiSolve {
  PiSeries P;         // the series [pi](X), exact mod pi^trust
  int sigma = 0;      // largest k with q^k <= X-truncation degree
  int trust = 0;      // trusted pi-digit count of P's coefficients
  int iterations = 0; // Newton iterations consumed
  int64_t projected = 0; // garbage coefficients zeroed across all projections
  bool converged = false;
};

// Solves log(P) = pi * log(X) for P = pi X + ... in the graded quotient.
// Mixed characteristic only. Requires ring precision N >= 2*sigma + 2.
MulPiSolve solve_mul_pi(const PiSeriesRing& PS);

// Equal-characteristic model: [pi](X) = pi X + u X^q + X^{q^2} exactly.
PiSeries mul_pi_equal(const PiSeriesRing& PS);

// ---------------------------------------------------------------------------
// Congruence verification: [pi](X) minus an explicit principal part lies in
// an explicit monomial ideal (three variants, successively assuming e >= 1,
// e >= 2, e >= 3).
// ---------------------------------------------------------------------------

struct IdealGen {
  int c;     // pi-adic valuation floor
  int64_t a; // u-exponent floor
  int64_t m; // X-exponent floor
};

struct CongruenceSpec {
  int variant = 0;
  int64_t dx = 0;          // X-truncation degree
  int64_t du = 0;          // u-truncation degree
  int kpure = 0;           // pure pi-power generator pi^kpure
  std::vector<IdealGen> gens;
};

// Monomial ideal and working truncation for the given variant (1..3) at
// residue size q. du may be widened by the caller; verdicts are unaffected
// because each ideal contains the pure power u^{du+1}.
CongruenceSpec congruence_spec(int variant, int64_t q);

struct CongruenceReport {
  bool pass = false;
  int variant = 0;
  int64_t p = 0, f = 0, e = 0, q = 0;
  int iterations = 0;
  bool converged = false;
  int trust = 0;
  int64_t residual_terms = 0; // nonzero residual monomials examined
  std::string offending;      // first monomial outside the ideal, if any
};

// Builds the ring at the variant's working truncation, solves for [pi](X),
// subtracts the variant's principal part and checks every residual monomial
// against the ideal. Throws std::invalid_argument when the variant's
// assumption on e fails (variant 2 needs e >= 2, variant 3 needs e >= 3).
// mul_mode as in PiSeriesRing; du_override > 0 widens the u-truncation.
CongruenceReport verify_mul_pi_congruence(int64_t p, int64_t f, int64_t e,
                                          int variant, int mul_mode = 0,
                                          int64_t du_override = 0);

// Identity check pi^{s+1} log(X) = pi^{s+1} X + pi^s log(u X^q)
//                                   + pi^s log(X^{q^2})
// in the graded quotient, with s = sigma(PS). True when it holds mod
// pi^trust.
bool check_log_functional_equation(const PiSeriesRing& PS, int trust);

// ---------------------------------------------------------------------------
// Small dense engine: universal addition law and scalar series.
// ---------------------------------------------------------------------------

// Logarithm as a 1-variable truncation with Laurent-u coefficients:
// f(T) = sum b_k T^{q^k} up to S1's degree bound.
TruncSeries<UPolyRing> log_series(const UPolyRing& U, const TsShape& S1);

// Inverse of the logarithm (exponential), same truncation.
TruncSeries<UPolyRing> exp_series(const UPolyRing& U, const TsShape& S1);

// Universal addition law F(X, Y) = exp(log X + log Y) on a 2-variable shape.
TruncSeries<UPolyRing> universal_add(const UPolyRing& U, const TsShape& S2);

// Scalar series [a](T) = exp(a log T) for a in the coefficient ring.
TruncSeries<UPolyRing> universal_scalar(const UPolyRing& U, const TsShape& S1,
                                        const LaurentU& a);

} // namespace exalg
