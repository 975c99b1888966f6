#include "exalg/formal_module.hpp"

#include <sstream>
#include <stdexcept>

namespace exalg {

namespace {

int64_t ipow_small(int64_t b, int e) {
  int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

int sigma_of(const PiSeriesRing& PS) {
  int s = 0;
  while (ipow_small(PS.q(), s + 1) <= PS.dx()) ++s;
  return s;
}

// Reciprocal of a weight-0 series with unit constant term, correct mod
// pi^N up to the X-truncation, by r <- r(2 - a r) doublings.
PiSeries series_recip(const PiSeriesRing& PS, const PiSeries& a, int refine_from,
                      const PiSeries* warm) {
  const LocalRing& R = PS.local();
  PiSeries r = PS.zero(0);
  int steps;
  if (warm) {
    r = *warm;
    steps = refine_from;
  } else {
    LocalElem c0 = PS.coeff(a, 0, 0);
    r = PS.monomial(0, 0, R.inv(c0));
    steps = 1;
    int64_t reach = 1;
    while (reach <= PS.dx()) {
      reach *= 2;
      ++steps;
    }
  }
  PiSeries two = PS.scale_int(PS.monomial(0, 0, R.one()), 2);
  for (int i = 0; i < steps; ++i)
    r = PS.mul(r, PS.sub(two, PS.mul(a, r)));
  return r;
}

} // namespace

std::vector<PiSeries> log_pi_coeffs(const PiSeriesRing& PS, int kmax) {
  const LocalRing& R = PS.local();
  std::vector<PiSeries> c;
  c.reserve(size_t(kmax) + 1);
  c.push_back(PS.monomial(0, 0, R.one()));
  if (kmax >= 1) c.push_back(PS.monomial(0, 1, R.one()));
  for (int k = 2; k <= kmax; ++k) {
    PiSeries um = PS.monomial(0, ipow_small(PS.q(), k - 1), R.one());
    c.push_back(PS.add(PS.mul(c[size_t(k - 1)], um), PS.scale_pi(c[size_t(k - 2)], 1)));
  }
  return c;
}

PiSeries mul_pi_equal(const PiSeriesRing& PS) {
  const LocalRing& R = PS.local();
  if (!R.equal_char())
    throw std::invalid_argument("mul_pi_equal: ring must be equal-characteristic");
  PiSeries P = PS.zero(1);
  PS.add_monomial(P, 1, 0, R.pi());
  PS.add_monomial(P, PS.q(), 1, R.one());
  PS.add_monomial(P, PS.q() * PS.q(), 0, R.one());
  return P;
}

MulPiSolve solve_mul_pi(const PiSeriesRing& PS) {
  const LocalRing& R = PS.local();
  if (R.equal_char())
    throw std::invalid_argument("solve_mul_pi: ring must be mixed-characteristic");
  const int64_t q = PS.q();
  const int sigma = sigma_of(PS);
  const int N = R.N();
  if (N < 2 * sigma + 2)
    throw std::invalid_argument("solve_mul_pi: ring precision below 2*sigma + 2");
  const int ef = int(R.e() * R.f());

  MulPiSolve out;
  out.sigma = sigma;
  out.trust = N - sigma;

  std::vector<int64_t> qk(size_t(sigma) + 1);
  qk[0] = 1;
  for (int k = 1; k <= sigma; ++k) qk[size_t(k)] = qk[size_t(k - 1)] * q;

  std::vector<PiSeries> c = log_pi_coeffs(PS, sigma);

  // Constant part pi^{sigma+1} * log(X), folded into the defect below.
  PiSeries B = PS.zero(1);
  for (int k = 0; k <= sigma; ++k)
    B = PS.add(B, PS.scale_pi(PS.mul(c[size_t(k)], PS.x_pow(qk[size_t(k)])), sigma + 1 - k));

  // Start at pi X; each iteration roughly doubles the correct X-range.
  PiSeries P = PS.scale_pi(PS.x_pow(1), 1);
  PiSeries recip = PS.zero(0);
  bool have_recip = false;

  int maxit = 1;
  while ((int64_t(1) << maxit) <= PS.dx()) ++maxit;
  maxit += 4;

  for (int it = 1; it <= maxit; ++it) {
    out.iterations = it;

    std::vector<PiSeries> Pq(size_t(sigma) + 1, PS.zero(0));
    Pq[0] = P;
    for (int k = 1; k <= sigma; ++k) Pq[size_t(k)] = PS.pow(Pq[size_t(k - 1)], uint64_t(q));

    // Defect A = pi^sigma (log(P) - pi log(X)); every coefficient is stored
    // exactly mod pi^N, so convergence is vanishing at full precision.
    PiSeries A = PS.neg(B);
    for (int k = 0; k <= sigma; ++k)
      A = PS.add(A, PS.scale_pi(PS.mul(c[size_t(k)], Pq[size_t(k)]), sigma - k));
    if (PS.all_zero_mod(A, N)) {
      out.converged = true;
      break;
    }

    // Derivative sum_k q^k b_k P^{q^k - 1}; the q^k cancel the denominators,
    // leaving an integral series with unit constant term.
    PiSeries T = PS.monomial(0, 0, R.one());
    PiSeries fp = PS.zero(0);
    for (int k = 0; k <= sigma; ++k) {
      if (k > 0)
        T = PS.mul(T, PS.pow(Pq[size_t(k - 1)], uint64_t(q - 1)));
      int shift = ef * k - k;
      if (shift < N) fp = PS.add(fp, PS.scale_pi(PS.mul(c[size_t(k)], T), shift));
    }

    recip = series_recip(PS, fp, 2, have_recip ? &recip : nullptr);
    have_recip = true;

    // Newton step. Coefficients of E at X-degrees beyond the currently
    // correct range are noise and need not divide by pi^sigma; the
    // projection zeroes them, which only discards terms the next doubling
    // recomputes.
    PiSeries E = PS.mul(A, recip);
    int64_t zeroed = 0;
    P = PS.sub(P, PS.proj_div_pi(E, sigma, &zeroed));
    out.projected += zeroed;
  }

  out.P = P;
  return out;
}

CongruenceSpec congruence_spec(int variant, int64_t q) {
  CongruenceSpec s;
  s.variant = variant;
  const int64_t q2 = q * q, q3 = q2 * q, q4 = q3 * q, q5 = q4 * q;
  switch (variant) {
    case 1:
      s.dx = q5 - 1;
      s.du = 4;
      s.kpure = 3;
      s.gens = {{3, 0, 0},         {2, 0, q4 - q2 + 1}, {1, 1, q3 - q2 + 1},
                {1, 2, 1},         {2, 1, q},           {0, 3, q2 + 1},
                {0, 0, q5},        {0, 5, 0},           {0, 4, q2}};
      break;
    case 2:
      s.dx = q5 - 1;
      s.du = 2 * q;
      s.kpure = 3;
      s.gens = {{0, 0, q5}, {0, 2 * q + 1, 0}, {3, 0, 0}, {2, 1, q + 1},
                {1, 2, 1}};
      break;
    case 3:
      s.dx = q5 * q - 1;
      s.du = q2 + q;
      s.kpure = 4;
      s.gens = {{0, q2 + q + 1, 0}, {0, 0, q5 * q},  {1, 2 * q + 1, 0},
                {4, 0, 0},          {3, 1, q + 1},   {2, 2, 1}};
      break;
    default:
      throw std::invalid_argument("congruence_spec: variant must be 1, 2 or 3");
  }
  return s;
}

CongruenceReport verify_mul_pi_congruence(int64_t p, int64_t f, int64_t e,
                                          int variant, int mul_mode,
                                          int64_t du_override) {
  if (p < 3) throw std::invalid_argument("verify_mul_pi_congruence: p must be an odd prime");
  if (variant == 2 && e < 2)
    throw std::invalid_argument("verify_mul_pi_congruence: variant 2 requires e >= 2");
  if (variant == 3 && e < 3)
    throw std::invalid_argument("verify_mul_pi_congruence: variant 3 requires e >= 3");

  int64_t q = 1;
  for (int64_t i = 0; i < f; ++i) q *= p;
  CongruenceSpec spec = congruence_spec(variant, q);
  int64_t du = spec.du;
  if (du_override > 0) {
    if (du_override < spec.du)
      throw std::invalid_argument("verify_mul_pi_congruence: du_override below the ideal's u-span");
    du = du_override;
  }

  int sigma = 0;
  while (ipow_small(q, sigma + 1) <= spec.dx) ++sigma;
  const int N = 2 * sigma + spec.kpure + 2;

  LocalRing R(p, f, e, N, false);
  PiSeriesRing PS(R, spec.dx, int(du), mul_mode);

  MulPiSolve sol = solve_mul_pi(PS);

  CongruenceReport rep;
  rep.variant = variant;
  rep.p = p;
  rep.f = f;
  rep.e = e;
  rep.q = q;
  rep.iterations = sol.iterations;
  rep.converged = sol.converged;
  rep.trust = sol.trust;
  rep.pass = sol.converged;
  if (!sol.converged) {
    rep.offending = "solver did not converge";
    return rep;
  }

  // Principal part the solution is measured against.
  PiSeries principal = PS.zero(1);
  PS.add_monomial(principal, 1, 0, R.pi());
  PS.add_monomial(principal, q * q, 0, R.one());
  if (variant == 1) {
    PS.add_monomial(principal, q, 1, R.one());
    int ef1 = int(e * f) - 1;
    LocalElem qpi = R.neg(R.mul_pi_k(R.one(), ef1)); // -q/pi
    PS.add_monomial(principal, q * (q * q - q + 1), 2, qpi);
  } else {
    LocalElem cu = R.sub(R.one(), R.mul_pi_k(R.one(), int(q - 1)));
    PS.add_monomial(principal, q, 1, cu);
  }

  PiSeries S = PS.sub(sol.P, principal);
  const int trust = sol.trust;
  PS.for_each(S, [&](int64_t m, int64_t a, const LocalElem& v) {
    LocalElem tv = R.truncate_digits(v, trust);
    if (R.is_zero(tv)) return; // vanishes to trusted depth: inside pi^kpure
    ++rep.residual_terms;
    int64_t val = R.valuation(tv);
    bool ok = false;
    for (const IdealGen& g : spec.gens)
      if (val >= g.c && a >= g.a && m >= g.m) {
        ok = true;
        break;
      }
    if (!ok) {
      rep.pass = false;
      if (rep.offending.empty()) {
        std::ostringstream os;
        os << "u^" << a << " X^" << m << " with pi-valuation " << val;
        rep.offending = os.str();
      }
    }
  });
  return rep;
}

bool check_log_functional_equation(const PiSeriesRing& PS, int trust) {
  const LocalRing& R = PS.local();
  const int64_t q = PS.q();
  const int sigma = sigma_of(PS);
  std::vector<PiSeries> c = log_pi_coeffs(PS, sigma + 2);

  PiSeries lhs = PS.zero(1);
  PiSeries rhs = PS.scale_pi(PS.x_pow(1), sigma + 1);
  int64_t pw = 1;
  for (int k = 0; k <= sigma; ++k) {
    lhs = PS.add(lhs, PS.scale_pi(PS.mul(c[size_t(k)], PS.x_pow(pw)), sigma + 1 - k));
    // log(u X^q) term: u^{q^k} X^{q^{k+1}}
    PiSeries arg1 = PS.monomial(q * pw, pw, R.one());
    rhs = PS.add(rhs, PS.scale_pi(PS.mul(c[size_t(k)], arg1), sigma - k));
    // log(X^{q^2}) term: X^{q^{k+2}}
    PiSeries arg2 = PS.x_pow(q * q * pw);
    rhs = PS.add(rhs, PS.scale_pi(PS.mul(c[size_t(k)], arg2), sigma - k));
    pw *= q;
  }
  return PS.equal_mod(lhs, rhs, trust);
}

TruncSeries<UPolyRing> log_series(const UPolyRing& U, const TsShape& S1) {
  if (S1.nv != 1) throw std::invalid_argument("log_series: univariate shape expected");
  const int64_t q = U.local().q();
  auto f = ts_zero(U, S1);
  LaurentU cm2 = U.zero(), cm1 = U.one(); // c_{k-2}, c_{k-1} entering step k
  f.c[size_t(S1.index(1))] = U.one();
  int64_t pw = 1;
  for (int k = 1; pw * q <= S1.D; ++k) {
    LaurentU ck = k == 1 ? U.u_pow(1)
                         : U.add(U.mul(cm1, U.u_pow(int(pw))),
                                 U.mul(U.pi_pow(1), cm2));
    pw *= q;
    f.c[size_t(S1.index(int(pw)))] = U.mul(U.pi_pow(-k), ck);
    cm2 = cm1;
    cm1 = ck;
  }
  return f;
}

TruncSeries<UPolyRing> exp_series(const UPolyRing& U, const TsShape& S1) {
  return ts_reverse(U, S1, log_series(U, S1));
}

TruncSeries<UPolyRing> universal_add(const UPolyRing& U, const TsShape& S2) {
  if (S2.nv != 2) throw std::invalid_argument("universal_add: bivariate shape expected");
  TsShape S1(1, S2.D);
  auto f1 = log_series(U, S1);
  auto g1 = ts_reverse(U, S1, f1);
  auto X = ts_var(U, S2, 0);
  auto Y = ts_var(U, S2, 1);
  auto lx = ts_compose(U, S2, f1, S1, {X});
  auto ly = ts_compose(U, S2, f1, S1, {Y});
  return ts_compose(U, S2, g1, S1, {ts_add(U, S2, lx, ly)});
}

TruncSeries<UPolyRing> universal_scalar(const UPolyRing& U, const TsShape& S1,
                                        const LaurentU& a) {
  auto f1 = log_series(U, S1);
  auto g1 = ts_reverse(U, S1, f1);
  auto af = ts_scale(U, S1, a, f1);
  return ts_compose(U, S1, g1, S1, {af});
}

} // namespace exalg
