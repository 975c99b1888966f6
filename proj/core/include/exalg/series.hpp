#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "exalg/local_ring.hpp"

namespace exalg {

// pi^{-shift} times an integral u-polynomial over a LocalRing.  `prec` is the
// number of low pi-digits of the stored representative that are trusted;
// operations propagate it and value-level checks throw when they would need
// digits beyond it.
struct LaurentU {
  int shift = 0;
  int prec = 0;
  std::vector<LocalElem> c;
};

// Truncated polynomial ring R[u]/(u^{du+1}) with bounded pi-denominators.
class UPolyRing {
 public:
  using Elem = LaurentU;

  UPolyRing(const LocalRing& R, int du, int max_shift, int check_digits);

  const LocalRing& local() const { return *R_; }
  int du() const { return Du_; }
  int check_digits() const { return check_; }

  Elem zero() const;
  Elem one() const;
  Elem u_pow(int a) const;
  Elem pi_pow(int k) const;  // k may be negative
  Elem from_local(const LocalElem& a) const;
  Elem from_int(int64_t n) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem mul_int(const Elem& a, int64_t n) const;

  // value equality / vanishing mod pi^{check_digits}; throws if the stored
  // precision cannot support the comparison
  bool is_zero(const Elem& a) const;
  bool equal(const Elem& a, const Elem& b) const;
  bool is_zero_fast(const Elem& a) const;

  // true if the value is integral as far as the trusted digits show
  bool integral(Elem a) const;
  // u^adeg coefficient of an integral value; throws on a genuine denominator
  LocalElem coeff(const Elem& a, int adeg) const;

  void normalize(Elem& a) const;
  std::string to_string(const Elem& a) const;

 private:
  const LocalRing* R_;
  int Du_;
  int max_shift_;
  int check_;

  Elem raise_shift(const Elem& a, int s) const;
  void mask(Elem& a) const;
};

// Monomial index for dense series in nv <= 3 variables of total degree <= D.
struct TsShape {
  int nv = 1;
  int D = 0;
  std::vector<std::array<int, 3>> mono;
  std::vector<int32_t> lookup;  // (i0 + s*i1 + s*s*i2) -> packed index or -1
  int stride = 1;

  TsShape(int nvars, int maxdeg);
  int index(int i0, int i1 = 0, int i2 = 0) const {
    int32_t r = lookup[size_t(i0 + stride * (i1 + stride * i2))];
    if (r < 0) throw std::logic_error("TsShape: monomial out of range");
    return int(r);
  }
  bool in_range(int i0, int i1 = 0, int i2 = 0) const {
    return i0 + i1 + i2 <= D;
  }
  size_t count() const { return mono.size(); }
};

template <class Ring>
struct TruncSeries {
  std::vector<typename Ring::Elem> c;
};

template <class Ring>
TruncSeries<Ring> ts_zero(const Ring& R, const TsShape& S) {
  TruncSeries<Ring> f;
  f.c.assign(S.count(), R.zero());
  return f;
}

template <class Ring>
TruncSeries<Ring> ts_const(const Ring& R, const TsShape& S,
                           const typename Ring::Elem& a) {
  auto f = ts_zero(R, S);
  f.c[size_t(S.index(0, 0, 0))] = a;
  return f;
}

template <class Ring>
TruncSeries<Ring> ts_var(const Ring& R, const TsShape& S, int which) {
  auto f = ts_zero(R, S);
  int i[3] = {0, 0, 0};
  i[which] = 1;
  f.c[size_t(S.index(i[0], i[1], i[2]))] = R.one();
  return f;
}

template <class Ring>
TruncSeries<Ring> ts_add(const Ring& R, const TsShape& S,
                         const TruncSeries<Ring>& a, const TruncSeries<Ring>& b) {
  TruncSeries<Ring> f;
  f.c.resize(S.count());
  for (size_t i = 0; i < S.count(); ++i) f.c[i] = R.add(a.c[i], b.c[i]);
  return f;
}

template <class Ring>
TruncSeries<Ring> ts_sub(const Ring& R, const TsShape& S,
                         const TruncSeries<Ring>& a, const TruncSeries<Ring>& b) {
  TruncSeries<Ring> f;
  f.c.resize(S.count());
  for (size_t i = 0; i < S.count(); ++i) f.c[i] = R.sub(a.c[i], b.c[i]);
  return f;
}

template <class Ring>
TruncSeries<Ring> ts_scale(const Ring& R, const TsShape& S,
                           const typename Ring::Elem& s, const TruncSeries<Ring>& a) {
  TruncSeries<Ring> f;
  f.c.resize(S.count());
  for (size_t i = 0; i < S.count(); ++i)
    f.c[i] = R.is_zero_fast(a.c[i]) ? R.zero() : R.mul(s, a.c[i]);
  return f;
}

template <class Ring>
TruncSeries<Ring> ts_mul(const Ring& R, const TsShape& S,
                         const TruncSeries<Ring>& a, const TruncSeries<Ring>& b) {
  auto f = ts_zero(R, S);
  for (size_t ia = 0; ia < S.count(); ++ia) {
    if (R.is_zero_fast(a.c[ia])) continue;
    const auto& ma = S.mono[ia];
    for (size_t ib = 0; ib < S.count(); ++ib) {
      if (R.is_zero_fast(b.c[ib])) continue;
      const auto& mb = S.mono[ib];
      if (!S.in_range(ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2])) continue;
      size_t k = size_t(S.index(ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]));
      f.c[k] = R.add(f.c[k], R.mul(a.c[ia], b.c[ib]));
    }
  }
  return f;
}

template <class Ring>
TruncSeries<Ring> ts_pow(const Ring& R, const TsShape& S,
                         const TruncSeries<Ring>& a, uint64_t k) {
  auto r = ts_const(R, S, R.one());
  auto b = a;
  while (k) {
    if (k & 1) r = ts_mul(R, S, r, b);
    if (k >>= 1) b = ts_mul(R, S, b, b);
  }
  return r;
}

template <class Ring>
bool ts_equal(const Ring& R, const TsShape& S, const TruncSeries<Ring>& a,
              const TruncSeries<Ring>& b) {
  for (size_t i = 0; i < S.count(); ++i)
    if (!R.equal(a.c[i], b.c[i])) return false;
  return true;
}

// Substitute args (series over S) for the variables of f (a series over Sf
// with Sf.nv <= 2) by nested Horner evaluation.
template <class Ring>
TruncSeries<Ring> ts_compose(const Ring& R, const TsShape& S,
                             const TruncSeries<Ring>& f, const TsShape& Sf,
                             const std::vector<TruncSeries<Ring>>& args) {
  if (Sf.nv > 2 || int(args.size()) != Sf.nv)
    throw std::invalid_argument("ts_compose: unsupported arity");
  auto horner1 = [&](auto coeff_at, int dmax, const TruncSeries<Ring>& A) {
    auto res = ts_zero(R, S);
    for (int i = dmax; i >= 0; --i) {
      res = ts_mul(R, S, res, A);
      res.c[size_t(S.index(0, 0, 0))] =
          R.add(res.c[size_t(S.index(0, 0, 0))], coeff_at(i));
    }
    return res;
  };
  if (Sf.nv == 1) {
    return horner1([&](int i) { return f.c[size_t(Sf.index(i))]; }, Sf.D, args[0]);
  }
  auto res = ts_zero(R, S);
  for (int i1 = Sf.D; i1 >= 0; --i1) {
    auto row = horner1(
        [&](int i) {
          return i + i1 <= Sf.D ? f.c[size_t(Sf.index(i, i1))] : R.zero();
        },
        Sf.D - i1, args[0]);
    res = ts_mul(R, S, res, args[1]);
    for (size_t k = 0; k < S.count(); ++k) res.c[k] = R.add(res.c[k], row.c[k]);
  }
  return res;
}

// Compositional inverse of a univariate f = T + higher with unit linear
// coefficient 1, by the fixed-point iteration g <- T - (f - T)(g).
template <class Ring>
TruncSeries<Ring> ts_reverse(const Ring& R, const TsShape& S,
                             const TruncSeries<Ring>& f) {
  if (S.nv != 1) throw std::invalid_argument("ts_reverse: univariate only");
  if (!R.is_zero(f.c[size_t(S.index(0))]) || !R.equal(f.c[size_t(S.index(1))], R.one()))
    throw std::invalid_argument("ts_reverse: series must be T + higher terms");
  auto tail = f;
  tail.c[size_t(S.index(0))] = R.zero();
  tail.c[size_t(S.index(1))] = R.zero();
  auto T = ts_var(R, S, 0);
  auto g = T;
  for (int it = 0; it < S.D; ++it)
    g = ts_sub(R, S, T, ts_compose(R, S, tail, S, {g}));
  return g;
}

}  // namespace exalg
