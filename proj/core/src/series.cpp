#include "exalg/series.hpp"

#include <sstream>

namespace exalg {

TsShape::TsShape(int nvars, int maxdeg) : nv(nvars), D(maxdeg), stride(maxdeg + 1) {
  if (nv < 1 || nv > 3) throw std::invalid_argument("TsShape: 1..3 variables");
  lookup.assign(size_t(stride) * size_t(stride) * size_t(stride), -1);
  for (int i2 = 0; i2 <= (nv >= 3 ? D : 0); ++i2)
    for (int i1 = 0; i1 <= (nv >= 2 ? D - i2 : 0); ++i1)
      for (int i0 = 0; i0 + i1 + i2 <= D; ++i0) {
        lookup[size_t(i0 + stride * (i1 + stride * i2))] = int32_t(mono.size());
        mono.push_back({i0, i1, i2});
      }
}

UPolyRing::UPolyRing(const LocalRing& R, int du, int max_shift, int check_digits)
    : R_(&R), Du_(du), max_shift_(max_shift), check_(check_digits) {
  if (du < 0 || max_shift < 0 || check_digits < 1)
    throw std::invalid_argument("UPolyRing: bad parameters");
  if (check_ + max_shift_ > R.N())
    throw std::invalid_argument("UPolyRing: ring precision below check + shift headroom");
}

LaurentU UPolyRing::zero() const {
  LaurentU a;
  a.shift = 0;
  a.prec = R_->N();
  a.c.assign(size_t(Du_) + 1, R_->zero());
  return a;
}

LaurentU UPolyRing::one() const {
  LaurentU a = zero();
  a.c[0] = R_->one();
  return a;
}

LaurentU UPolyRing::u_pow(int deg) const {
  LaurentU a = zero();
  if (deg <= Du_) a.c[size_t(deg)] = R_->one();
  return a;
}

LaurentU UPolyRing::pi_pow(int k) const {
  LaurentU a = zero();
  if (k >= 0) {
    a.c[0] = R_->mul_pi_k(R_->one(), k);
  } else {
    if (-k > max_shift_) throw std::domain_error("UPolyRing: pi power below shift headroom");
    a.shift = -k;
    a.c[0] = R_->one();
  }
  return a;
}

LaurentU UPolyRing::from_local(const LocalElem& v) const {
  LaurentU a = zero();
  a.c[0] = v;
  return a;
}

LaurentU UPolyRing::from_int(int64_t n) const { return from_local(R_->from_int(n)); }

LaurentU UPolyRing::raise_shift(const LaurentU& a, int s) const {
  if (s == a.shift) return a;
  LaurentU b;
  b.shift = s;
  int d = s - a.shift;
  b.prec = std::min(a.prec + d, R_->N());
  b.c.resize(a.c.size());
  for (size_t i = 0; i < a.c.size(); ++i) b.c[i] = R_->mul_pi_k(a.c[i], d);
  return b;
}

void UPolyRing::mask(LaurentU& a) const {
  if (a.prec >= R_->N()) return;
  for (auto& v : a.c) v = R_->truncate_digits(v, a.prec);
}

void UPolyRing::normalize(LaurentU& a) const {
  mask(a);
  while (a.shift > 0 && a.prec > 0) {
    bool div = true;
    for (const auto& v : a.c)
      if (!R_->divisible_pi(v)) {
        div = false;
        break;
      }
    if (!div) break;
    for (auto& v : a.c) v = R_->div_pi(v);
    --a.shift;
    --a.prec;
  }
  if (a.shift > max_shift_)
    throw std::domain_error("UPolyRing: shift headroom exceeded; raise ring precision");
}

LaurentU UPolyRing::add(const LaurentU& a, const LaurentU& b) const {
  int s = std::max(a.shift, b.shift);
  LaurentU x = raise_shift(a, s), y = raise_shift(b, s);
  LaurentU r;
  r.shift = s;
  r.prec = std::min(x.prec, y.prec);
  r.c.resize(x.c.size());
  for (size_t i = 0; i < x.c.size(); ++i) r.c[i] = R_->add(x.c[i], y.c[i]);
  normalize(r);
  return r;
}

LaurentU UPolyRing::sub(const LaurentU& a, const LaurentU& b) const { return add(a, neg(b)); }

LaurentU UPolyRing::neg(const LaurentU& a) const {
  LaurentU r = a;
  for (auto& v : r.c) v = R_->neg(v);
  return r;
}

LaurentU UPolyRing::mul(const LaurentU& a, const LaurentU& b) const {
  LaurentU r;
  r.shift = a.shift + b.shift;
  r.prec = std::min(a.prec, b.prec);
  r.c.assign(size_t(Du_) + 1, R_->zero());
  for (int i = 0; i <= Du_; ++i) {
    if (R_->is_zero_fast(a.c[size_t(i)])) continue;
    for (int j = 0; i + j <= Du_; ++j) {
      if (R_->is_zero_fast(b.c[size_t(j)])) continue;
      r.c[size_t(i + j)] =
          R_->add(r.c[size_t(i + j)], R_->mul(a.c[size_t(i)], b.c[size_t(j)]));
    }
  }
  normalize(r);
  return r;
}

LaurentU UPolyRing::mul_int(const LaurentU& a, int64_t n) const {
  LaurentU r = a;
  for (auto& v : r.c) v = R_->mul_int(v, n);
  normalize(r);
  return r;
}

bool UPolyRing::is_zero(const LaurentU& a) const {
  int need = check_ + a.shift;
  if (a.prec < need)
    throw std::domain_error("UPolyRing: precision " + std::to_string(a.prec) +
                            " below required " + std::to_string(need));
  for (const auto& v : a.c)
    if (!R_->is_zero_mod_pik(v, need)) return false;
  return true;
}

bool UPolyRing::equal(const LaurentU& a, const LaurentU& b) const { return is_zero(sub(a, b)); }

bool UPolyRing::is_zero_fast(const LaurentU& a) const {
  for (const auto& v : a.c)
    if (!R_->is_zero_fast(v)) return false;
  return true;
}

bool UPolyRing::integral(LaurentU a) const {
  normalize(a);
  if (a.shift == 0) return true;
  // all trusted digits divide out but junk blocked further normalization
  return false;
}

LocalElem UPolyRing::coeff(const LaurentU& a, int adeg) const {
  LaurentU x = a;
  normalize(x);
  if (x.shift != 0) throw std::domain_error("UPolyRing::coeff on a non-integral value");
  return x.c.at(size_t(adeg));
}

std::string UPolyRing::to_string(const LaurentU& a) const {
  std::ostringstream os;
  os << "pi^-" << a.shift << " * [";
  for (int i = 0; i <= Du_; ++i) {
    if (i) os << ", ";
    os << R_->to_string(a.c[size_t(i)]);
  }
  os << "]";
  return os.str();
}

}  // namespace exalg
