#include "exalg/pi_series.hpp"

#include <gmp.h>

#include <cstring>
#include <sstream>
#include <stdexcept>

namespace exalg {

PiSeriesRing::PiSeriesRing(const LocalRing& R, int64_t dx, int du, int mul_mode)
    : R_(&R), q_(int64_t(R.q())), Dx_(dx), Du_(du), mode_(mul_mode) {
  if (q_ < 3) throw std::invalid_argument("PiSeriesRing: q must be at least 3");
  if (dx < 1 || du < 0) throw std::invalid_argument("PiSeriesRing: bad truncation");
  Q2_ = q_ * q_ - 1;
  tcnt_ = Dx_ / (q_ - 1) + 1;
  ju_ = Du_ / (q_ + 1) + 1;
}

int64_t PiSeriesRing::norm_w(int64_t w) const { return ((w % Q2_) + Q2_) % Q2_; }

int64_t PiSeriesRing::weight_of(int64_t m, int64_t a) const {
  return norm_w(m + a * (1 - q_));
}

int64_t PiSeriesRing::a0(int64_t w, int64_t t) const {
  int64_t d = (w - m0(w)) / (q_ - 1);  // exact
  int64_t base = ((-d) % (q_ + 1) + (q_ + 1)) % (q_ + 1);
  return (base + t) % (q_ + 1);
}

PiSeries PiSeriesRing::zero(int64_t w) const {
  PiSeries s;
  s.w = norm_w(w);
  s.coef.assign(size_t(tcnt_ * ju_), R_->zero());
  return s;
}

bool PiSeriesRing::locate(int64_t w, int64_t m, int64_t a, int64_t* t, int64_t* j) const {
  if (m < 0 || m > Dx_ || a < 0 || a > Du_) return false;
  int64_t mm0 = m0(w);
  if ((m - mm0) % (q_ - 1) != 0 || m < mm0) throw std::logic_error("PiSeries: X-class violation");
  *t = (m - mm0) / (q_ - 1);
  int64_t aa0 = a0(w, *t);
  if ((a - aa0) % (q_ + 1) != 0 || a < aa0) throw std::logic_error("PiSeries: u-class violation");
  *j = (a - aa0) / (q_ + 1);
  return *j < ju_;
}

PiSeries PiSeriesRing::x_pow(int64_t m) const { return monomial(m, 0, R_->one()); }

PiSeries PiSeriesRing::monomial(int64_t m, int64_t a, const LocalElem& c) const {
  PiSeries s = zero(weight_of(m, a));
  add_monomial(s, m, a, c);
  return s;
}

void PiSeriesRing::add_monomial(PiSeries& s, int64_t m, int64_t a, const LocalElem& c) const {
  if (weight_of(m, a) != s.w) throw std::logic_error("PiSeries: weight mismatch");
  int64_t t, j;
  if (!locate(s.w, m, a, &t, &j)) return;
  s.coef[idx(t, j)] = R_->add(s.coef[idx(t, j)], c);
}

LocalElem PiSeriesRing::coeff(const PiSeries& s, int64_t m, int64_t a) const {
  if (m < 0 || m > Dx_ || a < 0 || a > Du_) return R_->zero();
  if (weight_of(m, a) != s.w) return R_->zero();
  int64_t t, j;
  if (!locate(s.w, m, a, &t, &j)) return R_->zero();
  return s.coef[idx(t, j)];
}

PiSeries PiSeriesRing::add(const PiSeries& a, const PiSeries& b) const {
  if (a.w != b.w) throw std::logic_error("PiSeries::add: weight mismatch");
  PiSeries s;
  s.w = a.w;
  s.coef.resize(a.coef.size());
  for (size_t i = 0; i < a.coef.size(); ++i) s.coef[i] = R_->add(a.coef[i], b.coef[i]);
  return s;
}

PiSeries PiSeriesRing::sub(const PiSeries& a, const PiSeries& b) const {
  return add(a, neg(b));
}

PiSeries PiSeriesRing::neg(const PiSeries& a) const {
  PiSeries s;
  s.w = a.w;
  s.coef.resize(a.coef.size());
  for (size_t i = 0; i < a.coef.size(); ++i) s.coef[i] = R_->neg(a.coef[i]);
  return s;
}

size_t PiSeriesRing::nonzero_count(const PiSeries& a) const {
  size_t n = 0;
  for (const auto& v : a.coef)
    if (!R_->is_zero_fast(v)) ++n;
  return n;
}

PiSeries PiSeriesRing::mul(const PiSeries& a, const PiSeries& b) const {
  if (mode_ == 1) return mul_naive(a, b);
  if (mode_ == 2) return mul_kron(a, b);
  if (R_->equal_char()) return mul_naive(a, b);
  size_t na = nonzero_count(a), nb = nonzero_count(b);
  if (na * nb < size_t(1) << 21) return mul_naive(a, b);
  return mul_kron(a, b);
}

PiSeries PiSeriesRing::mul_naive(const PiSeries& a, const PiSeries& b) const {
  PiSeries s = zero(a.w + b.w);
  int64_t m0a = m0(a.w), m0b = m0(b.w), m0s = m0(s.w);
  int64_t dt = (m0a + m0b - m0s) / (q_ - 1);
  for (int64_t ta = 0; ta < tcnt_; ++ta) {
    int64_t ma = m0a + ta * (q_ - 1);
    if (ma > Dx_) break;
    for (int64_t ja = 0; ja < ju_; ++ja) {
      const LocalElem& ca = a.coef[idx(ta, ja)];
      if (R_->is_zero_fast(ca)) continue;
      int64_t aa = a0(a.w, ta) + ja * (q_ + 1);
      if (aa > Du_) continue;
      for (int64_t tb = 0; tb < tcnt_; ++tb) {
        int64_t m = ma + m0b + tb * (q_ - 1);
        if (m > Dx_) break;
        for (int64_t jb = 0; jb < ju_; ++jb) {
          const LocalElem& cb = b.coef[idx(tb, jb)];
          if (R_->is_zero_fast(cb)) continue;
          int64_t ab = a0(b.w, tb) + jb * (q_ + 1);
          int64_t aexp = aa + ab;
          if (ab > Du_ || aexp > Du_) continue;
          int64_t ts = ta + tb + dt;
          int64_t as0 = a0(s.w, ts);
          if ((aexp - as0) % (q_ + 1) != 0 || aexp < as0)
            throw std::logic_error("PiSeries::mul: grading violation");
          int64_t js = (aexp - as0) / (q_ + 1);
          size_t k = idx(ts, js);
          s.coef[k] = R_->add(s.coef[k], R_->mul(ca, cb));
        }
      }
    }
  }
  return s;
}

PiSeries PiSeriesRing::mul_kron(const PiSeries& a, const PiSeries& b) const {
  if (R_->equal_char()) return mul_naive(a, b);
  const int f = R_->f(), e = R_->e();
  const int64_t pM = R_->pM();
  // packing dimensions sized for the product
  const int64_t St = 2 * tcnt_ - 1;
  const int64_t Sa = 2 * Du_ + 1;
  const int xd = 2 * f - 1, pd = 2 * e - 1;
  size_t na = 0, nb = 0;
  for (const auto& v : a.coef)
    if (!R_->is_zero_fast(v)) ++na;
  for (const auto& v : b.coef)
    if (!R_->is_zero_fast(v)) ++nb;
  if (na == 0 || nb == 0) return zero(a.w + b.w);
  // slot capacity: (p^M-1)^2 * (pairs per slot) with margin
  unsigned __int128 bound = (unsigned __int128)(pM - 1) * (unsigned __int128)(pM - 1);
  bound *= (unsigned __int128)std::min(na, nb) * size_t(f) * size_t(e);
  int slot_bits = 1;
  while ((bound >> slot_bits) != 0) ++slot_bits;
  int sb = (slot_bits + 8) / 8;
  if (sb > 14) throw std::logic_error("PiSeries::mul_kron: slot overflow");
  const size_t nslots = size_t(St) * size_t(Sa) * size_t(xd) * size_t(pd);
  const size_t nbytes = nslots * size_t(sb);
  if (nbytes > (size_t(1) << 31)) throw std::logic_error("PiSeries::mul_kron: buffer too large");

  auto pack = [&](const PiSeries& s, std::vector<unsigned char>& buf) {
    buf.assign(nbytes, 0);
    int64_t w = s.w;
    for (int64_t t = 0; t < tcnt_; ++t) {
      int64_t m = m0(w) + t * (q_ - 1);
      if (m > Dx_) break;
      for (int64_t j = 0; j < ju_; ++j) {
        const LocalElem& c = s.coef[idx(t, j)];
        if (R_->is_zero_fast(c)) continue;
        int64_t aexp = a0(w, t) + j * (q_ + 1);
        if (aexp > Du_) continue;
        for (int i = 0; i < e; ++i)
          for (int x = 0; x < f; ++x) {
            int64_t v = c[size_t(x + f * i)];
            if (!v) continue;
            size_t slot = ((size_t(t) * size_t(Sa) + size_t(aexp)) * size_t(xd) + size_t(x)) *
                              size_t(pd) +
                          size_t(i);
            unsigned char* dst = buf.data() + slot * size_t(sb);
            for (int byte = 0; byte < sb && v; ++byte) {
              dst[byte] = (unsigned char)(v & 0xff);
              v >>= 8;
            }
          }
      }
    }
  };

  std::vector<unsigned char> bufa, bufb;
  pack(a, bufa);
  pack(b, bufb);
  mpz_t za, zb;
  mpz_init(za);
  mpz_init(zb);
  mpz_import(za, bufa.size(), -1, 1, 0, 0, bufa.data());
  mpz_import(zb, bufb.size(), -1, 1, 0, 0, bufb.data());
  mpz_mul(za, za, zb);
  std::vector<unsigned char> out(2 * nbytes, 0);
  size_t written = 0;
  mpz_export(out.data(), &written, -1, 1, 0, 0, za);
  mpz_clear(za);
  mpz_clear(zb);

  PiSeries s = zero(a.w + b.w);
  int64_t m0a = m0(a.w), m0b = m0(b.w), m0s = m0(s.w);
  int64_t dt = (m0a + m0b - m0s) / (q_ - 1);
  std::vector<int64_t> grid(size_t(xd) * size_t(pd));
  for (int64_t st = 0; st < St; ++st) {
    int64_t m = m0a + m0b + st * (q_ - 1);
    if (m > Dx_) break;
    int64_t ts = st + dt;
    for (int64_t aexp = 0; aexp <= 2 * Du_; ++aexp) {
      if (aexp > Du_) continue;
      bool any = false;
      for (int x = 0; x < xd; ++x)
        for (int i = 0; i < pd; ++i) {
          size_t slot = ((size_t(st) * size_t(Sa) + size_t(aexp)) * size_t(xd) + size_t(x)) *
                            size_t(pd) +
                        size_t(i);
          const unsigned char* src = out.data() + slot * size_t(sb);
          unsigned __int128 v = 0;
          for (int byte = sb - 1; byte >= 0; --byte) v = (v << 8) | src[byte];
          int64_t r = int64_t(v % (unsigned __int128)pM);
          grid[size_t(x) * size_t(pd) + size_t(i)] = r;
          any = any || r != 0;
        }
      if (!any) continue;
      int64_t as0 = a0(s.w, ts);
      if ((aexp - as0) % (q_ + 1) != 0 || aexp < as0)
        throw std::logic_error("PiSeries::mul_kron: grading violation");
      int64_t js = (aexp - as0) / (q_ + 1);
      if (js >= ju_) continue;
      s.coef[idx(ts, js)] = R_->fold_product_grid(grid.data(), xd, pd);
    }
  }
  return s;
}

PiSeries PiSeriesRing::pow(const PiSeries& a, uint64_t k) const {
  if (k == 0) return monomial(0, 0, R_->one());
  PiSeries r = a;
  int hi = 63;
  while (!((k >> hi) & 1)) --hi;
  for (int i = hi - 1; i >= 0; --i) {
    r = mul(r, r);
    if ((k >> i) & 1) r = mul(r, a);
  }
  return r;
}

PiSeries PiSeriesRing::scale_elem(const PiSeries& a, const LocalElem& c) const {
  PiSeries s;
  s.w = a.w;
  s.coef.resize(a.coef.size());
  for (size_t i = 0; i < a.coef.size(); ++i)
    s.coef[i] = R_->is_zero_fast(a.coef[i]) ? a.coef[i] : R_->mul(a.coef[i], c);
  return s;
}

PiSeries PiSeriesRing::scale_pi(const PiSeries& a, int k) const {
  if (k < 0) throw std::invalid_argument("PiSeries::scale_pi: negative power");
  PiSeries s;
  s.w = a.w;
  s.coef.resize(a.coef.size());
  for (size_t i = 0; i < a.coef.size(); ++i) s.coef[i] = R_->mul_pi_k(a.coef[i], k);
  return s;
}

PiSeries PiSeriesRing::scale_int(const PiSeries& a, int64_t n) const {
  PiSeries s;
  s.w = a.w;
  s.coef.resize(a.coef.size());
  for (size_t i = 0; i < a.coef.size(); ++i) s.coef[i] = R_->mul_int(a.coef[i], n);
  return s;
}

PiSeries PiSeriesRing::subst_linear(const PiSeries& a, const LocalElem& c) const {
  PiSeries s;
  s.w = a.w;
  s.coef.resize(a.coef.size());
  LocalElem cm = R_->pow(c, uint64_t(m0(a.w)));
  LocalElem step = R_->pow(c, uint64_t(q_ - 1));
  for (int64_t t = 0; t < tcnt_; ++t) {
    for (int64_t j = 0; j < ju_; ++j) {
      const LocalElem& v = a.coef[idx(t, j)];
      s.coef[idx(t, j)] = R_->is_zero_fast(v) ? v : R_->mul(v, cm);
    }
    cm = R_->mul(cm, step);
  }
  return s;
}

PiSeries PiSeriesRing::proj_div_pi(const PiSeries& a, int k, int64_t* zeroed) const {
  PiSeries s;
  s.w = a.w;
  s.coef.resize(a.coef.size());
  int64_t z = 0;
  for (size_t i = 0; i < a.coef.size(); ++i) {
    if (R_->is_zero_fast(a.coef[i])) {
      s.coef[i] = a.coef[i];
      continue;
    }
    if (R_->valuation(a.coef[i]) >= k) {
      LocalElem v = a.coef[i];
      for (int d = 0; d < k; ++d) v = R_->div_pi(v);
      s.coef[i] = v;
    } else {
      s.coef[i] = R_->zero();
      ++z;
    }
  }
  if (zeroed) *zeroed = z;
  return s;
}

bool PiSeriesRing::all_zero_mod(const PiSeries& a, int trust) const {
  for (const auto& v : a.coef)
    if (!R_->is_zero_mod_pik(v, trust)) return false;
  return true;
}

bool PiSeriesRing::equal_mod(const PiSeries& a, const PiSeries& b, int trust) const {
  return all_zero_mod(sub(a, b), trust);
}

void PiSeriesRing::for_each(
    const PiSeries& a,
    const std::function<void(int64_t, int64_t, const LocalElem&)>& fn) const {
  for (int64_t t = 0; t < tcnt_; ++t) {
    int64_t m = m0(a.w) + t * (q_ - 1);
    if (m > Dx_) break;
    for (int64_t j = 0; j < ju_; ++j) {
      const LocalElem& v = a.coef[idx(t, j)];
      if (R_->is_zero_fast(v)) continue;
      int64_t aexp = a0(a.w, t) + j * (q_ + 1);
      if (aexp > Du_) continue;
      fn(m, aexp, v);
    }
  }
}

std::string PiSeriesRing::to_string(const PiSeries& a, size_t max_terms) const {
  std::ostringstream os;
  size_t n = 0;
  for_each(a, [&](int64_t m, int64_t aexp, const LocalElem& v) {
    if (n >= max_terms) return;
    if (n) os << " + ";
    os << "(" << R_->to_string(v) << ")";
    if (aexp) os << "*u^" << aexp;
    if (m) os << "*X^" << m;
    ++n;
  });
  if (n == 0) os << "0";
  return os.str();
}

}  // namespace exalg
