#include "exalg/local_ring.hpp"

#include <sstream>
#include <stdexcept>

namespace exalg {

namespace {

int64_t mod_pos(int64_t a, int64_t m) {
  int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

LocalRing::LocalRing(int64_t p, int f, int e, int N, bool equal_char)
    : p_(p), f_(f), e_(e), N_(N), equal_(equal_char), Fq_(p, f) {
  if (f < 1 || e < 1 || N < 1) throw std::invalid_argument("LocalRing: bad parameters");
  if (equal_) return;
  M_ = (N_ + e_ - 1) / e_ + 1;
  pM_ = 1;
  for (int i = 0; i < M_; ++i) {
    pM_ *= p_;
    if (pM_ > (int64_t(1) << 40)) throw std::invalid_argument("LocalRing: p^M too large");
  }
  ghat_.assign(Fq_.defining_poly().begin(), Fq_.defining_poly().end());
  if (f_ >= 2) {
    // rows for x^{f+k} mod ghat with coefficients mod p^M
    std::vector<int64_t> row(static_cast<size_t>(f_));
    for (int j = 0; j < f_; ++j) row[size_t(j)] = mod_pos(-ghat_[size_t(j)], pM_);
    redx_.push_back(row);
    for (int k = 1; k <= f_ - 2; ++k) {
      std::vector<int64_t> nxt(size_t(f_), 0);
      int64_t top = row[size_t(f_ - 1)];
      for (int j = f_ - 1; j >= 1; --j) nxt[size_t(j)] = row[size_t(j - 1)];
      for (int j = 0; j < f_; ++j)
        nxt[size_t(j)] =
            int64_t(((__int128)nxt[size_t(j)] + (__int128)top * redx_[0][size_t(j)]) % pM_);
      redx_.push_back(nxt);
      row = nxt;
    }
  }
  kcap_.assign(size_t(e_), 0);
  for (int i = 0; i < e_; ++i) {
    int64_t k = i < N_ ? (N_ - i + e_ - 1) / e_ : 0;
    if (k > M_) k = M_;
    kcap_[size_t(i)] = k;
  }
}

LocalElem LocalRing::zero() const { return LocalElem(slots(), 0); }

LocalElem LocalRing::one() const {
  LocalElem a(slots(), 0);
  a[0] = 1;
  return a;
}

LocalElem LocalRing::pi() const {
  LocalElem a(slots(), 0);
  if (equal_) {
    if (N_ >= 2) a[1] = 1;
  } else if (e_ >= 2) {
    a[size_t(f_)] = 1;
  } else {
    a[0] = p_ % pM_;
  }
  return a;
}

LocalElem LocalRing::from_int(int64_t n) const {
  LocalElem a(slots(), 0);
  if (equal_) {
    a[0] = int64_t(Fq_.from_int(n));
  } else {
    a[0] = mod_pos(n, pM_);
  }
  return a;
}

LocalElem LocalRing::lift_residue(uint64_t fq_code) const {
  LocalElem a(slots(), 0);
  if (equal_) {
    a[0] = int64_t(fq_code);
  } else {
    std::vector<int64_t> d(static_cast<size_t>(f_));
    Fq_.decode(fq_code, d.data());
    for (int j = 0; j < f_; ++j) a[size_t(j)] = d[size_t(j)];
  }
  return a;
}

LocalElem LocalRing::teichmuller(uint64_t fq_code) const {
  LocalElem a = lift_residue(fq_code);
  if (equal_) return a;
  uint64_t qq = Fq_.size();
  for (int it = 0; it <= M_ + 1; ++it) a = pow(a, qq);
  return a;
}

LocalElem LocalRing::add(const LocalElem& a, const LocalElem& b) const {
  LocalElem c(slots());
  if (equal_) {
    for (size_t i = 0; i < c.size(); ++i)
      c[i] = int64_t(Fq_.add(uint64_t(a[i]), uint64_t(b[i])));
  } else {
    for (size_t i = 0; i < c.size(); ++i) c[i] = (a[i] + b[i]) % pM_;
  }
  return c;
}

LocalElem LocalRing::sub(const LocalElem& a, const LocalElem& b) const {
  LocalElem c(slots());
  if (equal_) {
    for (size_t i = 0; i < c.size(); ++i)
      c[i] = int64_t(Fq_.sub(uint64_t(a[i]), uint64_t(b[i])));
  } else {
    for (size_t i = 0; i < c.size(); ++i) c[i] = mod_pos(a[i] - b[i], pM_);
  }
  return c;
}

LocalElem LocalRing::neg(const LocalElem& a) const {
  LocalElem c(slots());
  if (equal_) {
    for (size_t i = 0; i < c.size(); ++i) c[i] = int64_t(Fq_.neg(uint64_t(a[i])));
  } else {
    for (size_t i = 0; i < c.size(); ++i) c[i] = a[i] ? pM_ - a[i] : 0;
  }
  return c;
}

LocalElem LocalRing::fold_grid128(__int128* acc, int xdim, int pdim) const {
  // fold pi^e = p
  for (int x = 0; x < xdim; ++x)
    for (int i = pdim - 1; i >= e_; --i) {
      acc[size_t(x) * size_t(pdim) + size_t(i - e_)] +=
          p_ * acc[size_t(x) * size_t(pdim) + size_t(i)];
      acc[size_t(x) * size_t(pdim) + size_t(i)] = 0;
    }
  // fold x^{f+k} via redx rows
  for (int x = xdim - 1; x >= f_; --x)
    for (int i = 0; i < e_ && i < pdim; ++i) {
      __int128 v = acc[size_t(x) * size_t(pdim) + size_t(i)];
      if (v == 0) continue;
      int64_t vm = int64_t(v % pM_);
      const auto& row = redx_[size_t(x - f_)];
      for (int j = 0; j < f_; ++j)
        acc[size_t(j) * size_t(pdim) + size_t(i)] += (__int128)vm * row[size_t(j)];
    }
  LocalElem c(slots(), 0);
  for (int i = 0; i < e_ && i < pdim; ++i)
    for (int j = 0; j < f_ && j < xdim; ++j) {
      __int128 v = acc[size_t(j) * size_t(pdim) + size_t(i)] % pM_;
      c[size_t(j + f_ * i)] = int64_t(v);
    }
  return c;
}

LocalElem LocalRing::fold_product_grid(const int64_t* acc, int xdim, int pdim) const {
  if (equal_) throw std::logic_error("fold_product_grid: mixed characteristic only");
  std::vector<__int128> g(size_t(xdim) * size_t(pdim));
  for (size_t i = 0; i < g.size(); ++i) g[i] = acc[i];
  return fold_grid128(g.data(), xdim, pdim);
}

LocalElem LocalRing::mul(const LocalElem& a, const LocalElem& b) const {
  if (equal_) {
    LocalElem c(slots(), 0);
    for (int i = 0; i < N_; ++i) {
      if (!a[size_t(i)]) continue;
      for (int j = 0; j + i < N_; ++j) {
        if (!b[size_t(j)]) continue;
        uint64_t t = Fq_.mul(uint64_t(a[size_t(i)]), uint64_t(b[size_t(j)]));
        c[size_t(i + j)] = int64_t(Fq_.add(uint64_t(c[size_t(i + j)]), t));
      }
    }
    return c;
  }
  int xd = 2 * f_ - 1, pd = 2 * e_ - 1;
  std::vector<__int128> acc(size_t(xd) * size_t(pd), 0);
  for (int i1 = 0; i1 < e_; ++i1)
    for (int j1 = 0; j1 < f_; ++j1) {
      int64_t av = a[size_t(j1 + f_ * i1)];
      if (!av) continue;
      for (int i2 = 0; i2 < e_; ++i2)
        for (int j2 = 0; j2 < f_; ++j2) {
          int64_t bv = b[size_t(j2 + f_ * i2)];
          if (!bv) continue;
          acc[size_t(j1 + j2) * size_t(pd) + size_t(i1 + i2)] += (__int128)av * bv;
        }
    }
  return fold_grid128(acc.data(), xd, pd);
}

LocalElem LocalRing::mul_int(const LocalElem& a, int64_t n) const {
  LocalElem c(slots());
  if (equal_) {
    int64_t r = mod_pos(n, p_);
    for (size_t i = 0; i < c.size(); ++i)
      c[i] = int64_t(Fq_.scalar_mul(r, uint64_t(a[i])));
  } else {
    int64_t r = mod_pos(n, pM_);
    for (size_t i = 0; i < c.size(); ++i) c[i] = int64_t((__int128)a[i] * r % pM_);
  }
  return c;
}

LocalElem LocalRing::pow(const LocalElem& a, uint64_t k) const {
  LocalElem r = one(), b = a;
  while (k) {
    if (k & 1) r = mul(r, b);
    b = mul(b, b);
    k >>= 1;
  }
  return r;
}

LocalElem LocalRing::inv(const LocalElem& a) const {
  uint64_t r = residue(a);
  if (!r) throw std::domain_error("LocalRing::inv of a non-unit");
  LocalElem x = lift_residue(Fq_.inv(r));
  int digits = equal_ ? N_ : e_ * M_;
  LocalElem two = from_int(2);
  for (int have = 1; have < digits; have *= 2) x = mul(x, sub(two, mul(a, x)));
  return x;
}

int LocalRing::valuation(const LocalElem& a) const {
  LocalElem c = canonical(a);
  int v = N_;
  if (equal_) {
    for (int i = 0; i < N_; ++i)
      if (c[size_t(i)]) return i;
    return v;
  }
  for (int i = 0; i < e_; ++i)
    for (int j = 0; j < f_; ++j) {
      int64_t t = c[size_t(j + f_ * i)];
      if (!t) continue;
      int vp = 0;
      while (t % p_ == 0) {
        t /= p_;
        ++vp;
      }
      int w = i + e_ * vp;
      if (w < v) v = w;
    }
  return v;
}

bool LocalRing::is_zero(const LocalElem& a) const { return valuation(a) >= N_; }

bool LocalRing::equal(const LocalElem& a, const LocalElem& b) const {
  return is_zero(sub(a, b));
}

bool LocalRing::is_zero_mod_pik(const LocalElem& a, int k) const {
  if (k <= 0) return true;
  if (k > N_) throw std::invalid_argument("is_zero_mod_pik: k exceeds ring precision");
  return valuation(a) >= k;
}

bool LocalRing::equal_mod_pik(const LocalElem& a, const LocalElem& b, int k) const {
  return is_zero_mod_pik(sub(a, b), k);
}

LocalElem LocalRing::mul_pi(const LocalElem& a) const {
  LocalElem c(slots(), 0);
  if (equal_) {
    for (int i = N_ - 1; i >= 1; --i) c[size_t(i)] = a[size_t(i - 1)];
    return c;
  }
  for (int i = e_ - 2; i >= 0; --i)
    for (int j = 0; j < f_; ++j) c[size_t(j + f_ * (i + 1))] = a[size_t(j + f_ * i)];
  for (int j = 0; j < f_; ++j)
    c[size_t(j)] = int64_t((__int128)p_ * a[size_t(j + f_ * (e_ - 1))] % pM_);
  return c;
}

LocalElem LocalRing::mul_pi_k(const LocalElem& a, int k) const {
  LocalElem c = a;
  for (int i = 0; i < k; ++i) c = mul_pi(c);
  return c;
}

bool LocalRing::divisible_pi(const LocalElem& a) const { return valuation(a) >= 1; }

LocalElem LocalRing::div_pi(const LocalElem& a) const {
  if (!divisible_pi(a)) throw std::domain_error("LocalRing::div_pi: not divisible by pi");
  LocalElem c(slots(), 0);
  if (equal_) {
    for (int i = 0; i + 1 < N_; ++i) c[size_t(i)] = a[size_t(i + 1)];
    return c;
  }
  for (int i = 1; i < e_; ++i)
    for (int j = 0; j < f_; ++j) c[size_t(j + f_ * (i - 1))] = a[size_t(j + f_ * i)];
  for (int j = 0; j < f_; ++j) {
    int64_t t = a[size_t(j)];
    if (t % p_ != 0) throw std::domain_error("LocalRing::div_pi: stray digit");
    c[size_t(j + f_ * (e_ - 1))] = (c[size_t(j + f_ * (e_ - 1))] + t / p_) % pM_;
  }
  return c;
}

uint64_t LocalRing::residue(const LocalElem& a) const {
  if (equal_) return uint64_t(a[0]);
  std::vector<int64_t> d(static_cast<size_t>(f_));
  for (int j = 0; j < f_; ++j) d[size_t(j)] = a[size_t(j)] % p_;
  return Fq_.encode(d.data());
}

LocalElem LocalRing::canonical(const LocalElem& a) const {
  if (equal_) return a;
  LocalElem c(a);
  for (int i = 0; i < e_; ++i) {
    int64_t cap = 1;
    for (int64_t k = 0; k < kcap_[size_t(i)]; ++k) cap *= p_;
    for (int j = 0; j < f_; ++j) c[size_t(j + f_ * i)] %= cap;
  }
  return c;
}

LocalElem LocalRing::truncate_digits(const LocalElem& a, int k) const {
  LocalElem c(a);
  if (equal_) {
    for (int i = k < 0 ? 0 : k; i < N_; ++i) c[size_t(i)] = 0;
    return c;
  }
  for (int i = 0; i < e_; ++i) {
    int64_t cap = 1;
    int64_t ki = i < k ? (k - i + e_ - 1) / e_ : 0;
    if (ki > M_) ki = M_;
    for (int64_t t = 0; t < ki; ++t) cap *= p_;
    for (int j = 0; j < f_; ++j) c[size_t(j + f_ * i)] %= cap;
  }
  return c;
}

bool LocalRing::is_zero_fast(const LocalElem& a) const {
  for (int64_t v : a)
    if (v) return false;
  return true;
}

std::string LocalRing::to_string(const LocalElem& a) const {
  std::ostringstream os;
  LocalElem c = canonical(a);
  bool first = true;
  if (equal_) {
    for (int i = 0; i < N_; ++i) {
      if (!c[size_t(i)]) continue;
      if (!first) os << " + ";
      os << Fq_.to_string(uint64_t(c[size_t(i)]));
      if (i) os << "*pi^" << i;
      first = false;
    }
  } else {
    for (int i = 0; i < e_; ++i)
      for (int j = 0; j < f_; ++j) {
        int64_t v = c[size_t(j + f_ * i)];
        if (!v) continue;
        if (!first) os << " + ";
        os << v;
        if (j) os << "*x^" << j;
        if (i) os << "*pi^" << i;
        first = false;
      }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace exalg
