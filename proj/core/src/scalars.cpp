#include "exalg/scalars.hpp"

#include <numeric>

namespace exalg {

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return uint64_t((unsigned __int128)a * b % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

std::vector<uint64_t> factor_u64(uint64_t n) {
  std::vector<uint64_t> fs;
  for (uint64_t d = 2; d * d <= n; ++d)
    while (n % d == 0) {
      if (fs.empty() || fs.back() != d) fs.push_back(d);
      n /= d;
    }
  if (n > 1) fs.push_back(n);
  return fs;
}

}  // namespace

bool is_prime_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while (!(d & 1)) {
    d >>= 1;
    ++s;
  }
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

uint64_t lcm_u64(uint64_t a, uint64_t b) { return a / std::gcd(a, b) * b; }

FlField::FlField(uint64_t M, uint64_t lower) : M_(M) {
  if (M == 0) throw std::invalid_argument("FlField: M must be positive");
  uint64_t k = lower / M + 1;
  while (true) {
    uint64_t cand = k * M + 1;
    if (cand > lower && is_prime_u64(cand)) {
      ell_ = cand;
      break;
    }
    ++k;
  }
  // generator of F_ell^x
  auto fs = factor_u64(ell_ - 1);
  gen_ = 0;
  for (uint64_t c = 2; c < ell_; ++c) {
    bool ok = true;
    for (uint64_t f : fs)
      if (powmod_u64(c, (ell_ - 1) / f, ell_) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      gen_ = c;
      break;
    }
  }
  if (!gen_) throw std::logic_error("no generator mod ell");
  zM_ = powmod_u64(gen_, (ell_ - 1) / M_, ell_);
}

uint64_t FlField::pow(uint64_t a, uint64_t e) const { return powmod_u64(a, e, ell_); }

uint64_t FlField::inv(uint64_t a) const {
  if (!a) throw std::domain_error("inverse of zero in F_ell");
  return powmod_u64(a, ell_ - 2, ell_);
}

uint64_t FlField::root_of_unity(uint64_t order) const {
  if (!order || M_ % order) throw std::invalid_argument("root order must divide M");
  return powmod_u64(zM_, M_ / order, ell_);
}

uint64_t FlField::lift_small(uint64_t v, uint64_t bound) const {
  if (v <= bound) return v;
  throw std::domain_error("scalar does not lift to a small non-negative integer");
}

int64_t FlField::lift_signed(uint64_t v, uint64_t bound) const {
  if (v <= bound) return int64_t(v);
  if (ell_ - v <= bound) return -int64_t(ell_ - v);
  throw std::domain_error("scalar does not lift to a small integer");
}

AddChar::AddChar(const FlField& S, const FqField& F) : S_(&S), F_(&F) {
  uint64_t zp = S.root_of_unity(uint64_t(F.p()));
  zp_.resize(size_t(F.p()));
  uint64_t cur = 1;
  for (int64_t i = 0; i < F.p(); ++i) {
    zp_[size_t(i)] = cur;
    cur = S.mul(cur, zp);
  }
}

uint64_t AddChar::value(uint64_t a, uint64_t x) const {
  if (!a) return 1;  // psi_0 is trivial
  uint64_t ax = F_->mul(a, x);
  return zp_[size_t(F_->prime_trace(ax))];
}

MultChar::MultChar(const FlField& S, const FqField& F) : S_(&S), F_(&F), n_(F.size() - 1) {
  uint64_t zn = S.root_of_unity(n_);
  zpow_.resize(n_);
  uint64_t cur = 1;
  for (uint64_t i = 0; i < n_; ++i) {
    zpow_[i] = cur;
    cur = S.mul(cur, zn);
  }
}

uint64_t MultChar::value(uint64_t k, uint64_t x) const {
  if (!x) return 0;
  uint64_t t = F_->dlog(x);
  return zpow_[uint64_t((unsigned __int128)k * t % n_)];
}

}  // namespace exalg
