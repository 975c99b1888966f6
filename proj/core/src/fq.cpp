#include "exalg/fq.hpp"

#include <algorithm>
#include <cstring>

namespace exalg {

namespace {

constexpr uint64_t kLogTableLimit = uint64_t(1) << 22;

int64_t mod_pos(int64_t a, int64_t p) {
  int64_t r = a % p;
  return r < 0 ? r + p : r;
}

// polynomial helpers over F_p, little-endian coefficient vectors
using Poly = std::vector<int64_t>;

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& g, int64_t p) {
  std::vector<int64_t> prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = mod_pos(prod[i + j] + a[i] * b[j], p);
  }
  int n = int(g.size()) - 1;
  for (int k = int(prod.size()) - 1; k >= n; --k) {
    int64_t c = prod[k];
    if (!c) continue;
    prod[k] = 0;
    for (int i = 0; i < n; ++i) prod[k - n + i] = mod_pos(prod[k - n + i] - c * g[i], p);
  }
  prod.resize(n);
  return prod;
}

Poly poly_powmod(Poly base, uint64_t e, const Poly& g, int64_t p) {
  Poly r{1};
  r.resize(g.size() - 1, 0);
  base.resize(g.size() - 1, 0);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, g, p);
    base = poly_mulmod(base, base, g, p);
    e >>= 1;
  }
  return r;
}

bool poly_is_zero(const Poly& a) {
  for (int64_t c : a)
    if (c) return false;
  return true;
}

Poly poly_gcd(Poly a, Poly b, int64_t p) {
  auto deg = [](const Poly& f) {
    for (int i = int(f.size()) - 1; i >= 0; --i)
      if (f[i]) return i;
    return -1;
  };
  while (!poly_is_zero(b)) {
    int db = deg(b);
    int64_t lead_inv = 1;
    {  // inverse of leading coeff mod p
      int64_t l = b[db], t = 1;
      for (int64_t x = 1; x < p; ++x)
        if (mod_pos(l * x, p) == 1) { t = x; break; }
      lead_inv = t;
    }
    Poly r = a;
    int dr = deg(r);
    while (dr >= db && dr >= 0) {
      int64_t c = mod_pos(r[dr] * lead_inv, p);
      if (c) {
        for (int i = 0; i <= db; ++i)
          r[dr - db + i] = mod_pos(r[dr - db + i] - c * b[i], p);
      }
      while (dr >= 0 && !r[dr]) --dr;
    }
    a = b;
    b = r;
    while (!b.empty() && !b.back()) b.pop_back();
    if (b.empty()) break;
  }
  return a;
}

bool is_irreducible(const Poly& g, int64_t p) {
  int n = int(g.size()) - 1;
  if (n == 1) return true;
  Poly x{0, 1};
  // x^(p^n) == x mod g
  Poly xp = x;
  xp.resize(n, 0);
  for (int i = 0; i < n; ++i) xp = poly_powmod(xp, uint64_t(p), g, p);
  Poly diff = xp;
  diff.resize(std::max<size_t>(diff.size(), 2), 0);
  diff[1] = mod_pos(diff[1] - 1, p);
  if (!poly_is_zero(diff)) return false;
  // for each prime divisor d of n: gcd(x^(p^(n/d)) - x, g) = const
  int m = n;
  std::vector<int> primes;
  for (int d = 2; d * d <= m; ++d)
    while (m % d == 0) {
      primes.push_back(d);
      m /= d;
    }
  if (m > 1) primes.push_back(m);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (int d : primes) {
    int k = n / d;
    Poly xk = x;
    xk.resize(n, 0);
    for (int i = 0; i < k; ++i) xk = poly_powmod(xk, uint64_t(p), g, p);
    Poly df = xk;
    df.resize(std::max<size_t>(df.size(), 2), 0);
    df[1] = mod_pos(df[1] - 1, p);
    if (poly_is_zero(df)) return false;
    Poly gc = poly_gcd(g, df, p);
    int dg = 0;
    for (int i = int(gc.size()) - 1; i >= 0; --i)
      if (gc[i]) { dg = i; break; }
    if (dg != 0) return false;
  }
  return true;
}

}  // namespace

uint64_t ipow_checked(uint64_t b, int e) {
  uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > UINT64_MAX / b) throw std::overflow_error("field size overflows 64 bits");
    r *= b;
  }
  return r;
}

FqField::FqField(int64_t p, int n) : p_(p), n_(n) {
  if (p < 2 || n < 1 || n > 32) throw std::invalid_argument("FqField: need p >= 2, 1 <= n <= 32");
  size_ = ipow_checked(uint64_t(p), n);
  // lexicographically first monic irreducible of degree n
  g_.assign(n + 1, 0);
  g_[n] = 1;
  bool found = false;
  for (uint64_t c = 0; c < size_; ++c) {
    uint64_t t = c;
    for (int i = 0; i < n; ++i) {
      g_[i] = int64_t(t % uint64_t(p));
      t /= uint64_t(p);
    }
    if (is_irreducible(g_, p)) {
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("no irreducible polynomial found");
  // reduction rows x^{n+k} mod g
  redrow_.assign(size_t(std::max(0, n - 1)) * n, 0);
  if (n > 1) {
    Poly cur(n, 0);  // x^n mod g = -g_low
    for (int i = 0; i < n; ++i) cur[i] = mod_pos(-g_[i], p);
    for (int k = 0; k <= n - 2; ++k) {
      for (int i = 0; i < n; ++i) redrow_[size_t(k) * n + i] = cur[i];
      // multiply by x
      Poly nxt(n, 0);
      for (int i = 0; i + 1 < n; ++i) nxt[i + 1] = cur[i];
      int64_t top = cur[n - 1];
      if (top)
        for (int i = 0; i < n; ++i) nxt[i] = mod_pos(nxt[i] - top * g_[i], p);
      cur = nxt;
    }
  }
  // factor size-1 for generator search
  uint64_t m = size_ - 1;
  for (uint64_t d = 2; d * d <= m; ++d)
    while (m % d == 0) {
      if (unit_factors_.empty() || unit_factors_.back() != d) unit_factors_.push_back(d);
      m /= d;
    }
  if (m > 1) unit_factors_.push_back(m);
}

void FqField::decode(uint64_t code, int64_t* digits) const {
  for (int i = 0; i < n_; ++i) {
    digits[i] = int64_t(code % uint64_t(p_));
    code /= uint64_t(p_);
  }
}

uint64_t FqField::encode(const int64_t* digits) const {
  uint64_t code = 0;
  for (int i = n_ - 1; i >= 0; --i) code = code * uint64_t(p_) + uint64_t(digits[i]);
  return code;
}

uint64_t FqField::add(uint64_t a, uint64_t b) const {
  int64_t da[32], db[32];
  decode(a, da);
  decode(b, db);
  for (int i = 0; i < n_; ++i) {
    da[i] += db[i];
    if (da[i] >= p_) da[i] -= p_;
  }
  return encode(da);
}

uint64_t FqField::sub(uint64_t a, uint64_t b) const {
  int64_t da[32], db[32];
  decode(a, da);
  decode(b, db);
  for (int i = 0; i < n_; ++i) {
    da[i] -= db[i];
    if (da[i] < 0) da[i] += p_;
  }
  return encode(da);
}

uint64_t FqField::neg(uint64_t a) const {
  int64_t da[32];
  decode(a, da);
  for (int i = 0; i < n_; ++i)
    if (da[i]) da[i] = p_ - da[i];
  return encode(da);
}

void FqField::mul_raw(const int64_t* a, const int64_t* b, int64_t* out) const {
  int64_t prod[64];
  std::memset(prod, 0, sizeof(int64_t) * size_t(2 * n_ - 1));
  for (int i = 0; i < n_; ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < n_; ++j) prod[i + j] += a[i] * b[j];
  }
  for (int i = 0; i < n_; ++i) out[i] = prod[i] % p_;
  for (int k = 0; k <= n_ - 2; ++k) {
    int64_t c = prod[n_ + k] % p_;
    if (!c) continue;
    const int64_t* row = &redrow_[size_t(k) * n_];
    for (int i = 0; i < n_; ++i) out[i] += c * row[i];
  }
  for (int i = 0; i < n_; ++i) out[i] = mod_pos(out[i], p_);
}

uint64_t FqField::mul(uint64_t a, uint64_t b) const {
  if (!a || !b) return 0;
  int64_t da[32] = {0}, db[32] = {0}, dout[32];
  decode(a, da);
  decode(b, db);
  mul_raw(da, db, dout);
  return encode(dout);
}

uint64_t FqField::pow(uint64_t a, uint64_t e) const {
  uint64_t r = 1, base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

uint64_t FqField::inv(uint64_t a) const {
  if (!a) throw std::domain_error("inverse of zero");
  return pow(a, size_ - 2);
}

uint64_t FqField::scalar_mul(int64_t c, uint64_t a) const {
  c = mod_pos(c, p_);
  int64_t da[32];
  decode(a, da);
  for (int i = 0; i < n_; ++i) da[i] = mod_pos(da[i] * c, p_);
  return encode(da);
}

uint64_t FqField::from_int(int64_t c) const { return uint64_t(mod_pos(c, p_)); }

uint64_t FqField::frob_p(uint64_t a, int k) const {
  uint64_t r = a;
  for (int i = 0; i < k; ++i) r = pow(r, uint64_t(p_));
  return r;
}

uint64_t FqField::trace_to(int d, uint64_t a) const {
  if (n_ % d) throw std::invalid_argument("trace_to: degree does not divide n");
  uint64_t acc = a, cur = a;
  for (int i = 1; i < n_ / d; ++i) {
    cur = frob_p(cur, d);
    acc = add(acc, cur);
  }
  return acc;
}

uint64_t FqField::norm_to(int d, uint64_t a) const {
  if (n_ % d) throw std::invalid_argument("norm_to: degree does not divide n");
  uint64_t acc = a, cur = a;
  for (int i = 1; i < n_ / d; ++i) {
    cur = frob_p(cur, d);
    acc = mul(acc, cur);
  }
  return acc;
}

int64_t FqField::prime_trace(uint64_t a) const {
  uint64_t t = trace_to(1, a);
  int64_t dg[32];
  decode(t, dg);
  for (int i = 1; i < n_; ++i)
    if (dg[i]) throw std::logic_error("prime_trace: value not in prime field");
  return dg[0];
}

bool FqField::in_subfield(int d, uint64_t a) const { return frob_p(a, d) == a; }

uint64_t FqField::generator() const {
  if (gen_) return gen_;
  for (uint64_t c = 2; c < size_; ++c) {
    bool ok = true;
    for (uint64_t f : unit_factors_)
      if (pow(c, (size_ - 1) / f) == 1) {
        ok = false;
        break;
      }
    if (ok) {
      gen_ = c;
      return gen_;
    }
  }
  throw std::logic_error("no generator found");
}

void FqField::build_log_tables() const {
  if (!log_.empty()) return;
  if (size_ > kLogTableLimit) throw std::length_error("field too large for log tables");
  uint64_t g = generator();
  log_.assign(size_, 0);
  exp_.assign(size_ - 1, 0);
  uint64_t cur = 1;
  for (uint64_t k = 0; k < size_ - 1; ++k) {
    exp_[k] = uint32_t(cur);
    log_[cur] = uint32_t(k);
    cur = mul(cur, g);
  }
}

uint64_t FqField::dlog(uint64_t a) const {
  if (!a) throw std::domain_error("dlog of zero");
  build_log_tables();
  return log_[a];
}

uint64_t FqField::exp(uint64_t k) const {
  build_log_tables();
  return exp_[k % (size_ - 1)];
}

std::vector<uint64_t> FqField::roots_of_unity(uint64_t m) const {
  if ((size_ - 1) % m) throw std::invalid_argument("mu_m not contained in unit group");
  std::vector<uint64_t> out;
  out.reserve(m);
  uint64_t z = primitive_root_of_unity(m), cur = 1;
  for (uint64_t i = 0; i < m; ++i) {
    out.push_back(cur);
    cur = mul(cur, z);
  }
  return out;
}

uint64_t FqField::primitive_root_of_unity(uint64_t m) const {
  if ((size_ - 1) % m) throw std::invalid_argument("mu_m not contained in unit group");
  return pow(generator(), (size_ - 1) / m);
}

std::optional<uint64_t> FqField::sqrt(uint64_t a) const {
  if (!a) return uint64_t(0);
  if (p_ == 2) return pow(a, size_ / 2);  // squaring is bijective
  uint64_t k;
  if (has_log_table() || size_ <= kLogTableLimit) {
    k = dlog(a);
    if (k & 1) return std::nullopt;
    return exp(k / 2);
  }
  // fallback: Euler criterion + brute power for odd part
  if (pow(a, (size_ - 1) / 2) != 1) return std::nullopt;
  for (uint64_t c = 1; c < size_; ++c)
    if (mul(c, c) == a) return c;
  return std::nullopt;
}

std::string FqField::to_string(uint64_t a) const {
  int64_t dg[32];
  decode(a, dg);
  std::string s = "[";
  for (int i = 0; i < n_; ++i) {
    if (i) s += ",";
    s += std::to_string(dg[i]);
  }
  s += "]";
  return s;
}

// ---------- embeddings ----------

namespace {
// evaluate the small field's defining polynomial at code r in the big field
uint64_t eval_defpoly(const FqField& big, const std::vector<int64_t>& g, uint64_t r) {
  uint64_t acc = 0, pw = 1;
  for (size_t i = 0; i < g.size(); ++i) {
    acc = big.add(acc, big.scalar_mul(g[i], pw));
    pw = big.mul(pw, r);
  }
  return acc;
}
}  // namespace

FqEmbedding::FqEmbedding(const FqField& sub, const FqField& big) : sub_(&sub), big_(&big) {
  if (sub.p() != big.p() || big.n() % sub.n())
    throw std::invalid_argument("FqEmbedding: not a subfield");
  if (sub.n() == 1) {
    root_ = big.from_int(1);  // unique prime-field embedding; root of x - c forms
    // the defining polynomial of F_p is x (lex-first), root 0
    root_ = 0;
  } else {
    // factor through the largest proper divisor chain so towers commute
    int a = sub.n(), b = big.n();
    int mid = 0;
    for (int d = b / 2; d >= 1; --d)
      if (b % d == 0 && d % a == 0 && d != b && d != a) {
        mid = d;
        break;
      }
    if (mid) {
      FqField midf(sub.p(), mid);
      FqEmbedding lo(sub, midf), hi(midf, big);
      root_ = hi.map(lo.root());
    } else {
      uint64_t r = 0;
      bool found = false;
      for (uint64_t c = 0; c < big.size(); ++c)
        if (eval_defpoly(big, sub.defining_poly(), c) == 0) {
          r = c;
          found = true;
          break;
        }
      if (!found) throw std::logic_error("no root of subfield polynomial found");
      root_ = r;
    }
  }
  pow_root_.resize(sub.n());
  uint64_t pw = 1;
  for (int i = 0; i < sub.n(); ++i) {
    pow_root_[i] = pw;
    pw = big.mul(pw, root_);
  }
  build_pullback();
}

uint64_t FqEmbedding::map(uint64_t a) const {
  int64_t dg[32];
  sub_->decode(a, dg);
  uint64_t acc = 0;
  for (int i = 0; i < sub_->n(); ++i) acc = big_->add(acc, big_->scalar_mul(dg[i], pow_root_[i]));
  return acc;
}

void FqEmbedding::build_pullback() {
  // row-reduce the (big.n x sub.n) matrix whose columns are root^i digits,
  // recording the operations applied to an identity to get a pseudo-inverse
  int bn = big_->n(), sn = sub_->n();
  int64_t p = big_->p();
  std::vector<int64_t> A(size_t(bn) * sn, 0);
  for (int j = 0; j < sn; ++j) {
    int64_t dg[32];
    big_->decode(pow_root_[j], dg);
    for (int i = 0; i < bn; ++i) A[size_t(i) * sn + j] = dg[i];
  }
  // augmented with identity on rows
  std::vector<int64_t> E(size_t(bn) * bn, 0);
  for (int i = 0; i < bn; ++i) E[size_t(i) * bn + i] = 1;
  auto inv_mod = [p](int64_t v) {
    v = mod_pos(v, p);
    for (int64_t x = 1; x < p; ++x)
      if (mod_pos(v * x, p) == 1) return x;
    throw std::logic_error("no inverse");
  };
  int row = 0;
  for (int col = 0; col < sn && row < bn; ++col) {
    int pr = -1;
    for (int r = row; r < bn; ++r)
      if (A[size_t(r) * sn + col]) { pr = r; break; }
    if (pr < 0) throw std::logic_error("embedding matrix not full rank");
    if (pr != row) {
      for (int j = 0; j < sn; ++j) std::swap(A[size_t(pr) * sn + j], A[size_t(row) * sn + j]);
      for (int j = 0; j < bn; ++j) std::swap(E[size_t(pr) * bn + j], E[size_t(row) * bn + j]);
    }
    int64_t iv = inv_mod(A[size_t(row) * sn + col]);
    for (int j = 0; j < sn; ++j) A[size_t(row) * sn + j] = mod_pos(A[size_t(row) * sn + j] * iv, p);
    for (int j = 0; j < bn; ++j) E[size_t(row) * bn + j] = mod_pos(E[size_t(row) * bn + j] * iv, p);
    for (int r = 0; r < bn; ++r) {
      if (r == row) continue;
      int64_t c = A[size_t(r) * sn + col];
      if (!c) continue;
      for (int j = 0; j < sn; ++j)
        A[size_t(r) * sn + j] = mod_pos(A[size_t(r) * sn + j] - c * A[size_t(row) * sn + j], p);
      for (int j = 0; j < bn; ++j)
        E[size_t(r) * bn + j] = mod_pos(E[size_t(r) * bn + j] - c * E[size_t(row) * bn + j], p);
    }
    ++row;
  }
  pullback_mat_ = E;  // first sn rows of E give digits_sub from digits_big
}

uint64_t FqEmbedding::pullback(uint64_t a) const {
  int bn = big_->n(), sn = sub_->n();
  int64_t dg[32];
  big_->decode(a, dg);
  int64_t out[32];
  for (int i = 0; i < sn; ++i) {
    int64_t acc = 0;
    for (int j = 0; j < bn; ++j) acc += pullback_mat_[size_t(i) * bn + j] * dg[j];
    out[i] = mod_pos(acc, big_->p());
  }
  uint64_t code = sub_->encode(out);
  if (map(code) != a) throw std::domain_error("pullback: element not in subfield image");
  return code;
}

bool FqEmbedding::in_image(uint64_t a) const {
  return big_->in_subfield(sub_->n(), a);
}

// ---------- small solvers ----------

std::vector<uint64_t> solve_qlin_minus(const FqField& F, uint64_t q, uint64_t c) {
  std::vector<uint64_t> out;
  for (uint64_t x = 0; x < F.size(); ++x)
    if (F.sub(F.pow(x, q), x) == c) out.push_back(x);
  return out;
}

std::vector<uint64_t> solve_qlin_plus(const FqField& F, uint64_t q, uint64_t c) {
  std::vector<uint64_t> out;
  for (uint64_t x = 0; x < F.size(); ++x)
    if (F.add(F.pow(x, q), x) == c) out.push_back(x);
  return out;
}

std::vector<uint64_t> solve_square(const FqField& F, uint64_t c) {
  std::vector<uint64_t> out;
  auto r = F.sqrt(c);
  if (r) {
    out.push_back(*r);
    if (*r != F.neg(*r)) out.push_back(F.neg(*r));
    std::sort(out.begin(), out.end());
  }
  return out;
}

}  // namespace exalg
