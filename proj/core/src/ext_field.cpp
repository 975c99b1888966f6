#include "exalg/ext_field.hpp"

#include <stdexcept>

namespace exalg {

namespace {

// polynomial helpers over a small field; vectors of codes, index = degree

int poly_deg(const std::vector<uint64_t>& v) {
  for (int i = int(v.size()) - 1; i >= 0; --i)
    if (v[i] != 0) return i;
  return -1;
}

std::vector<uint64_t> poly_mulmod(const FqField& F, const std::vector<uint64_t>& x,
                                  const std::vector<uint64_t>& y,
                                  const std::vector<uint64_t>& h) {
  int m = int(h.size()) - 1;
  std::vector<uint64_t> prod(size_t(2 * m - 1), 0);
  for (int i = 0; i < m; ++i) {
    if (i >= int(x.size()) || x[i] == 0) continue;
    for (int j = 0; j < m; ++j) {
      if (j >= int(y.size()) || y[j] == 0) continue;
      prod[i + j] = F.add(prod[i + j], F.mul(x[i], y[j]));
    }
  }
  for (int d = 2 * m - 2; d >= m; --d) {
    uint64_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    for (int i = 0; i < m; ++i)
      prod[d - m + i] = F.sub(prod[d - m + i], F.mul(c, h[i]));
  }
  prod.resize(size_t(m));
  return prod;
}

std::vector<uint64_t> poly_powmod(const FqField& F, std::vector<uint64_t> x,
                                  uint64_t e, const std::vector<uint64_t>& h) {
  int m = int(h.size()) - 1;
  std::vector<uint64_t> r(size_t(m), 0);
  r[0] = 1;
  while (e) {
    if (e & 1) r = poly_mulmod(F, r, x, h);
    x = poly_mulmod(F, x, x, h);
    e >>= 1;
  }
  return r;
}

std::vector<uint64_t> poly_gcd(const FqField& F, std::vector<uint64_t> a,
                               std::vector<uint64_t> b) {
  while (poly_deg(b) >= 0) {
    int db = poly_deg(b);
    uint64_t lead = F.inv(b[db]);
    while (poly_deg(a) >= db) {
      int da = poly_deg(a);
      uint64_t c = F.mul(a[da], lead);
      for (int i = 0; i <= db; ++i)
        a[da - db + i] = F.sub(a[da - db + i], F.mul(c, b[i]));
    }
    std::swap(a, b);
  }
  return a;
}

bool is_irreducible(const FqField& F, const std::vector<uint64_t>& h) {
  int m = int(h.size()) - 1;
  if (m == 1) return true;
  uint64_t q = F.size();
  std::vector<uint64_t> t(size_t(m), 0);
  t[1] = 1;
  // T^{q^i} mod h by iterated q-th powers in the quotient ring
  std::vector<std::vector<uint64_t>> frob_chain(size_t(m + 1));
  frob_chain[0] = t;
  for (int i = 1; i <= m; ++i)
    frob_chain[i] = poly_powmod(F, frob_chain[i - 1], q, h);
  if (frob_chain[size_t(m)] != t) return false;
  for (int ell = 2; ell <= m; ++ell) {
    if (m % ell != 0) continue;
    bool prime = true;
    for (int d = 2; d * d <= ell; ++d)
      if (ell % d == 0) prime = false;
    if (!prime) continue;
    std::vector<uint64_t> diff = frob_chain[size_t(m / ell)];
    diff[1] = F.sub(diff[1], 1);
    if (poly_deg(poly_gcd(F, h, diff)) > 0) return false;
  }
  return true;
}

}  // namespace

ExtField::ExtField(const FqField& base, int m) : base_(&base), m_(m) {
  if (m < 1 || m > 64) throw std::invalid_argument("extension degree out of range");
  uint64_t q = base.size();
  // first monic irreducible in base-q code order of (a_0, ..., a_{m-1})
  std::vector<uint64_t> h(size_t(m + 1), 0);
  h[size_t(m)] = 1;
  for (;;) {
    if (is_irreducible(base, h)) break;
    int i = 0;
    while (i < m && h[size_t(i)] == q - 1) h[size_t(i++)] = 0;
    if (i == m) throw std::logic_error("no irreducible of requested degree");
    h[size_t(i)] += 1;
  }
  h_ = h;
  frob_ = FqMatrix(m, m);
  std::vector<uint64_t> t(size_t(m), 0);
  if (m == 1) {
    frob_.at(0, 0) = 1;
  } else {
    t[1] = 1;
    std::vector<uint64_t> tq = poly_powmod(base, t, q, h_);
    std::vector<uint64_t> col = one();
    for (int j = 0; j < m; ++j) {
      for (int i = 0; i < m; ++i) frob_.at(i, j) = col[size_t(i)];
      col = poly_mulmod(base, col, tq, h_);
    }
  }
}

ExtField::Elem ExtField::one() const {
  Elem e(size_t(m_), 0);
  e[0] = 1;
  return e;
}

ExtField::Elem ExtField::gen() const {
  Elem e(size_t(m_), 0);
  if (m_ > 1) e[1] = 1;
  return e;
}

ExtField::Elem ExtField::from_base(uint64_t code) const {
  Elem e(size_t(m_), 0);
  e[0] = code;
  return e;
}

bool ExtField::is_zero(const Elem& x) const {
  for (uint64_t c : x)
    if (c != 0) return false;
  return true;
}

ExtField::Elem ExtField::add(const Elem& x, const Elem& y) const {
  Elem r(static_cast<size_t>(m_));
  for (int i = 0; i < m_; ++i) r[size_t(i)] = base_->add(x[size_t(i)], y[size_t(i)]);
  return r;
}

ExtField::Elem ExtField::sub(const Elem& x, const Elem& y) const {
  Elem r(static_cast<size_t>(m_));
  for (int i = 0; i < m_; ++i) r[size_t(i)] = base_->sub(x[size_t(i)], y[size_t(i)]);
  return r;
}

ExtField::Elem ExtField::neg(const Elem& x) const {
  Elem r(static_cast<size_t>(m_));
  for (int i = 0; i < m_; ++i) r[size_t(i)] = base_->neg(x[size_t(i)]);
  return r;
}

ExtField::Elem ExtField::mul(const Elem& x, const Elem& y) const {
  return poly_mulmod(*base_, x, y, h_);
}

ExtField::Elem ExtField::pow(const Elem& x, uint64_t e) const {
  return poly_powmod(*base_, x, e, h_);
}

ExtField::Elem ExtField::inv(const Elem& x) const {
  if (is_zero(x)) throw std::domain_error("inverse of zero");
  uint64_t q = base_->size();
  uint64_t size = 1;
  for (int i = 0; i < m_; ++i) {
    if (size > UINT64_MAX / q) throw std::domain_error("field too large for inv");
    size *= q;
  }
  return pow(x, size - 2);
}

ExtField::Elem ExtField::frob(const Elem& x) const {
  Elem r(size_t(m_), 0);
  for (int j = 0; j < m_; ++j) {
    if (x[size_t(j)] == 0) continue;
    for (int i = 0; i < m_; ++i)
      r[size_t(i)] = base_->add(r[size_t(i)], base_->mul(frob_.at(i, j), x[size_t(j)]));
  }
  return r;
}

uint64_t ExtField::trace(const Elem& x) const {
  Elem acc = x;
  Elem cur = x;
  for (int i = 1; i < m_; ++i) {
    cur = frob(cur);
    acc = add(acc, cur);
  }
  for (int i = 1; i < m_; ++i)
    if (acc[size_t(i)] != 0) throw std::logic_error("trace not in base field");
  return acc[0];
}

int fq_rank(const FqField& F, FqMatrix M) {
  int r = 0;
  for (int col = 0; col < M.cols && r < M.rows; ++col) {
    int piv = -1;
    for (int i = r; i < M.rows; ++i)
      if (M.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < M.cols; ++j) std::swap(M.a[size_t(piv) * M.cols + j], M.a[size_t(r) * M.cols + j]);
    uint64_t ip = F.inv(M.at(r, col));
    for (int i = r + 1; i < M.rows; ++i) {
      uint64_t f = F.mul(M.at(i, col), ip);
      if (f == 0) continue;
      for (int j = col; j < M.cols; ++j)
        M.at(i, j) = F.sub(M.at(i, j), F.mul(f, M.at(r, j)));
    }
    ++r;
  }
  return r;
}

std::vector<uint64_t> fq_left_null_vector(const FqField& F, const FqMatrix& M) {
  // row-reduce the transpose and read a kernel vector off the free column
  FqMatrix T(M.cols, M.rows);
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j) T.at(j, i) = M.at(i, j);
  int n = M.rows;
  std::vector<int> pivot_of_col(size_t(n), -1);
  int r = 0;
  for (int col = 0; col < n && r < T.rows; ++col) {
    int piv = -1;
    for (int i = r; i < T.rows; ++i)
      if (T.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < n; ++j) std::swap(T.a[size_t(piv) * n + j], T.a[size_t(r) * n + j]);
    uint64_t ip = F.inv(T.at(r, col));
    for (int j = 0; j < n; ++j) T.at(r, j) = F.mul(T.at(r, j), ip);
    for (int i = 0; i < T.rows; ++i) {
      if (i == r || T.at(i, col) == 0) continue;
      uint64_t f = T.at(i, col);
      for (int j = 0; j < n; ++j) T.at(i, j) = F.sub(T.at(i, j), F.mul(f, T.at(r, j)));
    }
    pivot_of_col[size_t(col)] = r;
    ++r;
  }
  int free_col = -1;
  for (int col = 0; col < n; ++col)
    if (pivot_of_col[size_t(col)] < 0) {
      free_col = col;
      break;
    }
  if (free_col < 0) throw std::invalid_argument("matrix has full row rank, no left null vector");
  std::vector<uint64_t> v(size_t(n), 0);
  v[size_t(free_col)] = 1;
  for (int col = 0; col < n; ++col) {
    int pr = pivot_of_col[size_t(col)];
    if (pr >= 0) v[size_t(col)] = F.neg(T.at(pr, free_col));
  }
  return v;
}

uint64_t quadratic_level_count(const FqField& F, const FqMatrix& G, uint64_t t) {
  if (F.p() == 2) throw std::invalid_argument("quadratic counts need odd characteristic");
  int n = G.rows;
  if (G.cols != n) throw std::invalid_argument("Gram matrix must be square");
  uint64_t q = F.size();
  FqMatrix A = G;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (A.at(i, j) != A.at(j, i)) throw std::invalid_argument("Gram matrix must be symmetric");

  std::vector<uint64_t> diag;
  for (int k = 0; k < n; ++k) {
    if (A.at(k, k) == 0) {
      int sw = -1;
      for (int i = k + 1; i < n; ++i)
        if (A.at(i, i) != 0) {
          sw = i;
          break;
        }
      if (sw >= 0) {
        for (int j = 0; j < n; ++j) std::swap(A.a[size_t(k) * n + j], A.a[size_t(sw) * n + j]);
        for (int i = 0; i < n; ++i) std::swap(A.at(i, k), A.at(i, sw));
      } else {
        int off = -1;
        for (int j = k + 1; j < n; ++j)
          if (A.at(k, j) != 0) {
            off = j;
            break;
          }
        if (off < 0) continue;  // row k is zero in the remaining block
        for (int j = 0; j < n; ++j) A.at(k, j) = F.add(A.at(k, j), A.at(off, j));
        for (int i = 0; i < n; ++i) A.at(i, k) = F.add(A.at(i, k), A.at(i, off));
      }
    }
    if (A.at(k, k) == 0) continue;
    uint64_t ip = F.inv(A.at(k, k));
    for (int i = k + 1; i < n; ++i) {
      uint64_t f = F.mul(A.at(i, k), ip);
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) A.at(i, j) = F.sub(A.at(i, j), F.mul(f, A.at(k, j)));
      for (int j = 0; j < n; ++j) A.at(j, i) = F.sub(A.at(j, i), F.mul(f, A.at(j, k)));
    }
    diag.push_back(A.at(k, k));
  }
  int r = int(diag.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && A.at(i, j) != 0)
        throw std::logic_error("diagonalization left off-diagonal residue");

  auto eta = [&](uint64_t x) -> int64_t {
    if (x == 0) return 0;
    return F.pow(x, (q - 1) / 2) == 1 ? 1 : -1;
  };
  uint64_t disc = 1;
  for (uint64_t d : diag) disc = F.mul(disc, d);
  uint64_t minus1 = F.neg(1);

  auto qpow = [&](int e) {
    uint64_t v = 1;
    for (int i = 0; i < e; ++i) v *= q;
    return v;
  };

  if (r == 0) return (t == 0) ? qpow(n) : 0;
  int64_t count;
  uint64_t sign_arg = disc;
  if (r % 2 == 0) {
    for (int i = 0; i < r / 2; ++i) sign_arg = F.mul(sign_arg, minus1);
    int64_t v = (t == 0) ? int64_t(q) - 1 : -1;
    count = int64_t(qpow(r - 1)) + int64_t(qpow(r / 2 - 1)) * v * eta(sign_arg);
  } else {
    for (int i = 0; i < (r - 1) / 2; ++i) sign_arg = F.mul(sign_arg, minus1);
    sign_arg = F.mul(sign_arg, t);
    count = int64_t(qpow(r - 1)) + int64_t(qpow((r - 1) / 2)) * eta(sign_arg);
  }
  return uint64_t(count) * qpow(n - r);
}

}  // namespace exalg
