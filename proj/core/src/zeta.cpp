#include "exalg/zeta.hpp"

#include <gmpxx.h>

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace exalg {

namespace {

constexpr double kWeilRelTol = 1e-6;

using i128 = __int128;

int64_t to_i64(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("coefficient exceeds 64 bits");
  return int64_t(v);
}

// dense rational polynomials, coefficient i belongs to x^i, leading nonzero
using QPoly = std::vector<mpq_class>;

bool qp_is_zero(const QPoly& a) { return a.size() == 1 && a[0] == 0; }

void qp_trim(QPoly& a) {
  while (a.size() > 1 && a.back() == 0) a.pop_back();
}

QPoly qp_rem(QPoly a, const QPoly& b) {
  while (!qp_is_zero(a) && a.size() >= b.size()) {
    mpq_class f = a.back() / b.back();
    size_t off = a.size() - b.size();
    for (size_t i = 0; i + 1 < b.size(); ++i) a[off + i] -= f * b[i];
    a.pop_back();
    if (a.empty()) a.emplace_back(0);
    qp_trim(a);
  }
  return a;
}

QPoly qp_gcd(QPoly a, QPoly b) {
  while (!qp_is_zero(b)) {
    QPoly r = qp_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  mpq_class lead = a.back();
  for (mpq_class& c : a) c /= lead;
  return a;
}

QPoly qp_div_exact(QPoly a, const QPoly& b) {
  QPoly quot(a.size() - b.size() + 1, mpq_class(0));
  while (!qp_is_zero(a) && a.size() >= b.size()) {
    mpq_class f = a.back() / b.back();
    size_t off = a.size() - b.size();
    quot[off] = f;
    for (size_t i = 0; i + 1 < b.size(); ++i) a[off + i] -= f * b[i];
    a.pop_back();
    if (a.empty()) a.emplace_back(0);
    qp_trim(a);
  }
  if (!qp_is_zero(a)) throw std::logic_error("polynomial division left a remainder");
  return quot;
}

// monic square-free part; repeated roots would make the companion-matrix
// spectrum defective and its numerical eigenvalues untrustworthy
QPoly qp_squarefree(const QPoly& a) {
  QPoly d(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i) d[i - 1] = mpq_class(long(i)) * a[i];
  qp_trim(d);
  if (qp_is_zero(d)) throw std::logic_error("derivative of a nonconstant polynomial vanished");
  QPoly g = qp_gcd(a, d);
  if (g.size() == 1) return a;
  return qp_div_exact(a, g);
}

}  // namespace

ZetaData zeta_from_counts(uint64_t q, const std::vector<uint64_t>& affine,
                          const std::vector<uint64_t>& infinity) {
  size_t M = affine.size();
  if (M == 0 || infinity.size() != M)
    throw std::invalid_argument("need matching nonempty count tables");

  ZetaData Z;
  Z.affine_counts = affine;
  Z.infinity_counts = infinity;
  Z.projective_counts.resize(M);

  // power sums of the inverse roots: p_m = q^m + 1 - N_m
  std::vector<i128> p(M + 1, 0);
  i128 qm = 1;
  for (size_t m = 1; m <= M; ++m) {
    qm *= i128(q);
    if (qm > i128(INT64_MAX) / 4) throw std::overflow_error("q^m exceeds the integer budget");
    Z.projective_counts[m - 1] = affine[m - 1] + infinity[m - 1];
    p[m] = qm + 1 - i128(Z.projective_counts[m - 1]);
  }

  std::vector<i128> e(M + 1, 0);
  e[0] = 1;
  for (size_t k = 1; k <= M; ++k) {
    i128 acc = 0;
    for (size_t i = 1; i <= k; ++i) {
      i128 term = e[k - i] * p[i];
      acc += (i % 2 == 1) ? term : -term;
    }
    if (acc % i128(k) != 0)
      throw std::invalid_argument("point counts admit no integral L-polynomial");
    e[k] = acc / i128(k);
  }

  size_t d = 0;
  for (size_t k = 1; k <= M; ++k)
    if (e[k] != 0) d = k;
  if (d % 2 != 0) throw std::invalid_argument("point counts admit no integral L-polynomial");
  int64_t g = int64_t(d) / 2;

  Z.genus = g;
  Z.lpoly.resize(d + 1);
  for (size_t k = 0; k <= d; ++k) Z.lpoly[k] = to_i64((k % 2 == 0) ? e[k] : -e[k]);

  for (int64_t j = g; j <= 2 * g; ++j) {
    i128 rhs = Z.lpoly[size_t(2 * g - j)];
    for (int64_t i = 0; i < j - g; ++i) rhs *= i128(q);
    if (i128(Z.lpoly[size_t(j)]) != rhs)
      throw std::invalid_argument("L-polynomial functional equation fails");
  }

  if (g > 0) {
    // inverse roots as eigenvalues of the companion matrix of the square-free
    // part of T^{2g} L(1/T); simple spectra keep the solver well conditioned
    QPoly rec(d + 1);
    for (size_t i = 0; i <= d; ++i) rec[i] = mpq_class(long(Z.lpoly[d - i]));
    QPoly sf = qp_squarefree(rec);
    Eigen::Index n = Eigen::Index(sf.size()) - 1;
    Eigen::MatrixXd Cm = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index i = 0; i + 1 < n; ++i) Cm(i + 1, i) = 1.0;
    for (Eigen::Index i = 0; i < n; ++i) Cm(i, n - 1) = -sf[size_t(i)].get_d();
    Eigen::EigenSolver<Eigen::MatrixXd> es(Cm, false);
    double root = std::sqrt(double(q));
    for (Eigen::Index i = 0; i < n; ++i) {
      double mod = std::abs(es.eigenvalues()[i]);
      if (std::abs(mod - root) > kWeilRelTol * root)
        throw std::invalid_argument("an inverse root is off the Weil circle");
    }
  }
  return Z;
}

ZetaData curve_zeta(const CurveModel& C) {
  int64_t gb = genus_bound(C);
  int M = int(2 * gb + 2);
  std::vector<uint64_t> aff(static_cast<size_t>(M)), inf(static_cast<size_t>(M));
  for (int m = 1; m <= M; ++m) {
    aff[size_t(m - 1)] = affine_count(C, m);
    inf[size_t(m - 1)] = infinity_count(C, m);
  }
  return zeta_from_counts(curve_q(C), aff, inf);
}

}  // namespace exalg
