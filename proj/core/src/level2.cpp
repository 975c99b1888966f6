#include "exalg/level2.hpp"

#include <sstream>
#include <stdexcept>

namespace exalg {

namespace {
int64_t mod_pos(int64_t a, int64_t m) {
  int64_t r = a % m;
  return r < 0 ? r + m : r;
}
}  // namespace

Level2Ring::Level2Ring(int64_t p, int f, Level2Model model)
    : p_(p), f_(f), model_(model), fq_(p, f) {
  if (p < 2 || f < 1) throw std::invalid_argument("Level2Ring: bad parameters");
  size_ = fq_.size() * fq_.size();
  p2_ = p_ * p_;
  if (model_ == Level2Model::EqualChar) {
    one_ = 1;
    pi_ = fq_.size();  // pair (0, 1)
  } else {
    // lift the residue-field modulus coefficient-wise into [0, p)
    h_ = fq_.defining_poly();
    one_ = 1;
    pi_ = static_cast<Elem>(p_);
  }
}

void Level2Ring::decode(Elem a, int64_t* c) const {
  if (model_ == Level2Model::EqualChar) {
    c[0] = static_cast<int64_t>(a % fq_.size());
    c[1] = static_cast<int64_t>(a / fq_.size());
  } else {
    uint64_t base = static_cast<uint64_t>(p2_);
    for (int i = 0; i < f_; ++i) {
      c[i] = static_cast<int64_t>(a % base);
      a /= base;
    }
  }
}

Level2Ring::Elem Level2Ring::encode(const int64_t* c) const {
  if (model_ == Level2Model::EqualChar)
    return static_cast<uint64_t>(c[0]) + fq_.size() * static_cast<uint64_t>(c[1]);
  Elem a = 0;
  uint64_t base = static_cast<uint64_t>(p2_);
  for (int i = f_ - 1; i >= 0; --i) a = a * base + static_cast<uint64_t>(c[i]);
  return a;
}

Level2Ring::Elem Level2Ring::add(Elem a, Elem b) const {
  if (model_ == Level2Model::EqualChar) {
    uint64_t q = fq_.size();
    return fq_.add(a % q, b % q) + q * fq_.add(a / q, b / q);
  }
  int64_t ca[8], cb[8], cc[8];
  decode(a, ca);
  decode(b, cb);
  for (int i = 0; i < f_; ++i) cc[i] = mod_pos(ca[i] + cb[i], p2_);
  return encode(cc);
}

Level2Ring::Elem Level2Ring::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Level2Ring::Elem Level2Ring::neg(Elem a) const {
  if (model_ == Level2Model::EqualChar) {
    uint64_t q = fq_.size();
    return fq_.neg(a % q) + q * fq_.neg(a / q);
  }
  int64_t c[8];
  decode(a, c);
  for (int i = 0; i < f_; ++i) c[i] = mod_pos(-c[i], p2_);
  return encode(c);
}

Level2Ring::Elem Level2Ring::mul(Elem a, Elem b) const {
  if (model_ == Level2Model::EqualChar) {
    uint64_t q = fq_.size();
    uint64_t a0 = a % q, a1 = a / q, b0 = b % q, b1 = b / q;
    uint64_t c0 = fq_.mul(a0, b0);
    uint64_t c1 = fq_.add(fq_.mul(a0, b1), fq_.mul(a1, b0));
    return c0 + q * c1;
  }
  int64_t ca[8], cb[8];
  decode(a, ca);
  decode(b, cb);
  int64_t prod[16] = {0};
  for (int i = 0; i < f_; ++i)
    for (int j = 0; j < f_; ++j)
      prod[i + j] = mod_pos(prod[i + j] + ca[i] * cb[j], p2_);
  // reduce by the monic lift h: T^f = -(h_0 + ... + h_{f-1} T^{f-1})
  for (int d = 2 * f_ - 2; d >= f_; --d) {
    int64_t lead = prod[d];
    if (lead == 0) continue;
    prod[d] = 0;
    for (int i = 0; i < f_; ++i)
      prod[d - f_ + i] = mod_pos(prod[d - f_ + i] - lead * h_[i], p2_);
  }
  return encode(prod);
}

Level2Ring::Elem Level2Ring::pow(Elem a, uint64_t e) const {
  Elem r = one_, base = a;
  while (e) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

Level2Ring::Elem Level2Ring::inv(Elem a) const {
  if (!is_unit(a)) throw std::domain_error("Level2Ring::inv of non-unit");
  return pow(a, unit_count() - 1);
}

Level2Ring::Elem Level2Ring::from_int(int64_t c) const {
  if (model_ == Level2Model::EqualChar) {
    return fq_.from_int(c);
  }
  int64_t cc[8] = {0};
  cc[0] = mod_pos(c, p2_);
  return encode(cc);
}

uint64_t Level2Ring::residue(Elem a) const {
  if (model_ == Level2Model::EqualChar) return a % fq_.size();
  int64_t c[8], d[8];
  decode(a, c);
  for (int i = 0; i < f_; ++i) d[i] = mod_pos(c[i], p_);
  return fq_.encode(d);
}

Level2Ring::Elem Level2Ring::teich(uint64_t r) const {
  if (model_ == Level2Model::EqualChar) return r;
  int64_t d[8], c[8];
  fq_.decode(r, d);
  for (int i = 0; i < f_; ++i) c[i] = d[i];
  // any lift raised to the q-th power is the multiplicative lift
  return pow(encode(c), fq_.size());
}

Level2Ring::Elem Level2Ring::from_digits(uint64_t d0, uint64_t d1) const {
  return add(teich(d0), mul(pi_, teich(d1)));
}

std::pair<uint64_t, uint64_t> Level2Ring::digits(Elem a) const {
  uint64_t d0 = residue(a);
  Elem rest = sub(a, teich(d0));  // divisible by pi
  uint64_t d1;
  if (model_ == Level2Model::EqualChar) {
    d1 = rest / fq_.size();
  } else {
    int64_t c[8];
    decode(rest, c);
    for (int i = 0; i < f_; ++i) {
      if (c[i] % p_ != 0) throw std::logic_error("Level2Ring::digits: not divisible by pi");
      c[i] /= p_;
    }
    d1 = fq_.encode(c);
  }
  return {d0, d1};
}

std::pair<uint64_t, uint64_t> Level2Ring::unit_pair(Elem u) const {
  uint64_t u0 = residue(u);
  if (u0 == 0) throw std::domain_error("Level2Ring::unit_pair of non-unit");
  Elem v = mul(inv(teich(u0)), u);  // 1 + pi*t
  auto [v0, t] = digits(v);
  if (v0 != 1) throw std::logic_error("Level2Ring::unit_pair: bad principal part");
  return {u0, t};
}

Level2Ring::Elem Level2Ring::from_unit_pair(uint64_t u0, uint64_t t) const {
  return mul(teich(u0), add(one_, mul(pi_, teich(t))));
}

std::vector<Level2Ring::Elem> Level2Ring::all_elements() const {
  std::vector<Elem> out;
  out.reserve(size_);
  if (model_ == Level2Model::EqualChar) {
    for (Elem a = 0; a < size_; ++a) out.push_back(a);
  } else {
    int64_t c[8] = {0};
    for (uint64_t k = 0; k < size_; ++k) {
      uint64_t m = k;
      for (int i = 0; i < f_; ++i) {
        uint64_t di = m % static_cast<uint64_t>(p2_);
        c[i] = static_cast<int64_t>(di);
        m /= static_cast<uint64_t>(p2_);
      }
      out.push_back(encode(c));
    }
  }
  return out;
}

std::vector<Level2Ring::Elem> Level2Ring::all_units() const {
  std::vector<Elem> out;
  out.reserve(unit_count());
  for (Elem a : all_elements())
    if (is_unit(a)) out.push_back(a);
  return out;
}

std::string Level2Ring::to_string(Elem a) const {
  auto [d0, d1] = digits(a);
  std::ostringstream os;
  os << "[" << fq_.to_string(d0) << " + pi*" << fq_.to_string(d1) << "]";
  return os.str();
}

}  // namespace exalg
