#include "endofree/ring.hpp"

#include <algorithm>

namespace endofree {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Polynomial arithmetic over Z/p, coefficient vectors low degree first,
// always trimmed of leading zeros.
using Poly = std::vector<int>;

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_add(const Poly& a, const Poly& b, int p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    int v = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    r[i] = v % p;
  }
  return trim(r);
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return trim(r);
}

// Remainder of a modulo monic b.
Poly poly_mod(Poly a, const Poly& b, int p) {
  a = trim(a);
  while (a.size() >= b.size() && !b.empty()) {
    int c = a.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) {
      int v = (a[shift + i] - c * b[i]) % p;
      a[shift + i] = (v % p + p) % p;
    }
    a = trim(a);
  }
  return a;
}

Poly poly_from_value(long long v, int p, int len) {
  Poly r;
  for (int i = 0; i < len; ++i) {
    r.push_back(static_cast<int>(v % p));
    v /= p;
  }
  return trim(r);
}

bool poly_irreducible(const Poly& f, int p) {
  // Trial division by all monic polynomials of degree 1..deg/2.
  int deg = static_cast<int>(f.size()) - 1;
  for (int d = 1; 2 * d <= deg; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long v = 0; v < count; ++v) {
      Poly g = poly_from_value(v, p, d);
      g.resize(d + 1, 0);
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Poly least_irreducible(int p, int m) {
  long long count = 1;
  for (int i = 0; i < m; ++i) count *= p;
  for (long long v = 0; v < count; ++v) {
    Poly f = poly_from_value(v, p, m);
    f.resize(m + 1, 0);
    f[m] = 1;
    if (poly_irreducible(f, p)) return f;
  }
  throw error("no irreducible polynomial found");  // unreachable
}

long long gf_value(const std::vector<int>& c, int p) {
  long long v = 0;
  for (size_t i = c.size(); i-- > 0;) v = v * p + c[i];
  return v;
}

}  // namespace

Ring Ring::integers() {
  Ring r;
  r.kind_ = RingKind::Integers;
  return r;
}

Ring Ring::rationals() {
  Ring r;
  r.kind_ = RingKind::Rationals;
  return r;
}

Ring Ring::galois_field(int p, int m) {
  if (!is_prime(p)) throw error("GF characteristic must be prime");
  if (m < 1) throw error("GF extension degree must be >= 1");
  Ring r;
  r.kind_ = RingKind::GaloisField;
  r.p_ = p;
  r.m_ = m;
  r.modulus_ = least_irreducible(p, m);
  return r;
}

Scalar Ring::zero() const {
  return kind_ == RingKind::GaloisField ? Scalar{0, {}} : Scalar{Rational(0), {}};
}

Scalar Ring::one() const { return from_int(1); }

Scalar Ring::from_int(long long v) const {
  if (kind_ == RingKind::GaloisField) {
    long long c = ((v % p_) + p_) % p_;
    Scalar s;
    if (c != 0) s.gf = {static_cast<int>(c)};
    return s;
  }
  return Scalar{Rational(v), {}};
}

Scalar Ring::from_rational(const Rational& q) const {
  if (kind_ == RingKind::GaloisField) throw error("rational literal in GF ring");
  if (kind_ == RingKind::Integers && denominator(q) != 1)
    throw error("non-integer scalar over the integers");
  return Scalar{q, {}};
}

Scalar Ring::add(const Scalar& a, const Scalar& b) const {
  if (kind_ == RingKind::GaloisField) return Scalar{0, poly_add(a.gf, b.gf, p_)};
  return from_rational(a.q + b.q);
}

Scalar Ring::sub(const Scalar& a, const Scalar& b) const { return add(a, neg(b)); }

Scalar Ring::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ == RingKind::GaloisField)
    return Scalar{0, poly_mod(poly_mul(a.gf, b.gf, p_), modulus_, p_)};
  return from_rational(a.q * b.q);
}

Scalar Ring::neg(const Scalar& a) const {
  if (kind_ == RingKind::GaloisField) {
    Poly r = a.gf;
    for (int& c : r) c = (p_ - c) % p_;
    return Scalar{0, trim(r)};
  }
  return Scalar{-a.q, {}};
}

Scalar Ring::inv(const Scalar& a) const {
  if (is_zero(a)) throw error("division by zero");
  if (kind_ == RingKind::GaloisField) {
    // a^(p^m - 2) by square-and-multiply.
    Int e = 1;
    for (int i = 0; i < m_; ++i) e *= p_;
    return pow(a, e - 2);
  }
  if (kind_ == RingKind::Integers && a.q != 1 && a.q != -1)
    throw error("non-unit integer has no inverse");
  return Scalar{Rational(1) / a.q, {}};
}

Scalar Ring::pow(const Scalar& a, const Int& e) const {
  if (e < 0) return pow(inv(a), -e);
  Scalar r = one(), base = a;
  Int k = e;
  while (k > 0) {
    if (k % 2 == 1) r = mul(r, base);
    base = mul(base, base);
    k /= 2;
  }
  return r;
}

bool Ring::is_zero(const Scalar& a) const {
  return kind_ == RingKind::GaloisField ? a.gf.empty() : a.q == 0;
}

bool Ring::is_one(const Scalar& a) const { return equal(a, one()); }

bool Ring::equal(const Scalar& a, const Scalar& b) const {
  return kind_ == RingKind::GaloisField ? a.gf == b.gf : a.q == b.q;
}

bool Ring::less(const Scalar& a, const Scalar& b) const {
  if (kind_ == RingKind::GaloisField) return gf_value(a.gf, p_) < gf_value(b.gf, p_);
  return a.q < b.q;
}

Scalar Ring::frobenius(const Scalar& a, int e) const {
  if (e == 0) return a;
  if (kind_ != RingKind::GaloisField)
    throw error("Frobenius only defined on Galois fields");
  Scalar r = a;
  for (int i = 0; i < e % m_; ++i) r = pow(r, p_);
  return r;
}

std::string Ring::to_string(const Scalar& a) const {
  if (kind_ == RingKind::GaloisField) return "g" + std::to_string(gf_value(a.gf, p_));
  std::string s = numerator(a.q).str();
  if (denominator(a.q) != 1) s += "/" + denominator(a.q).str();
  return s;
}

Scalar Ring::parse(const std::string& text) const {
  if (text.empty()) throw error("empty scalar");
  if (text[0] == 'g') {
    if (kind_ != RingKind::GaloisField) throw error("gf literal outside GF ring");
    long long v = std::stoll(text.substr(1));
    long long cap = 1;
    for (int i = 0; i < m_; ++i) cap *= p_;
    if (v < 0 || v >= cap) throw error("gf literal out of range: " + text);
    return Scalar{0, poly_from_value(v, p_, m_)};
  }
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    Int num(text.substr(0, slash)), den(text.substr(slash + 1));
    if (den <= 0) throw error("denominator must be positive");
    return from_rational(Rational(num, den));
  }
  if (kind_ == RingKind::GaloisField) return from_int(std::stoll(text));
  return from_rational(Rational(Int(text)));
}

std::string Ring::name() const {
  switch (kind_) {
    case RingKind::Integers: return "Z";
    case RingKind::Rationals: return "Q";
    case RingKind::GaloisField:
      return "GF(" + std::to_string(p_) + (m_ > 1 ? "^" + std::to_string(m_) : "") + ")";
  }
  return "?";
}

}  // namespace endofree
