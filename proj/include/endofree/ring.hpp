#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace endofree {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A ring scalar. Exactly one of the two members is meaningful; which one
/// is determined by the owning Ring's kind.
struct Scalar {
  Rational q;            // Integers / Rationals
  std::vector<int> gf;   // GaloisField: coefficient vector, low degree first
  bool operator==(const Scalar&) const = default;
};

enum class RingKind { Integers, Rationals, GaloisField };

/// Coefficient ring for free modules. GF(p,m) elements are polynomials
/// modulo the least irreducible monic polynomial of degree m (coefficient
/// vectors ordered by their base-p value, constant term least significant).
class Ring {
 public:
  static Ring integers();
  static Ring rationals();
  static Ring galois_field(int p, int m);

  RingKind kind() const { return kind_; }
  int p() const { return p_; }
  int m() const { return m_; }
  // Modulus coefficients c0..cm (cm = 1); empty unless GaloisField.
  const std::vector<int>& modulus() const { return modulus_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_rational(const Rational& q) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;  // throws on zero, or non-unit over Z
  Scalar pow(const Scalar& a, const Int& e) const;

  bool is_zero(const Scalar& a) const;
  bool is_one(const Scalar& a) const;
  bool equal(const Scalar& a, const Scalar& b) const;
  // Total order used for deterministic enumeration and report sorting.
  bool less(const Scalar& a, const Scalar& b) const;

  /// Frobenius a -> a^(p^e); identity on non-GF rings only for e = 0.
  Scalar frobenius(const Scalar& a, int e) const;

  std::string to_string(const Scalar& a) const;
  Scalar parse(const std::string& text) const;

  std::string name() const;
  bool operator==(const Ring& o) const {
    return kind_ == o.kind_ && p_ == o.p_ && m_ == o.m_;
  }

 private:
  Ring() = default;
  RingKind kind_ = RingKind::Integers;
  int p_ = 0, m_ = 0;
  std::vector<int> modulus_;
};

/// Ring automorphism: identity, or a Frobenius power on a Galois field.
struct RingAut {
  int frobenius_power = 0;  // 0 = identity

  Scalar apply(const Ring& ring, const Scalar& a) const {
    return ring.frobenius(a, frobenius_power);
  }
  RingAut inverse(const Ring& ring) const {
    if (frobenius_power == 0) return {};
    int m = ring.m();
    return RingAut{(m - frobenius_power % m) % m};
  }
  std::string to_string() const {
    if (frobenius_power == 0) return "identity";
    return "frobenius^" + std::to_string(frobenius_power);
  }
};

}  // namespace endofree
