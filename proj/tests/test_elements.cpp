#include <doctest.h>

#include "endofree/suites.hpp"

using namespace endofree;

namespace {

Element elem(const VarietySpec& var, const std::string& text) {
  return canonicalize(parse_term(text, var), var);
}

}  // namespace

TEST_CASE("free semigroup words concatenate and print") {
  VarietySpec sg = VarietySpec::free_semigroup(2);
  Element a = elem(sg, "x1*x2");
  Element b = elem(sg, "x2");
  CHECK(print_element(sg, multiply(sg, a, b)) == "x1*x2^2");
  CHECK(print_element(sg, elem(sg, "x1^3")) == "x1^3");
  CHECK(element_size(sg, a) == 2);
  CHECK_THROWS_AS(parse_term("x1^-1", sg), error);
  CHECK_THROWS_AS(elem(sg, "e"), error);  // no identity element in the signature
}

TEST_CASE("free group words reduce freely") {
  VarietySpec g = VarietySpec::free_group(2);
  CHECK(element_eq(g, elem(g, "x1*x2*x2^-1"), elem(g, "x1")));
  CHECK(element_eq(g, elem(g, "x1*x1^-1"), identity_element(g)));
  CHECK(print_element(g, elem(g, "(x1*x2)^-1")) == "x2^-1*x1^-1");
  CHECK(print_element(g, invert(g, invert(g, elem(g, "x1*x2")))) == "x1*x2");
  // cancellation laws over all short elements
  for (const Element& a : enumerate_elements(g, 2))
    for (const Element& b : enumerate_elements(g, 2)) {
      CHECK(element_eq(g, multiply(g, multiply(g, a, b), invert(g, b)), a));
      CHECK(element_eq(g, multiply(g, invert(g, b), multiply(g, b, a)), a));
    }
}

TEST_CASE("Munn trees canonicalize free inverse semigroup elements") {
  VarietySpec is = VarietySpec::free_inverse(2);
  CHECK(element_eq(is, elem(is, "x1*x1^-1*x1"), elem(is, "x1")));
  // idempotents commute
  Element e1 = elem(is, "x1*x1^-1");
  Element e2 = elem(is, "x2*x2^-1");
  CHECK(element_eq(is, multiply(is, e1, e2), multiply(is, e2, e1)));
  CHECK(munn_is_idempotent(std::get<Munn>(multiply(is, e1, e2).v)));
  // but xx^-1 != x^-1x
  CHECK_FALSE(element_eq(is, e1, elem(is, "x1^-1*x1")));
  // minimal traversal word evaluates back to the same element
  Element w = elem(is, "x1*x2^-1*x2*x1^-1*x1");
  CHECK(Munn{munn_from_letters(munn_min_word(std::get<Munn>(w.v)))} == std::get<Munn>(w.v));
}

TEST_CASE("the five inverse-semigroup identities hold elementwise") {
  VarietySpec is = VarietySpec::free_inverse(1);
  std::vector<Element> pool = enumerate_elements(is, 3);
  for (const Element& x : pool) {
    CHECK(element_eq(is, invert(is, invert(is, x)), x));
    CHECK(element_eq(is, multiply(is, multiply(is, x, invert(is, x)), x), x));
    for (const Element& y : pool) {
      CHECK(element_eq(is, invert(is, multiply(is, x, y)),
                       multiply(is, invert(is, y), invert(is, x))));
      Element ex = multiply(is, invert(is, x), x);
      Element ey = multiply(is, invert(is, y), y);
      CHECK(element_eq(is, multiply(is, ex, ey), multiply(is, ey, ex)));
      for (const Element& z : pool)
        CHECK(element_eq(is, multiply(is, multiply(is, x, y), z),
                         multiply(is, x, multiply(is, y, z))));
    }
  }
}

TEST_CASE("GF(4) arithmetic uses the least irreducible modulus") {
  Ring gf4 = Ring::galois_field(2, 2);
  CHECK(gf4.modulus() == std::vector<int>{1, 1, 1});  // x^2 + x + 1
  Scalar g = gf4.parse("g2");                         // the class of x
  CHECK(gf4.to_string(gf4.mul(g, g)) == "g3");        // x^2 = x + 1
  // a^4 = a for every element; Frobenius is the square map
  for (int v = 0; v < 4; ++v) {
    Scalar a = gf4.parse("g" + std::to_string(v));
    CHECK(gf4.equal(gf4.pow(a, 4), a));
    CHECK(gf4.equal(gf4.frobenius(a, 1), gf4.mul(a, a)));
  }
}

TEST_CASE("free module vectors over Q and Z") {
  VarietySpec mq = VarietySpec::free_module(Ring::rationals(), 2);
  Ring q = Ring::rationals();
  Element v = elem(mq, "x1 + x2");
  Element w = elem(mq, "x1");
  Element sum{vec_add(q, std::get<Vec>(v.v), std::get<Vec>(w.v))};
  CHECK(element_eq(mq, sum, elem(mq, "2.x1 + x2")));
  Element minus_v{vec_scale(q, q.from_int(-1), std::get<Vec>(v.v))};
  CHECK(element_eq(mq, Element{vec_add(q, std::get<Vec>(v.v), std::get<Vec>(minus_v.v))},
                   identity_element(mq)));
}

TEST_CASE("constants match a brute-force fixedness oracle") {
  for (VarietySpec var : {VarietySpec::free_semigroup(2), VarietySpec::free_group(2),
                          VarietySpec::free_inverse(2),
                          VarietySpec::free_module(Ring::integers(), 2)}) {
    Constants k = constants(var);
    SplitMix64 rng(11);
    std::vector<Endo> endos;
    for (int t = 0; t < 20; ++t) endos.push_back(sample_endo(var, 3, rng));
    for (const Element& a : enumerate_elements(var, 2)) {
      bool fixed = true;
      for (const Endo& nu : endos) fixed = fixed && element_eq(var, apply_endo(nu, a), a);
      if (k.contains(a)) CHECK(fixed);
      if (!fixed) CHECK_FALSE(k.contains(a));
    }
  }
}

TEST_CASE("enumerate_elements is sorted, deduplicated, and deterministic") {
  for (VarietySpec var : {VarietySpec::free_semigroup(2), VarietySpec::free_group(2),
                          VarietySpec::free_inverse(2)}) {
    std::vector<Element> a = enumerate_elements(var, 3);
    std::vector<Element> b = enumerate_elements(var, 3);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) CHECK(element_eq(var, a[i], b[i]));
    for (size_t i = 1; i < a.size(); ++i) {
      CHECK(element_less(var, a[i - 1], a[i]));
      CHECK(element_size(var, a[i - 1]) <= element_size(var, a[i]));
    }
    // smaller bound is a prefix-closed subset
    std::vector<Element> small = enumerate_elements(var, 2);
    CHECK(small.size() < a.size());
  }
}

TEST_CASE("term round trip through element_to_term") {
  for (VarietySpec var : {VarietySpec::free_group(2), VarietySpec::free_inverse(2)}) {
    for (const Element& a : enumerate_elements(var, 3)) {
      Term t = element_to_term(var, a);
      CHECK(element_eq(var, canonicalize(t, var), a));
    }
  }
}
