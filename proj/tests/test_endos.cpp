#include <doctest.h>

#include "endofree/suites.hpp"

using namespace endofree;

namespace {

const VarietySpec kAll[] = {VarietySpec::free_semigroup(2), VarietySpec::free_group(2),
                            VarietySpec::free_inverse(2),
                            VarietySpec::free_module(Ring::integers(), 2)};

}  // namespace

TEST_CASE("nu_i sends every generator to x_i") {
  for (const VarietySpec& var : kAll) {
    for (int i = 1; i <= var.rank; ++i) {
      Endo nu = basis_endo(var, i);
      for (int j = 1; j <= var.rank; ++j)
        CHECK(element_eq(var, apply_endo(nu, generator(var, j)), generator(var, i)));
    }
  }
}

TEST_CASE("composition law nu o alpha_u = alpha_(nu(u))") {
  for (const VarietySpec& var : kAll) {
    SplitMix64 rng(1);
    for (int t = 0; t < 100; ++t) {
      Endo nu = sample_endo(var, 4, rng);
      Endo alpha = sample_endo(var, 4, rng);
      std::vector<Element> mapped;
      for (const Element& u : alpha.images) mapped.push_back(apply_endo(nu, u));
      CHECK(endo_eq(compose(nu, alpha), make_endo(var, mapped)));
      // homomorphism law on a sampled product (word-kind varieties)
      if (var.has_product()) {
        Element a = sample_element(var, 4, rng);
        Element b = sample_element(var, 4, rng);
        CHECK(element_eq(var, apply_endo(nu, multiply(var, a, b)),
                         multiply(var, apply_endo(nu, a), apply_endo(nu, b))));
      }
    }
  }
}

TEST_CASE("constant-tuple endomorphisms obey the const law") {
  for (const VarietySpec& var : kAll) {
    SplitMix64 rng(2);
    for (int t = 0; t < 50; ++t) {
      Element a = sample_element(var, 4, rng);
      Endo mu = sample_endo(var, 4, rng);
      Endo nu_a = const_endo(var, a);
      CHECK(endo_eq(compose(mu, nu_a), const_endo(var, apply_endo(mu, a))));
      // fixed under right composition with any basis permutation
      for (const Endo& theta : enumerate_P(var).items)
        CHECK(endo_eq(compose(nu_a, theta), nu_a));
    }
  }
}

TEST_CASE("constant-defined endomorphisms require constant images") {
  // the free semigroup has no constants at all
  VarietySpec sg = VarietySpec::free_semigroup(2);
  CHECK_FALSE(is_constant_defined(const_endo(sg, generator(sg, 1))));
  // the group identity and the module zero are constants
  VarietySpec g = VarietySpec::free_group(2);
  CHECK(is_constant_defined(const_endo(g, identity_element(g))));
  CHECK_FALSE(is_constant_defined(const_endo(g, generator(g, 1))));
  VarietySpec mz = VarietySpec::free_module(Ring::integers(), 2);
  CHECK(is_constant_defined(const_endo(mz, identity_element(mz))));
}

TEST_CASE("P is a group of n! permutational automorphisms") {
  for (const VarietySpec& var : kAll) {
    EndoSet p = enumerate_P(var);
    CHECK(p.items.size() == 2);  // 2! at rank 2
    for (const Endo& a : p.items) {
      CHECK(is_permutational(a));
      CHECK(is_automorphism(a).ok());
      CHECK(p.contains(invert_automorphism(a)));
      for (const Endo& b : p.items) CHECK(p.contains(compose(a, b)));
    }
  }
  CHECK(enumerate_P(VarietySpec::free_semigroup(3)).items.size() == 6);
}

TEST_CASE("free inverse semigroup P includes signed generator permutations") {
  // automorphisms of a free inverse semigroup may send generators to
  // inverses of generators
  VarietySpec is = VarietySpec::free_inverse(2);
  Endo upsilon = parse_endo(is, "x1^-1;x2^-1");
  CHECK(is_automorphism(upsilon).ok());
  CHECK(endo_eq(compose(upsilon, upsilon), identity_endo(is)));
}

TEST_CASE("pseudo-diagonal detection") {
  VarietySpec is = VarietySpec::free_inverse(2);
  Endo diag = parse_endo(is, "x1*x1^-1*x1;x2*x2^-1*x2");  // w(x) = xx^-1x at each slot
  PseudoDiagResult r = is_pseudo_diagonal(diag);
  CHECK(r.verdict.ok());
  REQUIRE(r.witness.has_value());
  Endo mixed = parse_endo(is, "x1*x1^-1;x2");
  CHECK_FALSE(is_pseudo_diagonal(mixed).verdict.ok());
}

TEST_CASE("Galois correspondence on small candidate sets") {
  VarietySpec sg = VarietySpec::free_semigroup(2);
  EndoSet p = enumerate_P(sg);
  // constant endomorphisms are fixed by right-composition with all of P
  EndoSet fixed = p_fixed_endos(sg, 2);
  for (const Endo& nu : fixed.items)
    for (const Endo& theta : p.items) CHECK(endo_eq(compose(nu, theta), nu));
  // invariant group of a constant endo nu_a contains all of P
  Endo nu_a = const_endo(sg, generator(sg, 1));
  CHECK(invariant_group(nu_a, p).items.size() == p.items.size());
  // left_ideal_fixers of the swap inside the constants: all constants qualify
  Endo swap = parse_endo(sg, "x2;x1");
  CHECK(left_ideal_fixers(swap, fixed).items.size() == fixed.items.size());
}

TEST_CASE("endo print/parse round trip") {
  for (const VarietySpec& var : kAll) {
    SplitMix64 rng(4);
    for (int t = 0; t < 50; ++t) {
      Endo nu = sample_endo(var, 4, rng);
      CHECK(endo_eq(parse_endo(var, print_endo(nu)), nu));
    }
  }
}

TEST_CASE("automorphism inversion round trip across varieties") {
  VarietySpec is = VarietySpec::free_inverse(2);
  VarietySpec mz = VarietySpec::free_module(Ring::integers(), 2);
  std::vector<Endo> autos = {
      parse_endo(is, "x2^-1;x1"),
      parse_endo(mz, "x1 + x2;x2"),
      parse_endo(VarietySpec::free_group(2), "x1*x2;x2"),
      parse_endo(VarietySpec::free_semigroup(2), "x2;x1"),
  };
  for (const Endo& sigma : autos) {
    REQUIRE(is_automorphism(sigma).ok());
    CHECK(endo_eq(compose(sigma, invert_automorphism(sigma)), identity_endo(sigma.variety)));
  }
}
