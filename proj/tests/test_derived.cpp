#include <doctest.h>

#include "endofree/suites.hpp"

using namespace endofree;

TEST_CASE("mirror-derived product is the opposite product") {
  VarietySpec sg = VarietySpec::free_semigroup(2);
  DerivedOp op = derived_operation(sg, BijectionSpec::mirror(), parse_term("v1*v2", sg));
  CHECK(print_element(sg, op.w) == "x2*x1");
  Element a = canonicalize(parse_term("x1*x2", sg), sg);
  Element b = generator(sg, 2);
  CHECK(print_element(sg, eval_derived(op, {a, b})) == "x2*x1*x2");
  CHECK(print_derived(op) == "arity 2: x2*x1");
}

TEST_CASE("identity-derived operations coincide with the originals") {
  VarietySpec sg = VarietySpec::free_semigroup(2);
  DerivedOp op = derived_operation(sg, BijectionSpec::identity(), parse_term("v1*v2", sg));
  SplitMix64 rng(10);
  for (int t = 0; t < 50; ++t) {
    Element a = sample_element(sg, 4, rng);
    Element b = sample_element(sg, 4, rng);
    CHECK(element_eq(sg, eval_derived(op, {a, b}), multiply(sg, a, b)));
  }
}

TEST_CASE("prime-derived unary square becomes a cube") {
  VarietySpec sg1 = VarietySpec::free_semigroup(1);
  BijectionSpec s = BijectionSpec::prime_exponent({{2, 3}, {3, 2}});
  DerivedOp op = derived_operation(sg1, s, parse_term("v1*v1", sg1));
  CHECK(print_element(sg1, op.w) == "x1^3");
  Element x2 = canonicalize(parse_term("x1^2", sg1), sg1);
  CHECK(print_element(sg1, eval_derived(op, {x2})) == "x1^6");
}

TEST_CASE("check_isom_deriv holds for X-fixing bijections") {
  SampleSpec samples{100, 5, 0};
  VarietySpec sg = VarietySpec::free_semigroup(2);
  CHECK(check_isom_deriv(sg, BijectionSpec::identity(), parse_term("v1*v2", sg), samples).ok());
  CHECK(check_isom_deriv(sg, BijectionSpec::mirror(), parse_term("v1*v2", sg), samples).ok());
  VarietySpec sg1 = VarietySpec::free_semigroup(1);
  CHECK(check_isom_deriv(sg1, BijectionSpec::prime_exponent({{2, 3}, {3, 2}}),
                         parse_term("v1*v1", sg1), samples)
            .ok());
}

TEST_CASE("derived-op determinacy: only the value s(omega(x)) matters") {
  VarietySpec sg = VarietySpec::free_semigroup(2);
  Element x1x2 = canonicalize(parse_term("x1*x2", sg), sg);
  Element x2x1 = canonicalize(parse_term("x2*x1", sg), sg);
  // a lookup table agreeing with the mirror at x1x2 only
  BijectionSpec table = BijectionSpec::lookup_table({{x1x2, x2x1}, {x2x1, x1x2}}, true);
  DerivedOp from_table = derived_operation(sg, table, parse_term("v1*v2", sg));
  DerivedOp from_mirror = derived_operation(sg, BijectionSpec::mirror(), parse_term("v1*v2", sg));
  SplitMix64 rng(12);
  for (int t = 0; t < 50; ++t) {
    Element a = sample_element(sg, 4, rng);
    Element b = sample_element(sg, 4, rng);
    CHECK(element_eq(sg, eval_derived(from_table, {a, b}), eval_derived(from_mirror, {a, b})));
  }
}

TEST_CASE("inversion is central on free inverse semigroups; mirror is not") {
  SampleSpec samples{100, 4, 0};
  VarietySpec is = VarietySpec::free_inverse(2);
  CHECK(is_central(is, BijectionSpec::inversion(), samples).ok());
  CHECK(is_central(is, BijectionSpec::identity(), samples).ok());
  VarietySpec sg = VarietySpec::free_semigroup(2);
  Verdict v = is_central(sg, BijectionSpec::mirror(), samples);
  CHECK(v.status == Status::Fails);
  CHECK_FALSE(v.witness.is_null());
  // the hand witness: nu = alpha_(x1x2, x2), a = x1
  Endo nu = parse_endo(sg, "x1*x2;x2");
  Element a = generator(sg, 1);
  CHECK_FALSE(element_eq(sg, bij_apply(BijectionSpec::mirror(), sg, apply_endo(nu, a)),
                         apply_endo(nu, bij_apply(BijectionSpec::mirror(), sg, a))));
}

TEST_CASE("centrality of c implies centrality of its inverse") {
  SampleSpec samples{100, 4, 1};
  VarietySpec is = VarietySpec::free_inverse(2);
  // inversion is an involution; its inverse is itself
  BijectionSpec c = BijectionSpec::inversion();
  CHECK(is_central(is, c, samples).ok());
  SplitMix64 rng(samples.seed);
  for (int t = 0; t < samples.count; ++t) {
    Endo nu = sample_endo(is, samples.max_size, rng);
    Element a = sample_element(is, samples.max_size, rng);
    CHECK(element_eq(is, bij_apply(c, is, apply_endo(nu, a), true),
                     apply_endo(nu, bij_apply(c, is, a, true))));
  }
}

TEST_CASE("inner witness recovery from a central permutation") {
  SampleSpec samples{60, 4, 0};
  VarietySpec sg = VarietySpec::free_semigroup(2);
  Endo swap = parse_endo(sg, "x2;x1");

  SUBCASE("Inner(swap) with c = identity recovers swap") {
    auto [sigma, v] = inner_witness_from_central(EndAut::inner(swap), BijectionSpec::identity(),
                                                 samples);
    CHECK(endo_eq(sigma, swap));
    CHECK(v.ok());
  }
  SUBCASE("Mirror with c = identity fails the conjugation check") {
    auto [sigma, v] = inner_witness_from_central(EndAut::mirror(sg), BijectionSpec::identity(),
                                                 samples);
    CHECK(endo_eq(sigma, identity_endo(sg)));
    CHECK(v.status == Status::Fails);
  }
  SUBCASE("conjugation by inversion-composed-with-inner over a free inverse semigroup") {
    VarietySpec is = VarietySpec::free_inverse(2);
    Endo iswap = parse_endo(is, "x2;x1");
    BijectionSpec s = BijectionSpec::composed(
        {BijectionSpec::inversion(), BijectionSpec::from_aut(EndAut::inner(iswap))});
    EndAut phi = EndAut::conj_bij(is, s);
    auto [sigma, v] = inner_witness_from_central(phi, BijectionSpec::inversion(), samples);
    CHECK(endo_eq(sigma, iswap));
    CHECK(v.ok());
  }
}

TEST_CASE("signature operations per variety") {
  CHECK(signature_operations(VarietySpec::free_semigroup(2)).size() == 1);
  CHECK(signature_operations(VarietySpec::free_group(2)).size() == 2);
  CHECK(signature_operations(VarietySpec::free_inverse(2)).size() == 2);
  // module over GF(4): sum plus one scalar-multiple per field element
  CHECK(signature_operations(VarietySpec::free_module(Ring::galois_field(2, 2), 2)).size() ==
        1 + 4);
}
