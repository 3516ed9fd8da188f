#include <doctest.h>

#include "endofree/suites.hpp"

using namespace endofree;

namespace {

Json stripped(const SuiteReport& rep) {
  Json j = rep.to_json();
  j.erase("wall_ms");
  return j;
}

}  // namespace

TEST_CASE("semigroup-binary solutions agree at bounds 2 and 6") {
  SuiteReport small = suite_semigroup_binary(2);
  SuiteReport big = suite_semigroup_binary(6);
  CHECK(small.solutions == std::vector<std::string>{"v1*v2", "v2*v1"});
  CHECK(small.solutions == big.solutions);
  CHECK(small.exit_code() == 0);
  CHECK(big.exit_code() == 0);
}

TEST_CASE("inverse-system readings") {
  SuiteReport a = suite_inverse_system(5, 'A');
  CHECK(a.solutions == std::vector<std::string>{"v1*v2", "v2*v1"});
  CHECK(a.exit_code() == 0);
  // the literal strict first equation keeps only the direct branch, and the
  // report flags the deviation from the expected pair
  SuiteReport b = suite_inverse_system(5, 'B');
  CHECK(b.solutions == std::vector<std::string>{"v1*v2"});
  CHECK(b.exit_code() == 1);
}

TEST_CASE("inverse-system monotonicity in the bound") {
  SuiteReport lo = suite_inverse_system(4, 'A');
  SuiteReport hi = suite_inverse_system(6, 'A');
  for (const std::string& s : lo.solutions)
    CHECK(std::find(hi.solutions.begin(), hi.solutions.end(), s) != hi.solutions.end());
}

TEST_CASE("group-words filters shrink monotonically") {
  SuiteReport rep = suite_group_words(3, 2);
  long long c1 = rep.params["after_filter1"].get<long long>();
  long long c2 = rep.params["after_filter2"].get<long long>();
  long long c3 = rep.params["after_filter3"].get<long long>();
  CHECK(c1 >= c2);
  CHECK(c2 >= c3);
  CHECK(c1 > c2);
  CHECK(rep.solutions == std::vector<std::string>{"v1*v2", "v2*v1"});
  // smaller exponent window keeps the same survivors
  CHECK(suite_group_words(2, 1).solutions == rep.solutions);
}

TEST_CASE("inverse-idempotent classification") {
  VarietySpec is = VarietySpec::free_inverse(2);
  CHECK(suite_inverse_idempotent(is, BijectionSpec::identity(), 3).params["classification"] ==
        "direct");
  CHECK(suite_inverse_idempotent(is, BijectionSpec::inversion(), 3).params["classification"] ==
        "dual");
  Element x1 = generator(is, 1);
  Element e1 = multiply(is, x1, invert(is, x1));
  Element e2 = multiply(is, invert(is, x1), x1);
  BijectionSpec table = BijectionSpec::lookup_table({{e1, e2}, {e2, e1}}, true);
  CHECK(suite_inverse_idempotent(is, table, 3).params["classification"] == "neither");
}

TEST_CASE("monogenic suite") {
  SampleSpec samples{100, 5, 0};
  std::map<long long, long long> pi{{2, 3}, {3, 2}};
  SuiteReport sg = suite_monogenic(pi, false, 50, samples);
  CHECK(sg.exit_code() == 0);
  SuiteReport cg = suite_monogenic(pi, true, 50, samples);
  CHECK(cg.exit_code() == 0);
  CHECK(suite_monogenic({}, false, 30, samples).exit_code() == 0);  // identity permutation
}

TEST_CASE("mirror classification and module semi-inner suites pass") {
  CHECK(suite_mirror_classification(2, SampleSpec{200, 5, 7}).exit_code() == 0);
  Ring gf4 = Ring::galois_field(2, 2);
  VarietySpec mod = VarietySpec::free_module(gf4, 2);
  CHECK(suite_module_semi_inner(gf4, RingAut{1}, identity_endo(mod), SampleSpec{100, 4, 0})
            .exit_code() == 0);
  // semi-inner with identity twist over Q is inner
  Ring q = Ring::rationals();
  VarietySpec mq = VarietySpec::free_module(q, 2);
  Endo unipotent = parse_endo(mq, "x1 + x2;x2");
  CHECK(suite_module_semi_inner(q, RingAut{0}, unipotent, SampleSpec{100, 4, 0}).exit_code() ==
        0);
}

TEST_CASE("quasi-inner battery across varieties") {
  VarietySpec sg = VarietySpec::free_semigroup(2);
  SuiteReport rep = suite_quasi_inner_battery(
      sg,
      {EndAut::identity(sg), EndAut::inner(parse_endo(sg, "x2;x1")), EndAut::mirror(sg)},
      100000, 0);
  CHECK(rep.exit_code() == 0);
  VarietySpec is = VarietySpec::free_inverse(2);
  CHECK(suite_quasi_inner_battery(is, {EndAut::inner(parse_endo(is, "x2^-1;x1"))}, 100000, 0)
            .exit_code() == 0);
}

TEST_CASE("suites are deterministic given identical parameters and seed") {
  CHECK(stripped(suite_semigroup_binary(5)) == stripped(suite_semigroup_binary(5)));
  CHECK(stripped(suite_inverse_system(5, 'A')) == stripped(suite_inverse_system(5, 'A')));
  CHECK(stripped(suite_group_words(3, 2)) == stripped(suite_group_words(3, 2)));
  SampleSpec samples{50, 4, 42};
  CHECK(stripped(suite_mirror_classification(2, samples)) ==
        stripped(suite_mirror_classification(2, samples)));
  std::map<long long, long long> pi{{2, 3}, {3, 2}};
  CHECK(stripped(suite_monogenic(pi, true, 30, samples)) ==
        stripped(suite_monogenic(pi, true, 30, samples)));
}

TEST_CASE("report schema fields") {
  Json j = suite_semigroup_binary(3).to_json();
  CHECK(j["schema"] == "endofree-report/1");
  for (const char* key : {"suite", "variety", "rank", "params", "seed", "checks", "solutions",
                          "wall_ms"})
    CHECK(j.contains(key));
  CHECK(j.size() == 9);  // no extra fields
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("name"));
    CHECK(c.contains("status"));
    CHECK(c.contains("witness"));
    CHECK(c.contains("count"));
    CHECK(c.size() == 4);
  }
}

TEST_CASE("exit code contract") {
  SuiteReport rep;
  rep.variety = VarietySpec::free_semigroup(2);
  CHECK(rep.exit_code() == 0);
  rep.add("u", Verdict::unknown(10));
  CHECK(rep.exit_code() == 2);
  rep.add("f", Verdict::fails(Json{{"why", "test"}}));
  CHECK(rep.exit_code() == 1);
}

TEST_CASE("textual parsers") {
  CHECK(parse_ring("Z").kind() == RingKind::Integers);
  CHECK(parse_ring("Q").kind() == RingKind::Rationals);
  CHECK(parse_ring("GF(4)").p() == 2);
  CHECK(parse_ring("GF(4)").m() == 2);
  CHECK(parse_ring("GF(3,2)").m() == 2);
  CHECK_THROWS_AS(parse_ring("GF(6)"), error);
  CHECK_THROWS_AS(parse_ring("R"), error);
  VarietySpec sg = VarietySpec::free_semigroup(2);
  CHECK(endaut_to_string(parse_endaut(sg, "mirror")) ==
        endaut_to_string(EndAut::mirror(sg)));
  CHECK(parse_endaut(sg, "inner:x2;x1").kind == EndAut::Kind::Inner);
  VarietySpec sg1 = VarietySpec::free_semigroup(1);
  EndAut pp = parse_endaut(sg1, "prime-perm:2<->3,5<->7");
  CHECK(pp.primes.at(5) == 7);
  CHECK(pp.primes.at(3) == 2);
  CHECK_THROWS_AS(parse_endaut(sg, "bogus"), error);
}
