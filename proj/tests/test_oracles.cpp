#include <doctest.h>

#include <set>

#include "endofree/suites.hpp"
#include "oracles.hpp"

using namespace endofree;

TEST_CASE("free reduction agrees with the single-pair erasure oracle") {
  SplitMix64 rng(3);
  for (int t = 0; t < 2000; ++t) {
    std::vector<int> w;
    int len = static_cast<int>(rng.below(12));
    for (int i = 0; i < len; ++i) {
      int l = 1 + static_cast<int>(rng.below(3));
      w.push_back(rng.below(2) ? l : -l);
    }
    CHECK(free_reduce(w) == oracle::naive_reduce(w));
  }
}

TEST_CASE("Munn equality matches the Wagner rewriting closure (bounded)") {
  // Unit-scale slice of the acceptance check: rank 2, words of length <= 4,
  // closure universe of length <= 7.
  oracle::WagnerClosure closure(2, 7);
  std::vector<oracle::LWord> words = oracle::all_signed_words(2, 4);
  // both relations must induce the same partition
  std::map<int, std::vector<int>> by_closure;
  std::map<std::vector<int>, std::set<int>> by_munn;
  std::vector<std::vector<int>> canon;
  for (const auto& w : words) canon.push_back(munn_min_word(munn_from_letters(w)));
  long long disagreements = 0;
  for (size_t i = 0; i < words.size(); ++i)
    for (size_t j = i + 1; j < words.size(); ++j) {
      bool munn_eq = canon[i] == canon[j];
      bool closure_eq = closure.equivalent(words[i], words[j]);
      if (munn_eq != closure_eq) ++disagreements;
    }
  CHECK(disagreements == 0);
}

TEST_CASE("Wagner closure validates specific Munn identities") {
  oracle::WagnerClosure closure(1, 7);
  CHECK(closure.equivalent({1, -1, 1}, {1}));
  CHECK(closure.equivalent({1, -1, -1, 1}, {-1, 1, 1, -1}));
  CHECK_FALSE(closure.equivalent({1, -1}, {-1, 1}));
  CHECK_FALSE(closure.equivalent({1, 1}, {1}));
}

TEST_CASE("Nielsen recognition is sound on generated automorphisms") {
  VarietySpec g = VarietySpec::free_group(2);
  // products of elementary Nielsen automorphisms are automorphisms
  std::vector<Endo> elementary = {
      parse_endo(g, "x2;x1"),
      parse_endo(g, "x1^-1;x2"),
      parse_endo(g, "x1*x2;x2"),
  };
  SplitMix64 rng(5);
  for (int t = 0; t < 40; ++t) {
    Endo sigma = identity_endo(g);
    for (int s = 0; s < 6; ++s)
      sigma = compose(sigma, elementary[rng.below(elementary.size())]);
    CHECK(is_automorphism(sigma).ok());
    Endo inv = invert_automorphism(sigma);
    CHECK(endo_eq(compose(sigma, inv), identity_endo(g)));
    CHECK(endo_eq(compose(inv, sigma), identity_endo(g)));
  }
  // non-surjective endomorphisms are rejected
  CHECK_FALSE(is_automorphism(parse_endo(g, "x1;x1")).ok());
  CHECK_FALSE(is_automorphism(parse_endo(g, "x1*x1;x2")).ok());
  CHECK_FALSE(is_automorphism(parse_endo(g, "x1;x1*x2*x1^-1*x2^-1")).ok());
}

TEST_CASE("module automorphism recognition matches the determinant oracle") {
  VarietySpec mz = VarietySpec::free_module(Ring::integers(), 2);
  Ring z = Ring::integers();
  SplitMix64 rng(9);
  for (int t = 0; t < 200; ++t) {
    Mat m(2, std::vector<Scalar>(2));
    for (auto& row : m)
      for (auto& e : row) e = z.from_int(rng.range(-2, 2));
    Endo nu = endo_from_matrix(mz, m);
    Scalar det = mat_det(z, m);
    bool unit = z.equal(det, z.one()) || z.equal(det, z.from_int(-1));
    CHECK(is_automorphism(nu).ok() == unit);
  }
}
