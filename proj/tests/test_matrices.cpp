#include <doctest.h>

#include "endofree/suites.hpp"

using namespace endofree;

TEST_CASE("matrix entries are Phi(nu_i)(x_j)") {
  VarietySpec sg = VarietySpec::free_semigroup(2);
  CHECK(print_matrix(matrix_of(EndAut::identity(sg))) == "x1,x1;x2,x2");
  CHECK(print_matrix(matrix_of(EndAut::inner(parse_endo(sg, "x2;x1")))) == "x2,x2;x1,x1");
  CHECK(print_matrix(matrix_of(EndAut::mirror(sg))) == "x1,x1;x2,x2");
  VarietySpec sg1 = VarietySpec::free_semigroup(1);
  CHECK(print_matrix(matrix_of(EndAut::prime_perm(sg1, {{2, 3}, {3, 2}}))) == "x1");
}

TEST_CASE("matrix print/parse round trip") {
  VarietySpec sg = VarietySpec::free_semigroup(2);
  for (const std::string& text : {"x1,x1;x2,x2", "x2,x2;x1,x1", "x1*x2,x2;x2,x1"}) {
    CHECK(print_matrix(parse_matrix(sg, text)) == text);
  }
  CHECK_THROWS_AS(parse_matrix(sg, "x1,x1"), error);
}

TEST_CASE("row projection holds for automorphism matrices, fails for junk") {
  VarietySpec sg = VarietySpec::free_semigroup(2);
  for (const EndAut& phi : {EndAut::identity(sg), EndAut::inner(parse_endo(sg, "x2;x1")),
                            EndAut::mirror(sg)})
    CHECK(check_row_projection(matrix_of(phi)).ok());
  BasisMatrix junk = parse_matrix(sg, "x1,x2;x2,x1");
  Verdict v = check_row_projection(junk);
  CHECK(v.status == Status::Fails);
  CHECK_FALSE(v.witness.is_null());
}

TEST_CASE("row permutations are realized by automorphisms (exact at semigroups)") {
  VarietySpec sg = VarietySpec::free_semigroup(2);
  CHECK(check_row_permutation(matrix_of(EndAut::mirror(sg))).ok());
  CHECK(check_row_permutation(matrix_of(EndAut::inner(parse_endo(sg, "x2;x1")))).ok());
}

TEST_CASE("structural properties and basis columns") {
  VarietySpec sg = VarietySpec::free_semigroup(2);
  BasisMatrix m = matrix_of(EndAut::inner(parse_endo(sg, "x2;x1")));
  auto [rows, cols] = structural_properties(m);
  CHECK(rows.ok());
  CHECK(cols.ok());
  CHECK(basis_columns(m) == std::vector<int>{1, 2});
  Endo col = column_endo(m, 1);
  CHECK(print_endo(col) == "x2;x1");
}

TEST_CASE("interpolation condition with default tuples") {
  VarietySpec sg = VarietySpec::free_semigroup(2);
  BasisMatrix m = matrix_of(EndAut::inner(parse_endo(sg, "x2;x1")));
  CHECK(check_interpolation(m, default_interpolation_tuples(sg)).ok());
  BasisMatrix mid = matrix_of(EndAut::identity(sg));
  CHECK(check_interpolation(mid, default_interpolation_tuples(sg)).ok());
}

TEST_CASE("cross composites satisfy the defining identity and are pseudo-diagonal") {
  VarietySpec sg = VarietySpec::free_semigroup(2);
  for (const EndAut& phi : {EndAut::identity(sg), EndAut::inner(parse_endo(sg, "x2;x1")),
                            EndAut::mirror(sg)}) {
    for (int k = 1; k <= 2; ++k)
      for (int mcol = 1; mcol <= 2; ++mcol) {
        CrossComposite cc = cross_composites(phi, k, mcol);  // throws on violation
        CHECK(cc.pseudo_diagonal.verdict.ok());
      }
  }
}

TEST_CASE("nonconstant triple and the two-matrix criterion") {
  VarietySpec sg = VarietySpec::free_semigroup(2);
  for (const EndAut& phi : {EndAut::identity(sg), EndAut::inner(parse_endo(sg, "x2;x1")),
                            EndAut::mirror(sg)}) {
    NonconstantTriple t = find_nonconstant_triple(phi);
    CHECK(t.m >= 1);
    CHECK(two_matrix_criterion(phi).ok());
  }
  VarietySpec is = VarietySpec::free_inverse(2);
  CHECK(two_matrix_criterion(EndAut::inner(parse_endo(is, "x2^-1;x1"))).ok());
  Ring gf4 = Ring::galois_field(2, 2);
  VarietySpec mod = VarietySpec::free_module(gf4, 2);
  CHECK(two_matrix_criterion(EndAut::semi_inner(RingAut{1}, identity_endo(mod))).ok());
}

TEST_CASE("matrix table rendering is aligned") {
  VarietySpec sg = VarietySpec::free_semigroup(2);
  std::string table = print_matrix_table(matrix_of(EndAut::identity(sg)));
  CHECK(table == "[ x1  x1 ]\n[ x2  x2 ]\n");
}
