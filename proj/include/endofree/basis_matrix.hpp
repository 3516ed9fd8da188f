#pragma once

#include "endofree/endaut.hpp"

namespace endofree {

/// n x n array of elements; entry (i,j) is u_{i,j}. Rows index the basis
/// endomorphisms the matrix came from, columns index generators.
struct BasisMatrix {
  VarietySpec variety;
  std::vector<std::vector<Element>> entries;
  std::shared_ptr<const EndAut> provenance;

  const Element& at(int i, int j) const { return entries[i - 1][j - 1]; }
};

/// Entry (i,j) = Phi(nu_i)(x_j).
BasisMatrix matrix_of(const EndAut& phi);

std::string print_matrix(const BasisMatrix& m);             // "a,b;c,d"
std::string print_matrix_table(const BasisMatrix& m);       // aligned rows
BasisMatrix parse_matrix(const VarietySpec& var, const std::string& text);

/// Condition 1: every row permutation is realized by some automorphism.
/// Exact for free semigroups; three-valued elsewhere (bounded candidate ball).
Verdict check_row_permutation(const BasisMatrix& m, long long budget = 100000);

/// Condition 2: mu_i(u_{j,k}) = u_{i,k} for all i,j,k, with mu_i = row i. Exact.
Verdict check_row_projection(const BasisMatrix& m);

/// Condition 3 for the supplied tuples of endomorphisms: existence and
/// uniqueness of alpha with alpha(u_{i,j}) = alpha_i(u_{i,j}).
Verdict check_interpolation(const BasisMatrix& m,
                            const std::vector<std::vector<Endo>>& tuples,
                            long long budget = 100000);

/// Default condition-3 tuples: all n-tuples over {identity, nu_1..nu_n} plus P.
std::vector<std::vector<Endo>> default_interpolation_tuples(const VarietySpec& var);

/// (no row of constants, some column with pairwise-distinct entries). Exact.
std::pair<Verdict, Verdict> structural_properties(const BasisMatrix& m);

/// 1-based indices of columns whose entries form a basis of F.
std::vector<int> basis_columns(const BasisMatrix& m);

/// sigma_m(x_i) = u_{i,m}.
Endo column_endo(const BasisMatrix& m, int col);

struct CrossComposite {
  Endo composite;  // Phi(tau_k) o sigma_m
  PseudoDiagResult pseudo_diagonal;
  bool constant_defined;
};

/// The cross composite Phi(tau_k) o sigma_m, where sigma_m is column m of the
/// matrix of Phi and tau_k is column k of the matrix of Phi^{-1}. Throws if
/// its value at x_i differs from nu_i(u_{k,m}).
CrossComposite cross_composites(const EndAut& phi, int k, int m);

struct NonconstantTriple {
  int m, k, t;
};

/// Smallest (m,k,t) with nu_1(u_{k,m}) and nu_1(v_{m,t}) both nonconstant.
/// Throws if the exhaustive scan finds none (malformed input).
NonconstantTriple find_nonconstant_triple(const EndAut& phi);

/// Quasi-innerness via the two one-letter words of the nonconstant triple:
/// both must define pseudo-diagonal automorphisms. On Holds, cross-checks
/// that the matrix of Phi has a basis column.
Verdict two_matrix_criterion(const EndAut& phi);

}  // namespace endofree
