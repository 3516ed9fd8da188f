#pragma once

#include <optional>

#include "endofree/rng.hpp"
#include "endofree/term.hpp"
#include "endofree/verdict.hpp"

namespace endofree {

/// Endomorphism of F, stored as the tuple of images of the basis.
struct Endo {
  VarietySpec variety;
  std::vector<Element> images;  // image of x_i at position i-1
};

Endo make_endo(const VarietySpec& var, std::vector<Element> images);
Endo identity_endo(const VarietySpec& var);
Endo basis_endo(const VarietySpec& var, int i);   // x_j -> x_i for all j
Endo const_endo(const VarietySpec& var, const Element& a);
Endo permutation_endo(const VarietySpec& var, const std::vector<int>& perm);

Element apply_endo(const Endo& nu, const Element& a);
/// nu then-applied-after mu: (nu o mu)(x) = nu(mu(x)).
Endo compose(const Endo& nu, const Endo& mu);

bool endo_eq(const Endo& a, const Endo& b);
bool endo_less(const Endo& a, const Endo& b);
std::string print_endo(const Endo& nu);  // semicolon-separated image list
Endo parse_endo(const VarietySpec& var, const std::string& text);

/// Finite deterministically ordered duplicate-free collection of Endo.
struct EndoSet {
  VarietySpec variety;
  std::vector<Endo> items;

  void insert(Endo e);
  bool contains(const Endo& e) const;
};

Verdict is_automorphism(const Endo& nu);
bool is_permutational(const Endo& nu);
bool is_constant_defined(const Endo& nu);

struct PseudoDiagResult {
  Verdict verdict;
  std::optional<Term> witness;  // unary word w(v1), or scalar-multiple a.v1
};
PseudoDiagResult is_pseudo_diagonal(const Endo& nu);

/// All n! permutational automorphisms.
EndoSet enumerate_P(const VarietySpec& var, long long factorial_budget = 40320);

/// Exact inverse of an automorphism (permutation inverse, Nielsen
/// reconstruction, or matrix inverse). Throws if nu is not an automorphism.
Endo invert_automorphism(const Endo& nu);

/// Subset of candidates theta with nu o theta = nu.
EndoSet invariant_group(const Endo& nu, const EndoSet& candidates);
/// Subset of candidates nu with nu o theta = nu.
EndoSet left_ideal_fixers(const Endo& theta, const EndoSet& candidates);
/// All endomorphisms fixed under right-composition with P: the constant
/// tuples over elements of size <= bound.
EndoSet p_fixed_endos(const VarietySpec& var, int size_bound);

// --- Nielsen machinery (free groups) ---------------------------------------

struct NielsenMove {
  int i, j, eps;  // w_i <- w_i * w_j^eps (or the left-sided version)
  bool left;
};

struct NielsenResult {
  std::vector<std::vector<int>> tuple;
  std::vector<NielsenMove> moves;
  bool is_basis = false;
};

NielsenResult nielsen_reduce(std::vector<std::vector<int>> tuple, int rank);

// --- module matrix view ----------------------------------------------------

using Mat = std::vector<std::vector<Scalar>>;  // row-major, square

Mat endo_matrix(const Endo& nu);               // entry (r,c) = coefficient r of image c
Endo endo_from_matrix(const VarietySpec& var, const Mat& m);
Scalar mat_det(const Ring& ring, Mat m);       // exact; Z computed via Q
std::optional<Mat> mat_inverse(const Ring& ring, Mat m);

// --- seeded sampling -------------------------------------------------------

Element sample_element(const VarietySpec& var, int max_size, SplitMix64& rng);
Endo sample_endo(const VarietySpec& var, int max_size, SplitMix64& rng);

}  // namespace endofree
