#pragma once

#include "endofree/endaut.hpp"

namespace endofree {

/// A derived polynomial operation omega*: fully determined by the element
/// w = s(omega(x1..xk)). Evaluation at (a1..ak) applies the endomorphism
/// sending (x1..xk) to (a1..ak) and fixing the remaining generators.
struct DerivedOp {
  VarietySpec variety;
  int arity = 0;
  Element w;    // s(omega(x1..xk)), canonical
  Term source;  // omega
};

DerivedOp derived_operation(const VarietySpec& var, const BijectionSpec& s, const Term& omega);
Element eval_derived(const DerivedOp& op, const std::vector<Element>& args);
std::string print_derived(const DerivedOp& op);

/// Thm check: s(omega(a1..ak)) = omega*(s(a1)..s(ak)) on seeded samples.
Verdict check_isom_deriv(const VarietySpec& var, const BijectionSpec& s, const Term& omega,
                         const SampleSpec& samples);

/// Centrality: c(nu(a)) = nu(c(a)) for sampled (nu, a).
Verdict is_central(const VarietySpec& var, const BijectionSpec& c, const SampleSpec& samples);

/// Given a central c, the candidate inner witness sigma with
/// sigma(x_i) = c^{-1}(s(x_i)), s the main permutation of Phi. The verdict
/// checks sigma is an automorphism and Phi(nu) = sigma o nu o sigma^{-1}
/// on sampled nu.
std::pair<Endo, Verdict> inner_witness_from_central(const EndAut& phi, const BijectionSpec& c,
                                                    const SampleSpec& samples);

/// The signature operations of the variety as terms (product, inverse, sum,
/// scalar multiples by small ring elements).
std::vector<Term> signature_operations(const VarietySpec& var);

}  // namespace endofree
