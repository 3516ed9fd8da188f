#pragma once

#include <memory>

#include "endofree/element.hpp"

namespace endofree {

/// Syntax tree over the variety's signature plus variable slots v1..vk.
struct Term {
  enum class Kind { Var, Gen, Prod, Inv, Ident, ScalarMul, Sum, VecLit };
  Kind kind;
  int index = 0;                 // Var / Gen (1-based)
  Scalar scalar;                 // ScalarMul
  std::vector<Scalar> vec;       // VecLit
  std::vector<Term> kids;        // Prod/Sum: 2, Inv/ScalarMul: 1

  static Term var(int i) { return {Kind::Var, i, {}, {}, {}}; }
  static Term gen(int i) { return {Kind::Gen, i, {}, {}, {}}; }
  static Term prod(Term a, Term b) {
    Term t{Kind::Prod, 0, {}, {}, {}};
    t.kids = {std::move(a), std::move(b)};
    return t;
  }
  static Term inv(Term a) {
    Term t{Kind::Inv, 0, {}, {}, {}};
    t.kids = {std::move(a)};
    return t;
  }
  static Term ident() { return {Kind::Ident, 0, {}, {}, {}}; }
  static Term scalar_mul(Scalar k, Term a) {
    Term t{Kind::ScalarMul, 0, std::move(k), {}, {}};
    t.kids = {std::move(a)};
    return t;
  }
  static Term sum(Term a, Term b) {
    Term t{Kind::Sum, 0, {}, {}, {}};
    t.kids = {std::move(a), std::move(b)};
    return t;
  }
  static Term vec_lit(std::vector<Scalar> v) { return {Kind::VecLit, 0, {}, std::move(v), {}}; }
};

/// Highest variable index used (0 for ground terms).
int term_arity(const Term& t);

/// Parses the term grammar, checking every operation against the variety's
/// signature. Errors carry the offending position.
Term parse_term(const std::string& text, const VarietySpec& var);

std::string print_term(const Term& t, const VarietySpec& var);

/// Evaluates a term; variable v_i takes assignment[i-1], generators map to
/// themselves. Ground terms need no assignment (canonicalize).
Element substitute(const Term& t, const VarietySpec& var,
                   const std::vector<Element>& assignment);

inline Element canonicalize(const Term& t, const VarietySpec& var) {
  return substitute(t, var, {});
}

/// The canonical ground term denoting an element (inverse of canonicalize up
/// to equality in F; used to round-trip elements through the grammar).
Term element_to_term(const VarietySpec& var, const Element& a);

}  // namespace endofree
