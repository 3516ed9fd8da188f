#pragma once

#include <map>
#include <memory>

#include "endofree/endo.hpp"

namespace endofree {

struct EndAut;

/// A finitely described bijection s of F (with an evaluable inverse).
struct BijectionSpec {
  enum class Kind {
    Identity,
    MirrorWords,    // word reversal, letters fixed
    PrimeExponent,  // x^m -> x^(prime-transported m), sign preserved
    Twisted,        // modules: v -> sigma(ring_aut(v)), semilinear
    Inversion,      // a -> a^-1
    FromAut,        // main permutation of an End(F)-automorphism
    Table,          // finite association, adversarial fixtures
    Composed
  };
  Kind kind = Kind::Identity;
  std::map<long long, long long> primes;
  RingAut ring_aut;
  std::shared_ptr<const Endo> sigma;
  std::shared_ptr<const EndAut> aut;
  std::vector<std::pair<Element, Element>> table;
  bool table_identity_fallback = false;
  std::vector<BijectionSpec> parts;  // applied right to left (function composition)

  static BijectionSpec identity() { return {}; }
  static BijectionSpec mirror() { return {Kind::MirrorWords, {}, {}, {}, {}, {}, false, {}}; }
  static BijectionSpec inversion() { return {Kind::Inversion, {}, {}, {}, {}, {}, false, {}}; }
  static BijectionSpec prime_exponent(std::map<long long, long long> p) {
    return {Kind::PrimeExponent, std::move(p), {}, {}, {}, {}, false, {}};
  }
  static BijectionSpec twisted(RingAut r, Endo s) {
    return {Kind::Twisted, {}, r, std::make_shared<Endo>(std::move(s)), {}, {}, false, {}};
  }
  static BijectionSpec from_aut(EndAut a);
  static BijectionSpec lookup_table(std::vector<std::pair<Element, Element>> t,
                                    bool identity_fallback) {
    return {Kind::Table, {}, {}, {}, {}, std::move(t), identity_fallback, {}};
  }
  static BijectionSpec composed(std::vector<BijectionSpec> parts) {
    return {Kind::Composed, {}, {}, {}, {}, {}, false, std::move(parts)};
  }
};

Element bij_apply(const BijectionSpec& s, const VarietySpec& var, const Element& a,
                  bool inverse = false);
std::string bij_to_string(const BijectionSpec& s, const VarietySpec& var);

/// Symbolic automorphism of End(F): a closed variant family, so inversion
/// and reporting are exact.
struct EndAut {
  enum class Kind { Inner, ConjBij, Mirror, PrimePerm, SemiInner, Compose };
  Kind kind;
  VarietySpec variety;
  std::shared_ptr<const Endo> sigma;  // Inner, SemiInner
  BijectionSpec bij;                  // ConjBij
  std::map<long long, long long> primes;
  RingAut ring_aut;                   // SemiInner
  std::vector<EndAut> parts;          // Compose: parts[0](parts[1](...))

  static EndAut inner(Endo s);
  static EndAut identity(const VarietySpec& var) { return inner(identity_endo(var)); }
  static EndAut conj_bij(const VarietySpec& var, BijectionSpec s) {
    return {Kind::ConjBij, var, {}, std::move(s), {}, {}, {}};
  }
  static EndAut mirror(const VarietySpec& var);
  static EndAut prime_perm(const VarietySpec& var, std::map<long long, long long> p);
  static EndAut semi_inner(RingAut r, Endo s);
  static EndAut compose_of(std::vector<EndAut> parts);
};

Endo apply_aut(const EndAut& phi, const Endo& nu);
EndAut invert_endaut(const EndAut& phi);
std::string endaut_to_string(const EndAut& phi);

/// s(a) = Phi(nu_a)(x); errors if the value depends on the generator index.
Element main_permutation(const EndAut& phi, const Element& a);

/// Element of F^n.
using VectorTuple = std::vector<Element>;

bool is_diagonal(const VarietySpec& var, const VectorTuple& u);
VectorTuple vector_image(const EndAut& phi, const VectorTuple& u);

/// Seeded sample specification for the sample-based verdicts; reports carry
/// (count, max_size, seed) so reruns are reproducible.
struct SampleSpec {
  int count = 100;
  int max_size = 5;
  std::uint64_t seed = 0;
};

/// Prime transport of an integer exponent (sign preserved, 0 and +-1 fixed).
long long prime_transport(const std::map<long long, long long>& perm, long long m);

Verdict check_delta_condition(const EndAut& phi, const Endo& nu, const VectorTuple& u);
Verdict check_autoact(const EndAut& phi, const SampleSpec& samples);
Verdict verify_endaut(const EndAut& phi, const SampleSpec& samples);
Verdict equal_in_effect(const EndAut& a, const EndAut& b, const SampleSpec& samples);

/// Candidate automorphisms for bounded existential searches: all of P, plus
/// signed permutations (group-like varieties) or small-entry invertible
/// matrices (modules). Exact for free semigroups, where Aut(F) = P.
std::vector<Endo> automorphism_candidates(const VarietySpec& var, long long budget);

struct PotinnerMode {
  bool exact_p = false;       // restrict the sigma search to P
  long long budget = 100000;  // candidate budget outside exact varieties
};
Verdict check_potinner(const EndAut& phi, const PotinnerMode& mode = {});

/// Splits Phi as Inner(sigma) composed with a residual Gamma whose main
/// permutation fixes X. Throws if s(X) is not a basis.
std::pair<Endo, EndAut> normalize(const EndAut& phi);

Verdict check_subalgebra_preservation(const EndAut& phi, const std::vector<int>& subset,
                                      const SampleSpec& samples);

}  // namespace endofree
