#pragma once

#include "endofree/basis_matrix.hpp"
#include "endofree/derived_ops.hpp"

namespace endofree {

struct CheckRecord {
  std::string name;
  Verdict verdict;
};

/// Deterministic suite result; to_json emits the endofree-report/1 schema
/// (wall_ms excluded from determinism comparisons).
struct SuiteReport {
  std::string suite;
  VarietySpec variety;
  Json params;  // object
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;
  std::vector<std::string> solutions;  // canonical, sorted
  long long wall_ms = 0;

  void add(std::string name, Verdict v) { checks.push_back({std::move(name), std::move(v)}); }
  bool any(Status s) const {
    for (const auto& c : checks)
      if (c.verdict.status == s) return true;
    return false;
  }
  /// 0 all hold, 1 any fails, 2 any unknown and none fails.
  int exit_code() const { return any(Status::Fails) ? 1 : any(Status::Unknown) ? 2 : 0; }
  Json to_json() const;
};

/// Binary-word search over the free semigroup: associative, generating,
/// two-variable words. Expected survivors {v1*v2, v2*v1}.
SuiteReport suite_semigroup_binary(int max_len);

/// Prime-permutation bijections of the monogenic free semigroup (or the
/// infinite cyclic group): multiplicativity of the transport and
/// verification of the induced conjugation automorphism.
SuiteReport suite_monogenic(const std::map<long long, long long>& pi, bool cyclic_group,
                            long long mult_bound, const SampleSpec& samples);

/// Binary inverse-semigroup terms solving the three-equation system.
/// Reading A uses the arity-corrected equations; reading B the literal
/// nested ones. Expected survivors {v1*v2, v2*v1}.
SuiteReport suite_inverse_system(int max_len, char reading = 'A');

/// Classifies a bijection s of a free inverse semigroup as direct
/// (s(aa^-1) = s(a)s(a)^-1), dual (= s(a)^-1 s(a)), or neither, over all
/// elements of size <= bound; also checks s(a^-1) = s(a)^-1.
SuiteReport suite_inverse_idempotent(const VarietySpec& var, const BijectionSpec& s, int bound);

/// Two-variable group words surviving the unit, inversion-symmetry, and
/// reconstruction filters, with per-filter survivor counts.
SuiteReport suite_group_words(int max_syllables, int max_exp);

/// Mirror automorphism at rank n: verified, exhaustively refuted as inner
/// over P, inner-composition closure, and its matrix facts.
SuiteReport suite_mirror_classification(int n, const SampleSpec& samples);

/// Semi-inner automorphism of a free module: verification, the twisted
/// scalar law, and the two-matrix quasi-innerness criterion.
SuiteReport suite_module_semi_inner(const Ring& ring, const RingAut& theta, const Endo& sigma,
                                    const SampleSpec& samples);

/// Quasi-innerness battery over a list of fixtures: potential innerness,
/// the two-matrix criterion, basis columns, and their cross-consistency.
SuiteReport suite_quasi_inner_battery(const VarietySpec& var, const std::vector<EndAut>& fixtures,
                                      long long budget, std::uint64_t seed);

// --- textual interfaces (CLI) ----------------------------------------------

Ring parse_ring(const std::string& text);  // Z | Q | GF(p,m) | GF(q)
VarietySpec parse_variety(const std::string& name, int rank, const std::string& ring_text);

/// identity | inner:<images> | mirror | prime-perm:2<->3,5<->7 |
/// semi-inner:<ring-aut>:<images>  (ring-aut = identity | frobenius^e)
EndAut parse_endaut(const VarietySpec& var, const std::string& text);

}  // namespace endofree
