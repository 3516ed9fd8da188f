#include "endofree/derived_ops.hpp"

namespace endofree {

DerivedOp derived_operation(const VarietySpec& var, const BijectionSpec& s, const Term& omega) {
  int k = term_arity(omega);
  if (k > var.rank) throw error("operation arity exceeds the rank");
  std::vector<Element> gens;
  for (int i = 1; i <= k; ++i) gens.push_back(generator(var, i));
  Element w = bij_apply(s, var, substitute(omega, var, gens));
  return {var, k, std::move(w), omega};
}

Element eval_derived(const DerivedOp& op, const std::vector<Element>& args) {
  if (static_cast<int>(args.size()) != op.arity) throw error("derived-op arity mismatch");
  std::vector<Element> images = args;
  for (int i = op.arity + 1; i <= op.variety.rank; ++i)
    images.push_back(generator(op.variety, i));
  return apply_endo(make_endo(op.variety, std::move(images)), op.w);
}

std::string print_derived(const DerivedOp& op) {
  return "arity " + std::to_string(op.arity) + ": " + print_element(op.variety, op.w);
}

Verdict check_isom_deriv(const VarietySpec& var, const BijectionSpec& s, const Term& omega,
                         const SampleSpec& samples) {
  DerivedOp op = derived_operation(var, s, omega);
  SplitMix64 rng(samples.seed);
  for (int n = 0; n < samples.count; ++n) {
    std::vector<Element> args, mapped;
    for (int i = 0; i < op.arity; ++i) {
      args.push_back(sample_element(var, samples.max_size, rng));
      mapped.push_back(bij_apply(s, var, args.back()));
    }
    Element lhs = bij_apply(s, var, substitute(omega, var, args));
    Element rhs = eval_derived(op, mapped);
    if (!element_eq(var, lhs, rhs)) {
      Json w;
      w["sample"] = n;
      for (size_t i = 0; i < args.size(); ++i)
        w["arg" + std::to_string(i + 1)] = print_element(var, args[i]);
      w["s(omega(args))"] = print_element(var, lhs);
      w["omega*(s(args))"] = print_element(var, rhs);
      return Verdict::fails(w, n + 1);
    }
  }
  return Verdict::holds(samples.count);
}

Verdict is_central(const VarietySpec& var, const BijectionSpec& c, const SampleSpec& samples) {
  SplitMix64 rng(samples.seed);
  for (int n = 0; n < samples.count; ++n) {
    Endo nu = sample_endo(var, samples.max_size, rng);
    Element a = sample_element(var, samples.max_size, rng);
    Element lhs = bij_apply(c, var, apply_endo(nu, a));
    Element rhs = apply_endo(nu, bij_apply(c, var, a));
    if (!element_eq(var, lhs, rhs)) {
      Json w;
      w["sample"] = n;
      w["nu"] = print_endo(nu);
      w["a"] = print_element(var, a);
      w["c(nu(a))"] = print_element(var, lhs);
      w["nu(c(a))"] = print_element(var, rhs);
      return Verdict::fails(w, n + 1);
    }
  }
  return Verdict::holds(samples.count);
}

std::pair<Endo, Verdict> inner_witness_from_central(const EndAut& phi, const BijectionSpec& c,
                                                    const SampleSpec& samples) {
  const VarietySpec& var = phi.variety;
  // The quasi-inner representative s is only canonical up to a central
  // factor; for explicit conjugations use the given bijection, otherwise the
  // main permutation.
  std::vector<Element> images;
  for (int i = 1; i <= var.rank; ++i) {
    Element sxi = phi.kind == EndAut::Kind::ConjBij
                      ? bij_apply(phi.bij, var, generator(var, i))
                      : main_permutation(phi, generator(var, i));
    images.push_back(bij_apply(c, var, sxi, /*inverse=*/true));
  }
  Endo sigma = make_endo(var, std::move(images));
  Verdict aut = is_automorphism(sigma);
  if (!aut.ok()) {
    Json w;
    w["sigma"] = print_endo(sigma);
    w["reason"] = "sigma = c^-1 o s is not an automorphism";
    w["automorphism_check"] = aut.to_json();
    return {sigma, Verdict::fails(w, aut.checked)};
  }
  Endo sigma_inv = invert_automorphism(sigma);
  SplitMix64 rng(samples.seed);
  for (int n = 0; n < samples.count; ++n) {
    Endo nu = sample_endo(var, samples.max_size, rng);
    Endo lhs = apply_aut(phi, nu);
    Endo rhs = compose(sigma, compose(nu, sigma_inv));
    if (!endo_eq(lhs, rhs)) {
      Json w;
      w["sample"] = n;
      w["nu"] = print_endo(nu);
      w["Phi(nu)"] = print_endo(lhs);
      w["sigma o nu o sigma^-1"] = print_endo(rhs);
      return {sigma, Verdict::fails(w, n + 1)};
    }
  }
  return {sigma, Verdict::holds(samples.count)};
}

std::vector<Term> signature_operations(const VarietySpec& var) {
  std::vector<Term> ops;
  if (var.has_product()) ops.push_back(Term::prod(Term::var(1), Term::var(2)));
  if (var.has_inverse()) ops.push_back(Term::inv(Term::var(1)));
  if (var.kind == VarietyKind::FreeModule) {
    const Ring& ring = var.the_ring();
    ops.push_back(Term::sum(Term::var(1), Term::var(2)));
    std::vector<Scalar> scalars;
    if (ring.kind() == RingKind::GaloisField && ring.m() <= 2 && ring.p() <= 3) {
      // every field element
      int q = 1;
      for (int i = 0; i < ring.m(); ++i) q *= ring.p();
      for (int v = 0; v < q; ++v) {
        std::vector<int> coeffs(ring.m());
        int rest = v;
        for (int i = 0; i < ring.m(); ++i) {
          coeffs[i] = rest % ring.p();
          rest /= ring.p();
        }
        scalars.push_back(Scalar{{}, coeffs});
      }
    } else {
      for (long long v : {0LL, 1LL, -1LL, 2LL}) scalars.push_back(ring.from_int(v));
    }
    for (const auto& k : scalars) ops.push_back(Term::scalar_mul(k, Term::var(1)));
  }
  return ops;
}

}  // namespace endofree
