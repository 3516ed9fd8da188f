#include "endofree/endaut.hpp"

#include <algorithm>
#include <map>

namespace endofree {

BijectionSpec BijectionSpec::from_aut(EndAut a) {
  BijectionSpec s;
  s.kind = Kind::FromAut;
  s.aut = std::make_shared<EndAut>(std::move(a));
  return s;
}

EndAut EndAut::inner(Endo s) {
  if (!is_automorphism(s).ok()) throw error("inner witness is not an automorphism");
  VarietySpec var = s.variety;
  return {Kind::Inner, var, std::make_shared<Endo>(std::move(s)), {}, {}, {}, {}};
}

EndAut EndAut::mirror(const VarietySpec& var) {
  if (var.kind != VarietyKind::FreeSemigroup)
    throw error("mirror automorphism lives on free semigroups");
  return {Kind::Mirror, var, {}, {}, {}, {}, {}};
}

EndAut EndAut::prime_perm(const VarietySpec& var, std::map<long long, long long> p) {
  if (var.rank != 1 || var.kind == VarietyKind::FreeModule ||
      var.kind == VarietyKind::FreeInverseSemigroup)
    throw error("prime-permutation automorphisms live on monogenic semigroups and the "
                "infinite cyclic group");
  return {Kind::PrimePerm, var, {}, {}, std::move(p), {}, {}};
}

EndAut EndAut::semi_inner(RingAut r, Endo s) {
  if (s.variety.kind != VarietyKind::FreeModule)
    throw error("semi-inner automorphisms live on free modules");
  if (!is_automorphism(s).ok()) throw error("semi-inner witness must be invertible");
  VarietySpec var = s.variety;
  return {Kind::SemiInner, var, std::make_shared<Endo>(std::move(s)), {}, {}, r, {}};
}

EndAut EndAut::compose_of(std::vector<EndAut> parts) {
  if (parts.empty()) throw error("empty composition");
  VarietySpec var = parts.front().variety;
  for (const auto& p : parts) check_same_variety(var, p.variety);
  return {Kind::Compose, var, {}, {}, {}, {}, std::move(parts)};
}

// ---------------------------------------------------------------------------
// Prime transport

long long prime_transport(const std::map<long long, long long>& perm, long long m) {
  if (m == 0) return 0;
  long long sign = m < 0 ? -1 : 1;
  long long v = m * sign, r = 1;
  for (long long p = 2; p * p <= v; ++p) {
    while (v % p == 0) {
      v /= p;
      auto it = perm.find(p);
      r *= it == perm.end() ? p : it->second;
    }
  }
  if (v > 1) {
    auto it = perm.find(v);
    r *= it == perm.end() ? v : it->second;
  }
  return sign * r;
}

static std::map<long long, long long> invert_perm(const std::map<long long, long long>& p) {
  std::map<long long, long long> r;
  for (const auto& [a, b] : p) r[b] = a;
  return r;
}

// ---------------------------------------------------------------------------
// Bijection evaluation

static BijectionSpec bij_inverse(const BijectionSpec& s, const VarietySpec& var);

Element bij_apply(const BijectionSpec& s, const VarietySpec& var, const Element& a,
                  bool inverse) {
  switch (s.kind) {
    case BijectionSpec::Kind::Identity:
      return a;
    case BijectionSpec::Kind::MirrorWords: {
      if (var.kind == VarietyKind::FreeSemigroup) {
        auto w = std::get<Word>(a.v).letters;
        std::reverse(w.begin(), w.end());
        return {Word{std::move(w)}};
      }
      if (var.kind == VarietyKind::FreeGroup) {
        auto w = std::get<GroupWord>(a.v).letters;
        std::reverse(w.begin(), w.end());
        return {GroupWord{std::move(w)}};
      }
      throw error("word mirror applies to word elements");
    }
    case BijectionSpec::Kind::PrimeExponent: {
      std::vector<int> letters = element_letters(var, a);
      long long k = 0;
      for (int l : letters) k += l > 0 ? 1 : -1;
      long long t = prime_transport(inverse ? invert_perm(s.primes) : s.primes, k);
      std::vector<int> w(static_cast<size_t>(t < 0 ? -t : t), t < 0 ? -1 : 1);
      if (var.kind == VarietyKind::FreeSemigroup) return {Word{std::move(w)}};
      return {GroupWord{std::move(w)}};
    }
    case BijectionSpec::Kind::Twisted: {
      const Ring& ring = var.the_ring();
      if (!inverse) {
        Vec t = std::get<Vec>(a.v);
        for (auto& c : t.coords) c = s.ring_aut.apply(ring, c);
        return apply_endo(*s.sigma, Element{std::move(t)});
      }
      Element t = apply_endo(invert_automorphism(*s.sigma), a);
      Vec v = std::get<Vec>(t.v);
      RingAut rinv = s.ring_aut.inverse(ring);
      for (auto& c : v.coords) c = rinv.apply(ring, c);
      return {std::move(v)};
    }
    case BijectionSpec::Kind::Inversion:
      return invert(var, a);
    case BijectionSpec::Kind::FromAut:
      return main_permutation(inverse ? invert_endaut(*s.aut) : *s.aut, a);
    case BijectionSpec::Kind::Table: {
      for (const auto& [from, to] : s.table) {
        if (element_eq(var, inverse ? to : from, a)) return inverse ? from : to;
      }
      if (s.table_identity_fallback) return a;
      throw error("table domain exhausted");
    }
    case BijectionSpec::Kind::Composed: {
      Element r = a;
      if (!inverse) {
        for (auto it = s.parts.rbegin(); it != s.parts.rend(); ++it)
          r = bij_apply(*it, var, r, false);
      } else {
        for (const auto& p : s.parts) r = bij_apply(p, var, r, true);
      }
      return r;
    }
  }
  throw error("bad bijection spec");
}

static BijectionSpec bij_inverse(const BijectionSpec& s, const VarietySpec& var) {
  switch (s.kind) {
    case BijectionSpec::Kind::Identity:
    case BijectionSpec::Kind::MirrorWords:
    case BijectionSpec::Kind::Inversion:
      return s;
    case BijectionSpec::Kind::PrimeExponent:
      return BijectionSpec::prime_exponent(invert_perm(s.primes));
    case BijectionSpec::Kind::Twisted: {
      const Ring& ring = var.the_ring();
      RingAut rinv = s.ring_aut.inverse(ring);
      Mat m = endo_matrix(invert_automorphism(*s.sigma));
      for (auto& row : m)
        for (auto& c : row) c = rinv.apply(ring, c);
      return BijectionSpec::twisted(rinv, endo_from_matrix(var, m));
    }
    case BijectionSpec::Kind::FromAut:
      return BijectionSpec::from_aut(invert_endaut(*s.aut));
    case BijectionSpec::Kind::Table: {
      auto t = s.table;
      for (auto& [a, b] : t) std::swap(a, b);
      return BijectionSpec::lookup_table(std::move(t), s.table_identity_fallback);
    }
    case BijectionSpec::Kind::Composed: {
      std::vector<BijectionSpec> parts;
      for (auto it = s.parts.rbegin(); it != s.parts.rend(); ++it)
        parts.push_back(bij_inverse(*it, var));
      return BijectionSpec::composed(std::move(parts));
    }
  }
  throw error("bad bijection spec");
}

std::string bij_to_string(const BijectionSpec& s, const VarietySpec& var) {
  switch (s.kind) {
    case BijectionSpec::Kind::Identity: return "identity";
    case BijectionSpec::Kind::MirrorWords: return "mirror-words";
    case BijectionSpec::Kind::Inversion: return "inversion";
    case BijectionSpec::Kind::PrimeExponent: {
      std::string r = "prime-perm:";
      bool first = true;
      for (const auto& [a, b] : s.primes) {
        if (a > b) continue;
        if (!first) r += ",";
        r += std::to_string(a) + "<->" + std::to_string(b);
        first = false;
      }
      return r;
    }
    case BijectionSpec::Kind::Twisted:
      return "twisted:" + s.ring_aut.to_string() + ":" + print_endo(*s.sigma);
    case BijectionSpec::Kind::FromAut: return "main-perm(" + endaut_to_string(*s.aut) + ")";
    case BijectionSpec::Kind::Table: return "table[" + std::to_string(s.table.size()) + "]";
    case BijectionSpec::Kind::Composed: {
      std::string r = "compose(";
      for (size_t i = 0; i < s.parts.size(); ++i) {
        if (i) r += ",";
        r += bij_to_string(s.parts[i], var);
      }
      return r + ")";
    }
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Applying an End(F)-automorphism

static Mat mat_mul(const Ring& ring, const Mat& a, const Mat& b) {
  size_t n = a.size();
  Mat r(n, std::vector<Scalar>(n, ring.zero()));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k)
      for (size_t j = 0; j < n; ++j)
        r[i][j] = ring.add(r[i][j], ring.mul(a[i][k], b[k][j]));
  return r;
}

Endo apply_aut(const EndAut& phi, const Endo& nu) {
  const VarietySpec& var = phi.variety;
  check_same_variety(var, nu.variety);
  switch (phi.kind) {
    case EndAut::Kind::Inner: {
      Endo inv = invert_automorphism(*phi.sigma);
      return compose(compose(*phi.sigma, nu), inv);
    }
    case EndAut::Kind::Mirror: {
      std::vector<Element> imgs;
      for (const auto& img : nu.images) {
        auto w = std::get<Word>(img.v).letters;
        std::reverse(w.begin(), w.end());
        imgs.push_back({Word{std::move(w)}});
      }
      return make_endo(var, std::move(imgs));
    }
    case EndAut::Kind::PrimePerm: {
      BijectionSpec s = BijectionSpec::prime_exponent(phi.primes);
      return make_endo(var, {bij_apply(s, var, nu.images[0])});
    }
    case EndAut::Kind::SemiInner: {
      const Ring& ring = var.the_ring();
      Mat m = endo_matrix(nu);
      for (auto& row : m)
        for (auto& c : row) c = phi.ring_aut.apply(ring, c);
      Mat sig = endo_matrix(*phi.sigma);
      Mat siginv = endo_matrix(invert_automorphism(*phi.sigma));
      return endo_from_matrix(var, mat_mul(ring, mat_mul(ring, sig, m), siginv));
    }
    case EndAut::Kind::ConjBij: {
      std::vector<Element> imgs;
      for (int i = 1; i <= var.rank; ++i) {
        Element pre = bij_apply(phi.bij, var, generator(var, i), true);
        imgs.push_back(bij_apply(phi.bij, var, apply_endo(nu, pre), false));
      }
      return make_endo(var, std::move(imgs));
    }
    case EndAut::Kind::Compose: {
      Endo r = nu;
      for (auto it = phi.parts.rbegin(); it != phi.parts.rend(); ++it)
        r = apply_aut(*it, r);
      return r;
    }
  }
  throw error("bad endaut");
}

EndAut invert_endaut(const EndAut& phi) {
  const VarietySpec& var = phi.variety;
  switch (phi.kind) {
    case EndAut::Kind::Inner: return EndAut::inner(invert_automorphism(*phi.sigma));
    case EndAut::Kind::Mirror: return phi;
    case EndAut::Kind::PrimePerm:
      return EndAut::prime_perm(var, invert_perm(phi.primes));
    case EndAut::Kind::SemiInner: {
      const Ring& ring = var.the_ring();
      RingAut rinv = phi.ring_aut.inverse(ring);
      Mat m = endo_matrix(invert_automorphism(*phi.sigma));
      for (auto& row : m)
        for (auto& c : row) c = rinv.apply(ring, c);
      return EndAut::semi_inner(rinv, endo_from_matrix(var, m));
    }
    case EndAut::Kind::ConjBij:
      return EndAut::conj_bij(var, bij_inverse(phi.bij, var));
    case EndAut::Kind::Compose: {
      std::vector<EndAut> parts;
      for (auto it = phi.parts.rbegin(); it != phi.parts.rend(); ++it)
        parts.push_back(invert_endaut(*it));
      return EndAut::compose_of(std::move(parts));
    }
  }
  throw error("bad endaut");
}

std::string endaut_to_string(const EndAut& phi) {
  switch (phi.kind) {
    case EndAut::Kind::Inner:
      if (endo_eq(*phi.sigma, identity_endo(phi.variety))) return "identity";
      return "inner:" + print_endo(*phi.sigma);
    case EndAut::Kind::Mirror: return "mirror";
    case EndAut::Kind::PrimePerm:
      return bij_to_string(BijectionSpec::prime_exponent(phi.primes), phi.variety);
    case EndAut::Kind::SemiInner:
      return "semi-inner:" + phi.ring_aut.to_string() + ":" + print_endo(*phi.sigma);
    case EndAut::Kind::ConjBij:
      return "conj-bij:" + bij_to_string(phi.bij, phi.variety);
    case EndAut::Kind::Compose: {
      std::string r = "compose(";
      for (size_t i = 0; i < phi.parts.size(); ++i) {
        if (i) r += ",";
        r += endaut_to_string(phi.parts[i]);
      }
      return r + ")";
    }
  }
  return "?";
}

Element main_permutation(const EndAut& phi, const Element& a) {
  Endo image = apply_aut(phi, const_endo(phi.variety, a));
  for (int i = 1; i < phi.variety.rank; ++i) {
    if (!element_eq(phi.variety, image.images[0], image.images[i]))
      throw error("main permutation is index-dependent (malformed quasi-inner data)");
  }
  return image.images[0];
}

bool is_diagonal(const VarietySpec& var, const VectorTuple& u) {
  for (size_t i = 1; i < u.size(); ++i)
    if (!element_eq(var, u[0], u[i])) return false;
  return true;
}

VectorTuple vector_image(const EndAut& phi, const VectorTuple& u) {
  return apply_aut(phi, make_endo(phi.variety, u)).images;
}

// ---------------------------------------------------------------------------
// Checks

Verdict check_delta_condition(const EndAut& phi, const Endo& nu, const VectorTuple& u) {
  const VarietySpec& var = phi.variety;
  if (!is_diagonal(var, vector_image(phi, u)))
    throw error("delta-condition precondition: phi(u) must be diagonal");
  VectorTuple nu_u;
  for (const auto& c : u) nu_u.push_back(apply_endo(nu, c));
  VectorTuple img = vector_image(phi, nu_u);
  if (is_diagonal(var, img)) return Verdict::holds(1);
  Json w;
  w["image"] = Json::array();
  for (const auto& c : img) w["image"].push_back(print_element(var, c));
  return Verdict::fails(w, 1);
}

Verdict check_autoact(const EndAut& phi, const SampleSpec& samples) {
  const VarietySpec& var = phi.variety;
  EndAut inv = invert_endaut(phi);
  SplitMix64 rng(samples.seed);
  for (int t = 0; t < samples.count; ++t) {
    Endo nu = sample_endo(var, samples.max_size, rng);
    Element a = sample_element(var, samples.max_size, rng);
    Element lhs = apply_endo(apply_aut(phi, nu), a);
    VectorTuple d(var.rank, a);
    VectorTuple w = vector_image(inv, d);
    for (auto& c : w) c = apply_endo(nu, c);
    VectorTuple v = vector_image(phi, w);
    if (!is_diagonal(var, v) || !element_eq(var, lhs, v[0])) {
      Json j;
      j["nu"] = print_endo(nu);
      j["a"] = print_element(var, a);
      j["lhs"] = print_element(var, lhs);
      j["rhs"] = print_element(var, v[0]);
      return Verdict::fails(j, t + 1);
    }
  }
  return Verdict::holds(samples.count);
}

Verdict verify_endaut(const EndAut& phi, const SampleSpec& samples) {
  const VarietySpec& var = phi.variety;
  SplitMix64 rng(samples.seed);
  std::map<std::string, std::string> graph;
  for (int t = 0; t < samples.count; ++t) {
    Endo nu = sample_endo(var, samples.max_size, rng);
    Endo mu = sample_endo(var, samples.max_size, rng);
    Endo lhs = apply_aut(phi, compose(nu, mu));
    Endo rhs = compose(apply_aut(phi, nu), apply_aut(phi, mu));
    if (!endo_eq(lhs, rhs)) {
      Json j;
      j["nu"] = print_endo(nu);
      j["mu"] = print_endo(mu);
      j["phi(nu.mu)"] = print_endo(lhs);
      j["phi(nu).phi(mu)"] = print_endo(rhs);
      return Verdict::fails(j, t + 1);
    }
    for (const Endo& e : {nu, mu}) {
      std::string key = print_endo(apply_aut(phi, e));
      auto [it, fresh] = graph.emplace(key, print_endo(e));
      if (!fresh && it->second != print_endo(e)) {
        Json j;
        j["collision"] = key;
        j["first"] = it->second;
        j["second"] = print_endo(e);
        return Verdict::fails(j, t + 1);
      }
    }
  }
  return Verdict::holds(samples.count);
}

Verdict equal_in_effect(const EndAut& a, const EndAut& b, const SampleSpec& samples) {
  const VarietySpec& var = a.variety;
  check_same_variety(var, b.variety);
  EndAut b_inv = invert_endaut(b);
  SplitMix64 rng(samples.seed);
  bool direct_ok = true, comm_ok = true;
  Json witness;
  for (int t = 0; t < samples.count; ++t) {
    Endo nu = sample_endo(var, samples.max_size, rng);
    Endo ia = apply_aut(a, nu), ib = apply_aut(b, nu);
    if (direct_ok && !endo_eq(ia, ib)) {
      direct_ok = false;
      witness["direct_witness"] = print_endo(nu);
    }
    VectorTuple u;
    for (int i = 0; i < var.rank; ++i) u.push_back(sample_element(var, samples.max_size, rng));
    VectorTuple nu_u;
    for (const auto& c : u) nu_u.push_back(apply_endo(nu, c));
    VectorTuple lhs = vector_image(a, vector_image(b_inv, nu_u));
    VectorTuple rhs = vector_image(a, vector_image(b_inv, u));
    for (auto& c : rhs) c = apply_endo(nu, c);
    bool same = true;
    for (int i = 0; i < var.rank; ++i)
      if (!element_eq(var, lhs[i], rhs[i])) same = false;
    if (comm_ok && !same) {
      comm_ok = false;
      witness["commutation_witness"] = print_endo(nu);
    }
  }
  witness["direct_test"] = direct_ok ? "holds" : "fails";
  witness["commutation_test"] = comm_ok ? "holds" : "fails";
  witness["tests_agree"] = direct_ok == comm_ok;
  if (direct_ok) return Verdict::holds(samples.count, witness);
  return Verdict::fails(witness, samples.count);
}

// ---------------------------------------------------------------------------
// Quasi-innerness

std::vector<Endo> automorphism_candidates(const VarietySpec& var, long long budget) {
  std::vector<Endo> out;
  for (const auto& g : enumerate_P(var).items) out.push_back(g);
  if (var.kind == VarietyKind::FreeSemigroup) return out;
  if (var.kind == VarietyKind::FreeGroup ||
      var.kind == VarietyKind::FreeInverseSemigroup) {
    // signed permutations
    for (const auto& g : enumerate_P(var).items) {
      int n = var.rank;
      for (int mask = 1; mask < (1 << n); ++mask) {
        Endo e = g;
        for (int i = 0; i < n; ++i)
          if (mask & (1 << i)) e.images[i] = invert(var, e.images[i]);
        out.push_back(std::move(e));
        if (static_cast<long long>(out.size()) >= budget) return out;
      }
    }
    return out;
  }
  // modules: invertible matrices with entries in {-1,0,1}
  const Ring& ring = var.the_ring();
  int n = var.rank;
  std::vector<Scalar> range{ring.from_int(-1), ring.zero(), ring.one()};
  std::vector<Mat> mats{Mat{}};
  long long cells = static_cast<long long>(n) * n;
  std::vector<int> digits(cells, 0);
  while (true) {
    Mat m(n, std::vector<Scalar>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] = range[digits[i * n + j]];
    Endo e = endo_from_matrix(var, m);
    if (is_automorphism(e).ok()) out.push_back(std::move(e));
    if (static_cast<long long>(out.size()) >= budget) break;
    int pos = 0;
    while (pos < cells && ++digits[pos] == 3) digits[pos++] = 0;
    if (pos == cells) break;
  }
  return out;
}

Verdict check_potinner(const EndAut& phi, const PotinnerMode& mode) {
  const VarietySpec& var = phi.variety;
  EndoSet P = enumerate_P(var);
  std::vector<Endo> candidates =
      mode.exact_p ? P.items : automorphism_candidates(var, mode.budget);
  std::vector<Endo> phi_of_p;
  for (const auto& g : P.items) phi_of_p.push_back(apply_aut(phi, g));
  long long checked = 0;
  for (const auto& sigma : candidates) {
    Endo siginv = invert_automorphism(sigma);
    bool ok = true;
    for (size_t k = 0; k < P.items.size() && ok; ++k) {
      ++checked;
      ok = endo_eq(phi_of_p[k], compose(compose(sigma, P.items[k]), siginv));
    }
    if (ok) {
      Json w;
      w["condition"] = 2;
      w["sigma"] = print_endo(sigma);
      return Verdict::holds(checked, w);
    }
  }
  if (var.kind == VarietyKind::FreeSemigroup) {
    Json w;
    w["reason"] = "no conjugating automorphism exists (Aut(F) = P exhausted)";
    return Verdict::fails(w, checked);
  }
  // Condition (3): a basis among the columns of the matrix of Phi that is
  // permuted by Phi(P).
  int n = var.rank;
  std::vector<std::vector<Element>> rows;
  for (int i = 1; i <= n; ++i) {
    Endo mu = apply_aut(phi, basis_endo(var, i));
    rows.push_back(mu.images);
  }
  for (int j = 0; j < n; ++j) {
    std::vector<Element> col;
    for (int i = 0; i < n; ++i) col.push_back(rows[i][j]);
    Endo col_endo = make_endo(var, col);
    if (!is_automorphism(col_endo).ok()) continue;
    bool ok = true;
    for (size_t k = 0; k < P.items.size() && ok; ++k) {
      ++checked;
      std::vector<Element> image;
      for (const auto& x : col) image.push_back(apply_endo(phi_of_p[k], x));
      auto lt = [&](const Element& a, const Element& b) { return element_less(var, a, b); };
      std::vector<Element> s1 = col, s2 = image;
      std::sort(s1.begin(), s1.end(), lt);
      std::sort(s2.begin(), s2.end(), lt);
      for (int i = 0; i < n; ++i)
        if (!element_eq(var, s1[i], s2[i])) ok = false;
    }
    if (ok) {
      Json w;
      w["condition"] = 3;
      Json basis = Json::array();
      for (const auto& x : col) basis.push_back(print_element(var, x));
      w["basis"] = basis;
      w["column"] = j + 1;
      return Verdict::holds(checked, w);
    }
  }
  return Verdict::unknown(mode.budget, checked);
}

std::pair<Endo, EndAut> normalize(const EndAut& phi) {
  const VarietySpec& var = phi.variety;
  std::vector<Element> s_of_x;
  for (int i = 1; i <= var.rank; ++i)
    s_of_x.push_back(main_permutation(phi, generator(var, i)));
  Endo sigma = make_endo(var, std::move(s_of_x));
  if (!is_automorphism(sigma).ok())
    throw error("malformed quasi-inner data: s(X) is not a basis");
  EndAut gamma = EndAut::compose_of({EndAut::inner(invert_automorphism(sigma)), phi});
  return {std::move(sigma), std::move(gamma)};
}

Verdict check_subalgebra_preservation(const EndAut& phi, const std::vector<int>& subset,
                                      const SampleSpec& samples) {
  const VarietySpec& var = phi.variety;
  for (int i = 1; i <= var.rank; ++i) {
    Element x = generator(var, i);
    if (!element_eq(var, main_permutation(phi, x), x))
      throw error("subalgebra preservation requires a normalized automorphism");
  }
  SplitMix64 rng(samples.seed);
  for (int t = 0; t < samples.count; ++t) {
    // sample an element supported on the subset
    Element a = [&] {
      if (var.kind == VarietyKind::FreeModule) {
        Vec v = vec_zero(var.the_ring(), var.rank);
        for (int i : subset)
          v.coords[i - 1] = var.the_ring().from_int(rng.range(-samples.max_size, samples.max_size));
        return Element{std::move(v)};
      }
      int len = static_cast<int>(rng.range(1, samples.max_size));
      std::vector<int> w;
      for (int k = 0; k < len; ++k) {
        int l = subset[rng.below(subset.size())];
        if (var.has_inverse() && rng.below(2)) l = -l;
        w.push_back(l);
      }
      switch (var.kind) {
        case VarietyKind::FreeSemigroup: return Element{Word{w}};
        case VarietyKind::FreeGroup: return Element{GroupWord{free_reduce(w)}};
        default: return Element{munn_from_letters(w)};
      }
    }();
    Element b = main_permutation(phi, a);
    for (int l : element_support(var, b)) {
      if (std::find(subset.begin(), subset.end(), l) == subset.end()) {
        Json j;
        j["a"] = print_element(var, a);
        j["s(a)"] = print_element(var, b);
        j["escaping_letter"] = l;
        return Verdict::fails(j, t + 1);
      }
    }
  }
  return Verdict::holds(samples.count);
}

}  // namespace endofree
