#include "endofree/basis_matrix.hpp"

#include <algorithm>
#include <numeric>

namespace endofree {

BasisMatrix matrix_of(const EndAut& phi) {
  const VarietySpec& var = phi.variety;
  BasisMatrix m{var, {}, std::make_shared<EndAut>(phi)};
  for (int i = 1; i <= var.rank; ++i)
    m.entries.push_back(apply_aut(phi, basis_endo(var, i)).images);
  return m;
}

std::string print_matrix(const BasisMatrix& m) {
  std::string s;
  for (size_t i = 0; i < m.entries.size(); ++i) {
    if (i) s += ";";
    for (size_t j = 0; j < m.entries[i].size(); ++j) {
      if (j) s += ",";
      s += print_element(m.variety, m.entries[i][j]);
    }
  }
  return s;
}

std::string print_matrix_table(const BasisMatrix& m) {
  int n = m.variety.rank;
  std::vector<std::vector<std::string>> cells(n, std::vector<std::string>(n));
  std::vector<size_t> width(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cells[i][j] = print_element(m.variety, m.entries[i][j]);
      width[j] = std::max(width[j], cells[i][j].size());
    }
  std::string s;
  for (int i = 0; i < n; ++i) {
    s += "[ ";
    for (int j = 0; j < n; ++j) {
      s += cells[i][j];
      s += std::string(width[j] - cells[i][j].size() + (j + 1 < n ? 2 : 0), ' ');
    }
    s += " ]\n";
  }
  return s;
}

BasisMatrix parse_matrix(const VarietySpec& var, const std::string& text) {
  BasisMatrix m{var, {}, {}};
  size_t start = 0;
  while (start <= text.size()) {
    size_t semi = text.find(';', start);
    std::string row = text.substr(start, semi == std::string::npos ? semi : semi - start);
    m.entries.push_back(parse_endo(var, [&] {
                          std::string r = row;
                          std::replace(r.begin(), r.end(), ',', ';');
                          return r;
                        }())
                            .images);
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  if (static_cast<int>(m.entries.size()) != var.rank)
    throw error("matrix row count differs from rank");
  return m;
}

Verdict check_row_permutation(const BasisMatrix& m, long long budget) {
  const VarietySpec& var = m.variety;
  int n = var.rank;
  std::vector<Endo> candidates = automorphism_candidates(var, budget);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long long checked = 0;
  bool all_exact = var.kind == VarietyKind::FreeSemigroup;
  bool any_missing = false;
  do {
    bool found = false;
    for (const auto& g : candidates) {
      ++checked;
      bool ok = true;
      for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j)
          ok = element_eq(var, apply_endo(g, m.entries[i][j]), m.entries[perm[i]][j]);
      if (ok) {
        found = true;
        break;
      }
    }
    if (!found) {
      if (all_exact) {
        Json w;
        w["permutation"] = perm;
        w["reason"] = "no automorphism realizes this row permutation (Aut = P exhausted)";
        return Verdict::fails(w, checked);
      }
      any_missing = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (any_missing) return Verdict::unknown(budget, checked);
  return Verdict::holds(checked);
}

Verdict check_row_projection(const BasisMatrix& m) {
  const VarietySpec& var = m.variety;
  int n = var.rank;
  long long checked = 0;
  for (int i = 0; i < n; ++i) {
    Endo mu_i = make_endo(var, m.entries[i]);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        ++checked;
        if (!element_eq(var, apply_endo(mu_i, m.entries[j][k]), m.entries[i][k])) {
          Json w;
          w["i"] = i + 1;
          w["j"] = j + 1;
          w["k"] = k + 1;
          w["mu_i(u_jk)"] = print_element(var, apply_endo(mu_i, m.entries[j][k]));
          w["u_ik"] = print_element(var, m.entries[i][k]);
          return Verdict::fails(w, checked);
        }
      }
  }
  return Verdict::holds(checked);
}

std::vector<std::vector<Endo>> default_interpolation_tuples(const VarietySpec& var) {
  std::vector<Endo> pool{identity_endo(var)};
  for (int i = 1; i <= var.rank; ++i) pool.push_back(basis_endo(var, i));
  for (const auto& g : enumerate_P(var).items) {
    bool dup = false;
    for (const auto& e : pool) dup = dup || endo_eq(e, g);
    if (!dup) pool.push_back(g);
  }
  std::vector<std::vector<Endo>> tuples;
  std::vector<size_t> idx(var.rank, 0);
  while (true) {
    std::vector<Endo> t;
    for (int i = 0; i < var.rank; ++i) t.push_back(pool[idx[i]]);
    tuples.push_back(std::move(t));
    int pos = 0;
    while (pos < var.rank && ++idx[pos] == pool.size()) idx[pos++] = 0;
    if (pos == var.rank) break;
  }
  return tuples;
}

namespace {

// Does alpha satisfy alpha(u_{i,j}) = alpha_i(u_{i,j}) for all i,j?
bool interpolates(const BasisMatrix& m, const std::vector<Endo>& tuple, const Endo& alpha) {
  int n = m.variety.rank;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!element_eq(m.variety, apply_endo(alpha, m.entries[i][j]),
                      apply_endo(tuple[i], m.entries[i][j])))
        return false;
  return true;
}

}  // namespace

Verdict check_interpolation(const BasisMatrix& m,
                            const std::vector<std::vector<Endo>>& tuples,
                            long long budget) {
  const VarietySpec& var = m.variety;
  int n = var.rank;
  std::vector<int> bases = basis_columns(m);
  long long checked = 0;
  bool any_unknown = false;
  for (size_t t = 0; t < tuples.size(); ++t) {
    const auto& tuple = tuples[t];
    if (static_cast<int>(tuple.size()) != n) throw error("interpolation tuple arity mismatch");
    if (!bases.empty()) {
      int j = bases.front() - 1;
      // alpha is pinned by its values on the basis column: alpha(u_{i,j}) must
      // equal alpha_i(u_{i,j}), so alpha = targets o beta^{-1}.
      std::vector<Element> targets;
      for (int i = 0; i < n; ++i)
        targets.push_back(apply_endo(tuple[i], m.entries[i][j]));
      Endo beta_inv = invert_automorphism(column_endo(m, j + 1));
      Endo alpha = compose(make_endo(var, targets), beta_inv);
      ++checked;
      if (!interpolates(m, tuple, alpha)) {
        Json w;
        w["tuple_index"] = t;
        w["alpha_candidate"] = print_endo(alpha);
        w["reason"] = "the interpolation constraints are inconsistent";
        return Verdict::fails(w, checked);
      }
      continue;  // uniqueness is exact: values on a basis determine alpha
    }
    // No basis column: bounded search over small image tuples.
    bool found = false;
    for (int bound = 1; bound <= 3 && !found && checked < budget; ++bound) {
      std::vector<Element> pool = enumerate_elements(var, bound);
      std::vector<size_t> idx(n, 0);
      while (checked < budget) {
        std::vector<Element> imgs;
        for (int i = 0; i < n; ++i) imgs.push_back(pool[idx[i]]);
        ++checked;
        if (interpolates(m, tuple, make_endo(var, imgs))) {
          found = true;
          break;
        }
        int pos = 0;
        while (pos < n && ++idx[pos] == pool.size()) idx[pos++] = 0;
        if (pos == n) break;
      }
    }
    if (!found) any_unknown = true;
  }
  if (any_unknown) return Verdict::unknown(budget, checked);
  return Verdict::holds(checked);
}

std::pair<Verdict, Verdict> structural_properties(const BasisMatrix& m) {
  const VarietySpec& var = m.variety;
  int n = var.rank;
  Constants k = constants(var);
  Verdict rows = Verdict::holds(n);
  for (int i = 0; i < n; ++i) {
    bool all_const = true;
    for (int j = 0; j < n; ++j) all_const = all_const && k.contains(m.entries[i][j]);
    if (all_const) {
      Json w;
      w["constant_row"] = i + 1;
      rows = Verdict::fails(w, n);
      break;
    }
  }
  Verdict cols;
  int witness_col = 0;
  for (int j = 0; j < n && witness_col == 0; ++j) {
    bool distinct = true;
    for (int a = 0; a < n && distinct; ++a)
      for (int b = a + 1; b < n && distinct; ++b)
        distinct = !element_eq(var, m.entries[a][j], m.entries[b][j]);
    if (distinct) witness_col = j + 1;
  }
  if (witness_col) {
    Json w;
    w["distinct_column"] = witness_col;
    cols = Verdict::holds(n, w);
  } else {
    Json w;
    w["reason"] = "every column contains two equal entries";
    cols = Verdict::fails(w, n);
  }
  return {rows, cols};
}

std::vector<int> basis_columns(const BasisMatrix& m) {
  std::vector<int> out;
  for (int j = 1; j <= m.variety.rank; ++j)
    if (is_automorphism(column_endo(m, j)).ok()) out.push_back(j);
  return out;
}

Endo column_endo(const BasisMatrix& m, int col) {
  if (col < 1 || col > m.variety.rank) throw error("column index out of range");
  std::vector<Element> imgs;
  for (int i = 0; i < m.variety.rank; ++i) imgs.push_back(m.entries[i][col - 1]);
  return make_endo(m.variety, std::move(imgs));
}

namespace {

// Reads a one-letter element (word over x1, or a*x1) as the pseudo-diagonal
// endomorphism acting by that word at every generator.
Endo pseudo_diagonal_endo(const VarietySpec& var, const Element& w) {
  int n = var.rank;
  std::vector<Element> imgs;
  if (var.kind == VarietyKind::FreeModule) {
    const Ring& ring = var.the_ring();
    const auto& coords = std::get<Vec>(w.v).coords;
    for (size_t r = 1; r < coords.size(); ++r)
      if (!ring.is_zero(coords[r])) throw error("element is not a multiple of x1");
    for (int i = 0; i < n; ++i) {
      Vec v = vec_zero(ring, n);
      v.coords[i] = coords[0];
      imgs.push_back({std::move(v)});
    }
    return make_endo(var, std::move(imgs));
  }
  std::vector<int> letters = element_letters(var, w);
  for (int l : letters)
    if (std::abs(l) != 1) throw error("element is not built from x1 alone");
  for (int i = 1; i <= n; ++i) {
    std::vector<int> relabeled;
    for (int l : letters) relabeled.push_back(l > 0 ? i : -i);
    switch (var.kind) {
      case VarietyKind::FreeSemigroup: imgs.push_back({Word{relabeled}}); break;
      case VarietyKind::FreeGroup: imgs.push_back({GroupWord{free_reduce(relabeled)}}); break;
      default: imgs.push_back({munn_from_letters(relabeled)}); break;
    }
  }
  return make_endo(var, std::move(imgs));
}

}  // namespace

CrossComposite cross_composites(const EndAut& phi, int k, int m) {
  const VarietySpec& var = phi.variety;
  BasisMatrix mat = matrix_of(phi);
  BasisMatrix mat_inv = matrix_of(invert_endaut(phi));
  Endo sigma_m = column_endo(mat, m);
  Endo tau_k = column_endo(mat_inv, k);
  Endo composite = compose(apply_aut(phi, tau_k), sigma_m);
  for (int i = 1; i <= var.rank; ++i) {
    Element expected = apply_endo(basis_endo(var, i), mat.at(k, m));
    if (!element_eq(var, composite.images[i - 1], expected))
      throw error("cross composite does not match nu_i(u_km)");
  }
  return {composite, is_pseudo_diagonal(composite), is_constant_defined(composite)};
}

NonconstantTriple find_nonconstant_triple(const EndAut& phi) {
  const VarietySpec& var = phi.variety;
  int n = var.rank;
  BasisMatrix u = matrix_of(phi);
  BasisMatrix v = matrix_of(invert_endaut(phi));
  Constants kset = constants(var);
  Endo nu1 = basis_endo(var, 1);
  for (int m = 1; m <= n; ++m)
    for (int k = 1; k <= n; ++k) {
      if (kset.contains(apply_endo(nu1, u.at(k, m)))) continue;
      for (int t = 1; t <= n; ++t)
        if (!kset.contains(apply_endo(nu1, v.at(m, t)))) return {m, k, t};
    }
  throw error("no nonconstant triple exists (malformed automorphism data)");
}

Verdict two_matrix_criterion(const EndAut& phi) {
  const VarietySpec& var = phi.variety;
  NonconstantTriple triple = find_nonconstant_triple(phi);
  BasisMatrix u = matrix_of(phi);
  BasisMatrix v = matrix_of(invert_endaut(phi));
  Endo nu1 = basis_endo(var, 1);
  Element w1 = apply_endo(nu1, u.at(triple.k, triple.m));
  Element w2 = apply_endo(nu1, v.at(triple.m, triple.t));
  Json detail;
  detail["m"] = triple.m;
  detail["k"] = triple.k;
  detail["t"] = triple.t;
  detail["word_u"] = print_element(var, w1);
  detail["word_v"] = print_element(var, w2);
  for (const auto& [name, w] :
       std::vector<std::pair<const char*, Element>>{{"word_u", w1}, {"word_v", w2}}) {
    Verdict aut = is_automorphism(pseudo_diagonal_endo(var, w));
    if (!aut.ok()) {
      detail["failed_word"] = name;
      detail["reason"] = "pseudo-diagonal endomorphism is not an automorphism";
      return Verdict::fails(detail, 2);
    }
  }
  std::vector<int> cols = basis_columns(u);
  if (cols.empty()) {
    detail["reason"] =
        "criterion holds but the matrix has no basis column (inconsistent)";
    return Verdict::fails(detail, 2);
  }
  detail["basis_columns"] = cols;
  return Verdict::holds(2, detail);
}

}  // namespace endofree
