#include "endofree/element.hpp"

#include <algorithm>
#include <set>

namespace endofree {

bool word_lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  for (size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (letter_key(a[i]) != letter_key(b[i])) return letter_key(a[i]) < letter_key(b[i]);
  }
  return a.size() < b.size();
}

static bool word_size_lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return word_lex_less(a, b);
}

std::vector<int> invert_letters(const std::vector<int>& w) {
  std::vector<int> r(w.rbegin(), w.rend());
  for (int& l : r) l = -l;
  return r;
}

std::vector<int> reduce_concat(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r = a;
  for (int l : b) {
    if (!r.empty() && r.back() == -l)
      r.pop_back();
    else
      r.push_back(l);
  }
  return r;
}

std::vector<int> free_reduce(const std::vector<int>& w) {
  return reduce_concat({}, w);
}

// ---------------------------------------------------------------------------
// Munn trees

static void munn_normalize(Munn& m) {
  std::sort(m.verts.begin(), m.verts.end(), word_size_lex_less);
  m.verts.erase(std::unique(m.verts.begin(), m.verts.end()), m.verts.end());
}

Munn munn_from_letters(const std::vector<int>& letters) {
  if (letters.empty()) throw error("empty word is not an inverse-semigroup element");
  Munn m;
  std::vector<int> cur;
  m.verts.push_back(cur);
  for (int l : letters) {
    cur = reduce_concat(cur, {l});
    m.verts.push_back(cur);
  }
  m.terminus = cur;
  munn_normalize(m);
  return m;
}

Munn munn_multiply(const Munn& a, const Munn& b) {
  Munn m;
  m.verts = a.verts;
  for (const auto& v : b.verts) m.verts.push_back(reduce_concat(a.terminus, v));
  m.terminus = reduce_concat(a.terminus, b.terminus);
  munn_normalize(m);
  return m;
}

Munn munn_invert(const Munn& a) {
  Munn m;
  std::vector<int> t = invert_letters(a.terminus);
  for (const auto& v : a.verts) m.verts.push_back(reduce_concat(t, v));
  m.terminus = t;
  munn_normalize(m);
  return m;
}

bool munn_is_idempotent(const Munn& a) { return a.terminus.empty(); }

// Children of v: vertices one longer that extend v.
static std::vector<const std::vector<int>*> munn_children(const Munn& m,
                                                          const std::vector<int>& v) {
  std::vector<const std::vector<int>*> out;
  for (const auto& w : m.verts) {
    if (w.size() == v.size() + 1 && std::equal(v.begin(), v.end(), w.begin()))
      out.push_back(&w);
  }
  return out;  // verts are sorted, so children come out in letter order
}

static void munn_full_tour(const Munn& m, const std::vector<int>& v,
                           std::vector<int>& out) {
  for (const auto* c : munn_children(m, v)) {
    out.push_back(c->back());
    munn_full_tour(m, *c, out);
    out.push_back(-c->back());
  }
}

// Minimal word: traverse off-path subtrees with full returns, walk the
// terminus path once, visiting off-path children first at every vertex.
std::vector<int> munn_min_word(const Munn& a) {
  std::vector<int> out;
  std::vector<int> v;
  while (true) {
    bool on_path = v.size() < a.terminus.size();
    std::vector<int> next;
    if (on_path) next.assign(a.terminus.begin(), a.terminus.begin() + v.size() + 1);
    for (const auto* c : munn_children(a, v)) {
      if (on_path && *c == next) continue;
      out.push_back(c->back());
      munn_full_tour(a, *c, out);
      out.push_back(-c->back());
    }
    if (!on_path) break;
    out.push_back(next.back());
    v = next;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Module vectors

Vec vec_zero(const Ring& ring, int n) {
  Vec v;
  v.coords.assign(n, ring.zero());
  return v;
}

Vec vec_add(const Ring& ring, const Vec& a, const Vec& b) {
  if (a.coords.size() != b.coords.size()) throw error("vector length mismatch");
  Vec r;
  for (size_t i = 0; i < a.coords.size(); ++i)
    r.coords.push_back(ring.add(a.coords[i], b.coords[i]));
  return r;
}

Vec vec_scale(const Ring& ring, const Scalar& k, const Vec& a) {
  Vec r;
  for (const auto& c : a.coords) r.coords.push_back(ring.mul(k, c));
  return r;
}

// ---------------------------------------------------------------------------
// Element operations

Element generator(const VarietySpec& var, int i) {
  if (i < 1 || i > var.rank) throw error("generator index out of range");
  switch (var.kind) {
    case VarietyKind::FreeSemigroup: return {Word{{i}}};
    case VarietyKind::FreeGroup: return {GroupWord{{i}}};
    case VarietyKind::FreeInverseSemigroup: return {munn_from_letters({i})};
    case VarietyKind::FreeModule: {
      Vec v = vec_zero(var.the_ring(), var.rank);
      v.coords[i - 1] = var.the_ring().one();
      return {std::move(v)};
    }
  }
  throw error("bad variety");
}

Element identity_element(const VarietySpec& var) {
  if (var.kind == VarietyKind::FreeGroup) return {GroupWord{{}}};
  if (var.kind == VarietyKind::FreeModule)
    return {vec_zero(var.the_ring(), var.rank)};
  throw error("variety has no identity constant");
}

Element multiply(const VarietySpec& var, const Element& a, const Element& b) {
  switch (var.kind) {
    case VarietyKind::FreeSemigroup: {
      Word r = std::get<Word>(a.v);
      const auto& w = std::get<Word>(b.v).letters;
      r.letters.insert(r.letters.end(), w.begin(), w.end());
      return {std::move(r)};
    }
    case VarietyKind::FreeGroup:
      return {GroupWord{
          reduce_concat(std::get<GroupWord>(a.v).letters, std::get<GroupWord>(b.v).letters)}};
    case VarietyKind::FreeInverseSemigroup:
      return {munn_multiply(std::get<Munn>(a.v), std::get<Munn>(b.v))};
    case VarietyKind::FreeModule:
      throw error("free module has no binary product");
  }
  throw error("bad variety");
}

Element invert(const VarietySpec& var, const Element& a) {
  switch (var.kind) {
    case VarietyKind::FreeGroup:
      return {GroupWord{invert_letters(std::get<GroupWord>(a.v).letters)}};
    case VarietyKind::FreeInverseSemigroup:
      return {munn_invert(std::get<Munn>(a.v))};
    default:
      throw error("inversion is not in this variety's signature");
  }
}

bool element_eq(const VarietySpec& var, const Element& a, const Element& b) {
  if (var.kind == VarietyKind::FreeModule) {
    const Ring& ring = var.the_ring();
    const auto& x = std::get<Vec>(a.v).coords;
    const auto& y = std::get<Vec>(b.v).coords;
    if (x.size() != y.size()) return false;
    for (size_t i = 0; i < x.size(); ++i)
      if (!ring.equal(x[i], y[i])) return false;
    return true;
  }
  return a.v == b.v;
}

long long element_size(const VarietySpec& var, const Element& a) {
  switch (var.kind) {
    case VarietyKind::FreeSemigroup:
      return static_cast<long long>(std::get<Word>(a.v).letters.size());
    case VarietyKind::FreeGroup:
      return static_cast<long long>(std::get<GroupWord>(a.v).letters.size());
    case VarietyKind::FreeInverseSemigroup: {
      const Munn& m = std::get<Munn>(a.v);
      return 2 * (static_cast<long long>(m.verts.size()) - 1) -
             static_cast<long long>(m.terminus.size());
    }
    case VarietyKind::FreeModule: {
      // max |coordinate| rounded up; used for (size, lex) ordering only
      const Ring& ring = var.the_ring();
      if (ring.kind() == RingKind::GaloisField) return 0;
      Rational mx = 0;
      for (const auto& c : std::get<Vec>(a.v).coords) {
        Rational v = c.q < 0 ? Rational(-c.q) : c.q;
        if (v > mx) mx = v;
      }
      Int num = numerator(mx), den = denominator(mx);
      return static_cast<long long>((num + den - 1) / den);
    }
  }
  throw error("bad variety");
}

bool element_less(const VarietySpec& var, const Element& a, const Element& b) {
  long long sa = element_size(var, a), sb = element_size(var, b);
  if (sa != sb) return sa < sb;
  if (var.kind == VarietyKind::FreeModule) {
    const Ring& ring = var.the_ring();
    const auto& x = std::get<Vec>(a.v).coords;
    const auto& y = std::get<Vec>(b.v).coords;
    for (size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
      if (!ring.equal(x[i], y[i])) return ring.less(x[i], y[i]);
    }
    return x.size() < y.size();
  }
  return word_lex_less(element_letters(var, a), element_letters(var, b));
}

std::vector<int> element_letters(const VarietySpec& var, const Element& a) {
  switch (var.kind) {
    case VarietyKind::FreeSemigroup: return std::get<Word>(a.v).letters;
    case VarietyKind::FreeGroup: return std::get<GroupWord>(a.v).letters;
    case VarietyKind::FreeInverseSemigroup: return munn_min_word(std::get<Munn>(a.v));
    default: throw error("module elements have no letter form");
  }
}

std::vector<int> element_support(const VarietySpec& var, const Element& a) {
  std::set<int> s;
  if (var.kind == VarietyKind::FreeInverseSemigroup) {
    for (const auto& v : std::get<Munn>(a.v).verts)
      for (int l : v) s.insert(l < 0 ? -l : l);
  } else {
    for (int l : element_letters(var, a)) s.insert(l < 0 ? -l : l);
  }
  return {s.begin(), s.end()};
}

std::string print_element(const VarietySpec& var, const Element& a) {
  if (var.kind == VarietyKind::FreeModule) {
    const Ring& ring = var.the_ring();
    std::string s = "[";
    const auto& coords = std::get<Vec>(a.v).coords;
    for (size_t i = 0; i < coords.size(); ++i) {
      if (i) s += ",";
      s += ring.to_string(coords[i]);
    }
    return s + "]";
  }
  std::vector<int> letters = element_letters(var, a);
  if (letters.empty()) return "e";
  std::string s;
  for (size_t i = 0; i < letters.size();) {
    size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    if (!s.empty()) s += "*";
    int l = letters[i];
    long long exp = static_cast<long long>(j - i) * (l < 0 ? -1 : 1);
    s += "x" + std::to_string(l < 0 ? -l : l);
    if (exp != 1) s += "^" + std::to_string(exp);
    i = j;
  }
  return s;
}

Constants constants(const VarietySpec& var) {
  Constants k;
  switch (var.kind) {
    case VarietyKind::FreeSemigroup:
    case VarietyKind::FreeInverseSemigroup:
      k.finite = true;
      k.contains = [](const Element&) { return false; };
      break;
    case VarietyKind::FreeGroup: {
      k.finite = true;
      k.list = {identity_element(var)};
      k.contains = [](const Element& e) {
        return std::get<GroupWord>(e.v).letters.empty();
      };
      break;
    }
    case VarietyKind::FreeModule: {
      k.finite = true;
      k.list = {identity_element(var)};
      Ring ring = var.the_ring();
      k.contains = [ring](const Element& e) {
        for (const auto& c : std::get<Vec>(e.v).coords)
          if (!ring.is_zero(c)) return false;
        return true;
      };
      break;
    }
  }
  return k;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

void gen_words(int n, int len, bool signs, std::vector<int>& cur,
               std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  for (int i = 1; i <= n; ++i) {
    for (int sign : {1, -1}) {
      if (sign < 0 && !signs) continue;
      cur.push_back(sign * i);
      gen_words(n, len, signs, cur, out);
      cur.pop_back();
    }
  }
}

void gen_reduced(int n, int len, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
  out.push_back(cur);
  if (static_cast<int>(cur.size()) == len) return;
  for (int i = 1; i <= n; ++i) {
    for (int sign : {1, -1}) {
      int l = sign * i;
      if (!cur.empty() && cur.back() == -l) continue;
      cur.push_back(l);
      gen_reduced(n, len, cur, out);
      cur.pop_back();
    }
  }
}

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

std::vector<Element> enumerate_elements(const VarietySpec& var, int bound,
                                        long long budget) {
  if (bound < 1) throw error("enumeration bound must be >= 1");
  int n = var.rank;
  std::vector<Element> out;
  switch (var.kind) {
    case VarietyKind::FreeSemigroup: {
      long long total = 0;
      for (int l = 1; l <= bound; ++l) total += ipow(n, l);
      if (total > budget) throw error("enumeration bound exceeds budget");
      for (int len = 1; len <= bound; ++len) {
        std::vector<std::vector<int>> ws;
        std::vector<int> cur;
        gen_words(n, len, false, cur, ws);
        for (auto& w : ws) out.push_back({Word{std::move(w)}});
      }
      return out;
    }
    case VarietyKind::FreeGroup: {
      if (ipow(2 * n, bound) > budget) throw error("enumeration bound exceeds budget");
      std::vector<std::vector<int>> ws;
      std::vector<int> cur;
      gen_reduced(n, bound, cur, ws);
      std::sort(ws.begin(), ws.end(), word_size_lex_less);
      for (auto& w : ws) out.push_back({GroupWord{std::move(w)}});
      return out;
    }
    case VarietyKind::FreeInverseSemigroup: {
      long long total = 0;
      for (int l = 1; l <= bound; ++l) total += ipow(2 * n, l);
      if (total > budget) throw error("enumeration bound exceeds budget");
      std::vector<Element> all;
      for (int len = 1; len <= bound; ++len) {
        std::vector<std::vector<int>> ws;
        std::vector<int> cur;
        gen_words(n, len, true, cur, ws);
        for (auto& w : ws) all.push_back({munn_from_letters(w)});
      }
      std::sort(all.begin(), all.end(),
                [&](const Element& a, const Element& b) { return element_less(var, a, b); });
      for (auto& e : all) {
        if (out.empty() || !element_eq(var, out.back(), e)) out.push_back(std::move(e));
      }
      return out;
    }
    case VarietyKind::FreeModule: {
      const Ring& ring = var.the_ring();
      std::vector<Scalar> range;
      if (ring.kind() == RingKind::GaloisField) {
        long long count = ipow(ring.p(), ring.m());
        for (long long v = 0; v < count; ++v)
          range.push_back(ring.parse("g" + std::to_string(v)));
      } else {
        for (long long v = -bound; v <= bound; ++v) range.push_back(ring.from_int(v));
      }
      if (ipow(static_cast<long long>(range.size()), n) > budget)
        throw error("enumeration bound exceeds budget");
      std::vector<Vec> vecs = {Vec{}};
      for (int i = 0; i < n; ++i) {
        std::vector<Vec> next;
        for (const auto& v : vecs) {
          for (const auto& s : range) {
            Vec w = v;
            w.coords.push_back(s);
            next.push_back(std::move(w));
          }
        }
        vecs = std::move(next);
      }
      for (auto& v : vecs) out.push_back({std::move(v)});
      std::sort(out.begin(), out.end(),
                [&](const Element& a, const Element& b) { return element_less(var, a, b); });
      return out;
    }
  }
  throw error("bad variety");
}

}  // namespace endofree
