#include "endofree/term.hpp"

#include <algorithm>
#include <cctype>

namespace endofree {

int term_arity(const Term& t) {
  int a = t.kind == Term::Kind::Var ? t.index : 0;
  for (const auto& k : t.kids) a = std::max(a, term_arity(k));
  return a;
}

namespace {

struct Parser {
  const std::string& text;
  const VarietySpec& var;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& msg) const {
    throw error("parse error at position " + std::to_string(pos) + ": " + msg);
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  long long parse_int() {
    skip_ws();
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      fail("expected integer");
    return std::stoll(text.substr(start, pos - start));
  }

  Scalar parse_scalar() {
    skip_ws();
    const Ring& ring = var.the_ring();
    size_t start = pos;
    if (pos < text.size() && text[pos] == 'g') {
      ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      return ring.parse(text.substr(start, pos - start));
    }
    long long num = parse_int();
    if (eat('/')) {
      long long den = parse_int();
      if (den <= 0) fail("denominator must be a positive integer");
      return ring.from_rational(Rational(num, den));
    }
    return ring.from_int(num);
  }

  Term parse_power(Term base) {
    if (!eat('^')) return base;
    long long e = parse_int();
    if (e == 1) return base;
    if (e == 0) {
      if (var.kind != VarietyKind::FreeGroup) fail("exponent 0: no identity in signature");
      return Term::ident();
    }
    bool neg = e < 0;
    if (neg && !var.has_inverse()) fail("inverse is not in this variety's signature");
    long long k = neg ? -e : e;
    Term unit = neg ? Term::inv(base) : base;
    Term r = unit;
    for (long long i = 1; i < k; ++i) r = Term::prod(std::move(r), unit);
    return r;
  }

  Term parse_atom() {
    skip_ws();
    if (pos >= text.size()) fail("unexpected end of input");
    char c = text[pos];
    if (c == '(') {
      ++pos;
      Term t = parse_element();
      if (!eat(')')) fail("expected ')'");
      return t;
    }
    if (c == 'x' || c == 'v') {
      ++pos;
      long long i = parse_int();
      if (i < 1) fail("indices are 1-based");
      if (c == 'x' && i > var.rank) fail("generator index exceeds rank");
      return c == 'x' ? Term::gen(static_cast<int>(i)) : Term::var(static_cast<int>(i));
    }
    if (c == 'e') {
      if (var.kind != VarietyKind::FreeGroup) fail("identity constant not in signature");
      ++pos;
      return Term::ident();
    }
    fail("expected atom");
  }

  Term parse_vector() {
    std::vector<Scalar> coords;
    coords.push_back(parse_scalar());
    while (eat(',')) coords.push_back(parse_scalar());
    if (!eat(']')) fail("expected ']'");
    return Term::vec_lit(std::move(coords));
  }

  Term parse_addend() {
    skip_ws();
    if (eat('[')) return parse_vector();
    char c = peek();
    if (c == 'x' || c == 'v' || c == '(') return parse_atom();
    Scalar k = parse_scalar();
    if (!eat('.')) fail("expected '.' after scalar");
    return Term::scalar_mul(std::move(k), parse_atom());
  }

  Term parse_element() {
    if (var.kind == VarietyKind::FreeModule) {
      Term t = parse_addend();
      while (eat('+')) t = Term::sum(std::move(t), parse_addend());
      return t;
    }
    Term t = parse_power(parse_atom());
    while (eat('*')) t = Term::prod(std::move(t), parse_power(parse_atom()));
    return t;
  }
};

void check_signature(const Term& t, const VarietySpec& var) {
  switch (t.kind) {
    case Term::Kind::Inv:
      if (!var.has_inverse()) throw error("inverse is not in this variety's signature");
      break;
    case Term::Kind::Prod:
      if (!var.has_product()) throw error("product is not in this variety's signature");
      break;
    case Term::Kind::Ident:
      if (var.kind != VarietyKind::FreeGroup)
        throw error("identity constant not in signature");
      break;
    case Term::Kind::Sum:
    case Term::Kind::ScalarMul:
    case Term::Kind::VecLit:
      if (var.kind != VarietyKind::FreeModule)
        throw error("module operation outside a module variety");
      break;
    default: break;
  }
  for (const auto& k : t.kids) check_signature(k, var);
}

}  // namespace

Term parse_term(const std::string& text, const VarietySpec& var) {
  Parser p{text, var};
  Term t = p.parse_element();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  check_signature(t, var);
  return t;
}

std::string print_term(const Term& t, const VarietySpec& var) {
  switch (t.kind) {
    case Term::Kind::Var: return "v" + std::to_string(t.index);
    case Term::Kind::Gen: return "x" + std::to_string(t.index);
    case Term::Kind::Ident: return "e";
    case Term::Kind::Prod:
      return print_term(t.kids[0], var) + "*" + print_term(t.kids[1], var);
    case Term::Kind::Inv: {
      const Term& c = t.kids[0];
      bool atom = c.kind == Term::Kind::Var || c.kind == Term::Kind::Gen;
      std::string inner = print_term(c, var);
      return (atom ? inner : "(" + inner + ")") + "^-1";
    }
    case Term::Kind::Sum:
      return print_term(t.kids[0], var) + "+" + print_term(t.kids[1], var);
    case Term::Kind::ScalarMul: {
      const Term& c = t.kids[0];
      bool atom = c.kind == Term::Kind::Var || c.kind == Term::Kind::Gen;
      std::string inner = print_term(c, var);
      return var.the_ring().to_string(t.scalar) + "." + (atom ? inner : "(" + inner + ")");
    }
    case Term::Kind::VecLit: {
      std::string s = "[";
      for (size_t i = 0; i < t.vec.size(); ++i) {
        if (i) s += ",";
        s += var.the_ring().to_string(t.vec[i]);
      }
      return s + "]";
    }
  }
  throw error("bad term");
}

Element substitute(const Term& t, const VarietySpec& var,
                   const std::vector<Element>& assignment) {
  switch (t.kind) {
    case Term::Kind::Var:
      if (t.index > static_cast<int>(assignment.size()))
        throw error("assignment shorter than term arity");
      return assignment[t.index - 1];
    case Term::Kind::Gen: return generator(var, t.index);
    case Term::Kind::Ident: return identity_element(var);
    case Term::Kind::Prod:
      return multiply(var, substitute(t.kids[0], var, assignment),
                      substitute(t.kids[1], var, assignment));
    case Term::Kind::Inv: return invert(var, substitute(t.kids[0], var, assignment));
    case Term::Kind::Sum: {
      Element a = substitute(t.kids[0], var, assignment);
      Element b = substitute(t.kids[1], var, assignment);
      return {vec_add(var.the_ring(), std::get<Vec>(a.v), std::get<Vec>(b.v))};
    }
    case Term::Kind::ScalarMul: {
      Element a = substitute(t.kids[0], var, assignment);
      return {vec_scale(var.the_ring(), t.scalar, std::get<Vec>(a.v))};
    }
    case Term::Kind::VecLit: {
      if (static_cast<int>(t.vec.size()) != var.rank)
        throw error("vector literal length differs from rank");
      return {Vec{t.vec}};
    }
  }
  throw error("bad term");
}

Term element_to_term(const VarietySpec& var, const Element& a) {
  return parse_term(print_element(var, a), var);
}

}  // namespace endofree
