#pragma once

#include <functional>
#include <variant>
#include <vector>

#include "endofree/variety.hpp"

namespace endofree {

// Letters are signed one-based generator indices: +i is x_i, -i is x_i^-1.
// Letter order throughout: x1 < x1^-1 < x2 < x2^-1 < ...
inline int letter_key(int l) { return 2 * (l < 0 ? -l : l) + (l < 0 ? 1 : 0); }
bool word_lex_less(const std::vector<int>& a, const std::vector<int>& b);

std::vector<int> invert_letters(const std::vector<int>& w);
// Free reduction of a concatenation of two already reduced words.
std::vector<int> reduce_concat(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> free_reduce(const std::vector<int>& w);

/// Nonempty positive-letter word (free semigroup element).
struct Word {
  std::vector<int> letters;
  bool operator==(const Word&) const = default;
};

/// Freely reduced signed word (free group element); empty = identity.
struct GroupWord {
  std::vector<int> letters;
  bool operator==(const GroupWord&) const = default;
};

/// Munn tree: a finite prefix-closed set of reduced words (the vertices of
/// a subtree of the free-group Cayley tree containing the root), plus a
/// terminus vertex. Vertices are kept sorted by (length, letter order) so
/// equality is structural.
struct Munn {
  std::vector<std::vector<int>> verts;
  std::vector<int> terminus;
  bool operator==(const Munn&) const = default;
};

/// Coefficient vector (free module element).
struct Vec {
  std::vector<Scalar> coords;
  bool operator==(const Vec&) const = default;
};

struct Element {
  std::variant<Word, GroupWord, Munn, Vec> v;
};

Element generator(const VarietySpec& var, int i);
Element identity_element(const VarietySpec& var);  // group: empty word; module: zero

Element multiply(const VarietySpec& var, const Element& a, const Element& b);
Element invert(const VarietySpec& var, const Element& a);

bool element_eq(const VarietySpec& var, const Element& a, const Element& b);
bool element_less(const VarietySpec& var, const Element& a, const Element& b);
long long element_size(const VarietySpec& var, const Element& a);

/// Canonical representing letter sequence of a word-kind element (for the
/// free inverse semigroup this is the minimal traversal word).
std::vector<int> element_letters(const VarietySpec& var, const Element& a);

/// Letters (absolute generator indices) occurring in a word-kind element.
std::vector<int> element_support(const VarietySpec& var, const Element& a);

std::string print_element(const VarietySpec& var, const Element& a);

Munn munn_from_letters(const std::vector<int>& letters);
Munn munn_multiply(const Munn& a, const Munn& b);
Munn munn_invert(const Munn& a);
bool munn_is_idempotent(const Munn& a);
std::vector<int> munn_min_word(const Munn& a);

Vec vec_add(const Ring& ring, const Vec& a, const Vec& b);
Vec vec_scale(const Ring& ring, const Scalar& k, const Vec& a);
Vec vec_zero(const Ring& ring, int n);

/// The constant elements K of the variety (fixed by every endomorphism).
struct Constants {
  bool finite;
  std::vector<Element> list;  // explicit list when finite
  std::function<bool(const Element&)> contains;
};
Constants constants(const VarietySpec& var);

/// All elements of size <= bound, deduplicated and sorted by (size, lex).
/// Throws when the search space exceeds the budget.
std::vector<Element> enumerate_elements(const VarietySpec& var, int bound,
                                        long long budget = 2000000);

}  // namespace endofree
