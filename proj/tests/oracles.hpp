#pragma once

// Independent test oracles: deliberately written against the definitions,
// not against the library's algorithms.

#include <map>
#include <numeric>
#include <vector>

#include "endofree/element.hpp"

namespace oracle {

using LWord = std::vector<int>;

/// Free-group reduction by repeated single-pair erasure.
inline LWord naive_reduce(LWord w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] == -w[i + 1]) {
        w.erase(w.begin() + i, w.begin() + i + 2);
        changed = true;
        break;
      }
  }
  return w;
}

/// Union-find closure of the Wagner congruence over all nonempty words of
/// length <= cap on `rank` signed letters. Generating moves, applied at
/// every position of every word in the universe:
///   (a) u u^-1 u -> u            (expansions are the same pairs, seen
///                                 from the longer word)
///   (b) (u u^-1)(v v^-1) -> (v v^-1)(u u^-1)
class WagnerClosure {
 public:
  WagnerClosure(int rank, int cap) {
    std::vector<LWord> layer = {{}};
    for (int len = 1; len <= cap; ++len) {
      std::vector<LWord> next;
      for (const LWord& p : layer)
        for (int l = 1; l <= rank; ++l)
          for (int s : {l, -l}) {
            LWord w = p;
            w.push_back(s);
            index_[w] = static_cast<int>(parent_.size());
            parent_.push_back(static_cast<int>(parent_.size()));
            next.push_back(std::move(w));
          }
      layer.swap(next);
    }
    for (const auto& [w, id] : index_) close_word(w, id);
  }

  bool equivalent(const LWord& a, const LWord& b) {
    return find(index_.at(a)) == find(index_.at(b));
  }

  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

 private:
  void unite(int a, int b) { parent_[find(a)] = find(b); }

  static bool is_uuinv(const LWord& w, size_t at, size_t half) {
    for (size_t t = 0; t < half; ++t)
      if (w[at + half + t] != -w[at + half - 1 - t]) return false;
    return true;
  }

  void close_word(const LWord& w, int id) {
    size_t n = w.size();
    // (a) contraction
    for (size_t t = 1; 3 * t <= n; ++t)
      for (size_t i = 0; i + 3 * t <= n; ++i) {
        bool match = is_uuinv(w, i, t);
        for (size_t p = 0; match && p < t; ++p) match = w[i + 2 * t + p] == w[i + p];
        if (!match) continue;
        LWord shorter(w.begin(), w.begin() + i + t);
        shorter.insert(shorter.end(), w.begin() + i + 3 * t, w.end());
        unite(id, index_.at(shorter));
      }
    // (b) idempotent blocks commute
    for (size_t t1 = 1; 2 * t1 <= n; ++t1)
      for (size_t t2 = 1; 2 * t1 + 2 * t2 <= n; ++t2)
        for (size_t i = 0; i + 2 * t1 + 2 * t2 <= n; ++i) {
          if (!is_uuinv(w, i, t1) || !is_uuinv(w, i + 2 * t1, t2)) continue;
          LWord swapped(w.begin(), w.begin() + i);
          swapped.insert(swapped.end(), w.begin() + i + 2 * t1,
                         w.begin() + i + 2 * t1 + 2 * t2);
          swapped.insert(swapped.end(), w.begin() + i, w.begin() + i + 2 * t1);
          swapped.insert(swapped.end(), w.begin() + i + 2 * t1 + 2 * t2, w.end());
          unite(id, index_.at(swapped));
        }
  }

  std::map<LWord, int> index_;
  std::vector<int> parent_;
};

/// All nonempty words of length <= cap on `rank` signed letters.
inline std::vector<LWord> all_signed_words(int rank, int cap) {
  std::vector<LWord> out, layer = {{}};
  for (int len = 1; len <= cap; ++len) {
    std::vector<LWord> next;
    for (const LWord& p : layer)
      for (int l = 1; l <= rank; ++l)
        for (int s : {l, -l}) {
          LWord w = p;
          w.push_back(s);
          out.push_back(w);
          next.push_back(std::move(w));
        }
    layer.swap(next);
  }
  return out;
}

}  // namespace oracle
