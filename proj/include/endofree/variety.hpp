#pragma once

#include <optional>
#include <string>

#include "endofree/ring.hpp"

namespace endofree {

enum class VarietyKind { FreeSemigroup, FreeGroup, FreeInverseSemigroup, FreeModule };

/// The ambient free algebra: variety kind, rank, and (for modules) the
/// coefficient ring.
struct VarietySpec {
  VarietyKind kind;
  int rank;
  std::optional<Ring> ring;  // present iff kind == FreeModule

  static VarietySpec free_semigroup(int n) { return {VarietyKind::FreeSemigroup, n, {}}; }
  static VarietySpec free_group(int n) { return {VarietyKind::FreeGroup, n, {}}; }
  static VarietySpec free_inverse(int n) {
    return {VarietyKind::FreeInverseSemigroup, n, {}};
  }
  static VarietySpec free_module(Ring r, int n) {
    return {VarietyKind::FreeModule, n, std::move(r)};
  }

  bool has_inverse() const {
    return kind == VarietyKind::FreeGroup || kind == VarietyKind::FreeInverseSemigroup;
  }
  bool has_product() const { return kind != VarietyKind::FreeModule; }
  bool is_word_kind() const { return kind != VarietyKind::FreeModule; }

  const Ring& the_ring() const {
    if (!ring) throw error("variety carries no ring");
    return *ring;
  }

  bool operator==(const VarietySpec& o) const {
    if (kind != o.kind || rank != o.rank) return false;
    if (kind != VarietyKind::FreeModule) return true;
    return the_ring() == o.the_ring();
  }

  std::string name() const {
    switch (kind) {
      case VarietyKind::FreeSemigroup: return "free-semigroup";
      case VarietyKind::FreeGroup: return "free-group";
      case VarietyKind::FreeInverseSemigroup: return "free-inverse";
      case VarietyKind::FreeModule: return "free-module(" + the_ring().name() + ")";
    }
    return "?";
  }
};

inline void check_same_variety(const VarietySpec& a, const VarietySpec& b) {
  if (!(a == b)) throw error("variety mismatch");
}

}  // namespace endofree
