#pragma once

// Seifert forms over the brick basis and the classical invariants derived from them.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pbk/algebra.hpp"
#include "pbk/braid.hpp"
#include "pbk/pattern.hpp"

namespace pbk {

/// Where the single nonzero off-diagonal entry of a linked pair goes, and its sign.
/// For same-column pairs "first" is the upper brick; for adjacent columns it is
/// the brick in the left column.
struct PairEntry {
  bool first_row = true;  // entry at (first, second) rather than (second, first)
  int sign = 1;
  friend bool operator==(const PairEntry&, const PairEntry&) = default;
};

struct SeifertRule {
  int diagonal = 1;
  PairEntry same_column;
  PairEntry left_starts_first;
  PairEntry right_starts_first;
  friend bool operator==(const SeifertRule&, const SeifertRule&) = default;

  /// All 2 * 4^3 = 128 rules, in a fixed order.
  static std::vector<SeifertRule> all();
  std::string describe() const;
};

/// The brick-basis rule fixed against the Burau oracle; see tests/test_seifert.cpp.
SeifertRule calibrated_rule();

struct SeifertData {
  IntMatrix matrix;
  std::vector<Brick> basis;
};

/// Seifert matrix of the canonical fibre surface over the brick basis.
/// Requires every generator to occur at least twice.
SeifertData seifert_matrix(const BraidWord& w, const SeifertRule& rule = calibrated_rule());

/// Tree rule: A_ii = 1, A_ij = 1 for i < j adjacent. `order[k]` is the vertex
/// placed at basis position k.
IntMatrix seifert_matrix_tree(const Graph& tree, const std::vector<int>& order);
IntMatrix seifert_matrix_tree(const Graph& tree);

/// r - rank(A - A^T) + 1
int boundary_components_homological(const IntMatrix& a);

/// Alexander polynomial from the reduced Burau representation, up to units.
LaurentPoly alexander_burau(const BraidWord& w);

struct G4Bounds {
  int lo = 0;
  int hi = 0;
  bool exact() const { return lo == hi; }
  friend bool operator==(const G4Bounds&, const G4Bounds&) = default;
};

struct InvariantRecord {
  BraidWord word;
  int strands = 0;
  int crossings = 0;
  int first_betti = 0;
  int components = 0;
  bool prime = false;
  int genus = 0;
  int signature = 0;
  int abs_signature = 0;
  LaurentPoly alexander;  // normalized
  std::optional<G4Bounds> g4_top;
  int g4_smooth = 0;
  std::optional<std::string> certificate;
};

/// Full record for a word whose generators all occur at least twice.
InvariantRecord invariants(const BraidWord& w);

/// Genus, signature, Alexander polynomial and component count for any word in
/// which every generator occurs, computed through connected-sum factors.
struct CoreInvariants {
  int components = 0;
  int genus = 0;
  int signature = 0;
  LaurentPoly alexander;  // normalized
  friend bool operator==(const CoreInvariants&, const CoreInvariants&) = default;
};
CoreInvariants core_invariants(const BraidWord& w);

}  // namespace pbk
