#pragma once

// Index reduction for braids whose two adjacent columns link along a path.

#include <optional>

#include "pbk/braid.hpp"

namespace pbk {

struct Lemma5Outcome {
  std::optional<BraidWord> reduced;
  int column = 0;                      // the lower of the two merged generators
  bool rejected_by_postcheck = false;  // a merge was formed but changed an invariant
};

/// Merges columns i and i+1 for the first i whose two-column linking pattern
/// is a path, trying each rotation and reversal that brings the two-column
/// word to the shape s_i^k s_{i+1} s_i s_{i+1}^l. A candidate is accepted only
/// if components, genus, signature and Alexander polynomial are unchanged.
Lemma5Outcome lemma5_attempt(const BraidWord& w);

inline std::optional<BraidWord> reduce_index_lemma5(const BraidWord& w) { return lemma5_attempt(w).reduced; }

}  // namespace pbk
