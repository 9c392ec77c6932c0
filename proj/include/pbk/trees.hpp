#pragma once

// Positive Hopf plumbing along plane trees.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pbk/graph.hpp"
#include "pbk/minors.hpp"
#include "pbk/seifert.hpp"

namespace pbk {

/// Rooted ordered tree; vertices are numbered in depth-first preorder, root 0.
struct PlaneTree {
  std::vector<std::vector<int>> children;

  int vertex_count() const { return static_cast<int>(children.size()); }
  Graph graph() const;
  /// Balanced-parenthesis form, the inverse of parse_tree.
  std::string to_string() const;
};

/// "(()(()))": each "(" opens a vertex, nested groups are its children.
PlaneTree parse_tree(std::string_view text);

/// Invariants of the plumbing, from the tree rule under preorder numbering.
/// The record's word is empty.
InvariantRecord tree_invariants(const PlaneTree& tree);

struct TreeClassification {
  InvariantRecord invariants;
  G4Bounds g4;
  int high_degree_vertices = 0;  // vertices of degree >= 3
  std::optional<MinorName> certificate;
  std::optional<MinorEmbedding> embedding;
  std::optional<IntMatrix> basis;  // carried example subspace in preorder coordinates
};

/// Requires a knot (one boundary component).
TreeClassification classify_tree_knot(const PlaneTree& tree);

}  // namespace pbk
