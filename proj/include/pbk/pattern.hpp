#pragma once

// Brick diagrams and linking patterns of positive braid words.

#include <string>
#include <vector>

#include "pbk/braid.hpp"
#include "pbk/graph.hpp"

namespace pbk {

/// Rectangle between consecutive occurrences `top` < `bottom` of generator `column`.
struct Brick {
  int column = 1;
  int top = 0;
  int bottom = 0;
  friend bool operator==(const Brick&, const Brick&) = default;
};

/// Bricks ordered by column, then by top position.
std::vector<Brick> brick_diagram(const BraidWord& w);

enum class LinkType {
  none,
  same_column,        // consecutive bricks of one column sharing a letter
  left_starts_first,  // columns i, i+1: left.top < right.top < left.bottom < right.bottom
  right_starts_first  // columns i, i+1: right.top < left.top < right.bottom < left.bottom
};

/// Geometric relation of two bricks (argument order irrelevant).
LinkType link_type(const Brick& a, const Brick& b);

struct LinkingPattern {
  std::vector<Brick> bricks;
  Graph graph;
  /// Position of each brick within its column (0 = topmost).
  std::vector<int> rank;

  int vertex_count() const { return graph.vertex_count(); }
};

LinkingPattern linking_pattern(const std::vector<Brick>& bricks);
inline LinkingPattern linking_pattern(const BraidWord& w) { return linking_pattern(brick_diagram(w)); }

bool is_connected(const LinkingPattern& lp);
bool is_tree(const LinkingPattern& lp);

/// Throws ReducibleWordError when a generator occurs fewer than twice.
bool is_prime(const BraidWord& w);

/// Word obtained by keeping only letters sigma_i and sigma_{i+1}.
BraidWord two_column_word(const BraidWord& w, int i);
LinkingPattern induced_two_column_pattern(const BraidWord& w, int i);

/// Factor words whose closures are the connected summands of the closure of
/// `w`. Requires every generator to occur at least once.
std::vector<BraidWord> split_connected_sum(const BraidWord& w);

/// "a b" per line.
std::string edge_list(const LinkingPattern& lp);
/// "id column rank" per vertex, then "edge a b" per edge.
std::string graph_description(const LinkingPattern& lp);

}  // namespace pbk
