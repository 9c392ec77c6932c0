#include "pbk/pattern.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pbk/error.hpp"

namespace pbk {

std::vector<Brick> brick_diagram(const BraidWord& w) {
  std::vector<Brick> bricks;
  for (int col = 1; col < w.strands(); ++col) {
    int prev = -1;
    for (int pos = 0; pos < w.crossings(); ++pos) {
      if (w.letter(pos) != col) continue;
      if (prev >= 0) bricks.push_back({col, prev, pos});
      prev = pos;
    }
  }
  return bricks;
}

LinkType link_type(const Brick& a, const Brick& b) {
  if (a.column == b.column) {
    return (a.bottom == b.top || b.bottom == a.top) ? LinkType::same_column : LinkType::none;
  }
  if (std::abs(a.column - b.column) != 1) return LinkType::none;
  const Brick& left = a.column < b.column ? a : b;
  const Brick& right = a.column < b.column ? b : a;
  if (left.top < right.top && right.top < left.bottom && left.bottom < right.bottom)
    return LinkType::left_starts_first;
  if (right.top < left.top && left.top < right.bottom && right.bottom < left.bottom)
    return LinkType::right_starts_first;
  return LinkType::none;
}

LinkingPattern linking_pattern(const std::vector<Brick>& bricks) {
  LinkingPattern lp;
  lp.bricks = bricks;
  lp.graph = Graph(static_cast<int>(bricks.size()));
  std::map<int, int> seen_in_column;
  for (std::size_t i = 0; i < bricks.size(); ++i) {
    int& r = seen_in_column[bricks[i].column];
    lp.rank.push_back(r++);
    for (std::size_t j = 0; j < i; ++j)
      if (link_type(bricks[i], bricks[j]) != LinkType::none)
        lp.graph.add_edge(static_cast<int>(j), static_cast<int>(i));
  }
  return lp;
}

bool is_connected(const LinkingPattern& lp) { return lp.graph.is_connected(); }

bool is_tree(const LinkingPattern& lp) { return lp.graph.is_tree(); }

bool is_prime(const BraidWord& w) {
  auto occ = w.occurrences();
  for (int g = 1; g < w.strands(); ++g) {
    if (occ[static_cast<std::size_t>(g)] == 0)
      throw ReducibleWordError("reducible word: generator s" + std::to_string(g) + " does not occur", g);
    if (occ[static_cast<std::size_t>(g)] == 1)
      throw ReducibleWordError("connected-sum decomposable at the single letter s" + std::to_string(g), g);
  }
  return is_connected(linking_pattern(w));
}

BraidWord two_column_word(const BraidWord& w, int i) {
  auto occ = w.occurrences();
  if (i < 1 || i + 1 > w.strands() - 1 || occ[static_cast<std::size_t>(i)] == 0 ||
      occ[static_cast<std::size_t>(i + 1)] == 0)
    throw PreconditionError("two-column pattern needs both s" + std::to_string(i) + " and s" +
                            std::to_string(i + 1) + " to occur");
  std::vector<int> letters;
  for (int g : w.letters())
    if (g == i || g == i + 1) letters.push_back(g);
  return BraidWord(w.strands(), std::move(letters));
}

LinkingPattern induced_two_column_pattern(const BraidWord& w, int i) {
  return linking_pattern(two_column_word(w, i));
}

std::vector<BraidWord> split_connected_sum(const BraidWord& w) {
  auto occ = w.occurrences();
  for (int g = 1; g < w.strands(); ++g)
    if (occ[static_cast<std::size_t>(g)] == 0)
      throw ReducibleWordError("reducible word: generator s" + std::to_string(g) + " does not occur", g);

  LinkingPattern lp = linking_pattern(w);
  std::vector<int> label;
  int count = lp.graph.components(label);
  // Every column with >= 2 letters lies in exactly one component, and the
  // columns of a component form an interval.
  std::vector<std::pair<int, int>> ranges(static_cast<std::size_t>(count), {w.strands(), 0});
  for (std::size_t v = 0; v < lp.bricks.size(); ++v) {
    auto& r = ranges[static_cast<std::size_t>(label[v])];
    r.first = std::min(r.first, lp.bricks[v].column);
    r.second = std::max(r.second, lp.bricks[v].column);
  }
  std::sort(ranges.begin(), ranges.end());
  std::vector<BraidWord> factors;
  for (auto [lo, hi] : ranges) {
    std::vector<int> letters;
    for (int g : w.letters())
      if (g >= lo && g <= hi) letters.push_back(g - lo + 1);
    factors.emplace_back(hi - lo + 2, std::move(letters));
  }
  if (factors.empty()) factors.emplace_back(2, std::vector<int>{1});  // unknot
  return factors;
}

std::string edge_list(const LinkingPattern& lp) {
  std::ostringstream out;
  for (auto [a, b] : lp.graph.edges()) out << a << ' ' << b << '\n';
  return out.str();
}

std::string graph_description(const LinkingPattern& lp) {
  std::ostringstream out;
  for (std::size_t v = 0; v < lp.bricks.size(); ++v)
    out << v << ' ' << lp.bricks[v].column << ' ' << lp.rank[v] << '\n';
  for (auto [a, b] : lp.graph.edges()) out << "edge " << a << ' ' << b << '\n';
  return out.str();
}

}  // namespace pbk
