#include <doctest.h>

#include <random>

#include "pbk/error.hpp"
#include "pbk/pattern.hpp"
#include "pbk/seifert.hpp"
#include "support.hpp"

using namespace pbk;

namespace {

// Linking rule applied directly to letter positions, as an oracle for the
// pattern's edge set.
Graph brute_pattern(const BraidWord& w) {
  struct B {
    int col, lo, hi;
  };
  std::vector<B> bricks;
  for (int g = 1; g < w.strands(); ++g) {
    int last = -1;
    for (int p = 0; p < w.crossings(); ++p)
      if (w.letter(p) == g) {
        if (last >= 0) bricks.push_back({g, last, p});
        last = p;
      }
  }
  Graph out(static_cast<int>(bricks.size()));
  for (std::size_t i = 0; i < bricks.size(); ++i)
    for (std::size_t j = i + 1; j < bricks.size(); ++j) {
      const B &a = bricks[i], &b = bricks[j];
      bool link = false;
      if (a.col == b.col) link = a.hi == b.lo || b.hi == a.lo;
      if (std::abs(a.col - b.col) == 1)
        link = (a.lo < b.lo && b.lo < a.hi && a.hi < b.hi) || (b.lo < a.lo && a.lo < b.hi && b.hi < a.hi);
      if (link) out.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  return out;
}

}  // namespace

TEST_CASE("brick diagrams") {
  CHECK(brick_diagram(parse_braid("s1^3")).size() == 2);
  auto t = brick_diagram(parse_braid("s1^5 s2 s1^4 s2"));
  CHECK(t.size() == 9);
  CHECK(std::count_if(t.begin(), t.end(), [](const Brick& b) { return b.column == 1; }) == 8);
  CHECK(brick_diagram(parse_braid("s1^2 s2^2 s1 s3 s2^2 s3")).size() == 6);
}

TEST_CASE("linking patterns") {
  LinkingPattern tre = linking_pattern(parse_braid("s1^3"));
  CHECK(tre.graph.vertex_count() == 2);
  CHECK(tre.graph.edge_count() == 1);

  CHECK(linking_pattern(parse_braid("s1 s2 s1 s2")).graph.edge_count() == 1);

  Graph x = linking_pattern(parse_braid("s1^2 s2^2 s1 s3 s2^2 s3")).graph;
  CHECK(x.is_tree());
  std::vector<int> degrees;
  for (int v = 0; v < x.vertex_count(); ++v) degrees.push_back(x.degree(v));
  std::sort(degrees.begin(), degrees.end());
  CHECK(degrees == std::vector<int>{1, 1, 1, 1, 2, 4});

  std::mt19937 rng(19);
  for (int trial = 0; trial < 300; ++trial) {
    BraidWord w = oracle::random_word(rng, 2 + trial % 5, 2, 16, false);
    Graph g = linking_pattern(w).graph;
    Graph b = brute_pattern(w);
    CHECK(g.edges() == b.edges());
  }
}

TEST_CASE("connectivity, primality and trees") {
  CHECK(is_prime(parse_braid("s1^3")));
  CHECK_FALSE(is_connected(linking_pattern(parse_braid("s1^2 s2^2"))));
  CHECK_FALSE(is_prime(parse_braid("s1^2 s2^2")));
  CHECK_FALSE(is_connected(linking_pattern(parse_braid("s1 s2^3 s1 s2 s3^2 s2"))));
  CHECK(is_tree(linking_pattern(parse_braid("s1^5 s2 s1^4 s2"))));
  CHECK_FALSE(is_tree(linking_pattern(parse_braid("s1 s2 s1 s2 s1 s2 s1 s2"))));
  CHECK(is_tree(linking_pattern(parse_braid("s1^3"))));
  CHECK_THROWS_AS(is_prime(parse_braid("s1^2 s2 s3^2")), ReducibleWordError);
}

TEST_CASE("vertex count is c - n + 1") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    BraidWord w = oracle::random_word(rng, 2 + trial % 5, 2, 16);
    CHECK(linking_pattern(w).graph.vertex_count() == w.crossings() - w.strands() + 1);
  }
}

TEST_CASE("two-column patterns") {
  for (int k = 1; k <= 4; ++k)
    for (int l = 1; l <= 4; ++l) {
      std::vector<int> letters(static_cast<std::size_t>(k), 1);
      letters.insert(letters.end(), {2, 1});
      letters.insert(letters.end(), static_cast<std::size_t>(l), 2);
      Graph g = induced_two_column_pattern(BraidWord(3, letters), 1).graph;
      CHECK(g.is_path());
      CHECK(g.vertex_count() == k + l);
    }
  CHECK_FALSE(induced_two_column_pattern(parse_braid("s1 s2^2 s1 s2^2"), 1).graph.is_path());
  CHECK_THROWS_AS(induced_two_column_pattern(parse_braid("s1^3 @3"), 1), PreconditionError);
}

TEST_CASE("connected sum factors") {
  auto f = split_connected_sum(parse_braid("s1^3 s2 s3^3"));
  REQUIRE(f.size() == 2);
  CHECK(f[0] == parse_braid("s1^3"));
  CHECK(f[1] == parse_braid("s1^3"));
  CHECK(core_invariants(parse_braid("s1^3 s2 s3^3")).genus == 2);

  auto same = split_connected_sum(parse_braid("s1^3"));
  REQUIRE(same.size() == 1);
  CHECK(same[0] == parse_braid("s1^3"));

  auto hopf = split_connected_sum(parse_braid("s1^2 s2^2"));
  REQUIRE(hopf.size() == 2);
  for (const auto& h : hopf) CHECK(component_count(h) == 2);
}
