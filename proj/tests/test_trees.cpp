#include <doctest.h>

#include <numeric>
#include <optional>
#include <random>

#include "pbk/error.hpp"
#include "pbk/trees.hpp"
#include "support.hpp"

using namespace pbk;

namespace {

// Tree with arms of the given lengths hanging off one centre vertex.
PlaneTree star_tree(std::vector<int> arms) {
  std::string s = "(";
  for (int len : arms) {
    for (int i = 0; i < len; ++i) s += "(";
    for (int i = 0; i < len; ++i) s += ")";
  }
  return parse_tree(s + ")");
}

}  // namespace

TEST_CASE("parsing plane trees") {
  CHECK(parse_tree("()").vertex_count() == 1);
  PlaneTree e = parse_tree("(())");
  CHECK(e.vertex_count() == 2);
  CHECK(e.graph().edge_count() == 1);
  PlaneTree s = parse_tree("(()()())");
  CHECK(s.vertex_count() == 4);
  CHECK(s.graph().degree(0) == 3);
  CHECK(parse_tree(" ( ( ) ( ( ) ) ) ").to_string() == "(()(()))");
  CHECK_THROWS_AS(parse_tree("(()"), ParseError);
  CHECK_THROWS_AS(parse_tree("())"), ParseError);
  CHECK_THROWS_AS(parse_tree("()()"), ParseError);
  CHECK_THROWS_AS(parse_tree(""), ParseError);
}

TEST_CASE("plumbing invariants") {
  InvariantRecord edge = tree_invariants(parse_tree("(())"));
  CHECK(edge.components == 1);
  CHECK(edge.genus == 1);
  CHECK(edge.abs_signature == 2);
  CHECK(equal_up_to_unit(edge.alexander, oracle::to_poly({1, -1, 1})));

  InvariantRecord p3 = tree_invariants(parse_tree("((()))"));
  CHECK(p3.components == 2);
  CHECK(p3.genus == 1);

  InvariantRecord e8 = tree_invariants(star_tree({1, 2, 4}));
  CHECK(e8.first_betti == 8);
  CHECK(e8.components == 1);
  CHECK(e8.genus == 4);
  CHECK(e8.abs_signature == 8);
  InvariantRecord t35 = invariants(parse_braid("s1 s2 s1 s2 s1 s2 s1 s2 s1 s2"));
  CHECK(e8.alexander == t35.alexander);
}

TEST_CASE("invariants do not depend on the vertex order") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    // random tree by attaching each new vertex to an earlier one
    const int n = 2 + trial % 9;
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v, std::uniform_int_distribution<int>(0, v - 1)(rng));
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    IntMatrix a = seifert_matrix_tree(g, order);
    std::shuffle(order.begin(), order.end(), rng);
    IntMatrix b = seifert_matrix_tree(g, order);
    CHECK(symmetric_signature(a + a.transposed()) == symmetric_signature(b + b.transposed()));
    CHECK(poly_det(alexander_matrix(a)).normalized() == poly_det(alexander_matrix(b)).normalized());
    const int comps = boundary_components_homological(a);
    CHECK(comps == boundary_components_homological(b));
    CHECK((n - comps + 1) % 2 == 0);
  }
}

TEST_CASE("tree classification") {
  TreeClassification edge = classify_tree_knot(parse_tree("(())"));
  CHECK(edge.g4 == G4Bounds{1, 1});
  CHECK_FALSE(edge.certificate);

  TreeClassification e8 = classify_tree_knot(star_tree({1, 2, 4}));
  CHECK(e8.g4 == G4Bounds{4, 4});

  // T-tilde's tree (arms 1, 3, 4) is a two-component link; some extra leaf makes it a knot.
  PlaneTree base = star_tree({1, 3, 4});
  REQUIRE(tree_invariants(base).components == 2);
  std::optional<PlaneTree> knot;
  for (int v = 0; v < base.vertex_count() && !knot; ++v) {
    PlaneTree t = base;
    t.children[static_cast<std::size_t>(v)].push_back(t.vertex_count());
    t.children.emplace_back();
    if (tree_invariants(t).components == 1) knot = t;
  }
  REQUIRE(knot);
  TreeClassification c = classify_tree_knot(*knot);
  REQUIRE(c.certificate);
  CHECK((*c.certificate == MinorName::Xtilde || *c.certificate == MinorName::Ttilde));
  CHECK(c.g4.hi < c.invariants.genus);

  CHECK_THROWS_AS(classify_tree_knot(parse_tree("((()))")), PreconditionError);
}
