#include <doctest.h>

#include <random>

#include "pbk/error.hpp"
#include "pbk/lemma5.hpp"
#include "pbk/pattern.hpp"
#include "pbk/seifert.hpp"
#include "support.hpp"

using namespace pbk;

TEST_CASE("column merge on a two-column path") {
  BraidWord w = parse_braid("s1^2 s2 s1 s2");
  auto r = reduce_index_lemma5(w);
  REQUIRE(r);
  CHECK(r->strands() == 2);
  CHECK(core_invariants(*r) == core_invariants(w));
}

TEST_CASE("no merge without a path") {
  CHECK_FALSE(reduce_index_lemma5(parse_braid("s1 s2^2 s1 s2^2")));
  CHECK_THROWS_AS(reduce_index_lemma5(parse_braid("s1^3")), PreconditionError);
  CHECK_THROWS_AS(reduce_index_lemma5(parse_braid("s1^2 s3^2")), ReducibleWordError);
}

TEST_CASE("merge of the second and third generator") {
  // s2 s3 restricted reads s2^2 s3 s2 s3^3, a path.
  BraidWord w = parse_braid("s2^3 s1 s2^2 s1^3 s2 s3 s2 s3^3");
  REQUIRE(induced_two_column_pattern(w, 2).graph.is_path());
  auto r = reduce_index_lemma5(w);
  REQUIRE(r);
  CHECK(r->strands() == 3);
  CHECK(core_invariants(*r) == core_invariants(w));
}

TEST_CASE("successful merges preserve invariants") {
  std::mt19937 rng(47);
  int merged = 0;
  for (int trial = 0; trial < 400; ++trial) {
    BraidWord w = oracle::random_word(rng, 3 + trial % 3, 5, 13, false);
    auto occ = w.occurrences();
    if (std::find(occ.begin() + 1, occ.end(), 0) != occ.end()) continue;
    Lemma5Outcome o = lemma5_attempt(w);
    if (!o.reduced) continue;
    ++merged;
    CHECK(o.reduced->strands() == w.strands() - 1);
    CHECK(core_invariants(*o.reduced) == core_invariants(w));
  }
  CHECK(merged > 20);
}
