#include <doctest.h>

#include <random>

#include "pbk/braid.hpp"
#include "pbk/error.hpp"
#include "pbk/seifert.hpp"
#include "support.hpp"

using namespace pbk;

TEST_CASE("parsing braid words") {
  BraidWord w = parse_braid("s1^4 s2 s1^3 s2^2");
  CHECK(w.strands() == 3);
  CHECK(w.syllables() == std::vector<Syllable>{{1, 4}, {2, 1}, {1, 3}, {2, 2}});

  BraidWord t = parse_braid("111");
  CHECK(t.strands() == 2);
  CHECK(t.syllables() == std::vector<Syllable>{{1, 3}});

  BraidWord s = parse_braid("s3^2");
  CHECK(s.strands() == 4);
  CHECK(s.syllables() == std::vector<Syllable>{{3, 2}});

  CHECK(parse_braid("σ1^2 σ2").letters() == std::vector<int>{1, 1, 2});
  CHECK(parse_braid("s1 s2 @5").strands() == 5);
  CHECK(parse_braid(w.to_string()) == w);

  CHECK_THROWS_AS(parse_braid(""), ParseError);
  CHECK_THROWS_AS(parse_braid("s0"), ParseError);
  CHECK_THROWS_AS(parse_braid("s1^0"), ParseError);
  CHECK_THROWS_AS(parse_braid("s1 x2"), ParseError);
  CHECK_THROWS_AS(parse_braid("s3 @3"), ParseError);
}

TEST_CASE("closure permutation and components") {
  CHECK(closure_permutation(parse_braid("s1^3")).cycle_type() == std::vector<int>{2});
  CHECK(is_knot(parse_braid("s1^3")));
  CHECK(component_count(parse_braid("s1^5 s2 s1^4 s2")) == 2);
  CHECK(is_knot(parse_braid("s1 s2")));
  CHECK_FALSE(is_knot(parse_braid("s1^2")));
  CHECK(component_count(parse_braid("s1^2")) == 2);
  CHECK(component_count(parse_braid("s1^2 s2^2 s1 s3 s2^2 s3")) == 3);
}

TEST_CASE("component count agrees with strand tracing") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    BraidWord w = oracle::random_word(rng, 2 + trial % 5, 1, 14, false);
    CHECK(component_count(w) == oracle::traced_components(w.letters(), w.strands()));
  }
}

TEST_CASE("word symmetries") {
  CHECK(rotate(parse_braid("s1 s2^2"), 1) == parse_braid("s2^2 s1"));
  CHECK(reverse(parse_braid("s1^4 s2")) == parse_braid("s2 s1^4"));
  CHECK(flip_indices(parse_braid("s1^2 s2")) == parse_braid("s2^2 s1"));
  CHECK(shift_indices(parse_braid("s1 s2"), 1) == parse_braid("s2 s3"));

  std::mt19937 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    BraidWord w = oracle::random_word(rng, 2 + trial % 4, 1, 12, false);
    const int b = component_count(w);
    CHECK(component_count(rotate(w, trial)) == b);
    CHECK(component_count(reverse(w)) == b);
    CHECK(component_count(flip_indices(w)) == b);
  }
}

TEST_CASE("push-right normal form") {
  CHECK(push_right_normal_form(parse_braid("s1 s2 s1")) == parse_braid("s2 s1 s2"));
  CHECK(push_right_normal_form(parse_braid("s2 s1 s2")) == parse_braid("s2 s1 s2"));

  BraidWord w = parse_braid("s1 s3 s2 s1");
  BraidWord n = push_right_normal_form(w);
  CHECK(n != w);
  CHECK(core_invariants(n) == core_invariants(w));

  std::mt19937 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    BraidWord v = oracle::random_word(rng, 3 + trial % 3, 4, 14);
    CHECK(core_invariants(push_right_normal_form(v)) == core_invariants(v));
  }
}

TEST_CASE("subword containment") {
  BraidWord x = parse_braid("s1^2 s2^3 s1^2 s2^2");
  auto id = contains_subword(x, x);
  REQUIRE(id);
  CHECK(id->transform == WordTransform{});
  CHECK(verify_subword_witness(x, x, *id));

  BraidWord host = parse_braid("s1 s2^5 s1 s2^4 s1");
  BraidWord pat = parse_braid("s1 s2^5 s1 s2^4");
  auto wit = contains_subword(host, pat);
  REQUIRE(wit);
  CHECK(verify_subword_witness(host, pat, *wit));

  auto shifted = contains_subword(parse_braid("s2^2 s3^3 s2^2 s3^2"), x);
  REQUIRE(shifted);
  CHECK(shifted->transform.shift == 1);

  // Deleting letters merges powers: s1 s2 s1 s1 contains s1 s1^2 only via merging.
  CHECK(contains_subword(parse_braid("s1 s2 s1^2"), parse_braid("s1^3")));
  CHECK_FALSE(contains_subword(parse_braid("s1^2 s2^2"), x));

  SubwordOptions strict;
  strict.cyclic = strict.reversal = strict.index_shift = false;
  CHECK_FALSE(contains_subword(parse_braid("s2^2 s3^3 s2^2 s3^2"), x, strict));
}

TEST_CASE("witness positions increase and are re-checked") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    BraidWord host = oracle::random_word(rng, 3, 6, 14);
    CHECK(contains_subword(host, host));
    auto wit = contains_subword(host, parse_braid("s1^2 s2 s1"));
    if (!wit) continue;
    for (std::size_t i = 1; i < wit->positions.size(); ++i) CHECK(wit->positions[i - 1] < wit->positions[i]);
    CHECK(verify_subword_witness(host, parse_braid("s1^2 s2 s1"), *wit));
    SubwordWitness broken = *wit;
    broken.positions.back() = broken.positions.front();
    CHECK_FALSE(verify_subword_witness(host, parse_braid("s1^2 s2 s1"), broken));
  }
}
