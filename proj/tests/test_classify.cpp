#include <doctest.h>

#include "pbk/classify.hpp"
#include "pbk/error.hpp"

using namespace pbk;

TEST_CASE("classification by signature gap") {
  ClassificationResult k = classify_knot(parse_braid("s1^4 s2 s1^3 s2^2"));
  CHECK(k.g4 == G4Bounds{3, 3});
  CHECK(k.method == Method::sigma_gap_one);
  REQUIRE(k.certificate);
  CHECK(verify_certificate(parse_braid("s1^4 s2 s1^3 s2^2"), *k.certificate));

  ClassificationResult t27 = classify_knot(parse_braid("s1^7"));
  CHECK(t27.g == 3);
  CHECK(t27.g4 == G4Bounds{3, 3});
  CHECK(t27.method == Method::max_signature);
  CHECK(t27.torus == std::optional<std::string>("T(2,7)"));

  ClassificationResult t56 =
      classify_knot(parse_braid("s1 s2 s3 s4 s1 s2 s3 s4 s1 s2 s3 s4 s1 s2 s3 s4 s1 s2 s3 s4 s1 s2 s3 s4"));
  CHECK(t56.g == 10);
  CHECK(t56.method == Method::bounds_only);
  CHECK(t56.g4.hi == 9);
  CHECK(t56.abs_sigma < 20);
  CHECK(t56.g4.lo == (t56.abs_sigma + 1) / 2);
}

TEST_CASE("torus recognizer") {
  CHECK(is_max_torus(parse_braid("s1^5")) == std::optional<std::string>("T(2,5)"));
  CHECK(is_max_torus(parse_braid("s1 s2 s1 s2 s1 s2 s1 s2")) == std::optional<std::string>("T(3,4)"));
  CHECK(is_max_torus(parse_braid("s1^3 s2 s1^3 s2")) == std::optional<std::string>("T(3,4)"));
  CHECK_FALSE(is_max_torus(parse_braid("s1^4 s2 s1^3 s2^2")));
}

TEST_CASE("composite knots add up") {
  // 10_139 # trefoil: the s2 and s3 bricks do not interleave
  ClassificationResult c = classify_knot(parse_braid("s1^4 s2 s1^3 s2^2 s3^3"));
  CHECK(c.g == 5);
  CHECK(c.abs_sigma == 8);
  CHECK(c.g4 == G4Bounds{4, 4});
  CHECK(c.method == Method::sigma_gap_one);
  CHECK(c.certificate);

  ClassificationResult m = classify_knot(parse_braid("s1^3 s2^5"));
  CHECK(m.method == Method::max_signature);
  CHECK(m.g4 == G4Bounds{3, 3});
  CHECK_THROWS_AS(classify_knot(parse_braid("s1^3 s2 s3^5")), ReducibleWordError);
}

TEST_CASE("classification errors") {
  CHECK_THROWS_AS(classify_knot(parse_braid("s1^2")), PreconditionError);
  CHECK_THROWS_AS(classify_knot(parse_braid("s1^3 s3^3")), ReducibleWordError);
}
