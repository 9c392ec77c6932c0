#include <doctest.h>

#include <random>

#include "pbk/algebra.hpp"
#include "pbk/error.hpp"
#include "support.hpp"

using namespace pbk;

namespace {

LaurentPoly P(std::vector<long> c, int min_degree = 0) {
  std::vector<Integer> z(c.begin(), c.end());
  return LaurentPoly(min_degree, z);
}

// Determinant by the Leibniz formula, as an oracle for small matrices.
template <typename T>
T leibniz(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  T total(0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    T term(1);
    for (std::size_t i = 0; i < n; ++i) term = term * m(i, perm[i]);
    if (inversions % 2)
      total = total - term;
    else
      total = total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST_CASE("Laurent polynomial arithmetic") {
  CHECK(P({1, -1}) * P({1, 1}) == P({1, 0, -1}));
  CHECK(P({1, -1}) + P({0, 1}) == P({1}));
  CHECK((P({1, 2}) - P({1, 2})).is_zero());
  CHECK(-P({1, -1}) == P({-1, 1}));
  CHECK(P({1, -1, 1}).to_string() == "1 - t + t^2");
  CHECK(P({3}, -2).shifted(2) == P({3}));
  CHECK(P({-1, 1, -1}, 3).normalized() == P({1, -1, 1}));
  CHECK(P({1, -1, 1}).eval_at_one() == 1);
}

TEST_CASE("units and equality up to units") {
  CHECK(equal_up_to_unit(P({1, -1, 1}), P({1, -1, 1}, -1)));
  CHECK_FALSE(equal_up_to_unit(P({1, -1, 1}), P({1, 1, 1})));
  CHECK(is_unit(P({-1}, 3)));
  CHECK_FALSE(is_unit(P({1, -1})));
  CHECK_FALSE(is_unit(LaurentPoly()));
}

TEST_CASE("exact division") {
  CHECK(divide_exact(P({1, 0, -1}), P({1, 1})) == P({1, -1}));
  CHECK_THROWS_AS(divide_exact(P({1, 0, 1}), P({1, 1})), InternalError);
}

TEST_CASE("polynomial determinants") {
  PolyMatrix one(1, 1);
  one(0, 0) = P({1, -1});
  CHECK(poly_det(one) == P({1, -1}));

  PolyMatrix trefoil(2, 2);
  trefoil(0, 0) = P({1, -1});
  trefoil(0, 1) = P({1});
  trefoil(1, 0) = P({0, -1});
  trefoil(1, 1) = P({1, -1});
  CHECK(poly_det(trefoil) == P({1, -1, 1}));

  PolyMatrix diag(3, 3, LaurentPoly());
  for (std::size_t i = 0; i < 3; ++i) diag(i, i) = P({1, -1});
  CHECK(poly_det(diag) == P({1, -1}) * P({1, -1}) * P({1, -1}));
}

TEST_CASE("polynomial determinant agrees with the Leibniz formula") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-2, 2), deg(-1, 1), size(1, 5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = static_cast<std::size_t>(size(rng));
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = P({coef(rng), coef(rng)}, deg(rng));
    CHECK(poly_det(m) == leibniz(m));
  }
}

TEST_CASE("integer determinant agrees with the Leibniz formula") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-4, 4), size(1, 6);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = static_cast<std::size_t>(size(rng));
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = coef(rng);
    CHECK(int_det(m) == leibniz(m));
  }
}

TEST_CASE("signature of symmetric matrices") {
  CHECK(symmetric_signature(int_matrix({{2, 1}, {1, 2}})) == 2);
  CHECK(symmetric_signature(int_matrix({{0, 1}, {1, 0}})) == 0);
  CHECK(symmetric_signature(IntMatrix(3, 3, Integer(0))) == 0);

  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coef(-3, 3), size(1, 8);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(size(rng));
    IntMatrix s(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) s(i, j) = s(j, i) = (trial % 3 == 0 && i == j) ? 0 : coef(rng);
    CHECK(symmetric_signature(s) == oracle::float_signature(s));
  }
}

TEST_CASE("rational rank") {
  CHECK(matrix_rank_rational(int_matrix({{1, 2}, {2, 4}})) == 1);
  CHECK(matrix_rank_rational(int_matrix({{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}})) == 2);
  CHECK(matrix_rank_rational(IntMatrix::identity(4)) == 4);
}
