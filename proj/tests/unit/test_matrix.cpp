#include <doctest.h>

#include <random>

#include "isct/errors.hpp"
#include "isct/matrix.hpp"

using namespace isct;

namespace {

RationalMatrix from_ints(std::size_t rows, std::size_t cols,
                         std::initializer_list<long long> vals) {
  RationalMatrix m(rows, cols);
  auto it = vals.begin();
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = Rational(to_integer(*it++));
  return m;
}

RationalMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<long long> num(-9, 9);
  std::uniform_int_distribution<long long> den(1, 9);
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m.at(i, j) = make_rational(num(rng), den(rng));
  return m;
}

}  // namespace

TEST_SUITE("matrix") {

TEST_CASE("rank_profile on the identity") {
  const RationalMatrix id = RationalMatrix::identity(3);
  const RankProfile p = rank_profile(id);
  CHECK(p.rank == 3);
  CHECK(p.kernel_basis.cols() == 0);
  CHECK(p.image_basis == id);
  CHECK(p.pivot_cols == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("rank_profile on the zero 2x3 map") {
  const RationalMatrix z(2, 3);
  const RankProfile p = rank_profile(z);
  CHECK(p.rank == 0);
  CHECK(p.kernel_basis == RationalMatrix::identity(3));
  CHECK(p.image_basis.cols() == 0);
}

TEST_CASE("rank_profile on a rank-1 2x2 matrix") {
  const RationalMatrix m = from_ints(2, 2, {1, 2, 2, 4});
  const RankProfile p = rank_profile(m);
  CHECK(p.rank == 1);
  REQUIRE(p.kernel_basis.cols() == 1);
  CHECK(p.kernel_basis.at(0, 0) == Rational(-2));
  CHECK(p.kernel_basis.at(1, 0) == Rational(1));
  CHECK((m * p.kernel_basis).is_zero());
  REQUIRE(p.image_basis.cols() == 1);
  CHECK(p.image_basis.at(0, 0) == Rational(1));
  CHECK(p.image_basis.at(1, 0) == Rational(2));
}

TEST_CASE("solve_linear basics") {
  SUBCASE("identity system returns b") {
    const RationalMatrix id = RationalMatrix::identity(2);
    RationalMatrix b(2, 1);
    b.at(0, 0) = make_rational(3, 2);
    b.at(1, 0) = Rational(-7);
    const auto x = solve_linear(id, b);
    REQUIRE(x.has_value());
    CHECK(*x == b);
  }
  SUBCASE("pivot-first convention on an underdetermined row") {
    const RationalMatrix m = from_ints(1, 2, {1, 1});
    const RationalMatrix b = from_ints(1, 1, {2});
    const auto x = solve_linear(m, b);
    REQUIRE(x.has_value());
    CHECK(x->at(0, 0) == Rational(2));
    CHECK(x->at(1, 0) == Rational(0));
    CHECK(m * *x == b);
  }
  SUBCASE("inconsistent system returns none") {
    const RationalMatrix m = from_ints(2, 1, {1, 1});
    const RationalMatrix b = from_ints(2, 1, {1, 2});
    CHECK_FALSE(solve_linear(m, b).has_value());
  }
  SUBCASE("dimension mismatch is an input error") {
    CHECK_THROWS_AS(solve_linear(RationalMatrix(2, 2), RationalMatrix(3, 1)),
                    input_error);
  }
}

TEST_CASE("quotient_projection") {
  SUBCASE("quotient of Q^2 by e1") {
    RationalMatrix s(2, 1);
    s.at(0, 0) = 1;
    const QuotientProjection q = quotient_projection(2, s);
    CHECK(q.proj == from_ints(1, 2, {0, 1}));
    CHECK(q.complement_basis == from_ints(2, 1, {0, 1}));
  }
  SUBCASE("quotient by the zero subspace is the identity") {
    const QuotientProjection q = quotient_projection(3, RationalMatrix(3, 0));
    CHECK(q.proj == RationalMatrix::identity(3));
    CHECK(q.complement_basis == RationalMatrix::identity(3));
  }
  SUBCASE("quotient of Q^2 by the diagonal") {
    RationalMatrix s(2, 1);
    s.at(0, 0) = 1;
    s.at(1, 0) = 1;
    const QuotientProjection q = quotient_projection(2, s);
    CHECK(q.proj == from_ints(1, 2, {-1, 1}));
    CHECK((q.proj * s).is_zero());
  }
  SUBCASE("dependent columns are rejected") {
    const RationalMatrix s = from_ints(2, 2, {1, 2, 2, 4});
    CHECK_THROWS_AS(quotient_projection(2, s), input_error);
  }
}

TEST_CASE("reduced_column_basis of an invertible matrix is the identity") {
  const RationalMatrix m = from_ints(2, 2, {-1, -1, 1, -2});
  CHECK(reduced_column_basis(m) == RationalMatrix::identity(2));
}

TEST_CASE("elimination properties over a random corpus") {
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<std::size_t> dim(0, 5);
  for (int iter = 0; iter < 60; ++iter) {
    const std::size_t rows = dim(rng);
    const std::size_t cols = dim(rng);
    const RationalMatrix m = random_matrix(rng, rows, cols);
    const RankProfile p = rank_profile(m);
    CAPTURE(to_string(m));

    CHECK(p.rank == rank(m.transpose()));
    CHECK(p.rank + p.kernel_basis.cols() == cols);
    CHECK((m * p.kernel_basis).is_zero());
    CHECK(rank(p.kernel_basis) == p.kernel_basis.cols());
    CHECK(rank(p.image_basis) == p.rank);

    // solve_linear(M, M x) recovers a solution with the same image.
    const RationalMatrix x = random_matrix(rng, cols, 1);
    const RationalMatrix b = m * x;
    const auto solved = solve_linear(m, b);
    REQUIRE(solved.has_value());
    CHECK(m * *solved == b);

    // quotient by the column space
    const RationalMatrix basis = reduced_column_basis(m);
    const QuotientProjection q = quotient_projection(rows, basis);
    CHECK(q.proj.rows() == rows - p.rank);
    CHECK(rank(q.proj) == rows - p.rank);
    CHECK((q.proj * basis).is_zero());
    CHECK(q.proj * q.complement_basis ==
          RationalMatrix::identity(rows - p.rank));
  }
}

}  // TEST_SUITE
