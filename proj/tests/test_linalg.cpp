#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "matrix.hpp"
#include "test_util.hpp"

using namespace gencomm;
using gencomm::testutil::det_cofactor;
using gencomm::testutil::random_small_int_matrix;

TEST_CASE("rank basics") {
  CHECK(rank(Matrix<Int>::identity(4)) == 4);
  CHECK(rank(Matrix<Int>(3, 3, Int(0))) == 0);
  CHECK(nullity(Matrix<Int>::identity(5)) == 0);
  CHECK(nullity(Matrix<Int>(4, 4, Int(0))) == 4);

  // the displayed 3x3 initial-coefficient matrix, rank 2 / nullity 1
  Matrix<Int> ic(3, 3, Int(0));
  ic(0, 0) = -1;
  ic(1, 1) = 1;
  ic(2, 0) = -1;
  CHECK(rank(ic) == 2);
  CHECK(nullity(ic) == 1);
  CHECK(rank(to_rational(ic)) == 2);
  CHECK(rank(reduce_mod(ic)) == 2);
}

TEST_CASE("det basics and error paths") {
  CHECK(det(Matrix<Int>::identity(5)) == 1);
  CHECK_THROWS_AS(det(Matrix<Int>(2, 3, Int(0))), std::invalid_argument);

  Matrix<Int> n1(2, 2, Int(0));
  n1(0, 0) = 2; n1(0, 1) = 1; n1(1, 0) = 1; n1(1, 1) = 2;
  CHECK(det(n1) == 3);
  CHECK(det_cofactor(n1) == 3);

  Matrix<Int> n2(3, 3, Int(0));
  n2(0, 0) = 2; n2(0, 1) = 2; n2(0, 2) = 1;
  n2(1, 0) = 2; n2(1, 1) = 6; n2(1, 2) = 2;
  n2(2, 0) = 1; n2(2, 1) = 2; n2(2, 2) = 2;
  CHECK(det(n2) == 10);
  CHECK(det_cofactor(n2) == 10);
}

TEST_CASE("bareiss agrees with cofactor expansion on random matrices") {
  SplitMix64 rng(7);
  for (int iter = 0; iter < 100; ++iter) {
    int n = 1 + static_cast<int>(rng.below(5));
    Matrix<Int> m = random_small_int_matrix(n, n, rng);
    CHECK(det(m) == det_cofactor(m));
  }
}

TEST_CASE("rational determinant clears denominators") {
  Matrix<Rational> m(2, 2, Rational(0));
  m(0, 0) = Rational(1, 2);
  m(0, 1) = Rational(1, 3);
  m(1, 0) = Rational(1, 4);
  m(1, 1) = Rational(1, 5);
  CHECK(det(m) == Rational(1, 10) - Rational(1, 12));
}

TEST_CASE("det multiplicativity on random 4x4 pairs") {
  SplitMix64 rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    Matrix<Int> a = random_small_int_matrix(4, 4, rng);
    Matrix<Int> b = random_small_int_matrix(4, 4, rng);
    CHECK(det(a * b) == det(a) * det(b));
  }
}

TEST_CASE("rank over Q matches rank over the prime field") {
  SplitMix64 rng(13);
  for (int iter = 0; iter < 50; ++iter) {
    int rows = 2 + static_cast<int>(rng.below(4));
    int cols = 2 + static_cast<int>(rng.below(4));
    Matrix<Int> m = random_small_int_matrix(rows, cols, rng, 50);
    CHECK(rank(m) == rank(reduce_mod(m)));
    CHECK(rank(m) == rank(to_rational(m)));
  }
}

TEST_CASE("prime-field determinant matches integer determinant mod p") {
  SplitMix64 rng(17);
  for (int iter = 0; iter < 50; ++iter) {
    int n = 1 + static_cast<int>(rng.below(4));
    Matrix<Int> m = random_small_int_matrix(n, n, rng);
    CHECK(det(reduce_mod(m)) == GfElem::from_int(det(m)));
  }
}

TEST_CASE("polynomial matrix rank, exact strategy") {
  Matrix<PolyQ> one(1, 1, PolyQ::variable(2, 2, 1, 0) * PolyQ::variable(2, 2, 2, 0));
  CHECK(rank_poly_exact(one).value == 1);
  CHECK(rank_poly_exact(Matrix<PolyQ>(2, 3, PolyQ::zero(2, 2))).value == 0);

  // x_{1,0} times a singular numeric pattern: rank 1
  Matrix<PolyQ> m(2, 2, PolyQ::zero(1, 2));
  PolyQ x = PolyQ::variable(1, 2, 1, 0);
  m(0, 0) = x;
  m(0, 1) = x;
  m(1, 0) = x;
  m(1, 1) = x;
  CHECK(rank_poly_exact(m).value == 1);
}

TEST_CASE("polynomial matrix rank, randomized strategy") {
  Matrix<PolyQ> m(2, 2, PolyQ::zero(2, 2));
  m(0, 0) = PolyQ::variable(2, 2, 1, 0) * PolyQ::variable(2, 2, 2, 0);
  m(1, 1) = PolyQ::variable(2, 2, 1, 1) * PolyQ::variable(2, 2, 2, 1);
  PolyRank pr = rank_poly_randomized(m, 3, 99);
  CHECK(pr.value == 2);
  CHECK(pr.lower_bound_only);
  CHECK(pr.trials == 3);
  CHECK_THROWS_AS(rank_poly_randomized(m, 0, 1), std::invalid_argument);
}

TEST_CASE("randomized rank never exceeds exact rank") {
  SplitMix64 rng(23);
  for (int iter = 0; iter < 20; ++iter) {
    int size = 1 + static_cast<int>(rng.below(3));
    Matrix<PolyQ> m(size, size, PolyQ::zero(2, 3));
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j) {
        if (rng.below(3) == 0) continue;  // leave some zero entries
        Monomial mono = Monomial::var(1, static_cast<int>(rng.below(3))) *
                        Monomial::var(2, static_cast<int>(rng.below(3)));
        m(i, j).add_term(mono, Rational(static_cast<long>(rng.between(-3, 3))));
      }
    int exact = rank_poly_exact(m).value;
    int randomized = rank_poly_randomized(m, 3, 1000 + static_cast<std::uint64_t>(iter)).value;
    CHECK(randomized <= exact);
    CHECK(randomized == exact);  // equality at desk scale
  }
}

TEST_CASE("matrix json round trip") {
  SplitMix64 rng(29);
  Matrix<Int> m = random_small_int_matrix(3, 4, rng, 1000000);
  nlohmann::json j = matrix_to_json(m);
  CHECK(matrix_from_json(j) == m);
  CHECK_THROWS(matrix_from_json(nlohmann::json{{"rows", 2}, {"cols", 2}, {"entries", {1, 2, 3}}}));
}
