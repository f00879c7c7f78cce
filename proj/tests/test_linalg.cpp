#include <doctest.h>

#include <Eigen/Dense>

#include "schmidt/linalg.hpp"
#include "schmidt/rational.hpp"
#include "schmidt/rng.hpp"

using namespace schmidt;

namespace {

Eigen::MatrixXd randomMatrix(CounterRng& rng, int n) {
  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rng.nextGaussian();
  return m;
}

}  // namespace

TEST_CASE("determinant of the identity") {
  CHECK(determinant(Eigen::MatrixXd::Identity(5, 5)) == doctest::Approx(1.0));
}

TEST_CASE("determinant vanishes on a repeated row") {
  CounterRng rng(3);
  Eigen::MatrixXd m = randomMatrix(rng, 4);
  m.row(2) = m.row(0);
  CHECK(std::abs(determinant(m)) < 1e-14);
}

TEST_CASE("determinant matches Eigen's LU on random matrices") {
  CounterRng rng(11);
  for (int n = 2; n <= 8; ++n) {
    Eigen::MatrixXd m = randomMatrix(rng, n);
    CHECK(determinant(m) ==
          doctest::Approx(m.determinant()).epsilon(1e-10));
  }
}

TEST_CASE("determinant rejects non-square input") {
  Eigen::MatrixXd m(2, 3);
  m.setZero();
  CHECK_THROWS_AS(determinant(m), std::invalid_argument);
  CHECK_THROWS_AS(adjugate(m), std::invalid_argument);
}

TEST_CASE("adjugate of the identity and the 2x2 closed form") {
  Eigen::MatrixXd id = Eigen::MatrixXd::Identity(4, 4);
  CHECK((adjugate(id) - id).cwiseAbs().maxCoeff() < 1e-15);

  Eigen::MatrixXd m(2, 2);
  m << 3.0, -2.0, 7.0, 5.0;
  Eigen::MatrixXd adj = adjugate(m);
  CHECK(adj(0, 0) == doctest::Approx(5.0));
  CHECK(adj(0, 1) == doctest::Approx(2.0));
  CHECK(adj(1, 0) == doctest::Approx(-7.0));
  CHECK(adj(1, 1) == doctest::Approx(3.0));
}

TEST_CASE("m * adj(m) = det(m) * I, checked against inverse * det") {
  CounterRng rng(7);
  for (int n = 2; n <= 8; ++n) {
    Eigen::MatrixXd m = randomMatrix(rng, n);
    double det = determinant(m);
    Eigen::MatrixXd adj = adjugate(m);
    double scale = std::max(1.0, m.cwiseAbs().maxCoeff() *
                                     adj.cwiseAbs().maxCoeff());
    CHECK((m * adj - det * Eigen::MatrixXd::Identity(n, n))
              .cwiseAbs()
              .maxCoeff() < 1e-9 * scale);
    if (std::abs(det) > 1e-6) {
      Eigen::MatrixXd viaInverse = m.inverse() * det;
      CHECK((adj - viaInverse).cwiseAbs().maxCoeff() < 1e-9 * scale);
    }
  }
}

TEST_CASE("adjugate stays finite and nonzero at det = 0") {
  // rank n-1 matrix: adjugate is rank 1 and nonzero
  CounterRng rng(5);
  Eigen::MatrixXd m = randomMatrix(rng, 5);
  m.col(4) = m.col(0) + m.col(1);
  CHECK(std::abs(determinant(m)) < 1e-12);
  CHECK(adjugate(m).cwiseAbs().maxCoeff() > 1e-6);
}

TEST_CASE("exact rational determinant and adjugate") {
  RationalMatrix m(3, 3);
  m << Rational(1, 2), Rational(1, 3), Rational(0),
       Rational(1, 5), Rational(1), Rational(2, 7),
       Rational(0), Rational(1, 4), Rational(3);
  Rational det = determinant(m);
  // cross-check in floating point
  Eigen::MatrixXd md(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) md(i, j) = m(i, j).toDouble();
  CHECK(det.toDouble() == doctest::Approx(determinant(md)).epsilon(1e-12));

  RationalMatrix adj = adjugate(m);
  RationalMatrix prod = m * adj;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(prod(i, j) == (i == j ? det : Rational(0)));
}

TEST_CASE("rational arithmetic normalizes and detects overflow") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  Rational big(std::int64_t(1) << 62);
  CHECK_THROWS_AS(big * big, std::overflow_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}
