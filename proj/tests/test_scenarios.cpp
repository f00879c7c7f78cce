#include <doctest.h>

#include <cmath>

#include "schmidt/linalg.hpp"
#include "schmidt/scenarios.hpp"
#include "schmidt/witness.hpp"

using namespace schmidt;
using namespace schmidt::scenarios;

namespace {

ScenarioSpec specA(MeasurementSet set, int middle = 2) {
  return {ScenarioKind::A, set, middle, {0, 0}};
}

}  // namespace

TEST_CASE("measurement sets have the printed geometry") {
  auto sI = measurementSetI();
  auto sII = measurementSetII();
  for (const auto& v : sI) CHECK(std::abs(v.norm() - 1.0) < 1e-14);
  for (const auto& v : sII) CHECK(std::abs(v.norm() - 1.0) < 1e-14);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      double dot = sI[i].dot(sI[j]);
      CHECK(std::abs(std::abs(dot) - 1.0 / 3.0) < 1e-14);
    }
  CHECK(std::abs(sII[0].dot(sII[1])) < 1e-15);
  CHECK(std::abs(sII[0].dot(sII[2])) < 1e-15);
  CHECK(std::abs(sII[1].dot(sII[2])) < 1e-15);
}

TEST_CASE("measurement angles map the target direction onto |0>") {
  for (auto set : {MeasurementSet::SetI, MeasurementSet::SetII})
    for (const auto& base : measurementVectors(set))
      for (double sign : {1.0, -1.0}) {
        Eigen::Vector3d a = sign * base;
        auto [t1, t2] = measurementAngles(a);
        // +1 eigenstate of a.sigma
        double theta = std::acos(std::clamp(a.z(), -1.0, 1.0));
        double phi = std::atan2(a.y(), a.x());
        Eigen::Vector2cd v;
        v << std::cos(theta / 2),
            std::exp(std::complex<double>(0, phi)) * std::sin(theta / 2);
        Eigen::Vector2cd out =
            qsim::gateStheta(t2).matrix * qsim::gateStheta(t1).matrix * v;
        CHECK(std::norm(out[0]) == doctest::Approx(1.0).epsilon(1e-12));
      }
}

TEST_CASE("circuit path matches the operator path on every setting") {
  qsim::StateVector bell = idealBellState();
  for (auto set : {MeasurementSet::SetI, MeasurementSet::SetII}) {
    auto vecs = measurementVectors(set);
    ScenarioSpec spec = specA(set);
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) {
        auto d = settingDistributionA(spec, i, j);
        qsim::Observable pa = qsim::blochProjector(vecs[i - 1]);
        qsim::Observable pb = qsim::blochProjector(-vecs[j - 1]);
        double direct = qsim::jointProbability(bell, pa, pb);
        CHECK(d[0] == doctest::Approx(direct).epsilon(1e-10));
      }
  }
}

TEST_CASE("two and three middle qubits give identical end statistics") {
  for (auto set : {MeasurementSet::SetI, MeasurementSet::SetII}) {
    auto d2 = settingDistributionsA(specA(set, 2));
    auto d3 = settingDistributionsA(specA(set, 3));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int o = 0; o < 4; ++o)
          CHECK(d2[i][j][o] == doctest::Approx(d3[i][j][o]).epsilon(1e-10));
  }
}

TEST_CASE("end qubits are maximally entangled before the readout rotations") {
  // local marginals of either end must be 1/2 for every measurement choice
  for (int middle : {2, 3}) {
    auto dists = settingDistributionsA(specA(MeasurementSet::SetI, middle));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        CHECK(dists[i][j][0] + dists[i][j][1] ==
              doctest::Approx(0.5).epsilon(1e-10));
        CHECK(dists[i][j][0] + dists[i][j][2] ==
              doctest::Approx(0.5).epsilon(1e-10));
      }
  }
}

TEST_CASE("ideal kind-A matrices are null witnesses with flat marginals") {
  for (auto set : {MeasurementSet::SetI, MeasurementSet::SetII}) {
    ProbabilityMatrix p = idealMatrixA(specA(set));
    p.validate();
    CHECK(std::abs(witness(p)) < 1e-12);
    for (int i = 1; i <= 4; ++i) {
      CHECK(p.entries(i, 0) == doctest::Approx(0.5).epsilon(1e-12));
      CHECK(p.entries(0, i) == doctest::Approx(0.5).epsilon(1e-12));
    }
  }
}

TEST_CASE("ideal kind-A settings obey no-signaling exactly") {
  auto dists = settingDistributionsA(specA(MeasurementSet::SetII));
  for (int i = 0; i < 4; ++i) {
    double ref = dists[i][0][0] + dists[i][0][1];
    for (int j = 1; j < 4; ++j)
      CHECK(dists[i][j][0] + dists[i][j][1] ==
            doctest::Approx(ref).epsilon(1e-12));
  }
  for (int j = 0; j < 4; ++j) {
    double ref = dists[0][j][0] + dists[0][j][2];
    for (int i = 1; i < 4; ++i)
      CHECK(dists[i][j][0] + dists[i][j][2] ==
            doctest::Approx(ref).epsilon(1e-12));
  }
}

TEST_CASE("test-(b) circuit reproduces the printed 64-outcome distribution") {
  Eigen::VectorXd raw = idealRawDistributionB();
  CHECK(raw.sum() == doctest::Approx(1.0).epsilon(1e-12));
  int zeros = 0;
  for (int idx = 0; idx < 64; ++idx) {
    int a0 = (idx >> 5) & 1, a1 = (idx >> 4) & 1, a2 = (idx >> 3) & 1;
    int b0 = (idx >> 2) & 1, b1 = (idx >> 1) & 1, b2 = idx & 1;
    bool zero = (a1 == b1) && ((a0 + a2 - b0 - b2) % 2 == 0);
    if (zero) {
      ++zeros;
      CHECK(std::abs(raw[idx]) < 1e-12);
    } else {
      CHECK(raw[idx] == doctest::Approx(1.0 / 48).epsilon(1e-10));
    }
  }
  CHECK(zeros == 16);

  double pa0 = 0, pb0 = 0;
  for (int idx = 0; idx < 64; ++idx) {
    if (((idx >> 5) & 1) == 0) pa0 += raw[idx];
    if (((idx >> 2) & 1) == 0) pb0 += raw[idx];
  }
  CHECK(pa0 == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(pb0 == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("aggregation is probability preserving and null for the ideal") {
  Eigen::VectorXd raw = idealRawDistributionB();
  for (int a0 : {0, 1})
    for (int b0 : {0, 1}) {
      ProbabilityMatrix q = aggregateB(raw, {a0, b0});
      q.validate();
      CHECK(std::abs(witness(q)) < 1e-12);
      CHECK(q.entries.row(4).sum() == doctest::Approx(0.5).epsilon(1e-12));
      CHECK(q.entries.col(4).sum() == doctest::Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("aggregating the uniform distribution gives the block-size matrix") {
  Eigen::VectorXd uniform = Eigen::VectorXd::Constant(64, 1.0 / 64);
  ProbabilityMatrix q = aggregateB(uniform, {0, 0});
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c) {
      double rows = (r < 4) ? 1.0 : 4.0;
      double cols = (c < 4) ? 1.0 : 4.0;
      CHECK(q.entries(r, c) ==
            doctest::Approx(rows * cols / 64.0).epsilon(1e-14));
    }
  // rank-1 block structure forces a vanishing determinant; brute-force value
  Eigen::MatrixXd m = q.entries;
  CHECK(std::abs(determinant(m)) < 1e-18);
}

TEST_CASE("aggregateB validates its input") {
  Eigen::VectorXd bad = Eigen::VectorXd::Constant(64, 1.0 / 32);
  CHECK_THROWS_AS(aggregateB(bad, {0, 0}), std::invalid_argument);
}

TEST_CASE("prepare-and-measure counterexample") {
  Counterexample ce = prepareMeasureCounterexample();
  CHECK(ce.det == Rational(1, 8));
  CHECK(ce.detPrinted == Rational(1, 8));
  int mismatches = 0;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      if (ce.constructed(i, j) != ce.printed(i, j)) ++mismatches;
  CHECK(mismatches == 1);
  CHECK(ce.constructed(6, 3) == Rational(0));
  CHECK(ce.printed(6, 3) == Rational(1, 2));
  // double-precision route agrees with the exact one
  Eigen::MatrixXd m(7, 7);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) m(i, j) = ce.constructed(i, j).toDouble();
  CHECK(determinant(m) == doctest::Approx(0.125).epsilon(1e-14));
}

TEST_CASE("scenario specs validate") {
  ScenarioSpec bad{ScenarioKind::A, MeasurementSet::Tetrahedron, 2, {0, 0}};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  ScenarioSpec bad2{ScenarioKind::B, MeasurementSet::SetI, 2, {0, 0}};
  CHECK_THROWS_AS(bad2.validate(), std::invalid_argument);
  ScenarioSpec bad3{ScenarioKind::A, MeasurementSet::SetI, 5, {0, 0}};
  CHECK_THROWS_AS(bad3.validate(), std::invalid_argument);
}
