#include <doctest.h>

#include <numbers>

#include "schmidt/qsim.hpp"
#include "schmidt/rng.hpp"

using namespace schmidt;
using namespace schmidt::qsim;

namespace {

StateVector fromAmplitudes(std::initializer_list<Complex> amps) {
  StateVector s;
  s.amplitudes = VectorXcd(amps.size());
  int q = 0;
  while ((1 << q) < static_cast<int>(amps.size())) ++q;
  s.qubitCount = q;
  Eigen::Index i = 0;
  for (Complex a : amps) s.amplitudes[i++] = a;
  return s;
}

MatrixXcd kron(const MatrixXcd& a, const MatrixXcd& b) {
  MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

MatrixXcd pauliDot(const Eigen::Vector3d& m) {
  MatrixXcd x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << 0, Complex(0, -1), Complex(0, 1), 0;
  z << 1, 0, 0, -1;
  return m.x() * x + m.y() * y + m.z() * z;
}

}  // namespace

TEST_CASE("X flips the computational basis") {
  StateVector s = StateVector::zero(1);
  StateVector out = applyGate(s, gateX(), {0});
  CHECK(std::abs(out.amplitudes[1] - 1.0) < 1e-15);
}

TEST_CASE("S twice equals X up to the global phase -i") {
  StateVector s = StateVector::zero(1);
  StateVector out = applyGate(applyGate(s, gateS(), {0}), gateS(), {0});
  CHECK(std::abs(out.amplitudes[0]) < 1e-15);
  CHECK(std::abs(out.amplitudes[1] - Complex(0, -1)) < 1e-14);
}

TEST_CASE("S_0 is S") {
  CHECK((gateStheta(0).matrix - gateS().matrix).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("CNOT entangles the equal superposition") {
  StateVector s = StateVector::zero(2);
  s = applyGate(s, gateH(), {0});
  s = applyGate(s, gateCNOT(Direction::Down), {0, 1});
  CHECK(std::abs(s.amplitudes[0] - 1 / std::sqrt(2.0)) < 1e-14);
  CHECK(std::abs(s.amplitudes[3] - 1 / std::sqrt(2.0)) < 1e-14);
  CHECK(std::abs(s.amplitudes[1]) < 1e-15);
  CHECK(std::abs(s.amplitudes[2]) < 1e-15);
}

TEST_CASE("gate application validates targets") {
  StateVector s = StateVector::zero(2);
  CHECK_THROWS_AS(applyGate(s, gateX(), {2}), std::out_of_range);
  CHECK_THROWS_AS(applyGate(s, gateCNOT(Direction::Down), {1, 1}),
                  std::invalid_argument);
}

TEST_CASE("gates are unitary by construction") {
  CHECK_THROWS_AS(Gate(MatrixXcd::Constant(2, 2, 0.5), "broken"),
                  std::invalid_argument);
}

TEST_CASE("ECR is its own inverse and factors through CR gates") {
  auto ecr = gateECR(Direction::Down).matrix;
  CHECK((ecr * ecr - MatrixXcd::Identity(4, 4)).cwiseAbs().maxCoeff() < 1e-14);
  MatrixXcd viaCr = gateCR(-1).matrix *
                    kron(gateX().matrix, MatrixXcd::Identity(2, 2)) *
                    gateCR(+1).matrix;
  CHECK((ecr - viaCr).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("all printed gate identities hold to 1e-12") {
  for (const auto& check : verifyGateIdentities()) {
    INFO(check.name);
    CHECK(check.deviation < 1e-12);
    CHECK(std::abs(std::abs(check.phase) - 1.0) < 1e-12);
  }
}

TEST_CASE("Q block reproduces the tetrahedron projections") {
  auto dirs = tetrahedronDirections();
  // outcome (a1 a2) in the order 00,10,01,11 -> direction 1..4
  const int patternOf[4] = {0b00, 0b10, 0b01, 0b11};
  CounterRng rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    Eigen::Vector2cd phi;
    phi << Complex(rng.nextGaussian(), rng.nextGaussian()),
        Complex(rng.nextGaussian(), rng.nextGaussian());
    phi.normalize();

    Circuit c;
    c.qubitCount = 2;
    appendQGate(c, 0, 1);
    StateVector s = StateVector::zero(2);
    s.amplitudes[0] = phi[0];
    s.amplitudes[2] = phi[1];  // working qubit is qubit 0
    for (const auto& step : c.steps) s = applyGate(s, step.gate, step.targets);
    Eigen::VectorXd probs = outcomeProbabilities(s);

    for (int j = 0; j < 4; ++j) {
      MatrixXcd proj = (MatrixXcd::Identity(2, 2) + pauliDot(dirs[j])) / 4.0;
      double tetra = (phi.adjoint() * proj * phi)(0, 0).real();
      int a1 = patternOf[j] >> 1, a2 = patternOf[j] & 1;
      CHECK(probs[a1 * 2 + a2] == doctest::Approx(tetra).epsilon(1e-10));
    }
  }
}

TEST_CASE("Z rotation before Q reverses the second outcome bit") {
  CounterRng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    Eigen::Vector2cd phi;
    phi << Complex(rng.nextGaussian(), rng.nextGaussian()),
        Complex(rng.nextGaussian(), rng.nextGaussian());
    phi.normalize();
    auto run = [&](bool rotate) {
      Circuit c;
      c.qubitCount = 2;
      if (rotate) c.append(gateZ(std::numbers::pi), {0});
      appendQGate(c, 0, 1);
      StateVector s = StateVector::zero(2);
      s.amplitudes[0] = phi[0];
      s.amplitudes[2] = phi[1];
      for (const auto& step : c.steps)
        s = applyGate(s, step.gate, step.targets);
      return outcomeProbabilities(s);
    };
    Eigen::VectorXd p0 = run(false), p1 = run(true);
    for (int a1 = 0; a1 < 2; ++a1)
      for (int a2 = 0; a2 < 2; ++a2)
        CHECK(p1[a1 * 2 + a2] ==
              doctest::Approx(p0[a1 * 2 + (1 - a2)]).epsilon(1e-10));
  }
}

TEST_CASE("bloch projectors") {
  Observable z = blochProjector({0, 0, 1});
  CHECK(std::abs(z.matrix(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(z.matrix(1, 1)) < 1e-15);
  Observable x = blochProjector({1, 0, 0});
  CHECK(std::abs(x.matrix(0, 1) - 0.5) < 1e-15);

  CHECK_THROWS_AS(blochProjector({0.5, 0, 0}), std::invalid_argument);

  CounterRng rng(9);
  for (int t = 0; t < 100; ++t) {
    Eigen::Vector3d a(rng.nextGaussian(), rng.nextGaussian(),
                      rng.nextGaussian());
    a.normalize();
    Observable p = blochProjector(a);
    CHECK(std::abs(p.matrix.trace().real() - 1.0) < 1e-12);
    CHECK((p.matrix * p.matrix - p.matrix).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("tetrahedron POVM completeness and traces") {
  Povm povm = tetrahedronPovm();
  MatrixXcd sum = MatrixXcd::Zero(2, 2);
  for (const auto& eff : povm.effects) sum += eff.matrix;
  CHECK((sum - MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);
  for (int j = 0; j < 4; ++j) {
    CHECK(povm.effects[j].matrix.trace().real() == doctest::Approx(0.25));
    CHECK(tetrahedronDirections()[j].norm() == doctest::Approx(1.0));
  }
  CHECK(povm.effects[4].matrix.trace().real() == doctest::Approx(1.0));
}

TEST_CASE("joint probabilities") {
  StateVector zz = StateVector::zero(2);
  Observable id(MatrixXcd::Identity(2, 2));
  CHECK(jointProbability(zz, id, id) == doctest::Approx(1.0));
  Observable pz = blochProjector({0, 0, 1});
  CHECK(jointProbability(zz, pz, pz) == doctest::Approx(1.0));

  // singlet vs a brute-force 4x4 density-matrix trace
  StateVector singlet = fromAmplitudes(
      {0.0, 1 / std::sqrt(2.0), -1 / std::sqrt(2.0), 0.0});
  CounterRng rng(13);
  for (int t = 0; t < 25; ++t) {
    Eigen::Vector3d a(rng.nextGaussian(), rng.nextGaussian(),
                      rng.nextGaussian());
    a.normalize();
    Observable pa = blochProjector(a);
    Observable pna = blochProjector(-a);
    MatrixXcd rho = singlet.amplitudes * singlet.amplitudes.adjoint();
    double direct = (kron(pa.matrix, pna.matrix) * rho).trace().real();
    CHECK(jointProbability(singlet, pa, pna) ==
          doctest::Approx(direct).epsilon(1e-12));
  }
}

TEST_CASE("joint probability over a complete POVM pair sums to 1") {
  Povm povm = tetrahedronPovm();
  CounterRng rng(17);
  for (int t = 0; t < 10; ++t) {
    VectorXcd amps(4);
    for (int i = 0; i < 4; ++i)
      amps[i] = Complex(rng.nextGaussian(), rng.nextGaussian());
    amps.normalize();
    StateVector s;
    s.qubitCount = 2;
    s.amplitudes = amps;
    double total = 0;
    for (const auto& ea : povm.effects)
      for (const auto& eb : povm.effects)
        total += jointProbability(s, ea, eb);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("random circuits preserve the norm") {
  CounterRng rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    int qubits = 3 + static_cast<int>(rng.nextU64() % 5);  // up to 7
    StateVector s = StateVector::zero(qubits);
    for (int g = 0; g < 30; ++g) {
      int kind = static_cast<int>(rng.nextU64() % 5);
      int q1 = static_cast<int>(rng.nextU64() % qubits);
      int q2 = static_cast<int>(rng.nextU64() % qubits);
      if (q2 == q1) q2 = (q1 + 1) % qubits;
      switch (kind) {
        case 0: s = applyGate(s, gateS(), {q1}); break;
        case 1: s = applyGate(s, gateZ(rng.nextDouble() * 6.28), {q1}); break;
        case 2: s = applyGate(s, gateH(), {q1}); break;
        case 3: s = applyGate(s, gateCNOT(Direction::Down), {q1, q2}); break;
        case 4: s = applyGate(s, gateECR(Direction::Down), {q1, q2}); break;
      }
    }
    CHECK(std::abs(s.norm() - 1.0) < 1e-10);
  }
}
