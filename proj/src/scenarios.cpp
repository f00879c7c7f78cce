#include "schmidt/scenarios.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace schmidt {
namespace scenarios {

using qsim::Circuit;
using qsim::Direction;
using qsim::StateVector;

void ScenarioSpec::validate() const {
  if (kind == ScenarioKind::A) {
    if (set == MeasurementSet::Tetrahedron)
      throw std::invalid_argument("scenario A requires set I or II");
    if (middleQubits < 2 || middleQubits > 3)
      throw std::invalid_argument("scenario A supports 2 or 3 middle qubits");
  } else {
    if (set != MeasurementSet::Tetrahedron)
      throw std::invalid_argument("scenario B requires the tetrahedron set");
    if (spectatorChoice.first < 0 || spectatorChoice.first > 1 ||
        spectatorChoice.second < 0 || spectatorChoice.second > 1)
      throw std::invalid_argument("spectator choice bits must be 0 or 1");
  }
}

std::array<Eigen::Vector3d, 4> measurementSetI() {
  const double s = 1.0 / std::sqrt(3.0);
  return {Eigen::Vector3d(s, s, s), Eigen::Vector3d(s, -s, s),
          Eigen::Vector3d(-s, s, s), Eigen::Vector3d(-s, -s, s)};
}

std::array<Eigen::Vector3d, 4> measurementSetII() {
  const double s = 1.0 / std::sqrt(3.0);
  return {Eigen::Vector3d(1, 0, 0), Eigen::Vector3d(0, 1, 0),
          Eigen::Vector3d(0, 0, 1), Eigen::Vector3d(s, s, s)};
}

std::array<Eigen::Vector3d, 4> measurementVectors(MeasurementSet set) {
  switch (set) {
    case MeasurementSet::SetI:
      return measurementSetI();
    case MeasurementSet::SetII:
      return measurementSetII();
    default:
      throw std::invalid_argument("no Bloch vectors for the tetrahedron set");
  }
}

std::pair<double, double> measurementAngles(const Eigen::Vector3d& a) {
  // S_theta rotates the Bloch sphere by pi/2 about n = (cos t, -sin t, 0):
  // v -> n(n.v) + n x v. First rotate a into the equator, then onto z.
  auto rotate = [](double theta, const Eigen::Vector3d& v) {
    Eigen::Vector3d n(std::cos(theta), -std::sin(theta), 0.0);
    return Eigen::Vector3d(n * n.dot(v) + n.cross(v));
  };
  double theta1 = std::atan2(-a.y(), a.x());
  Eigen::Vector3d mid = rotate(theta1, a);
  double theta2 = std::atan2(mid.x(), mid.y());
  return {theta1, theta2};
}

StateVector idealBellState() {
  StateVector s = StateVector::zero(2);
  s.amplitudes[0] = 1.0 / std::sqrt(2.0);
  s.amplitudes[3] = qsim::Complex(0.0, -1.0) / std::sqrt(2.0);
  return s;
}

Circuit buildCircuitA(const ScenarioSpec& spec, int i, int j) {
  spec.validate();
  if (i < 1 || i > 4 || j < 1 || j > 4)
    throw std::out_of_range("measurement indices must be 1..4");

  Circuit c;
  c.qubitCount = spec.middleQubits + 2;
  const int endA = 0;
  const int endB = c.qubitCount - 1;
  auto cnot = [&](int control, int target) {
    c.append(qsim::gateCNOT(Direction::Down), {control, target});
  };

  if (spec.middleQubits == 2) {
    c.append(qsim::gateS(), {1});
    cnot(1, 2);
    cnot(1, 0);  // swap entanglement out to A
    cnot(0, 1);
    cnot(2, 3);  // and out to B
    cnot(3, 2);
  } else {
    c.append(qsim::gateS(), {2});
    cnot(2, 3);
    cnot(2, 1);
    cnot(1, 2);
    cnot(3, 4);
    cnot(4, 3);
    cnot(1, 0);
    cnot(0, 1);
  }

  const auto vecs = measurementVectors(spec.set);
  const Eigen::Vector3d aDir = vecs[i - 1];
  const Eigen::Vector3d bDir = -vecs[j - 1];  // party B uses opposite vectors
  auto [a1, a2] = measurementAngles(aDir);
  auto [b1, b2] = measurementAngles(bDir);
  c.append(qsim::gateStheta(a1), {endA});
  c.append(qsim::gateStheta(b1), {endB});
  c.append(qsim::gateStheta(a2), {endA});
  c.append(qsim::gateStheta(b2), {endB});
  return c;
}

std::array<double, 4> settingDistributionA(const ScenarioSpec& spec, int i,
                                           int j) {
  StateVector s = qsim::runCircuit(buildCircuitA(spec, i, j));
  Eigen::VectorXd probs = qsim::outcomeProbabilities(s);
  const int q = s.qubitCount;
  const Eigen::Index bitA = Eigen::Index(1) << (q - 1);
  const Eigen::Index bitB = 1;
  std::array<double, 4> out{0, 0, 0, 0};  // yy, yn, ny, nn; 0 = yes
  for (Eigen::Index idx = 0; idx < probs.size(); ++idx) {
    int aNo = (idx & bitA) ? 1 : 0;
    int bNo = (idx & bitB) ? 1 : 0;
    out[static_cast<std::size_t>(aNo * 2 + bNo)] += probs[idx];
  }
  return out;
}

std::array<std::array<std::array<double, 4>, 4>, 4> settingDistributionsA(
    const ScenarioSpec& spec) {
  std::array<std::array<std::array<double, 4>, 4>, 4> all{};
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      all[i - 1][j - 1] = settingDistributionA(spec, i, j);
  return all;
}

ProbabilityMatrix idealMatrixA(const ScenarioSpec& spec) {
  const auto dists = settingDistributionsA(spec);
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(5, 5);
  p(0, 0) = 1.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const auto& d = dists[i][j];
      p(i + 1, j + 1) = d[0];
      p(i + 1, 0) += (d[0] + d[1]) / 4.0;  // A marginal, averaged over j
      p(0, j + 1) += (d[0] + d[2]) / 4.0;  // B marginal, averaged over i
    }
  return makeProbabilityMatrix(std::move(p), ScenarioKind::A);
}

Circuit buildCircuitB() {
  // qubits: 0=a0 1=a1 2=a2 3=connector 4=b2 5=b1 6=b0
  Circuit c;
  c.qubitCount = 7;
  auto cnot = [&](int control, int target) {
    c.append(qsim::gateCNOT(Direction::Down), {control, target});
  };
  c.append(qsim::gateS(), {3});
  cnot(3, 1);
  cnot(3, 5);
  cnot(1, 3);
  c.append(qsim::gateZminus(), {5});
  c.append(qsim::gateX(), {5});
  // spectator fan-out and x-basis rotations
  cnot(1, 0);
  cnot(5, 6);
  for (int q : {0, 6}) {
    c.append(qsim::gateZplus(), {q});
    c.append(qsim::gateS(), {q});
  }
  qsim::appendQGate(c, 1, 2);
  qsim::appendQGate(c, 5, 4);
  return c;
}

Eigen::VectorXd idealRawDistributionB() {
  StateVector s = qsim::runCircuit(buildCircuitB());
  Eigen::VectorXd probs = qsim::outcomeProbabilities(s);
  Eigen::VectorXd raw = Eigen::VectorXd::Zero(64);
  for (Eigen::Index idx = 0; idx < probs.size(); ++idx) {
    // circuit order a0 a1 a2 conn b2 b1 b0, qubit 0 most significant
    int a0 = (idx >> 6) & 1, a1 = (idx >> 5) & 1, a2 = (idx >> 4) & 1;
    int b2 = (idx >> 2) & 1, b1 = (idx >> 1) & 1, b0 = idx & 1;
    int key = (a0 << 5) | (a1 << 4) | (a2 << 3) | (b0 << 2) | (b1 << 1) | b2;
    raw[key] += probs[idx];
  }
  return raw;
}

std::pair<int, int> aggregatedIndexB(int rawIndex,
                                     std::pair<int, int> spectatorChoice) {
  int a0 = (rawIndex >> 5) & 1, a1 = (rawIndex >> 4) & 1,
      a2 = (rawIndex >> 3) & 1;
  int b0 = (rawIndex >> 2) & 1, b1 = (rawIndex >> 1) & 1, b2 = rawIndex & 1;
  // working bits (a1 a2): 00,10,01,11 -> outcomes 1..4; opposite spectator -> 5
  int row = (a0 == spectatorChoice.first) ? a1 + 2 * a2 : 4;
  int col = (b0 == spectatorChoice.second) ? b1 + 2 * b2 : 4;
  return {row, col};
}

ProbabilityMatrix aggregateB(const Eigen::VectorXd& raw64,
                             std::pair<int, int> spectatorChoice) {
  if (raw64.size() != 64)
    throw std::invalid_argument("aggregateB: expected 64 raw outcomes");
  if (std::abs(raw64.sum() - 1.0) > 1e-10)
    throw std::invalid_argument("aggregateB: raw distribution must sum to 1");
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(5, 5);
  for (int idx = 0; idx < 64; ++idx) {
    auto [r, c] = aggregatedIndexB(idx, spectatorChoice);
    p(r, c) += raw64[idx];
  }
  return makeProbabilityMatrix(std::move(p), ScenarioKind::B);
}

namespace {

using Vec3i = std::array<int, 3>;

int dot3(const Vec3i& a, const Vec3i& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

}  // namespace

Counterexample prepareMeasureCounterexample() {
  const Vec3i ex{1, 0, 0}, ey{0, 1, 0}, ez{0, 0, 1};
  // product states (c_i, d_i), i = 0..6
  const std::array<Vec3i, 7> c{ex, ex, ex, ey, ey, ey, ez};
  const std::array<Vec3i, 7> d{ex, ey, ez, ex, ey, ez, ex};
  // measurement pairs per column j: p(i|2j) - p(i|2j+1). Columns 0..2 flip
  // both vectors between the pair, columns 3..6 flip only the first.
  const std::array<Vec3i, 7> a{ex, ex, ex, ey, ey, ey, ez};
  const std::array<Vec3i, 7> b{ex, ey, ez, ex, ey, ez, ey};

  RationalMatrix m(7, 7);
  const Rational half(1, 2);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      Rational ca(dot3(c[i], a[j]));
      Rational db(dot3(d[i], b[j]));
      m(i, j) = (j < 3) ? (ca + db) * half : ca * (Rational(1) + db) * half;
    }

  RationalMatrix printed = m;
  printed(6, 3) = half;  // as published; not reachable by the construction

  Counterexample out;
  out.constructed = m;
  out.printed = printed;
  out.det = determinant(m);
  out.detPrinted = determinant(printed);
  return out;
}

}  // namespace scenarios
}  // namespace schmidt
