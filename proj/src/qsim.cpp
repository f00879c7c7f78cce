#include "schmidt/qsim.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace schmidt {
namespace qsim {

namespace {

constexpr int kMaxQubits = 8;
const Complex kI(0.0, 1.0);

MatrixXcd pauliX() {
  MatrixXcd m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

MatrixXcd pauliY() {
  MatrixXcd m(2, 2);
  m << 0, -kI, kI, 0;
  return m;
}

MatrixXcd pauliZ() {
  MatrixXcd m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

MatrixXcd kron2(const MatrixXcd& a, const MatrixXcd& b) {
  MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// exp(-i theta V / 2) for V with V^2 = 1
MatrixXcd halfTurn(const MatrixXcd& v, double theta) {
  MatrixXcd id = MatrixXcd::Identity(v.rows(), v.cols());
  return std::cos(theta / 2) * id - kI * std::sin(theta / 2) * v;
}

void assertUnitary(const MatrixXcd& m, const std::string& label) {
  MatrixXcd delta = m.adjoint() * m - MatrixXcd::Identity(m.rows(), m.cols());
  if (delta.cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("Gate " + label + " is not unitary");
}

}  // namespace

StateVector StateVector::zero(int qubits) {
  if (qubits < 1 || qubits > kMaxQubits)
    throw std::invalid_argument("StateVector: qubit count out of range");
  StateVector s;
  s.qubitCount = qubits;
  s.amplitudes = VectorXcd::Zero(Eigen::Index(1) << qubits);
  s.amplitudes[0] = 1.0;
  return s;
}

Gate::Gate(MatrixXcd m, std::string name) : matrix(std::move(m)), label(std::move(name)) {
  if (matrix.rows() == 2 && matrix.cols() == 2)
    arity = 1;
  else if (matrix.rows() == 4 && matrix.cols() == 4)
    arity = 2;
  else
    throw std::invalid_argument("Gate " + label + ": must be 2x2 or 4x4");
  assertUnitary(matrix, label);
}

Observable::Observable(MatrixXcd m, double tol) : matrix(std::move(m)) {
  if (matrix.rows() != matrix.cols())
    throw std::invalid_argument("Observable must be square");
  if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > 1e-12)
    throw std::invalid_argument("Observable must be Hermitian");
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(matrix);
  double lo = es.eigenvalues().minCoeff();
  double hi = es.eigenvalues().maxCoeff();
  if (lo < -tol || hi > 1.0 + tol)
    throw std::invalid_argument("Observable violates 0 <= A <= 1");
}

Povm::Povm(std::vector<Observable> e, double tol) : effects(std::move(e)) {
  if (effects.empty()) throw std::invalid_argument("Povm: no effects");
  MatrixXcd sum = MatrixXcd::Zero(effects[0].matrix.rows(),
                                  effects[0].matrix.cols());
  for (const auto& eff : effects) sum += eff.matrix;
  sum -= MatrixXcd::Identity(sum.rows(), sum.cols());
  if (sum.cwiseAbs().maxCoeff() > tol)
    throw std::invalid_argument("Povm: effects do not sum to identity");
}

void Circuit::append(Gate g, std::vector<int> targets) {
  for (int t : targets)
    if (t < 0 || t >= qubitCount)
      throw std::out_of_range("Circuit: target qubit out of range");
  if (targets.size() == 2 && targets[0] == targets[1])
    throw std::invalid_argument("Circuit: repeated target");
  if (static_cast<int>(targets.size()) != g.arity)
    throw std::invalid_argument("Circuit: arity/target mismatch");
  steps.push_back(CircuitStep{std::move(g), std::move(targets)});
}

Gate gateX() { return Gate(pauliX(), "X"); }
Gate gateY() { return Gate(pauliY(), "Y"); }
Gate gateZpi() { return Gate(pauliZ(), "Z"); }

Gate gateH() {
  MatrixXcd m(2, 2);
  m << 1, 1, 1, -1;
  return Gate(m / std::sqrt(2.0), "H");
}

Gate gateS() {
  MatrixXcd m = (MatrixXcd::Identity(2, 2) - kI * pauliX()) / std::sqrt(2.0);
  return Gate(m, "S");
}

Gate gateZ(double theta) {
  MatrixXcd m(2, 2);
  m << std::exp(-kI * (theta / 2)), 0, 0, std::exp(kI * (theta / 2));
  return Gate(m, "Z_theta");
}

Gate gateZplus() { return gateZ(std::numbers::pi / 2); }
Gate gateZminus() { return gateZ(-std::numbers::pi / 2); }

Gate gateStheta(double theta) {
  MatrixXcd z = gateZ(theta).matrix;
  return Gate(z.adjoint() * gateS().matrix * z, "S_theta");
}

Gate gateYpm(int sign) {
  // Y_{+-} = Z_{+-} S Z_{-+}
  MatrixXcd m = gateZ(sign * std::numbers::pi / 2).matrix * gateS().matrix *
                gateZ(-sign * std::numbers::pi / 2).matrix;
  return Gate(m, sign > 0 ? "Y+" : "Y-");
}

Gate gateCNOT(Direction dir) {
  MatrixXcd m = MatrixXcd::Zero(4, 4);
  if (dir == Direction::Down) {
    // control is the first (upper) qubit of |ab>
    m(0, 0) = m(1, 1) = m(3, 2) = m(2, 3) = 1;
  } else {
    m(0, 0) = m(3, 1) = m(2, 2) = m(1, 3) = 1;
  }
  return Gate(m, dir == Direction::Down ? "CNOTv" : "CNOT^");
}

Gate gateCR(int sign) {
  return Gate(halfTurn(kron2(pauliZ(), pauliX()), sign * std::numbers::pi / 4),
              sign > 0 ? "CR+" : "CR-");
}

Gate gateECR(Direction dir) {
  MatrixXcd m;
  if (dir == Direction::Down)
    m = (kron2(pauliX(), MatrixXcd::Identity(2, 2)) -
         kron2(pauliY(), pauliX())) / std::sqrt(2.0);
  else
    m = (kron2(MatrixXcd::Identity(2, 2), pauliX()) -
         kron2(pauliX(), pauliY())) / std::sqrt(2.0);
  return Gate(m, dir == Direction::Down ? "ECRv" : "ECR^");
}

StateVector applyGate(const StateVector& s, const Gate& g,
                      const std::vector<int>& targets) {
  if (static_cast<int>(targets.size()) != g.arity)
    throw std::invalid_argument("applyGate: arity/target mismatch");
  for (int t : targets)
    if (t < 0 || t >= s.qubitCount)
      throw std::out_of_range("applyGate: target out of range");

  StateVector out = s;
  const int q = s.qubitCount;
  const Eigen::Index dim = s.amplitudes.size();

  if (g.arity == 1) {
    const int shift = q - 1 - targets[0];  // qubit 0 = MSB
    const Eigen::Index bit = Eigen::Index(1) << shift;
    for (Eigen::Index idx = 0; idx < dim; ++idx) {
      if (idx & bit) continue;
      Complex a0 = s.amplitudes[idx];
      Complex a1 = s.amplitudes[idx | bit];
      out.amplitudes[idx] = g.matrix(0, 0) * a0 + g.matrix(0, 1) * a1;
      out.amplitudes[idx | bit] = g.matrix(1, 0) * a0 + g.matrix(1, 1) * a1;
    }
    return out;
  }

  if (targets[0] == targets[1])
    throw std::invalid_argument("applyGate: repeated target");
  const Eigen::Index bitA = Eigen::Index(1) << (q - 1 - targets[0]);
  const Eigen::Index bitB = Eigen::Index(1) << (q - 1 - targets[1]);
  for (Eigen::Index idx = 0; idx < dim; ++idx) {
    if ((idx & bitA) || (idx & bitB)) continue;
    Eigen::Index i00 = idx, i01 = idx | bitB, i10 = idx | bitA,
                 i11 = idx | bitA | bitB;
    Complex a00 = s.amplitudes[i00], a01 = s.amplitudes[i01],
            a10 = s.amplitudes[i10], a11 = s.amplitudes[i11];
    // gate matrix basis order |ab> = 00,01,10,11 with a = first target
    out.amplitudes[i00] = g.matrix(0, 0) * a00 + g.matrix(0, 1) * a01 +
                          g.matrix(0, 2) * a10 + g.matrix(0, 3) * a11;
    out.amplitudes[i01] = g.matrix(1, 0) * a00 + g.matrix(1, 1) * a01 +
                          g.matrix(1, 2) * a10 + g.matrix(1, 3) * a11;
    out.amplitudes[i10] = g.matrix(2, 0) * a00 + g.matrix(2, 1) * a01 +
                          g.matrix(2, 2) * a10 + g.matrix(2, 3) * a11;
    out.amplitudes[i11] = g.matrix(3, 0) * a00 + g.matrix(3, 1) * a01 +
                          g.matrix(3, 2) * a10 + g.matrix(3, 3) * a11;
  }
  return out;
}

StateVector runCircuit(const Circuit& c) {
  StateVector s = StateVector::zero(c.qubitCount);
  for (const auto& step : c.steps) s = applyGate(s, step.gate, step.targets);
  return s;
}

Eigen::VectorXd outcomeProbabilities(const StateVector& s) {
  return s.amplitudes.cwiseAbs2();
}

Observable blochProjector(const Eigen::Vector3d& a) {
  if (std::abs(a.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("blochProjector: direction must be unit");
  MatrixXcd m = 0.5 * (MatrixXcd::Identity(2, 2) + a.x() * pauliX() +
                       a.y() * pauliY() + a.z() * pauliZ());
  return Observable(std::move(m));
}

std::vector<Eigen::Vector3d> tetrahedronDirections() {
  const double s23 = std::sqrt(2.0 / 3.0);
  const double s13 = 1.0 / std::sqrt(3.0);
  return {{s23, 0, -s13}, {0, s23, s13}, {-s23, 0, -s13}, {0, -s23, s13}};
}

Povm tetrahedronPovm() {
  std::vector<Observable> effects;
  for (const auto& m : tetrahedronDirections()) {
    MatrixXcd eff = 0.125 * (MatrixXcd::Identity(2, 2) + m.x() * pauliX() +
                             m.y() * pauliY() + m.z() * pauliZ());
    effects.emplace_back(std::move(eff));
  }
  effects.emplace_back(MatrixXcd(0.5 * MatrixXcd::Identity(2, 2)));
  return Povm(std::move(effects), 1e-14);
}

double jointProbability(const StateVector& psi, const Observable& a,
                        const Observable& b) {
  if (psi.qubitCount != 2)
    throw std::invalid_argument("jointProbability: expects a 2-qubit state");
  MatrixXcd coeff(2, 2);
  coeff << psi.amplitudes[0], psi.amplitudes[1], psi.amplitudes[2],
      psi.amplitudes[3];
  return jointProbability(coeff, a.matrix, b.matrix);
}

double jointProbability(const MatrixXcd& coeff, const MatrixXcd& a,
                        const MatrixXcd& b) {
  if (a.rows() != coeff.rows() || b.rows() != coeff.cols())
    throw std::invalid_argument("jointProbability: dimension mismatch");
  Complex v = (coeff.adjoint() * a * coeff * b.transpose()).trace();
  return v.real();
}

void appendQGate(Circuit& c, int working, int ancilla) {
  const double eta = std::acos(std::sqrt(1.0 / 3.0));
  c.append(gateS(), {ancilla});
  c.append(gateZ(eta), {ancilla});
  c.append(gateS(), {ancilla});
  c.append(gateZ(std::numbers::pi / 4), {ancilla});
  c.append(gateZ(-std::numbers::pi / 4), {working});
  c.append(gateCNOT(Direction::Down), {ancilla, working});
  c.append(gateZplus(), {ancilla});
  c.append(gateS(), {ancilla});
}

namespace {

IdentityCheck comparePhase(const std::string& name, const MatrixXcd& lhs,
                           const MatrixXcd& rhs) {
  // fit the global phase from the largest-magnitude element of rhs
  Eigen::Index bi = 0, bj = 0;
  double best = -1;
  for (Eigen::Index i = 0; i < rhs.rows(); ++i)
    for (Eigen::Index j = 0; j < rhs.cols(); ++j)
      if (std::abs(rhs(i, j)) > best) {
        best = std::abs(rhs(i, j));
        bi = i;
        bj = j;
      }
  Complex phase = lhs(bi, bj) / rhs(bi, bj);
  phase /= std::abs(phase);
  double dev = (lhs - phase * rhs).cwiseAbs().maxCoeff();
  return IdentityCheck{name, dev, phase};
}

}  // namespace

std::vector<IdentityCheck> verifyGateIdentities() {
  std::vector<IdentityCheck> out;
  const MatrixXcd id2 = MatrixXcd::Identity(2, 2);
  const MatrixXcd id4 = MatrixXcd::Identity(4, 4);
  const MatrixXcd ecr = gateECR(Direction::Down).matrix;
  const MatrixXcd h = gateH().matrix;
  const MatrixXcd s = gateS().matrix;
  const MatrixXcd x = pauliX();
  const MatrixXcd zp = gateZplus().matrix;
  const MatrixXcd zm = gateZminus().matrix;
  const MatrixXcd yp = gateYpm(+1).matrix;
  const MatrixXcd ym = gateYpm(-1).matrix;

  out.push_back(comparePhase("ECRv ECRv = 1", ecr * ecr, id4));
  out.push_back(comparePhase(
      "ECRv = CR- (X x 1) CR+",
      gateCR(-1).matrix * kron2(x, id2) * gateCR(+1).matrix, ecr));
  out.push_back(comparePhase("ECR^ = (H x H) ECRv (Y+ x Y-)",
                             gateECR(Direction::Up).matrix,
                             kron2(h, h) * ecr * kron2(yp, ym)));
  out.push_back(comparePhase("CNOTv = (Z+ x 1) ECRv (X x S)",
                             gateCNOT(Direction::Down).matrix,
                             kron2(zp, id2) * ecr * kron2(x, s)));
  out.push_back(comparePhase(
      "CNOT^ = (H x H) ECRv (S x S)(Z- x H)", gateCNOT(Direction::Up).matrix,
      kron2(h, h) * ecr * kron2(s, s) * kron2(zm, h)));
  out.push_back(comparePhase("H = Z+ S Z+", h, zp * s * zp));
  out.push_back(comparePhase("Y+ = Z+ S Z-", yp, zp * s * zm));
  out.push_back(comparePhase("Y- = Z- S Z+", ym, zm * s * zp));
  out.push_back(comparePhase("H H = 1", h * h, id2));
  out.push_back(comparePhase("S S = X", s * s, x));
  return out;
}

}  // namespace qsim
}  // namespace schmidt
