#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

namespace schmidt {
namespace qsim {

using Complex = std::complex<double>;
using MatrixXcd = Eigen::MatrixXcd;
using VectorXcd = Eigen::VectorXcd;

/// Dense amplitudes over computational basis states. Qubit 0 is the most
/// significant bit of the basis index, so |ab> for two qubits reads left to
/// right. Capped at 8 qubits.
struct StateVector {
  VectorXcd amplitudes;
  int qubitCount = 0;

  static StateVector zero(int qubits);
  double norm() const { return amplitudes.norm(); }
};

/// Unitary on 1 or 2 qubits; unitarity is asserted at construction.
struct Gate {
  MatrixXcd matrix;
  int arity = 1;
  std::string label;

  Gate(MatrixXcd m, std::string name);
};

/// Hermitian effect with 0 <= A <= 1.
struct Observable {
  MatrixXcd matrix;

  explicit Observable(MatrixXcd m, double tol = 1e-10);
};

/// Ordered effects summing to the identity.
struct Povm {
  std::vector<Observable> effects;

  explicit Povm(std::vector<Observable> e, double tol = 1e-12);
};

struct CircuitStep {
  Gate gate;
  std::vector<int> targets;
};

struct Circuit {
  int qubitCount = 0;
  std::vector<CircuitStep> steps;

  void append(Gate g, std::vector<int> targets);
};

enum class Direction { Down, Up };  // <a'b'|G_up|ab> = <b'a'|G_down|ba>

// --- gate set ---------------------------------------------------------

Gate gateX();
Gate gateY();
Gate gateZpi();
Gate gateH();
Gate gateS();               // sqrt(X) = (1 - i sigma_x)/sqrt(2)
Gate gateZ(double theta);   // diag(e^{-i theta/2}, e^{i theta/2})
Gate gateZplus();
Gate gateZminus();
Gate gateStheta(double theta);  // Z_theta^dag S Z_theta
Gate gateYpm(int sign);         // Y_{+-pi/2} = Z_{+-} S Z_{-+}
Gate gateCNOT(Direction dir);
Gate gateECR(Direction dir);
Gate gateCR(int sign);  // (ZX)_{+-pi/4}

StateVector applyGate(const StateVector& s, const Gate& g,
                      const std::vector<int>& targets);
StateVector runCircuit(const Circuit& c);

/// Probabilities of each basis outcome.
Eigen::VectorXd outcomeProbabilities(const StateVector& s);

/// Projector (1 + a.sigma)/2 onto the +1 eigenstate of a.sigma.
Observable blochProjector(const Eigen::Vector3d& a);

/// The five-effect POVM M_j = (1 + m_j.sigma)/8 for the four rotated
/// tetrahedron directions plus M_5 = 1/2.
Povm tetrahedronPovm();
std::vector<Eigen::Vector3d> tetrahedronDirections();

/// Tr((A (x) B) |psi><psi|) for a 2-qubit pure state psi with A on qubit 0
/// and B on qubit 1.
double jointProbability(const StateVector& psi, const Observable& a,
                        const Observable& b);

/// Same expectation for a bipartite pure state given by its coefficient
/// matrix M (|psi> = sum_kl M_kl |kl>): Tr(M^dag A M B^T).
double jointProbability(const MatrixXcd& coeff, const MatrixXcd& a,
                        const MatrixXcd& b);

/// Appends the two-qubit block mapping a working state onto the four
/// tetrahedron projections, ancilla read out as the second outcome bit.
void appendQGate(Circuit& c, int working, int ancilla);

struct IdentityCheck {
  std::string name;
  double deviation;
  Complex phase;  // fitted global phase between the two sides
};

/// Checks the ECR/CNOT/H/Y decomposition identities up to a global phase.
std::vector<IdentityCheck> verifyGateIdentities();

}  // namespace qsim
}  // namespace schmidt
