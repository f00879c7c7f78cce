#pragma once

#include <Eigen/Dense>
#include <array>
#include <utility>

#include "schmidt/qsim.hpp"
#include "schmidt/rational.hpp"
#include "schmidt/witness.hpp"

namespace schmidt {
namespace scenarios {

enum class MeasurementSet { SetI, SetII, Tetrahedron };

struct ScenarioSpec {
  ScenarioKind kind = ScenarioKind::A;
  MeasurementSet set = MeasurementSet::SetI;
  int middleQubits = 2;                    // kind A: 2 or 3
  std::pair<int, int> spectatorChoice{0, 0};  // kind B: (a0, b0)

  void validate() const;
};

/// Set I: the four vectors (+-1,+-1,1)/sqrt(3) in reading order.
std::array<Eigen::Vector3d, 4> measurementSetI();
/// Set II: x, y, z axes plus (1,1,1)/sqrt(3).
std::array<Eigen::Vector3d, 4> measurementSetII();
std::array<Eigen::Vector3d, 4> measurementVectors(MeasurementSet set);

/// Angles (theta1, theta2) with S_theta2 S_theta1 mapping the +1 eigenstate
/// of a.sigma to |0>, so a computational readout of 0 means "yes".
std::pair<double, double> measurementAngles(const Eigen::Vector3d& a);

/// Two-qubit reference state (|00> - i|11>)/sqrt(2) that the test-(a)
/// circuits distribute between the end qubits.
qsim::StateVector idealBellState();

/// The test-(a) circuit with measurement rotations for directions
/// a_i (party A) and -a_j (party B); i, j in 1..4.
qsim::Circuit buildCircuitA(const ScenarioSpec& spec, int i, int j);

/// (yy, yn, ny, nn) outcome distribution of setting (i, j), from the circuit.
std::array<double, 4> settingDistributionA(const ScenarioSpec& spec, int i,
                                           int j);
/// All 16 settings.
std::array<std::array<std::array<double, 4>, 4>, 4> settingDistributionsA(
    const ScenarioSpec& spec);

/// Ideal 5x5 kind-A matrix: p00 = 1, marginals in row/column 0.
ProbabilityMatrix idealMatrixA(const ScenarioSpec& spec);

/// The 7-qubit test-(b) circuit (both parties' spectator fan-out and
/// tetrahedron readout blocks).
qsim::Circuit buildCircuitB();

/// Probabilities of the 64 labeled outcomes (a0 a1 a2, b0 b1 b2); index
/// packs the six bits with a0 as the most significant.
Eigen::VectorXd idealRawDistributionB();

/// Five-outcome aggregation: raw triples with the chosen spectator value map
/// to outcomes 1..4 by working bits (a1 a2) in {00,10,01,11}; the rest lump
/// into outcome 5.
ProbabilityMatrix aggregateB(const Eigen::VectorXd& raw64,
                             std::pair<int, int> spectatorChoice);

/// Maps one raw 6-bit outcome to its aggregated (row, col) pair.
std::pair<int, int> aggregatedIndexB(int rawIndex,
                                     std::pair<int, int> spectatorChoice);

struct Counterexample {
  RationalMatrix constructed;  // from the product-state protocol
  RationalMatrix printed;      // reference matrix as published
  Rational det;                // of the constructed matrix
  Rational detPrinted;
};

/// The 7x7 prepare-and-measure counterexample with determinant exactly 1/8.
/// The published matrix and the protocol construction differ in the single
/// entry (6,3) (no unit-vector assignment can produce 1/2 there); both
/// determinants equal 1/8 exactly.
Counterexample prepareMeasureCounterexample();

}  // namespace scenarios
}  // namespace schmidt
