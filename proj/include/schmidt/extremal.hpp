#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "schmidt/rational.hpp"
#include "schmidt/witness.hpp"

namespace schmidt {
namespace extremal {

enum class Model { Classical, QuantumReal, QuantumComplex };

struct ExtremalProblem {
  int n = 1;
  int d = 2;
  Model model = Model::Classical;
  ScenarioKind kind = ScenarioKind::A;
};

/// Best configuration found: the witness value, the parameters that attain
/// it (re-evaluating them reproduces the value), and the published target
/// where one exists.
struct ExtremalResult {
  double value = 0.0;  // 4^n W for kind A, raw W for kind B
  double rawW = 0.0;
  ExtremalProblem problem;
  Eigen::VectorXd weights;     // rho diagonal (classical) or Schmidt psi
  Eigen::MatrixXi binary;      // classical measurement matrix (n x d)
  Eigen::MatrixXcd vectors;    // measurement vectors as columns
  std::optional<double> referenceValue;  // published, in the same scaling
  int restarts = 0;
  std::string method;  // "exhaustive", "restarts", "closed-form", ...
};

struct OptimOptions {
  int restarts = 200;
  std::uint64_t seed = 1;
  int polishEvals = 6000;
};

// --- configuration evaluators (shared by optimizers and golden tests) ---

/// Kind-A classical matrix p = A_full diag(rho) A_full^T with the implicit
/// all-ones row 0; A is the n x d binary (or [0,1]) measurement matrix.
Eigen::MatrixXd classicalMatrixA(const Eigen::MatrixXd& a,
                                 const Eigen::VectorXd& rho);
RationalMatrix classicalMatrixAExact(const Eigen::MatrixXi& a,
                                     const std::vector<Rational>& rho);

/// Kind-A quantum matrix for Schmidt coefficients psi and rank-1 projector
/// vectors (columns of vecs), with B = A*: p_ij = |v_j^dag diag(psi) v_i|^2,
/// marginals |diag(psi) v_i|^2.
Eigen::MatrixXd quantumMatrixA(const Eigen::VectorXd& psi,
                               const Eigen::MatrixXcd& vecs);

/// Kind-A matrix for an arbitrary bipartite pure state (coefficient matrix)
/// and explicit effect lists.
Eigen::MatrixXd stateMatrixA(const Eigen::MatrixXcd& coeff,
                             const std::vector<Eigen::MatrixXcd>& as,
                             const std::vector<Eigen::MatrixXcd>& bs);

/// Kind-B matrix from unnormalized rank-1 vectors: G_ij = |v_i^T v_j|^2
/// normalized to total sum 1.
Eigen::MatrixXd caseBMatrix(const Eigen::MatrixXcd& vecs);

// --- optimizers -------------------------------------------------------

/// Classical maximum of 4^n W_n over binary A and diagonal rho (exhaustive
/// for n*d <= 20, randomized bit-flip search otherwise; printed extremal
/// configurations are always included as candidates).
ExtremalResult classicalMaxA(int n, int d, const OptimOptions& opts = {});

/// Quantum maximum of 4^n W_n for d in {2,3}, real or complex vectors.
ExtremalResult quantumMaxA(int n, int d, Model field,
                           const OptimOptions& opts = {});

/// Case-(b) maximum of W_n: classical closed form for d > n, equiangular
/// tight frame closed form where a frame exists, numerical rank-1 search
/// otherwise (the n=4, d=3 cases).
ExtremalResult maxB(int n, int d, Model field, const OptimOptions& opts = {});

/// Re-evaluates the parameters stored in a result.
double evaluateResult(const ExtremalResult& r);

// --- published values and golden configurations ------------------------

/// Published Table I cell (4^n max classical W), n=1..5, d=2..8; cells not
/// printed saturate the absolute bound at 1.
double tableIValue(int n, int d);
/// Tolerance for comparing against the cell (tight for exact entries).
double tableITolerance(int n, int d);

/// Published Table II cell (4^n max quantum W), n=1..8, d in {2,3}.
double tableIIValue(int n, int d, Model field);
double tableIITolerance(int n, int d, Model field);

struct ConfigCheck {
  std::string name;
  double computed = 0.0;
  double published = 0.0;
  double deviation = 0.0;
  double tol = 0.0;
  bool pass = false;
};

struct QuantumConfig {
  Eigen::VectorXd psi;
  Eigen::MatrixXcd vectors;
};

/// The published d=3 extremal configuration for (n, field), when one exists.
std::optional<QuantumConfig> printedQuantumConfig(int n, int d, Model field);

/// Two-qubit-per-party maximally entangled construction saturating 4^-n for
/// n = 9 (real) or n = 15 (complex); returns its probability matrix.
Eigen::MatrixXd ququartMatrixA(bool complexField);

/// Evaluates every printed extremal configuration against its published
/// witness value.
std::vector<ConfigCheck> verifyAppendixConfigs();

struct BoundCheck {
  double bound = 0.0;
  double maxRandom = 0.0;        // largest scaled witness over random configs
  double saturatedValue = 0.0;   // explicit saturating construction
  bool pass = false;
};

/// Samples random valid configurations and checks none exceeds the absolute
/// bound (4^-n scaled to 1 for kind A, (n+1)^{-n-1} for kind B); also builds
/// the explicit saturating configuration and confirms equality.
BoundCheck verifyAbsoluteBound(int n, ScenarioKind kind, int samples,
                               std::uint64_t seed = 1);

/// Largest root of x^4 + 2x^3 - 11x^2 - 11x - 2, the case-(b) n=4 d=3
/// complex extremizer.
double caseBQuarticRoot();

/// The one-parameter case-(b) n=4 d=3 complex determinant profile.
double caseBComplexProfile(double x);

}  // namespace extremal
}  // namespace schmidt
