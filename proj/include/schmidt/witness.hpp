#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>

#include "schmidt/linalg.hpp"

namespace schmidt {

/// Scenario (a): n binary measurements per party, marginals in row/column 0.
/// Scenario (b): one (n+1)-outcome measurement per party, entries sum to 1.
enum class ScenarioKind { A, B };

/// Square matrix of joint outcome probabilities, (n+1)x(n+1).
struct ProbabilityMatrix {
  Eigen::MatrixXd entries;
  ScenarioKind kind = ScenarioKind::A;
  int n = 0;

  Eigen::Index size() const { return entries.rows(); }

  /// Checks the kind-specific invariants; throws std::invalid_argument with a
  /// description of the first violation.
  void validate(double tol = 1e-12) const;
};

ProbabilityMatrix makeProbabilityMatrix(Eigen::MatrixXd entries,
                                        ScenarioKind kind);

/// Pooled and job-wise witness values with their one-sigma errors.
struct WitnessReport {
  double W = 0.0;
  double deltaW = 0.0;
  double Wprime = 0.0;
  double deltaWprime = 0.0;
  double zScore = 0.0;
  double zScorePrime = 0.0;
  long long nShots = 0;
  int jobCount = 0;
  bool adjugateDegenerate = false;  // error estimate unreliable when set
};

/// Signed determinant of the probability matrix. Row/column order is the
/// canonical one fixed by the scenario builders, so the sign is meaningful.
double witness(const ProbabilityMatrix& p);

/// One standard deviation of the witness under the null <W> = 0.
///
/// Kind A: sqrt(sum_kj Adj(p)_{jk}^2 p_kj (1-p_kj) / N) with N trials per
/// setting; every entry, marginals included, is treated as an independent
/// binomial, which overestimates the error when marginals are averaged
/// across settings.
/// Kind B: sqrt((sum_kj Adj_{jk}^2 p_kj - (sum_kj Adj_{jk} p_kj)^2) / N)
/// with N total trials (multinomial over all (n+1)^2 cells).
///
/// If the adjugate vanishes identically the estimate is meaningless;
/// *adjugateZero is set when provided (second-order minors are out of scope).
double witnessError(const ProbabilityMatrix& p, long long nShots,
                    bool* adjugateZero = nullptr);

/// First-order witness shift Tr(Adj(p) * deltaP) under p -> p + deltaP.
double firstOrderShift(const ProbabilityMatrix& p,
                       const Eigen::MatrixXd& deltaP);

}  // namespace schmidt
