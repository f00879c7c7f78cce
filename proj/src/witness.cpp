#include "schmidt/witness.hpp"

#include <cmath>

namespace schmidt {

void ProbabilityMatrix::validate(double tol) const {
  if (entries.rows() != entries.cols())
    throw std::invalid_argument("ProbabilityMatrix: entries must be square");
  if (entries.rows() != n + 1)
    throw std::invalid_argument("ProbabilityMatrix: size must be n+1");
  for (Eigen::Index i = 0; i < entries.rows(); ++i)
    for (Eigen::Index j = 0; j < entries.cols(); ++j) {
      double v = entries(i, j);
      if (!std::isfinite(v) || v < -tol || v > 1.0 + tol)
        throw std::invalid_argument(
            "ProbabilityMatrix: entry (" + std::to_string(i) + "," +
            std::to_string(j) + ") outside [0,1]");
    }
  if (kind == ScenarioKind::A) {
    if (std::abs(entries(0, 0) - 1.0) > tol)
      throw std::invalid_argument("ProbabilityMatrix: kind A needs p00 = 1");
  } else {
    if (std::abs(entries.sum() - 1.0) > tol)
      throw std::invalid_argument(
          "ProbabilityMatrix: kind B entries must sum to 1");
  }
}

ProbabilityMatrix makeProbabilityMatrix(Eigen::MatrixXd entries,
                                        ScenarioKind kind) {
  ProbabilityMatrix p;
  p.n = static_cast<int>(entries.rows()) - 1;
  p.entries = std::move(entries);
  p.kind = kind;
  p.validate();
  return p;
}

double witness(const ProbabilityMatrix& p) {
  return determinant(p.entries);
}

double witnessError(const ProbabilityMatrix& p, long long nShots,
                    bool* adjugateZero) {
  if (nShots < 1)
    throw std::invalid_argument("witnessError: nShots must be >= 1");
  const Eigen::MatrixXd adj = adjugate(p.entries);
  if (adjugateZero != nullptr)
    *adjugateZero = adj.cwiseAbs().maxCoeff() == 0.0;

  const Eigen::Index s = p.size();
  double var = 0.0;
  if (p.kind == ScenarioKind::A) {
    for (Eigen::Index k = 0; k < s; ++k)
      for (Eigen::Index j = 0; j < s; ++j) {
        double pkj = p.entries(k, j);
        var += adj(j, k) * adj(j, k) * pkj * (1.0 - pkj);
      }
  } else {
    double quad = 0.0, lin = 0.0;
    for (Eigen::Index k = 0; k < s; ++k)
      for (Eigen::Index j = 0; j < s; ++j) {
        double pkj = p.entries(k, j);
        quad += adj(j, k) * adj(j, k) * pkj;
        lin += adj(j, k) * pkj;
      }
    var = quad - lin * lin;
  }
  return std::sqrt(std::max(var, 0.0) / static_cast<double>(nShots));
}

double firstOrderShift(const ProbabilityMatrix& p,
                       const Eigen::MatrixXd& deltaP) {
  if (deltaP.rows() != p.entries.rows() || deltaP.cols() != p.entries.cols())
    throw std::invalid_argument("firstOrderShift: shape mismatch");
  return (adjugate(p.entries) * deltaP).trace();
}

}  // namespace schmidt
