#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "schmidt/scenarios.hpp"
#include "schmidt/witness.hpp"

namespace schmidt {
namespace stats {

/// Outcome order for one kind-A setting: both-yes, A-yes/B-no, A-no/B-yes,
/// both-no.
enum SettingOutcome { kYY = 0, kYN = 1, kNY = 2, kNN = 3 };

using SettingDistributions = std::array<std::array<std::array<double, 4>, 4>, 4>;

/// Per-job raw outcome counts; the experimental record.
struct CountsTable {
  ScenarioKind kind = ScenarioKind::A;
  scenarios::MeasurementSet set = scenarios::MeasurementSet::SetI;
  int middleQubits = 2;
  long long shots = 0;
  int repetitions = 1;
  bool synthetic = false;
  std::uint64_t seed = 0;
  std::string device = "synthetic";

  struct Job {
    // kind A: settings[i][j][outcome], i, j = 0..3
    std::array<std::array<std::array<long long, 4>, 4>, 4> settings{};
    // kind B: raw[(a0 a1 a2 b0 b1 b2) packed, a0 most significant]
    std::array<long long, 64> raw{};
  };
  std::vector<Job> jobs;

  long long shotsPerSetting() const { return shots * repetitions; }
  int jobCount() const { return static_cast<int>(jobs.size()); }
  /// Throws std::invalid_argument naming the first violated invariant.
  void validate() const;
};

/// Ideal per-setting outcome distributions of a kind-A scenario.
SettingDistributions idealDistributionsA(const scenarios::ScenarioSpec& spec);

/// Multinomial sampling of a scenario, deterministic per seed.
CountsTable sampleCounts(const scenarios::ScenarioSpec& spec, long long shots,
                         int jobs, int repetitions, std::uint64_t seed);
CountsTable sampleCountsA(const SettingDistributions& dists, long long shots,
                          int jobs, int repetitions, std::uint64_t seed,
                          scenarios::MeasurementSet set =
                              scenarios::MeasurementSet::SetI);
CountsTable sampleCountsB(const Eigen::VectorXd& raw64, long long shots,
                          int jobs, int repetitions, std::uint64_t seed);

/// Kind-A estimate from pooled counts: inner entries from their own setting,
/// marginals averaged over the settings that contain them, p00 = 1.
/// An empty jobSubset means all jobs.
ProbabilityMatrix estimateMatrix(const CountsTable& counts,
                                 const std::vector<int>& jobSubset = {});

/// Kind-B estimate: normalized aggregated counts for one spectator choice.
ProbabilityMatrix estimateMatrixB(const CountsTable& counts,
                                  std::pair<int, int> spectatorChoice,
                                  const std::vector<int>& jobSubset = {});

struct LabeledReport {
  std::string label;  // "" for kind A, spectator bits "00".."11" for kind B
  WitnessReport report;
};

/// W and dW from pooled counts; W' as the mean of per-job witnesses with
/// dW'^2 = sum_j dW_j^2 / J^2 (independent jobs).
std::vector<LabeledReport> scoreDataset(const CountsTable& counts);

struct ErrorValidation {
  double analytic = 0.0;   // dW from the error formula on the ideal matrix
  double empirical = 0.0;  // std of W over resampled datasets
  double ratio = 0.0;      // empirical / analytic
  double zMean = 0.0;      // of z = W/dW per replicate
  double zVariance = 0.0;
};

/// Resamples the scenario through the full estimation pipeline and compares
/// the observed spread of W against the analytic error formula.
ErrorValidation validateErrorFormula(const scenarios::ScenarioSpec& spec,
                                     long long shots, int replicates,
                                     std::uint64_t seed);

struct MarginalComparison {
  char party = 'A';  // A: p_{i0,j} over j; B: p_{0j,i} over i
  int outcome = 1;   // the fixed index i (party A) or j (party B)
  int cond1 = 1;     // the two conditioning settings compared
  int cond2 = 2;
  double p1 = 0, p2 = 0, se1 = 0, se2 = 0;
  double z = 0;
};

struct NoSignalingReport {
  std::vector<MarginalComparison> comparisons;  // all 48
  double maxAbsZ = 0.0;
  double bonferroniP = 1.0;  // of the maximum, corrected for 48 comparisons
};

/// Pairwise z-tests of every marginal against the conditioning setting of
/// the other party (2 parties x 4 outcomes x C(4,2) pairs = 48).
NoSignalingReport noSignalingTest(const CountsTable& counts);

/// Set-II scenario with a weight-epsilon third-level admixture on both
/// parties; the leaked population reads "yes" in the three axis measurements
/// and "no" in the tilted one.
SettingDistributions contaminatedDistributionsA(double epsilon);

/// Shifts the party-A marginal of one setting by +epsilon (keeping the B
/// marginal fixed), the controlled no-signaling violation.
SettingDistributions injectSignaling(SettingDistributions dists,
                                     double epsilon, int i, int j);

double gaussianTwoSidedP(double z);

}  // namespace stats
}  // namespace schmidt
