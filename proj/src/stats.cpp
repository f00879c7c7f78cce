#include "schmidt/stats.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "schmidt/rng.hpp"

namespace schmidt {
namespace stats {

using scenarios::MeasurementSet;
using scenarios::ScenarioSpec;

void CountsTable::validate() const {
  if (jobs.empty()) throw std::invalid_argument("CountsTable: no jobs");
  if (shots < 1 || repetitions < 1)
    throw std::invalid_argument("CountsTable: shots and repetitions >= 1");
  const long long perSetting = shotsPerSetting();
  for (std::size_t jIdx = 0; jIdx < jobs.size(); ++jIdx) {
    const Job& job = jobs[jIdx];
    if (kind == ScenarioKind::A) {
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          long long sum = 0;
          for (int o = 0; o < 4; ++o) {
            long long c = job.settings[i][j][o];
            if (c < 0)
              throw std::invalid_argument(
                  "CountsTable: negative count in job " + std::to_string(jIdx) +
                  " setting (" + std::to_string(i + 1) + "," +
                  std::to_string(j + 1) + ")");
            sum += c;
          }
          if (sum != perSetting)
            throw std::invalid_argument(
                "CountsTable: job " + std::to_string(jIdx) + " setting (" +
                std::to_string(i + 1) + "," + std::to_string(j + 1) +
                ") counts sum to " + std::to_string(sum) + ", expected " +
                std::to_string(perSetting));
        }
    } else {
      long long sum = 0;
      for (long long c : job.raw) {
        if (c < 0)
          throw std::invalid_argument("CountsTable: negative count in job " +
                                      std::to_string(jIdx));
        sum += c;
      }
      if (sum != perSetting)
        throw std::invalid_argument(
            "CountsTable: job " + std::to_string(jIdx) + " counts sum to " +
            std::to_string(sum) + ", expected " + std::to_string(perSetting));
    }
  }
}

SettingDistributions idealDistributionsA(const ScenarioSpec& spec) {
  return scenarios::settingDistributionsA(spec);
}

CountsTable sampleCountsA(const SettingDistributions& dists, long long shots,
                          int jobs, int repetitions, std::uint64_t seed,
                          MeasurementSet set) {
  if (shots < 1) throw std::invalid_argument("sampleCounts: shots >= 1");
  CountsTable t;
  t.kind = ScenarioKind::A;
  t.set = set;
  t.shots = shots;
  t.repetitions = repetitions;
  t.synthetic = true;
  t.seed = seed;
  t.jobs.resize(jobs);
  const long long perSetting = t.shotsPerSetting();
  for (int job = 0; job < jobs; ++job)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        CounterRng rng(
            CounterRng::deriveSeed(seed, 16ull * job + 4ull * i + j));
        auto c = sampleMultinomial(rng, perSetting, dists[i][j]);
        for (int o = 0; o < 4; ++o) t.jobs[job].settings[i][j][o] = c[o];
      }
  return t;
}

CountsTable sampleCountsB(const Eigen::VectorXd& raw64, long long shots,
                          int jobs, int repetitions, std::uint64_t seed) {
  if (shots < 1) throw std::invalid_argument("sampleCounts: shots >= 1");
  if (raw64.size() != 64)
    throw std::invalid_argument("sampleCountsB: need 64 outcome cells");
  CountsTable t;
  t.kind = ScenarioKind::B;
  t.set = MeasurementSet::Tetrahedron;
  t.shots = shots;
  t.repetitions = repetitions;
  t.synthetic = true;
  t.seed = seed;
  t.jobs.resize(jobs);
  std::vector<double> p(raw64.data(), raw64.data() + 64);
  for (int job = 0; job < jobs; ++job) {
    CounterRng rng(CounterRng::deriveSeed(seed, job));
    auto c = sampleMultinomial(rng, t.shotsPerSetting(), p);
    for (int cell = 0; cell < 64; ++cell) t.jobs[job].raw[cell] = c[cell];
  }
  return t;
}

CountsTable sampleCounts(const ScenarioSpec& spec, long long shots, int jobs,
                         int repetitions, std::uint64_t seed) {
  spec.validate();
  if (spec.kind == ScenarioKind::A) {
    CountsTable t = sampleCountsA(idealDistributionsA(spec), shots, jobs,
                                  repetitions, seed, spec.set);
    t.middleQubits = spec.middleQubits;
    return t;
  }
  return sampleCountsB(scenarios::idealRawDistributionB(), shots, jobs,
                       repetitions, seed);
}

namespace {

std::vector<int> resolveSubset(const CountsTable& counts,
                               const std::vector<int>& jobSubset) {
  if (!jobSubset.empty()) {
    for (int j : jobSubset)
      if (j < 0 || j >= counts.jobCount())
        throw std::out_of_range("job index out of range");
    return jobSubset;
  }
  std::vector<int> all(counts.jobs.size());
  std::iota(all.begin(), all.end(), 0);
  return all;
}

}  // namespace

ProbabilityMatrix estimateMatrix(const CountsTable& counts,
                                 const std::vector<int>& jobSubset) {
  if (counts.kind != ScenarioKind::A)
    throw std::invalid_argument("estimateMatrix: kind A counts expected");
  auto subset = resolveSubset(counts, jobSubset);
  if (subset.empty()) throw std::invalid_argument("empty job subset");

  std::array<std::array<std::array<long long, 4>, 4>, 4> pooled{};
  for (int job : subset)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int o = 0; o < 4; ++o)
          pooled[i][j][o] += counts.jobs[job].settings[i][j][o];

  const double n =
      static_cast<double>(counts.shotsPerSetting()) * subset.size();
  if (n <= 0) throw std::invalid_argument("estimateMatrix: zero shots");
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(5, 5);
  p(0, 0) = 1.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const auto& c = pooled[i][j];
      p(i + 1, j + 1) = c[kYY] / n;
      p(i + 1, 0) += (c[kYY] + c[kYN]) / n / 4.0;
      p(0, j + 1) += (c[kYY] + c[kNY]) / n / 4.0;
    }
  return makeProbabilityMatrix(std::move(p), ScenarioKind::A);
}

ProbabilityMatrix estimateMatrixB(const CountsTable& counts,
                                  std::pair<int, int> spectatorChoice,
                                  const std::vector<int>& jobSubset) {
  if (counts.kind != ScenarioKind::B)
    throw std::invalid_argument("estimateMatrixB: kind B counts expected");
  auto subset = resolveSubset(counts, jobSubset);
  if (subset.empty()) throw std::invalid_argument("empty job subset");
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(5, 5);
  double total = 0;
  for (int job : subset)
    for (int cell = 0; cell < 64; ++cell) {
      auto [r, c] = scenarios::aggregatedIndexB(cell, spectatorChoice);
      p(r, c) += static_cast<double>(counts.jobs[job].raw[cell]);
      total += static_cast<double>(counts.jobs[job].raw[cell]);
    }
  p /= total;
  return makeProbabilityMatrix(std::move(p), ScenarioKind::B);
}

namespace {

WitnessReport scoreOne(
    const CountsTable& counts,
    const std::function<ProbabilityMatrix(const std::vector<int>&)>& estimate) {
  const int jobs = counts.jobCount();
  const long long perUnit = counts.shotsPerSetting();

  WitnessReport rep;
  rep.jobCount = jobs;
  rep.nShots = perUnit * jobs;

  ProbabilityMatrix pooled = estimate({});
  bool degenerate = false;
  rep.W = witness(pooled);
  rep.deltaW = witnessError(pooled, perUnit * jobs, &degenerate);
  rep.adjugateDegenerate = degenerate;

  double sumW = 0, sumVar = 0;
  for (int j = 0; j < jobs; ++j) {
    ProbabilityMatrix pj = estimate({j});
    bool deg = false;
    double wj = witness(pj);
    double dj = witnessError(pj, perUnit, &deg);
    rep.adjugateDegenerate = rep.adjugateDegenerate || deg;
    sumW += wj;
    sumVar += dj * dj;
  }
  rep.Wprime = sumW / jobs;
  rep.deltaWprime = std::sqrt(sumVar) / jobs;
  rep.zScore = rep.deltaW > 0 ? rep.W / rep.deltaW : 0.0;
  rep.zScorePrime = rep.deltaWprime > 0 ? rep.Wprime / rep.deltaWprime : 0.0;
  return rep;
}

}  // namespace

std::vector<LabeledReport> scoreDataset(const CountsTable& counts) {
  counts.validate();
  std::vector<LabeledReport> out;
  if (counts.kind == ScenarioKind::A) {
    out.push_back(
        {"", scoreOne(counts, [&](const std::vector<int>& subset) {
           return estimateMatrix(counts, subset);
         })});
    return out;
  }
  for (int a0 : {0, 1})
    for (int b0 : {0, 1}) {
      std::string label = std::to_string(a0) + std::to_string(b0);
      out.push_back(
          {label, scoreOne(counts, [&](const std::vector<int>& subset) {
             return estimateMatrixB(counts, {a0, b0}, subset);
           })});
    }
  return out;
}

ErrorValidation validateErrorFormula(const ScenarioSpec& spec, long long shots,
                                     int replicates, std::uint64_t seed) {
  if (replicates < 100)
    throw std::invalid_argument("validateErrorFormula: replicates >= 100");
  spec.validate();

  ErrorValidation out;
  std::vector<double> ws(replicates), zs(replicates);
  if (spec.kind == ScenarioKind::A) {
    const auto dists = idealDistributionsA(spec);
    ProbabilityMatrix ideal = scenarios::idealMatrixA(spec);
    out.analytic = witnessError(ideal, shots);
    for (int r = 0; r < replicates; ++r) {
      CountsTable t = sampleCountsA(dists, shots, 1, 1,
                                    CounterRng::deriveSeed(seed, r), spec.set);
      ProbabilityMatrix p = estimateMatrix(t);
      ws[r] = witness(p);
      double dw = witnessError(p, shots);
      zs[r] = dw > 0 ? ws[r] / dw : 0.0;
    }
  } else {
    const Eigen::VectorXd raw = scenarios::idealRawDistributionB();
    ProbabilityMatrix ideal =
        scenarios::aggregateB(raw, spec.spectatorChoice);
    out.analytic = witnessError(ideal, shots);
    for (int r = 0; r < replicates; ++r) {
      CountsTable t =
          sampleCountsB(raw, shots, 1, 1, CounterRng::deriveSeed(seed, r));
      ProbabilityMatrix p = estimateMatrixB(t, spec.spectatorChoice);
      ws[r] = witness(p);
      double dw = witnessError(p, shots);
      zs[r] = dw > 0 ? ws[r] / dw : 0.0;
    }
  }

  double meanW = 0;
  for (double w : ws) meanW += w;
  meanW /= replicates;
  double var = 0;
  for (double w : ws) var += (w - meanW) * (w - meanW);
  out.empirical = std::sqrt(var / (replicates - 1));
  out.ratio = out.empirical / out.analytic;
  double zm = 0;
  for (double z : zs) zm += z;
  zm /= replicates;
  double zv = 0;
  for (double z : zs) zv += (z - zm) * (z - zm);
  out.zMean = zm;
  out.zVariance = zv / (replicates - 1);
  return out;
}

double gaussianTwoSidedP(double z) {
  return std::erfc(std::abs(z) / std::sqrt(2.0));
}

NoSignalingReport noSignalingTest(const CountsTable& counts) {
  if (counts.kind != ScenarioKind::A)
    throw std::invalid_argument("noSignalingTest: kind A counts expected");
  counts.validate();

  std::array<std::array<std::array<long long, 4>, 4>, 4> pooled{};
  for (const auto& job : counts.jobs)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int o = 0; o < 4; ++o) pooled[i][j][o] += job.settings[i][j][o];
  const double n = static_cast<double>(counts.shotsPerSetting()) *
                   counts.jobCount();

  NoSignalingReport rep;
  auto addComparisons = [&](char party) {
    for (int idx = 0; idx < 4; ++idx) {
      std::array<double, 4> est{}, se{};
      for (int cond = 0; cond < 4; ++cond) {
        const auto& c = (party == 'A') ? pooled[idx][cond] : pooled[cond][idx];
        double yes = (party == 'A') ? double(c[kYY] + c[kYN])
                                    : double(c[kYY] + c[kNY]);
        est[cond] = yes / n;
        se[cond] = std::sqrt(est[cond] * (1.0 - est[cond]) / n);
      }
      for (int c1 = 0; c1 < 4; ++c1)
        for (int c2 = c1 + 1; c2 < 4; ++c2) {
          MarginalComparison cmp;
          cmp.party = party;
          cmp.outcome = idx + 1;
          cmp.cond1 = c1 + 1;
          cmp.cond2 = c2 + 1;
          cmp.p1 = est[c1];
          cmp.p2 = est[c2];
          cmp.se1 = se[c1];
          cmp.se2 = se[c2];
          double denom = std::sqrt(se[c1] * se[c1] + se[c2] * se[c2]);
          cmp.z = denom > 0 ? (est[c1] - est[c2]) / denom : 0.0;
          rep.comparisons.push_back(cmp);
        }
    }
  };
  addComparisons('A');
  addComparisons('B');
  for (const auto& c : rep.comparisons)
    rep.maxAbsZ = std::max(rep.maxAbsZ, std::abs(c.z));
  rep.bonferroniP = std::min(
      1.0, static_cast<double>(rep.comparisons.size()) *
               gaussianTwoSidedP(rep.maxAbsZ));
  return rep;
}

SettingDistributions contaminatedDistributionsA(double epsilon) {
  if (epsilon < 0 || epsilon > 1)
    throw std::invalid_argument("contamination weight must be in [0,1]");
  ScenarioSpec spec{ScenarioKind::A, MeasurementSet::SetII, 2, {0, 0}};
  SettingDistributions base = idealDistributionsA(spec);
  // leaked |2> population readout per measurement: "yes" on the axis
  // measurements, "no" on the (1,1,1) one
  const std::array<double, 4> yes{1.0, 1.0, 1.0, 0.0};
  SettingDistributions out{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double pa = yes[i], pb = yes[j];
      std::array<double, 4> leak{pa * pb, pa * (1 - pb), (1 - pa) * pb,
                                 (1 - pa) * (1 - pb)};
      for (int o = 0; o < 4; ++o)
        out[i][j][o] = (1 - epsilon) * base[i][j][o] + epsilon * leak[o];
    }
  return out;
}

SettingDistributions injectSignaling(SettingDistributions dists,
                                     double epsilon, int i, int j) {
  if (i < 1 || i > 4 || j < 1 || j > 4)
    throw std::out_of_range("injectSignaling: setting indices in 1..4");
  auto& d = dists[i - 1][j - 1];
  double pb = d[kYY] + d[kNY];
  d[kYY] += epsilon * pb;
  d[kYN] += epsilon * (1 - pb);
  d[kNY] -= epsilon * pb;
  d[kNN] -= epsilon * (1 - pb);
  for (double v : d)
    if (v < 0 || v > 1)
      throw std::invalid_argument("injectSignaling: shift too large");
  return dists;
}

}  // namespace stats
}  // namespace schmidt
