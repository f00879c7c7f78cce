#include "schmidt/rng.hpp"

#include <algorithm>
#include <stdexcept>

namespace schmidt {

namespace {

double logPmf(long long n, long long k, double logp, double logq) {
  return std::lgamma(static_cast<double>(n) + 1.0) -
         std::lgamma(static_cast<double>(k) + 1.0) -
         std::lgamma(static_cast<double>(n - k) + 1.0) +
         static_cast<double>(k) * logp + static_cast<double>(n - k) * logq;
}

}  // namespace

long long sampleBinomial(CounterRng& rng, long long n, double p) {
  if (n < 0) throw std::invalid_argument("sampleBinomial: n < 0");
  if (n == 0 || p <= 0.0) return 0;
  if (p >= 1.0) return n;

  const double q = 1.0 - p;
  const long long mode =
      std::min<long long>(n, static_cast<long long>((n + 1) * p));
  const double pmfMode = std::exp(logPmf(n, mode, std::log(p), std::log(q)));

  double u = rng.nextDouble();
  // pmf ratios: pmf(k+1)/pmf(k) = (n-k)/(k+1) * p/q
  long long lo = mode, hi = mode;
  double pmfLo = pmfMode, pmfHi = pmfMode;
  if (u < pmfMode) return mode;
  u -= pmfMode;
  while (lo > 0 || hi < n) {
    if (hi < n) {
      pmfHi *= static_cast<double>(n - hi) / static_cast<double>(hi + 1) * p / q;
      ++hi;
      if (u < pmfHi) return hi;
      u -= pmfHi;
    }
    if (lo > 0) {
      pmfLo *= static_cast<double>(lo) / static_cast<double>(n - lo + 1) * q / p;
      --lo;
      if (u < pmfLo) return lo;
      u -= pmfLo;
    }
  }
  // u consumed the entire mass (floating-point leftovers): farthest tail.
  return (pmfHi > pmfLo) ? n : 0;
}

std::vector<long long> sampleMultinomial(CounterRng& rng, long long n,
                                         std::span<const double> probs) {
  std::vector<long long> counts(probs.size(), 0);
  double remaining = 0.0;
  for (double p : probs) remaining += std::max(p, 0.0);
  long long left = n;
  std::size_t lastPositive = 0;
  for (std::size_t i = 0; i < probs.size() && left > 0; ++i) {
    double pi = std::max(probs[i], 0.0);
    if (pi <= 0.0) continue;
    lastPositive = i;
    double cond = pi / remaining;
    long long c = (cond >= 1.0) ? left : sampleBinomial(rng, left, cond);
    counts[i] = c;
    left -= c;
    remaining -= pi;
  }
  if (left > 0) counts[lastPositive] += left;  // floating-point residue
  return counts;
}

}  // namespace schmidt
