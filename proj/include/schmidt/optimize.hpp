#pragma once

#include <Eigen/Core>
#include <algorithm>
#include <functional>
#include <vector>

namespace schmidt {

/// Derivative-free Nelder-Mead minimizer with the dimension-adaptive
/// coefficients. Returns the best value found and leaves it in x.
inline double nelderMead(const std::function<double(const Eigen::VectorXd&)>& f,
                         Eigen::VectorXd& x, double step, int maxEvals) {
  const int m = static_cast<int>(x.size());
  const double alpha = 1.0;
  const double beta = 1.0 + 2.0 / m;
  const double gamma = 0.75 - 1.0 / (2.0 * m);
  const double delta = 1.0 - 1.0 / m;

  std::vector<Eigen::VectorXd> pts(m + 1, x);
  std::vector<double> vals(m + 1);
  int evals = 0;
  for (int i = 1; i <= m; ++i) pts[i][i - 1] += step;
  for (int i = 0; i <= m; ++i) vals[i] = (++evals, f(pts[i]));

  std::vector<int> order(m + 1);
  while (evals < maxEvals) {
    for (int i = 0; i <= m; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return vals[a] < vals[b]; });
    int best = order[0], worst = order[m], second = order[m - 1];

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(m);
    for (int i = 0; i <= m; ++i)
      if (i != worst) centroid += pts[i];
    centroid /= m;

    Eigen::VectorXd xr = centroid + alpha * (centroid - pts[worst]);
    double fr = (++evals, f(xr));
    if (fr < vals[best]) {
      Eigen::VectorXd xe = centroid + beta * (xr - centroid);
      double fe = (++evals, f(xe));
      if (fe < fr) { pts[worst] = xe; vals[worst] = fe; }
      else { pts[worst] = xr; vals[worst] = fr; }
    } else if (fr < vals[second]) {
      pts[worst] = xr; vals[worst] = fr;
    } else {
      bool outside = fr < vals[worst];
      double sign = outside ? 1.0 : -1.0;
      Eigen::VectorXd xc = centroid + sign * gamma * (xr - centroid);
      double fc = (++evals, f(xc));
      if (fc < std::min(fr, vals[worst])) {
        pts[worst] = xc; vals[worst] = fc;
      } else {
        for (int i = 0; i <= m; ++i) {
          if (i == best) continue;
          pts[i] = pts[best] + delta * (pts[i] - pts[best]);
          vals[i] = (++evals, f(pts[i]));
        }
      }
    }
    double spread = 0.0;
    for (int i = 0; i <= m; ++i)
      spread = std::max(spread, std::abs(vals[i] - vals[order[0]]));
    if (spread < 1e-15) break;
  }
  int best = 0;
  for (int i = 1; i <= m; ++i)
    if (vals[i] < vals[best]) best = i;
  x = pts[best];
  return vals[best];
}

}  // namespace schmidt
