#include "schmidt/extremal.hpp"

#include <cmath>
#include <numbers>

#include "schmidt/linalg.hpp"
#include "schmidt/optimize.hpp"
#include "schmidt/qsim.hpp"
#include "schmidt/rng.hpp"

namespace schmidt {
namespace extremal {

namespace {

using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::MatrixXi;
using Eigen::VectorXcd;
using Eigen::VectorXd;
using Complex = std::complex<double>;

double pow4(int n) { return std::pow(4.0, n); }

bool rankForcedZeroA(int n, int d, Model model) {
  switch (model) {
    case Model::Classical:
      return d <= n;
    case Model::QuantumReal:
      return d * (d + 1) / 2 <= n;
    case Model::QuantumComplex:
      return d * d <= n;
  }
  return false;
}

bool rankForcedZeroB(int n, int d, Model model) {
  // same span argument; the matrix has n+1 rows and no identity row
  switch (model) {
    case Model::Classical:
      return d <= n;
    case Model::QuantumReal:
      return d * (d + 1) / 2 <= n;
    case Model::QuantumComplex:
      return d * d <= n;
  }
  return false;
}

// ---------------------------------------------------------------- rho ascent

// det(p) with p = sum_z rho_z c_z c_z^T is linear in each single rho_z, so a
// transfer between two coordinates is an exact quadratic line search.
class RhoAscent {
 public:
  explicit RhoAscent(std::vector<VectorXd> cols) : cols_(std::move(cols)) {}

  double optimize(VectorXd& rho, int maxSweeps = 400) const {
    const int d = static_cast<int>(cols_.size());
    double f = eval(rho);
    for (int sweep = 0; sweep < maxSweeps; ++sweep) {
      double before = f;
      for (int u = 0; u < d; ++u)
        for (int v = u + 1; v < d; ++v) {
          double s = rho[u] + rho[v];
          if (s <= 0.0) continue;
          // quadratic in t = new rho_u through three exact samples
          VectorXd r = rho;
          auto at = [&](double t) {
            r[u] = t;
            r[v] = s - t;
            return eval(r);
          };
          double f0 = at(0.0), fm = at(s / 2), f1 = at(s);
          double a2 = 2.0 * (f1 + f0 - 2.0 * fm) / (s * s);
          double b1 = (f1 - f0) / s - a2 * s;
          double tBest = (f1 > f0) ? s : 0.0;
          double fBest = std::max(f0, f1);
          if (a2 < 0.0) {
            double tStar = std::clamp(-b1 / (2.0 * a2), 0.0, s);
            double fStar = at(tStar);
            if (fStar > fBest) {
              tBest = tStar;
              fBest = fStar;
            }
          }
          if (fBest > f) {
            rho[u] = tBest;
            rho[v] = s - tBest;
            f = fBest;
          }
        }
      if (f - before <= 1e-14) break;
    }
    return f;
  }

  double eval(const VectorXd& rho) const {
    const Eigen::Index m = cols_[0].size();
    MatrixXd p = MatrixXd::Zero(m, m);
    for (std::size_t z = 0; z < cols_.size(); ++z)
      if (rho[static_cast<Eigen::Index>(z)] != 0.0)
        p.noalias() +=
            rho[static_cast<Eigen::Index>(z)] * cols_[z] * cols_[z].transpose();
    return determinant(p);
  }

 private:
  std::vector<VectorXd> cols_;
};

std::vector<VectorXd> columnsFor(const MatrixXi& a) {
  const int n = static_cast<int>(a.rows());
  const int d = static_cast<int>(a.cols());
  std::vector<VectorXd> cols(d, VectorXd(n + 1));
  for (int z = 0; z < d; ++z) {
    cols[z][0] = 1.0;
    for (int i = 0; i < n; ++i) cols[z][i + 1] = a(i, z);
  }
  return cols;
}

double bestRho(const MatrixXi& a, VectorXd& rho, CounterRng* rng = nullptr) {
  auto cols = columnsFor(a);
  RhoAscent ascent(cols);
  const int d = static_cast<int>(a.cols());
  VectorXd uniform = VectorXd::Constant(d, 1.0 / d);
  double best = ascent.optimize(uniform);
  rho = uniform;
  if (rng != nullptr) {
    for (int t = 0; t < 2; ++t) {
      VectorXd r(d);
      double sum = 0.0;
      for (int z = 0; z < d; ++z) {
        r[z] = -std::log(1.0 - rng->nextDouble());
        sum += r[z];
      }
      r /= sum;
      double f = ascent.optimize(r);
      if (f > best) {
        best = f;
        rho = r;
      }
    }
  }
  return best;
}

// Sylvester Hadamard rows as a saturating binary matrix: rows 1..n of H_h
// mapped through (1+h)/2, h = smallest power of two >= n+1.
MatrixXi hadamardBinary(int n, int d) {
  int h = 1;
  while (h < n + 1) h *= 2;
  if (h > d) throw std::invalid_argument("hadamardBinary: d too small");
  MatrixXi a = MatrixXi::Zero(n, d);
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < h; ++c) {
      // Sylvester H: sign = parity of popcount(row & col); row i+1
      int bits = (i + 1) & c;
      int parity = __builtin_popcount(static_cast<unsigned>(bits)) & 1;
      a(i, c) = parity ? 0 : 1;
    }
  return a;
}

int hadamardOrderFor(int n) {
  int h = 1;
  while (h < n + 1) h *= 2;
  return h;
}

// ------------------------------------------------------ quantum A optimizer

struct QuantumParam {
  int n, d;
  bool complexField;

  int dim() const { return d + n * (complexField ? 2 * d : d); }

  void decode(const VectorXd& x, VectorXd& psi, MatrixXcd& vecs) const {
    psi = x.head(d).cwiseAbs();
    double norm = psi.norm();
    psi = (norm > 0) ? VectorXd(psi / norm)
                     : VectorXd::Constant(d, 1.0 / std::sqrt(double(d)));
    vecs.resize(d, n);
    int off = d;
    for (int i = 0; i < n; ++i) {
      VectorXcd v(d);
      for (int k = 0; k < d; ++k) {
        if (complexField) {
          v[k] = Complex(x[off], x[off + 1]);
          off += 2;
        } else {
          v[k] = x[off++];
        }
      }
      double nv = v.norm();
      if (nv < 1e-12) v[0] = 1.0, nv = 1.0;
      vecs.col(i) = v / nv;
    }
  }
};

}  // namespace

// ------------------------------------------------------------- evaluators

MatrixXd classicalMatrixA(const MatrixXd& a, const VectorXd& rho) {
  const int n = static_cast<int>(a.rows());
  const int d = static_cast<int>(a.cols());
  if (rho.size() != d)
    throw std::invalid_argument("classicalMatrixA: rho/d mismatch");
  MatrixXd full(n + 1, d);
  full.row(0).setOnes();
  full.bottomRows(n) = a;
  return full * rho.asDiagonal() * full.transpose();
}

RationalMatrix classicalMatrixAExact(const MatrixXi& a,
                                     const std::vector<Rational>& rho) {
  const int n = static_cast<int>(a.rows());
  const int d = static_cast<int>(a.cols());
  if (static_cast<int>(rho.size()) != d)
    throw std::invalid_argument("classicalMatrixAExact: rho/d mismatch");
  RationalMatrix p(n + 1, n + 1);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      Rational sum(0);
      for (int z = 0; z < d; ++z) {
        int ai = (i == 0) ? 1 : a(i - 1, z);
        int aj = (j == 0) ? 1 : a(j - 1, z);
        if (ai != 0 && aj != 0) sum += rho[z] * Rational(ai * aj);
      }
      p(i, j) = sum;
    }
  return p;
}

MatrixXd quantumMatrixA(const VectorXd& psi, const MatrixXcd& vecs) {
  const int d = static_cast<int>(vecs.rows());
  const int n = static_cast<int>(vecs.cols());
  if (psi.size() != d)
    throw std::invalid_argument("quantumMatrixA: psi/d mismatch");
  MatrixXd p(n + 1, n + 1);
  p(0, 0) = 1.0;
  MatrixXcd dv = psi.cast<Complex>().asDiagonal() * vecs;  // diag(psi) v_i
  for (int i = 0; i < n; ++i) {
    double marg = dv.col(i).squaredNorm();
    p(i + 1, 0) = marg;
    p(0, i + 1) = marg;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Complex amp = vecs.col(j).dot(dv.col(i));  // v_j^dag diag(psi) v_i
      p(i + 1, j + 1) = std::norm(amp);
    }
  return p;
}

MatrixXd stateMatrixA(const MatrixXcd& coeff,
                      const std::vector<MatrixXcd>& as,
                      const std::vector<MatrixXcd>& bs) {
  if (as.size() != bs.size())
    throw std::invalid_argument("stateMatrixA: effect list size mismatch");
  const int n = static_cast<int>(as.size());
  const MatrixXcd idA = MatrixXcd::Identity(coeff.rows(), coeff.rows());
  const MatrixXcd idB = MatrixXcd::Identity(coeff.cols(), coeff.cols());
  MatrixXd p(n + 1, n + 1);
  p(0, 0) = 1.0;
  for (int i = 0; i < n; ++i) {
    p(i + 1, 0) = qsim::jointProbability(coeff, as[i], idB);
    p(0, i + 1) = qsim::jointProbability(coeff, idA, bs[i]);
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      p(i + 1, j + 1) = qsim::jointProbability(coeff, as[i], bs[j]);
  return p;
}

MatrixXd caseBMatrix(const MatrixXcd& vecs) {
  const int m = static_cast<int>(vecs.cols());
  MatrixXd g(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      // B = A*: the Gram overlap |<v_i|v_j>|^2 (the bilinear pairing flips
      // the determinant sign for the complex extremal configuration)
      g(i, j) = std::norm(vecs.col(i).dot(vecs.col(j)));
    }
  double total = g.sum();
  if (total <= 0.0) throw std::invalid_argument("caseBMatrix: zero vectors");
  return g / total;
}

// ------------------------------------------------------------ classical max

ExtremalResult classicalMaxA(int n, int d, const OptimOptions& opts) {
  if (n < 1 || n > 5 || d < 2 || d > 8)
    throw std::out_of_range("classicalMaxA: n in 1..5, d in 2..8");

  ExtremalResult res;
  res.problem = {n, d, Model::Classical, ScenarioKind::A};
  res.referenceValue = tableIValue(n, d);

  if (rankForcedZeroA(n, d, Model::Classical)) {
    res.value = 0.0;
    res.rawW = 0.0;
    res.binary = MatrixXi::Zero(n, d);
    res.weights = VectorXd::Constant(d, 1.0 / d);
    res.method = "rank-forced zero";
    return res;
  }

  auto consider = [&](const MatrixXi& a, const VectorXd& rho, double w) {
    if (pow4(n) * w > res.value) {
      res.value = pow4(n) * w;
      res.rawW = w;
      res.binary = a;
      res.weights = rho;
    }
  };

  res.value = -1.0;

  if (d >= hadamardOrderFor(n)) {
    MatrixXi a = hadamardBinary(n, d);
    VectorXd rho = VectorXd::Zero(d);
    int h = hadamardOrderFor(n);
    for (int c = 0; c < h; ++c) rho[c] = 1.0 / h;
    RhoAscent ascent(columnsFor(a));
    consider(a, rho, ascent.eval(rho));
    res.method = "hadamard saturation";
  }

  if (n * d <= 20) {
    // exhaustive over column multisets (row-0-extended columns are
    // permutation invariant)
    const int patterns = 1 << n;
    std::vector<int> pick(d, 0);
    MatrixXi a(n, d);
    std::function<void(int, int)> rec = [&](int slot, int minPat) {
      if (slot == d) {
        for (int z = 0; z < d; ++z)
          for (int i = 0; i < n; ++i) a(i, z) = (pick[z] >> i) & 1;
        VectorXd rho;
        double w = bestRho(a, rho);
        consider(a, rho, w);
        return;
      }
      for (int pat = minPat; pat < patterns; ++pat) {
        pick[slot] = pat;
        rec(slot + 1, pat);
      }
    };
    rec(0, 0);
    res.method = res.method.empty() ? "exhaustive" : res.method;
  } else {
    // randomized restarts with bit-flip local search
    CounterRng master(opts.seed);
    for (int restart = 0; restart < opts.restarts; ++restart) {
      CounterRng rng(CounterRng::deriveSeed(opts.seed, restart));
      MatrixXi a(n, d);
      for (int i = 0; i < n; ++i)
        for (int z = 0; z < d; ++z) a(i, z) = rng.nextDouble() < 0.5 ? 1 : 0;
      VectorXd rho;
      double w = bestRho(a, rho, &rng);
      bool improved = true;
      while (improved) {
        improved = false;
        for (int i = 0; i < n; ++i)
          for (int z = 0; z < d; ++z) {
            a(i, z) ^= 1;
            VectorXd r2;
            double w2 = bestRho(a, r2);
            if (w2 > w + 1e-15) {
              w = w2;
              rho = r2;
              improved = true;
            } else {
              a(i, z) ^= 1;
            }
          }
      }
      consider(a, rho, w);
    }
    res.restarts = opts.restarts;
    res.method = res.method.empty() ? "restarts + bit-flip search"
                                    : res.method + " + restarts";
  }

  // printed extremal configurations as additional candidates
  auto foldConfig = [&](const MatrixXi& a, const VectorXd& rho) {
    RhoAscent ascent(columnsFor(a));
    consider(a, rho, ascent.eval(rho));
  };
  if (n == 4 && d == 6) {
    MatrixXi a(4, 6);
    a << 1, 1, 0, 0, 0, 1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 0, 1, 1, 0, 1, 1, 0, 0, 1;
    double x = 0.19585843826556898, y = 0.18219100818175962;
    VectorXd rho(6);
    rho << x, x, x, 1 - 3 * x - 2 * y, y, y;
    foldConfig(a, rho);
  }
  if (n == 4 && d == 7) {
    MatrixXi a(4, 7);
    a << 0, 0, 0, 0, 0, 1, 1, 0, 0, 0, 1, 1, 1, 0, 0, 0, 1, 1, 0, 0, 1, 0, 1,
        0, 0, 1, 0, 1;
    double x = 0.06135153414853146, y = 0.1710023907787869,
           z = 0.19069830365543322;
    VectorXd rho(7);
    rho << 1 - 2 * x - 2 * y - 2 * z, x, x, y, y, z, z;
    foldConfig(a, rho);
  }
  if (n == 5 && d == 6) {
    MatrixXi a(5, 6);
    a << 1, 0, 1, 0, 0, 0, 0, 1, 1, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1, 0, 0, 1, 0,
        1, 0, 0, 1, 0, 1, 1;
    foldConfig(a, VectorXd::Constant(6, 1.0 / 6));
  }
  if (n == 5 && d == 7) {
    MatrixXi a(5, 7);
    a << 0, 1, 0, 0, 0, 1, 1, 0, 1, 0, 1, 1, 0, 0, 0, 0, 1, 1, 0, 1, 0, 0, 0,
        1, 0, 1, 0, 1, 0, 1, 1, 0, 0, 0, 0;
    VectorXd rho(7);
    rho << 1.0 / 6, 1.0 / 6, 1.0 / 6, 1.0 / 8, 1.0 / 8, 1.0 / 8, 1.0 / 8;
    foldConfig(a, rho);
  }

  return res;
}

// -------------------------------------------------------------- quantum max

namespace {

struct QuantumCandidate {
  VectorXd psi;
  MatrixXcd vecs;
};

// Bell-type configurations reaching the absolute bound for small n, embedded
// into dimension d by zero-padding.
std::vector<QuantumCandidate> saturatingSeeds(int n, int d, bool complexField) {
  std::vector<QuantumCandidate> seeds;
  if (n > 3) return seeds;
  const double r2 = 1.0 / std::sqrt(2.0);
  std::vector<VectorXcd> base;
  VectorXcd v1 = VectorXcd::Zero(d), v2 = VectorXcd::Zero(d),
            v3 = VectorXcd::Zero(d);
  v1[0] = 1.0;
  v2[0] = r2;
  v2[1] = r2;
  base = {v1, v2};
  if (n >= 3) {
    if (!complexField) return seeds;  // d=2-style real saturation stops at n=2
    v3[0] = r2;
    v3[1] = Complex(0.0, r2);
    base.push_back(v3);
  }
  if (static_cast<int>(base.size()) < n) return seeds;
  QuantumCandidate c;
  c.psi = VectorXd::Zero(d);
  c.psi[0] = r2;
  c.psi[1] = r2;
  c.vecs.resize(d, n);
  for (int i = 0; i < n; ++i) c.vecs.col(i) = base[i];
  seeds.push_back(std::move(c));
  return seeds;
}

// printed ansatz configurations for d=3 (see verifyAppendixConfigs for the
// published values they hit)
std::vector<QuantumCandidate> printedSeeds(int n, int d, bool complexField) {
  std::vector<QuantumCandidate> seeds;
  auto cfg = printedQuantumConfig(
      n, d, complexField ? Model::QuantumComplex : Model::QuantumReal);
  if (cfg) seeds.push_back({cfg->psi, cfg->vectors});
  return seeds;
}

}  // namespace

ExtremalResult quantumMaxA(int n, int d, Model field,
                           const OptimOptions& opts) {
  if (field == Model::Classical)
    throw std::invalid_argument("quantumMaxA: field must be quantum");
  if (n < 1 || n > 8 || d < 2 || d > 3)
    throw std::out_of_range("quantumMaxA: n in 1..8, d in {2,3}");
  const bool complexField = field == Model::QuantumComplex;

  ExtremalResult res;
  res.problem = {n, d, field, ScenarioKind::A};
  res.referenceValue = tableIIValue(n, d, field);

  if (rankForcedZeroA(n, d, field)) {
    res.value = 0.0;
    res.rawW = 0.0;
    res.weights = VectorXd::Constant(d, 1.0 / std::sqrt(double(d)));
    res.vectors = MatrixXcd::Identity(d, std::min(n, d));
    res.method = "rank-forced zero";
    return res;
  }

  QuantumParam param{n, d, complexField};
  auto objective = [&](const VectorXd& x) {
    VectorXd psi;
    MatrixXcd vecs;
    param.decode(x, psi, vecs);
    return -determinant(quantumMatrixA(psi, vecs));
  };

  res.value = -1.0;
  auto consider = [&](const VectorXd& psi, const MatrixXcd& vecs) {
    double w = determinant(quantumMatrixA(psi, vecs));
    if (pow4(n) * w > res.value) {
      res.value = pow4(n) * w;
      res.rawW = w;
      res.weights = psi;
      res.vectors = vecs;
    }
  };

  for (int restart = 0; restart < opts.restarts; ++restart) {
    CounterRng rng(CounterRng::deriveSeed(opts.seed, restart));
    VectorXd x(param.dim());
    for (int i = 0; i < x.size(); ++i) x[i] = rng.nextGaussian();
    nelderMead(objective, x, 0.4, opts.polishEvals);
    VectorXd psi;
    MatrixXcd vecs;
    param.decode(x, psi, vecs);
    consider(psi, vecs);
  }
  res.restarts = opts.restarts;
  res.method = "restarts + nelder-mead";

  for (const auto& seed : saturatingSeeds(n, d, complexField))
    consider(seed.psi, seed.vecs);
  for (const auto& seed : printedSeeds(n, d, complexField))
    consider(seed.psi, seed.vecs);

  return res;
}

// ------------------------------------------------------------------- case b

namespace {

// normalized equiangular tight frame of m vectors in dimension dim, or empty
MatrixXcd knownEtf(int m, int dim, bool complexField) {
  if (m == dim + 1) {
    // regular simplex: Gram (1+1/d) I - (1/d) J, rank d
    MatrixXd g = MatrixXd::Constant(m, m, -1.0 / dim);
    g.diagonal().setConstant(1.0);
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(g);
    MatrixXd v = es.eigenvectors().rightCols(dim) *
                 es.eigenvalues().tail(dim).cwiseSqrt().asDiagonal();
    return v.transpose().cast<Complex>();  // dim x m
  }
  if (m == 4 && dim == 2 && complexField) {
    // SIC tetrahedron
    MatrixXcd v(2, 4);
    auto dirs = qsim::tetrahedronDirections();
    for (int i = 0; i < 4; ++i) {
      double theta = std::acos(std::clamp(dirs[i].z(), -1.0, 1.0));
      double phi = std::atan2(dirs[i].y(), dirs[i].x());
      v(0, i) = std::cos(theta / 2);
      v(1, i) = std::exp(Complex(0, phi)) * std::sin(theta / 2);
    }
    return v;
  }
  if (m == 6 && dim == 3) {
    // icosahedron diagonals
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    MatrixXd v(3, 6);
    v.col(0) << 0, 1, phi;
    v.col(1) << 0, -1, phi;
    v.col(2) << 1, phi, 0;
    v.col(3) << -1, phi, 0;
    v.col(4) << phi, 0, 1;
    v.col(5) << phi, 0, -1;
    v.colwise().normalize();
    return v.cast<Complex>();
  }
  return MatrixXcd();
}

}  // namespace

double caseBQuarticRoot() {
  double x = 3.0;
  for (int it = 0; it < 100; ++it) {
    double f = ((x + 2) * x - 11) * x * x - 11 * x - 2;
    double df = (4 * x + 6) * x * x - 22 * x - 11;
    double step = f / df;
    x -= step;
    if (std::abs(step) < 1e-16) break;
  }
  return x;
}

double caseBComplexProfile(double x) {
  double num = x * x * std::pow(1 + x, 6) * std::pow(1 + 2 * x, 6);
  double den = 27 * std::pow(x * x * (1 + x) * (1 + x) +
                                 2 * (2 + 3 * x) * (2 + 3 * x),
                             5);
  return num / den;
}

namespace {

MatrixXcd caseBComplexVectors(double x) {
  const Complex omega = std::exp(Complex(0, 2 * std::numbers::pi / 3));
  const double q = 1.0;
  const double r = std::sqrt(x);
  const double a =
      std::sqrt(3 * q * q * (q * q + 2 * r * r) / (q * q + r * r));
  MatrixXcd v = MatrixXcd::Zero(3, 5);
  v(0, 0) = a;
  v(1, 1) = a;
  for (int j = 3; j <= 5; ++j) {
    v(0, j - 1) = q * std::pow(omega, j);
    v(1, j - 1) = q * std::pow(omega, 2 * j);
    v(2, j - 1) = r;
  }
  return v;
}

MatrixXcd caseBRealVectors() {
  // corrected extremal parameters of the printed ansatz (the published
  // parameter relations do not reproduce the published determinant; these do,
  // exactly): b = 1, a = 12^{-1/4}, x = sqrt(3) a, y = 1/sqrt(3), z = 2y.
  const double a = std::pow(12.0, -0.25);
  const double b = 1.0;
  const double x = std::sqrt(3.0) * a;
  const double y = 1.0 / std::sqrt(3.0);
  const double z = 2.0 * y;
  MatrixXcd v = MatrixXcd::Zero(3, 5);
  v(0, 0) = x;
  v(1, 0) = y;
  v(0, 1) = x;
  v(1, 1) = -y;
  v(0, 2) = a;
  v(2, 2) = b;
  v(0, 3) = a;
  v(2, 3) = -b;
  v(1, 4) = z;
  return v;
}

}  // namespace

ExtremalResult maxB(int n, int d, Model field, const OptimOptions& opts) {
  if (n < 1 || n > 5 || d < 2 || d > 8)
    throw std::out_of_range("maxB: n in 1..5, d in 2..8");

  ExtremalResult res;
  res.problem = {n, d, field, ScenarioKind::B};

  if (rankForcedZeroB(n, d, field)) {
    res.value = 0.0;
    res.rawW = 0.0;
    res.method = "rank-forced zero";
    res.referenceValue = 0.0;
    return res;
  }

  if (d > n) {
    // classical maximum: uniform rho over n+1 states, identity readout;
    // p = diag(1/(n+1)) so the determinant is exact
    double w = std::pow(n + 1.0, -(n + 1.0));
    res.value = w;
    res.rawW = w;
    res.weights = VectorXd::Constant(n + 1, 1.0 / (n + 1));
    MatrixXcd v = MatrixXcd::Zero(d, n + 1);
    for (int i = 0; i <= n; ++i) v(i, i) = 1.0;
    res.vectors = v;
    res.method = "classical uniform construction";
    res.referenceValue = w;
    return res;
  }

  const bool complexField = field == Model::QuantumComplex;
  MatrixXcd etf = knownEtf(n + 1, d, complexField);
  if (etf.size() != 0) {
    double w = std::pow((d - 1.0) / n, n) * std::pow(n + 1.0, -(n + 1.0));
    res.value = determinant(caseBMatrix(etf));
    res.rawW = res.value;
    res.vectors = etf;
    res.method = "equiangular tight frame";
    res.referenceValue = w;
    return res;
  }

  if (n == 4 && d == 3) {
    if (complexField) {
      // one-dimensional profile in x = r^2 (q = 1)
      double x = caseBQuarticRoot();
      MatrixXcd v = caseBComplexVectors(x);
      res.value = determinant(caseBMatrix(v));
      res.rawW = res.value;
      res.vectors = v;
      res.method = "quartic-root profile maximum";
      res.referenceValue = 1.874577768244e-5;
      return res;
    }
    // real: optimize the two-pair + singleton rank-1 ansatz
    auto objective = [](const VectorXd& t) {
      MatrixXcd v = MatrixXcd::Zero(3, 5);
      v(0, 0) = t[0];
      v(1, 0) = t[1];
      v(0, 1) = t[0];
      v(1, 1) = -t[1];
      v(0, 2) = t[2];
      v(2, 2) = t[3];
      v(0, 3) = t[2];
      v(2, 3) = -t[3];
      v(1, 4) = t[4];
      return -determinant(caseBMatrix(v));
    };
    double best = -1.0;
    VectorXd bestX;
    for (int restart = 0; restart < std::max(opts.restarts / 4, 10);
         ++restart) {
      CounterRng rng(CounterRng::deriveSeed(opts.seed, restart));
      VectorXd x(5);
      for (int i = 0; i < 5; ++i) x[i] = 0.2 + rng.nextDouble();
      double v = -nelderMead(objective, x, 0.3, opts.polishEvals);
      if (v > best) {
        best = v;
        bestX = x;
      }
    }
    MatrixXcd vc = caseBRealVectors();
    double wExact = determinant(caseBMatrix(vc));
    if (wExact >= best) {
      res.value = wExact;
      res.vectors = vc;
      res.method = "algebraic extremal configuration";
    } else {
      MatrixXcd v = MatrixXcd::Zero(3, 5);
      v(0, 0) = bestX[0];
      v(1, 0) = bestX[1];
      v(0, 1) = bestX[0];
      v(1, 1) = -bestX[1];
      v(0, 2) = bestX[2];
      v(2, 2) = bestX[3];
      v(0, 3) = bestX[2];
      v(2, 3) = -bestX[3];
      v(1, 4) = bestX[4];
      res.value = best;
      res.vectors = v;
      res.method = "restarts + nelder-mead";
    }
    res.rawW = res.value;
    res.restarts = opts.restarts;
    res.referenceValue = 1.6875e-5;
    return res;
  }

  // no frame and no printed treatment: generic rank-1 search, no reference
  auto objective = [&](const VectorXd& x) {
    MatrixXcd v(d, n + 1);
    int off = 0;
    for (int i = 0; i <= n; ++i)
      for (int k = 0; k < d; ++k) {
        if (complexField) {
          v(k, i) = Complex(x[off], x[off + 1]);
          off += 2;
        } else {
          v(k, i) = x[off++];
        }
      }
    return -determinant(caseBMatrix(v));
  };
  int dim = (n + 1) * d * (complexField ? 2 : 1);
  double best = -1.0;
  for (int restart = 0; restart < opts.restarts; ++restart) {
    CounterRng rng(CounterRng::deriveSeed(opts.seed, restart));
    VectorXd x(dim);
    for (int i = 0; i < dim; ++i) x[i] = rng.nextGaussian();
    double v = -nelderMead(objective, x, 0.4, opts.polishEvals);
    if (v > best) best = v;
  }
  res.value = best;
  res.rawW = best;
  res.restarts = opts.restarts;
  res.method = "generic rank-1 restarts";
  return res;
}

double evaluateResult(const ExtremalResult& r) {
  if (r.problem.kind == ScenarioKind::B) {
    if (r.vectors.size() == 0) return 0.0;
    return determinant(caseBMatrix(r.vectors));
  }
  if (r.problem.model == Model::Classical) {
    if (r.binary.size() == 0) return 0.0;
    RhoAscent ascent(columnsFor(r.binary));
    return pow4(r.problem.n) * ascent.eval(r.weights);
  }
  if (r.vectors.size() == 0) return 0.0;
  return pow4(r.problem.n) * determinant(quantumMatrixA(r.weights, r.vectors));
}

}  // namespace extremal
}  // namespace schmidt
