#pragma once

#include <Eigen/Core>
#include <cmath>
#include <stdexcept>

namespace schmidt {

namespace detail {

// Determinant by Gaussian elimination with partial pivoting. Works for any
// scalar with +,-,*,/ and an abs() ordering (double, Rational, ...).
template <typename Scalar>
Scalar eliminationDeterminant(
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> m) {
  using std::abs;
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);
  Scalar det(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = c;
    for (Eigen::Index r = c + 1; r < n; ++r)
      if (abs(m(r, c)) > abs(m(piv, c))) piv = r;
    if (m(piv, c) == Scalar(0)) return Scalar(0);
    if (piv != c) {
      m.row(piv).swap(m.row(c));
      det = -det;
    }
    det = det * m(c, c);
    for (Eigen::Index r = c + 1; r < n; ++r) {
      Scalar f = m(r, c) / m(c, c);
      for (Eigen::Index k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

}  // namespace detail

/// det(m) via pivoted elimination; sign follows the input row/column order.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("determinant: matrix must be square");
  using Scalar = typename Derived::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> work = m;
  return detail::eliminationDeterminant<Scalar>(std::move(work));
}

/// Adjugate from cofactor minors. Entry (i,j) is the (j,i) cofactor, so the
/// result is defined (and generically nonzero) even at det(m) = 0, where
/// inverse-times-determinant is not.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
adjugate(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("adjugate: matrix must be square");
  using Scalar = typename Derived::Scalar;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Eigen::Index n = m.rows();
  Mat adj(n, n);
  if (n == 1) {
    adj(0, 0) = Scalar(1);
    return adj;
  }
  Mat minor(n - 1, n - 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor(rr, cc) = m(r, c);
          ++cc;
        }
        ++rr;
      }
      Scalar cof = detail::eliminationDeterminant<Scalar>(minor);
      if ((i + j) % 2 != 0) cof = -cof;
      adj(j, i) = cof;
    }
  }
  return adj;
}

}  // namespace schmidt
