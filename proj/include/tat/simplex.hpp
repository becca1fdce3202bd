#pragma once

#include <Eigen/Core>

#include <optional>
#include <vector>

namespace tat {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// Exact two-phase simplex with Bland's rule:
//   maximize c.x  subject to  A x = b,  x >= 0.
// Returns nullopt when infeasible or unbounded.
template <typename Scalar>
std::optional<DenseVector<Scalar>> simplex_maximize(const DenseMatrix<Scalar>& A, const DenseVector<Scalar>& b,
                                                    const DenseVector<Scalar>& c) {
  const Eigen::Index m = A.rows(), n = A.cols();
  // Columns: n originals, m artificials, then the right-hand side.
  DenseMatrix<Scalar> T = DenseMatrix<Scalar>::Zero(m + 1, n + m + 1);
  std::vector<Eigen::Index> basis(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    Scalar sign = b(i) < 0 ? Scalar(-1) : Scalar(1);
    for (Eigen::Index j = 0; j < n; ++j) T(i, j) = sign * A(i, j);
    T(i, n + i) = 1;
    T(i, n + m) = sign * b(i);
    basis[i] = n + i;
  }

  auto pivot = [&](Eigen::Index r, Eigen::Index col) {
    Scalar p = T(r, col);
    for (Eigen::Index j = 0; j < T.cols(); ++j) T(r, j) /= p;
    for (Eigen::Index i = 0; i < T.rows(); ++i) {
      if (i == r || T(i, col) == 0) continue;
      Scalar f = T(i, col);
      for (Eigen::Index j = 0; j < T.cols(); ++j) T(i, j) -= f * T(r, j);
    }
    basis[r] = col;
  };

  // Objective row holds reduced costs of a minimization; cols limits entering variables.
  auto run = [&](Eigen::Index cols) -> bool {
    for (;;) {
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < cols; ++j)
        if (T(m, j) < 0) {
          enter = j;
          break;
        }
      if (enter < 0) return true;
      Eigen::Index leave = -1;
      Scalar best;
      for (Eigen::Index i = 0; i < m; ++i) {
        if (T(i, enter) <= 0) continue;
        Scalar ratio = T(i, n + m) / T(i, enter);
        if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  };

  // Phase I: minimize the sum of artificials.
  for (Eigen::Index j = 0; j <= n + m; ++j) {
    if (j >= n && j < n + m) continue;
    Scalar s = 0;
    for (Eigen::Index i = 0; i < m; ++i) s += T(i, j);
    T(m, j) = -s;
  }
  run(n + m);
  if (T(m, n + m) != 0) return std::nullopt;
  for (Eigen::Index i = 0; i < m; ++i) {
    if (basis[i] < n) continue;
    for (Eigen::Index j = 0; j < n; ++j)
      if (T(i, j) != 0) {
        pivot(i, j);
        break;
      }
  }

  // Phase II: minimize -c.x over the original columns.
  for (Eigen::Index j = 0; j <= n + m; ++j) T(m, j) = 0;
  for (Eigen::Index j = 0; j < n; ++j) T(m, j) = -c(j);
  for (Eigen::Index i = 0; i < m; ++i) {
    if (basis[i] >= n) continue;
    Scalar f = T(m, basis[i]);
    if (f == 0) continue;
    for (Eigen::Index j = 0; j <= n + m; ++j) T(m, j) -= f * T(i, j);
  }
  if (!run(n)) return std::nullopt;

  DenseVector<Scalar> x = DenseVector<Scalar>::Zero(n);
  for (Eigen::Index i = 0; i < m; ++i)
    if (basis[i] < n) x(basis[i]) = T(i, n + m);
  return x;
}

}  // namespace tat
