// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ACTSCHED_LINALG_HPP_
#define ACTSCHED_LINALG_HPP_

// Dense symmetric helpers shared by every module. All spectral work goes
// through SelfAdjointEigenSolver on an explicitly symmetrized copy.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "actsched/errors.hpp"

namespace actsched {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// A Gramian is treated as positive definite iff
// lambda_min > kGramianRankTol * lambda_max.
inline constexpr double kGramianRankTol = 1e-14;

// Relative singular-value cutoff for pseudo-inverses of C(t).
inline constexpr double kPinvCutoff = 1e-12;

inline Matrix Symmetrized(const Eigen::Ref<const Matrix>& m) {
  return 0.5 * (m + m.transpose());
}

struct SymmetricEigen {
  Vector values;   // ascending
  Matrix vectors;  // columns
};

inline SymmetricEigen SymEig(const Eigen::Ref<const Matrix>& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(Symmetrized(m));
  return {es.eigenvalues(), es.eigenvectors()};
}

inline Vector SymEigenvalues(const Eigen::Ref<const Matrix>& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(Symmetrized(m),
                                           Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

inline bool SpectrumIsPositiveDefinite(const Vector& ascending_eigenvalues,
                               double rank_tol = kGramianRankTol) {
  if (ascending_eigenvalues.size() == 0) return false;
  const double lmax = ascending_eigenvalues(ascending_eigenvalues.size() - 1);
  return lmax > 0.0 && ascending_eigenvalues(0) > rank_tol * lmax;
}

inline bool IsPositiveDefinite(const Eigen::Ref<const Matrix>& m,
                               double rank_tol = kGramianRankTol) {
  return SpectrumIsPositiveDefinite(SymEigenvalues(m), rank_tol);
}

inline double RelativeFrobenius(const Eigen::Ref<const Matrix>& a,
                                const Eigen::Ref<const Matrix>& b) {
  const double scale = std::max(b.norm(), std::numeric_limits<double>::min());
  return (a - b).norm() / scale;
}

// Loewner check: b - a is PSD up to `tol` relative to the spectral scale of
// b.
inline bool LoewnerLeq(const Eigen::Ref<const Matrix>& a,
                       const Eigen::Ref<const Matrix>& b, double tol) {
  const Vector diff = SymEigenvalues(b - a);
  const Vector bev = SymEigenvalues(b);
  const double scale = std::max(std::abs(bev(0)), std::abs(bev(bev.size() - 1)));
  return diff(0) >= -tol * std::max(scale, 1.0);
}

// Thin SVD of a (possibly very wide) matrix C = U diag(sigma) R^T.
// Wide inputs go through a Householder QR of C^T first, so singular values
// are accurate relative to sigma_max even when C has 10^4+ columns.
struct ColumnSpectrum {
  Vector sigma;  // descending
  Matrix left;   // n x r
  Matrix right;  // p x r

  Eigen::Index Rank(double cutoff = kPinvCutoff) const {
    if (sigma.size() == 0 || sigma(0) <= 0.0) return 0;
    Eigen::Index r = 0;
    while (r < sigma.size() && sigma(r) > cutoff * sigma(0)) ++r;
    return r;
  }
};

inline ColumnSpectrum ThinSvd(const Eigen::Ref<const Matrix>& c) {
  const Eigen::Index n = c.rows();
  const Eigen::Index p = c.cols();
  ColumnSpectrum out;
  if (p >= n) {
    Eigen::HouseholderQR<Matrix> qr(c.transpose());
    const Matrix r_t =
        qr.matrixQR().topRows(n).triangularView<Eigen::Upper>().toDenseMatrix()
            .transpose();
    Eigen::JacobiSVD<Matrix> svd(r_t, Eigen::ComputeFullU | Eigen::ComputeFullV);
    out.sigma = svd.singularValues();
    out.left = svd.matrixU();
    Matrix q_thin = Matrix::Identity(p, n);
    q_thin.applyOnTheLeft(qr.householderQ());
    out.right = q_thin * svd.matrixV();
  } else {
    Eigen::JacobiSVD<Matrix> svd(c, Eigen::ComputeThinU | Eigen::ComputeThinV);
    out.sigma = svd.singularValues();
    out.left = svd.matrixU();
    out.right = svd.matrixV();
  }
  return out;
}

inline void RequirePositiveDefinite(const Vector& ascending, const char* what) {
  if (!SpectrumIsPositiveDefinite(ascending)) {
    throw SingularGramian(std::string(what) +
                          ": Gramian is not positive definite (uncontrollable)");
  }
}

// tr(X^{-1}) for symmetric positive definite X via Cholesky; +inf if the
// factorization fails.
inline double TraceInverseSpd(const Eigen::Ref<const Matrix>& x) {
  Eigen::LLT<Matrix> llt(Symmetrized(x));
  if (llt.info() != Eigen::Success) {
    return std::numeric_limits<double>::infinity();
  }
  Matrix linv = Matrix::Identity(x.rows(), x.cols());
  llt.matrixL().solveInPlace(linv);
  return linv.squaredNorm();
}

}  // namespace actsched

#endif  // ACTSCHED_LINALG_HPP_
