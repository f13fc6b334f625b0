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

#ifndef ACTSCHED_DUAL_SET_HPP_
#define ACTSCHED_DUAL_SET_HPP_

// Deterministic dual-set spectral sparsification.
//
// Given two decompositions of identity, sum_i v_i v_i^T = I_n and
// sum_i u_i u_i^T = I_l over the same t indices, DualSet() returns weights
// c >= 0 with at most kappa nonzeros such that
//
//   lambda_min(sum_i c_i v_i v_i^T) >= (1 - sqrt(n / kappa))^2,
//   lambda_max(sum_i c_i u_i u_i^T) <= (1 + sqrt(l / kappa))^2.
//
// The method runs kappa rounds of a two-sided barrier potential argument.
// A lower wall mu_lo(tau) = tau - sqrt(kappa n) trails the spectrum of
// A_lo = sum c v v^T and an upper wall mu_hi(tau) = delta_hi (tau +
// sqrt(kappa l)) leads the spectrum of A_hi = sum c u u^T. Each round picks
// the index maximizing L(v_j) - U(u_j) among those with U(u_j) <= L(v_j),
// adds Delta = 2 / (L + U) to it, and advances both walls. Ties go to the
// lowest index.

#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "actsched/errors.hpp"
#include "actsched/linalg.hpp"

namespace actsched {

inline constexpr double kDecompositionTol = 1e-8;
inline constexpr double kDegenerateDenominator = 1e-14;

// Two identity decompositions with the same number of columns. When
// `standard_basis` is set, U is implicitly I_t and never materialized.
class DecompositionPair {
 public:
  static DecompositionPair Make(Matrix v, Matrix u) {
    DecompositionPair p(std::move(v), std::move(u), false);
    p.Validate();
    return p;
  }

  static DecompositionPair WithStandardBasis(Matrix v) {
    DecompositionPair p(std::move(v), Matrix(), true);
    p.Validate();
    return p;
  }

  const Matrix& v() const { return v_; }
  // Only meaningful when !standard_basis().
  const Matrix& u() const { return u_; }
  bool standard_basis() const { return standard_basis_; }
  int n() const { return static_cast<int>(v_.rows()); }
  int ell() const {
    return standard_basis_ ? count() : static_cast<int>(u_.rows());
  }
  int count() const { return static_cast<int>(v_.cols()); }

 private:
  DecompositionPair(Matrix v, Matrix u, bool standard_basis)
      : v_(std::move(v)), u_(std::move(u)), standard_basis_(standard_basis) {}

  void Validate() const {
    if (!standard_basis_ && u_.cols() != v_.cols()) {
      throw DimensionError("V and U must have the same number of columns");
    }
    if (n() >= count()) throw DimensionError("need n < t columns");
    if (ell() > count()) throw DimensionError("need l <= t columns");
    const Matrix vvt = v_ * v_.transpose();
    if ((vvt - Matrix::Identity(n(), n())).norm() > kDecompositionTol) {
      throw DimensionError("V V^T is not the identity");
    }
    if (!standard_basis_) {
      const Matrix uut = u_ * u_.transpose();
      if ((uut - Matrix::Identity(ell(), ell())).norm() > kDecompositionTol) {
        throw DimensionError("U U^T is not the identity");
      }
    }
  }

  Matrix v_;
  Matrix u_;
  bool standard_basis_;
};

struct WeightVector {
  Vector c;
  int kappa = 0;
  std::vector<int> picks;  // chosen index per round, in order

  int Support() const { return static_cast<int>((c.array() > 0.0).count()); }
};

struct BarrierState {
  Matrix lower_matrix;
  Matrix upper_matrix;
  double lower_shift = 0.0;
  double upper_shift = 0.0;
  double lower_step = 1.0;
  double upper_step = 1.0;
  int iteration = 0;
};

// sum_i 1 / (lambda_i - mu) over ascending eigenvalues.
inline double LowerPhiFromSpectrum(double mu, const Vector& eigenvalues) {
  if (eigenvalues.size() > 0 && !(mu < eigenvalues(0))) {
    throw BarrierViolation("lower barrier crossed: mu >= lambda_min");
  }
  return (eigenvalues.array() - mu).inverse().sum();
}

inline double UpperPhiFromSpectrum(double mu, const Vector& eigenvalues) {
  if (eigenvalues.size() > 0 && !(mu > eigenvalues.maxCoeff())) {
    throw BarrierViolation("upper barrier crossed: mu <= lambda_max");
  }
  return (mu - eigenvalues.array()).inverse().sum();
}

inline double LowerBarrierPhi(double mu, const Eigen::Ref<const Matrix>& m) {
  return LowerPhiFromSpectrum(mu, SymEigenvalues(m));
}

inline double UpperBarrierPhi(double mu, const Eigen::Ref<const Matrix>& m) {
  return UpperPhiFromSpectrum(mu, SymEigenvalues(m));
}

namespace internal {

// Per-round quantities for one side of the barrier, in the eigenbasis of
// the running matrix.
struct SideSpectrum {
  Vector eigenvalues;
  Matrix eigenvectors;
};

inline double CheckedDenominator(double den) {
  if (!(std::abs(den) >= kDegenerateDenominator)) {
    throw DegenerateDenominator("barrier potential difference vanished");
  }
  return den;
}

}  // namespace internal

// L(v) = v^T (A - (mu+d) I)^{-2} v / (phi(mu+d) - phi(mu))
//        - v^T (A - (mu+d) I)^{-1} v   for the lower side.
inline double LowerGain(const Eigen::Ref<const Vector>& v,
                        const BarrierState& state) {
  const SymmetricEigen eig = SymEig(state.lower_matrix);
  const double shifted = state.lower_shift + state.lower_step;
  const double den = internal::CheckedDenominator(
      (eig.values.array() - shifted).inverse().sum() -
      LowerPhiFromSpectrum(state.lower_shift, eig.values));
  const Vector proj = eig.vectors.transpose() * v;
  const Vector r = (eig.values.array() - shifted).inverse();
  const Vector p2 = proj.array().square();
  return p2.dot(r.cwiseProduct(r)) / den - p2.dot(r);
}

// U(u) = u^T ((mu+d) I - A)^{-2} u / (phi(mu) - phi(mu+d))
//        + u^T ((mu+d) I - A)^{-1} u   for the upper side.
inline double UpperGain(const Eigen::Ref<const Vector>& u,
                        const BarrierState& state) {
  const SymmetricEigen eig = SymEig(state.upper_matrix);
  const double shifted = state.upper_shift + state.upper_step;
  const double den = internal::CheckedDenominator(
      UpperPhiFromSpectrum(state.upper_shift, eig.values) -
      UpperPhiFromSpectrum(shifted, eig.values));
  const Vector proj = eig.vectors.transpose() * u;
  const Vector r = (shifted - eig.values.array()).inverse();
  const Vector p2 = proj.array().square();
  return p2.dot(r.cwiseProduct(r)) / den + p2.dot(r);
}

struct DualSetOptions {
  // Re-check both barriers after every round and throw BarrierViolation if
  // either wall was crossed.
  bool verify_barriers = false;
};

inline WeightVector DualSet(const DecompositionPair& pair, int kappa,
                            const DualSetOptions& options = {}) {
  const int n = pair.n();
  const int ell = pair.ell();
  const int t = pair.count();
  if (kappa <= n || kappa > t) {
    throw InvalidBudget("dual set needs n < kappa <= t (n=" +
                        std::to_string(n) + ", kappa=" +
                        std::to_string(kappa) + ", t=" + std::to_string(t) +
                        ")");
  }
  const double kd = kappa;
  const double lower_step = 1.0;
  const double upper_step =
      (1.0 + std::sqrt(ell / kd)) / (1.0 - std::sqrt(n / kd));

  WeightVector out;
  out.kappa = kappa;
  out.c = Vector::Zero(t);
  out.picks.reserve(kappa);

  Matrix lower = Matrix::Zero(n, n);
  // Dense upper matrix, or its diagonal when U is the standard basis.
  Matrix upper = pair.standard_basis() ? Matrix() : Matrix::Zero(ell, ell);
  Vector upper_diag = pair.standard_basis() ? Vector::Zero(t) : Vector();

  Vector lower_gain(t);
  Vector upper_gain(t);

  for (int tau = 0; tau < kappa; ++tau) {
    const double mu_lo = tau - std::sqrt(kd * n);
    const double mu_hi = upper_step * (tau + std::sqrt(kd * ell));

    {
      const SymmetricEigen eig = SymEig(lower);
      const double shifted = mu_lo + lower_step;
      const double den = internal::CheckedDenominator(
          (eig.values.array() - shifted).inverse().sum() -
          LowerPhiFromSpectrum(mu_lo, eig.values));
      const Vector r = (eig.values.array() - shifted).inverse();
      const Matrix proj2 = (eig.vectors.transpose() * pair.v()).array().square();
      const Vector quad2 = r.cwiseProduct(r) / den - r;
      lower_gain = proj2.transpose() * quad2;
    }

    const double shifted_hi = mu_hi + upper_step;
    if (pair.standard_basis()) {
      const double den = internal::CheckedDenominator(
          UpperPhiFromSpectrum(mu_hi, upper_diag) -
          UpperPhiFromSpectrum(shifted_hi, upper_diag));
      const Vector r = (shifted_hi - upper_diag.array()).inverse();
      upper_gain = r.cwiseProduct(r) / den + r;
    } else {
      const SymmetricEigen eig = SymEig(upper);
      const double den = internal::CheckedDenominator(
          UpperPhiFromSpectrum(mu_hi, eig.values) -
          UpperPhiFromSpectrum(shifted_hi, eig.values));
      const Vector r = (shifted_hi - eig.values.array()).inverse();
      const Matrix proj2 = (eig.vectors.transpose() * pair.u()).array().square();
      const Vector quad2 = r.cwiseProduct(r) / den + r;
      upper_gain = proj2.transpose() * quad2;
    }

    int best = -1;
    double best_score = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < t; ++j) {
      const double lg = lower_gain(j);
      const double ug = upper_gain(j);
      if (!(ug <= lg) || !(lg + ug > 0.0)) continue;
      const double score = lg - ug;
      if (score > best_score) {
        best_score = score;
        best = j;
      }
    }
    if (best < 0) {
      throw NoFeasibleIndex("no index satisfies U <= L at round " +
                            std::to_string(tau));
    }

    const double delta = 2.0 / (upper_gain(best) + lower_gain(best));
    out.c(best) += delta;
    out.picks.push_back(best);
    lower.noalias() += delta * pair.v().col(best) * pair.v().col(best).transpose();
    if (pair.standard_basis()) {
      upper_diag(best) += delta;
    } else {
      upper.noalias() +=
          delta * pair.u().col(best) * pair.u().col(best).transpose();
    }

    if (options.verify_barriers) {
      const double next_lo = mu_lo + lower_step;
      const double next_hi = mu_hi + upper_step;
      if (!(SymEigenvalues(lower)(0) > next_lo)) {
        throw BarrierViolation("lower wall crossed after round " +
                               std::to_string(tau));
      }
      const double top = pair.standard_basis()
                             ? upper_diag.maxCoeff()
                             : SymEigenvalues(upper)(ell - 1);
      if (!(top < next_hi)) {
        throw BarrierViolation("upper wall crossed after round " +
                               std::to_string(tau));
      }
    }
  }

  out.c *= (1.0 - std::sqrt(n / kd)) / kd;
  return out;
}

}  // namespace actsched

#endif  // ACTSCHED_DUAL_SET_HPP_
