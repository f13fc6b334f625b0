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

#ifndef ACTSCHED_SYSTEM_HPP_
#define ACTSCHED_SYSTEM_HPP_

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "actsched/errors.hpp"
#include "actsched/linalg.hpp"

namespace actsched {

// Discrete-time LTI pair x(k+1) = A x(k) + B u(k).
class LtiSystem {
 public:
  LtiSystem(Matrix a, Matrix b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.rows() < 1 || a_.rows() != a_.cols()) {
      throw DimensionError("A must be square and non-empty");
    }
    if (b_.rows() != a_.rows()) {
      throw DimensionError("B must have as many rows as A");
    }
    if (b_.cols() < 1) throw DimensionError("B needs at least one column");
  }

  const Matrix& a() const { return a_; }
  const Matrix& b() const { return b_; }
  int states() const { return static_cast<int>(a_.rows()); }
  int inputs() const { return static_cast<int>(b_.cols()); }

  // Same dynamics, different input matrix.
  LtiSystem WithInputs(Matrix b) const { return LtiSystem(a_, std::move(b)); }

  // Keep only the listed columns of B.
  LtiSystem SubsetInputs(const std::vector<int>& columns) const {
    Matrix b(a_.rows(), static_cast<Eigen::Index>(columns.size()));
    for (size_t i = 0; i < columns.size(); ++i) b.col(i) = b_.col(columns[i]);
    return LtiSystem(a_, std::move(b));
  }

 private:
  Matrix a_;
  Matrix b_;
};

inline void CheckHorizon(int t) {
  if (t < 1) throw DimensionError("horizon must be at least 1");
}

// Flat column of C(t) holding A^power b_input.
inline int FlatColumn(int input, int power, int inputs) {
  return input + inputs * power;
}

// A^power b_j enters the scheduled Gramian with the scaling applied at
// schedule time t - power - 1.
inline int ScheduleTimeOfPower(int power, int t) { return t - power - 1; }

// m x t grid of nonnegative input scalings s_i(k).
class Schedule {
 public:
  Schedule() = default;

  explicit Schedule(Matrix scalings) : s_(std::move(scalings)) {
    if ((s_.array() < 0.0).any() || !s_.allFinite()) {
      throw DimensionError("schedule scalings must be finite and nonnegative");
    }
  }

  static Schedule Zero(int inputs, int t) {
    return Schedule(Matrix::Zero(inputs, t));
  }

  // Builds a schedule from squared weights indexed by flat column of C(t)
  // (column j + m*k holds A^k b_j). The weight lands on s_j(t-k-1)^2.
  static Schedule FromColumnWeights(const Eigen::Ref<const Vector>& squared,
                                    int inputs, int t) {
    if (squared.size() != static_cast<Eigen::Index>(inputs) * t) {
      throw DimensionError("column weight vector has wrong length");
    }
    Matrix s = Matrix::Zero(inputs, t);
    for (int k = 0; k < t; ++k) {
      for (int j = 0; j < inputs; ++j) {
        const double w = squared(FlatColumn(j, k, inputs));
        if (w < 0.0) throw DimensionError("negative column weight");
        s(j, ScheduleTimeOfPower(k, t)) = std::sqrt(w);
      }
    }
    return Schedule(std::move(s));
  }

  // Inverse of FromColumnWeights: s^2 laid out by flat column of C(t).
  Vector ColumnWeights() const {
    const int m = inputs();
    const int t = horizon();
    Vector w(static_cast<Eigen::Index>(m) * t);
    for (int k = 0; k < t; ++k) {
      for (int j = 0; j < m; ++j) {
        const double v = s_(j, ScheduleTimeOfPower(k, t));
        w(FlatColumn(j, k, m)) = v * v;
      }
    }
    return w;
  }

  const Matrix& scalings() const { return s_; }
  Matrix squared() const { return s_.array().square().matrix(); }
  double operator()(int input, int time) const { return s_(input, time); }
  int inputs() const { return static_cast<int>(s_.rows()); }
  int horizon() const { return static_cast<int>(s_.cols()); }

  // sigma_k: inputs with nonzero scaling at time k.
  std::vector<int> ActiveSet(int time) const {
    std::vector<int> active;
    for (int i = 0; i < inputs(); ++i) {
      if (s_(i, time) > 0.0) active.push_back(i);
    }
    return active;
  }

  int SupportSize() const { return static_cast<int>((s_.array() > 0.0).count()); }

  // Realized average number of active actuators per step.
  double AverageActive() const {
    return horizon() == 0 ? 0.0
                          : static_cast<double>(SupportSize()) / horizon();
  }

  bool IsBinary() const {
    return ((s_.array() == 0.0) || (s_.array() == 1.0)).all();
  }

  // Rescales so that sum of s^2 equals `total`.
  Schedule NormalizedEnergy(double total) const {
    const double energy = s_.squaredNorm();
    if (energy <= 0.0) return *this;
    return Schedule(s_ * std::sqrt(total / energy));
  }

 private:
  Matrix s_;
};

// [B, AB, ..., A^{t-1}B], each block from the previous one.
inline Matrix ControllabilityMatrix(const LtiSystem& sys, int t) {
  CheckHorizon(t);
  const int n = sys.states();
  const int m = sys.inputs();
  Matrix c(n, static_cast<Eigen::Index>(m) * t);
  c.leftCols(m) = sys.b();
  for (int k = 1; k < t; ++k) {
    c.middleCols(static_cast<Eigen::Index>(m) * k, m) =
        sys.a() * c.middleCols(static_cast<Eigen::Index>(m) * (k - 1), m);
  }
  return c;
}

// C diag(weights) C^T.
inline Matrix ColumnWeightedGramian(const Eigen::Ref<const Matrix>& c,
                                    const Eigen::Ref<const Vector>& weights) {
  if (weights.size() != c.cols()) {
    throw DimensionError("weight count does not match column count");
  }
  const Matrix scaled = c * weights.asDiagonal();
  Matrix w = scaled * c.transpose();
  w = Symmetrized(w);
  return w;
}

// W(t) = sum_{i<t} A^i B B^T (A^i)^T.
inline Matrix Gramian(const LtiSystem& sys, int t) {
  const Matrix c = ControllabilityMatrix(sys, t);
  return Symmetrized(c * c.transpose());
}

inline Matrix ScheduledGramian(const Eigen::Ref<const Matrix>& c,
                               const Schedule& sched) {
  const Vector w = sched.ColumnWeights();
  if (w.size() != c.cols()) {
    throw DimensionError("schedule shape does not match controllability matrix");
  }
  return ColumnWeightedGramian(c, w);
}

// W_s(t) = sum_k sum_{j in sigma_k} s_j(k)^2 (A^{t-k-1} b_j)(A^{t-k-1} b_j)^T.
inline Matrix ScheduledGramian(const LtiSystem& sys, const Schedule& sched) {
  if (sched.inputs() != sys.inputs()) {
    throw DimensionError("schedule rows must equal the input count");
  }
  return ScheduledGramian(ControllabilityMatrix(sys, sched.horizon()), sched);
}

// Symmetric M with M W M = I.
inline Matrix GramianSqrtInv(const Eigen::Ref<const Matrix>& w) {
  const SymmetricEigen eig = SymEig(w);
  RequirePositiveDefinite(eig.values, "GramianSqrtInv");
  const Vector inv_sqrt = eig.values.array().rsqrt();
  return Symmetrized(eig.vectors * inv_sqrt.asDiagonal() *
                     eig.vectors.transpose());
}

// Eigenvalues of W^{-1/2} W_s W^{-1/2}, ascending.
inline Vector RelativeSpectrum(const Eigen::Ref<const Matrix>& w,
                               const Eigen::Ref<const Matrix>& w_s) {
  const Matrix m = GramianSqrtInv(w);
  return SymEigenvalues(m * w_s * m);
}

inline constexpr double kApproxSlack = 1e-8;

// (1-eps) W <= W_s <= (1+eps) W.
inline bool IsEpsDApproximation(const Eigen::Ref<const Matrix>& w,
                                const Eigen::Ref<const Matrix>& w_s,
                                double eps) {
  const Vector ev = RelativeSpectrum(w, w_s);
  return ev(0) >= 1.0 - eps - kApproxSlack &&
         ev(ev.size() - 1) <= 1.0 + eps + kApproxSlack;
}

}  // namespace actsched

#endif  // ACTSCHED_SYSTEM_HPP_
