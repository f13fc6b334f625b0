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

#ifndef ACTSCHED_METRICS_HPP_
#define ACTSCHED_METRICS_HPP_

// Systemic controllability metrics. Every metric here is homogeneous of
// degree -1, Loewner-decreasing and convex on positive definite Gramians;
// smaller is better.

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "actsched/errors.hpp"
#include "actsched/linalg.hpp"

namespace actsched {

enum class MetricKind {
  kAOptimality,  // tr W^{-1}, average control energy
  kDOptimality,  // (det W)^{-1/n}
  kTOptimality,  // 1 / tr W
  kEOptimality,  // 1 / lambda_min(W)
  kVOptimality,  // tr(C^T W^{-1} C)
  kGOptimality,  // max diag(C^T W^{-1} C)
};

inline constexpr std::array<MetricKind, 6> kAllMetrics = {
    MetricKind::kAOptimality, MetricKind::kDOptimality,
    MetricKind::kTOptimality, MetricKind::kEOptimality,
    MetricKind::kVOptimality, MetricKind::kGOptimality};

inline bool NeedsDesignPool(MetricKind metric) {
  return metric == MetricKind::kVOptimality ||
         metric == MetricKind::kGOptimality;
}

inline std::string_view MetricName(MetricKind metric) {
  switch (metric) {
    case MetricKind::kAOptimality: return "A";
    case MetricKind::kDOptimality: return "D";
    case MetricKind::kTOptimality: return "T";
    case MetricKind::kEOptimality: return "E";
    case MetricKind::kVOptimality: return "V";
    case MetricKind::kGOptimality: return "G";
  }
  return "?";
}

// Accepts "A", "a", "A-optimality", ...
inline std::optional<MetricKind> ParseMetric(std::string_view name) {
  if (name.empty()) return std::nullopt;
  const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  if (name.size() > 1 && name.substr(1) != "-optimality" &&
      name.substr(1) != "_optimality") {
    return std::nullopt;
  }
  for (MetricKind m : kAllMetrics) {
    if (MetricName(m)[0] == c) return m;
  }
  return std::nullopt;
}

// Evaluates a metric on W. `pool` is the design pool (n x p) for V/G and is
// ignored otherwise.
inline double Evaluate(MetricKind metric, const Eigen::Ref<const Matrix>& w,
                       const Matrix* pool = nullptr) {
  if (w.rows() != w.cols() || w.rows() == 0) {
    throw DimensionError("Gramian must be square and non-empty");
  }
  if (NeedsDesignPool(metric)) {
    if (pool == nullptr) {
      throw MissingDesignPool("V/G optimality requires a design pool");
    }
    if (pool->rows() != w.rows()) {
      throw DimensionError("design pool rows must match the state dimension");
    }
  }
  const double n = static_cast<double>(w.rows());

  if (metric == MetricKind::kTOptimality) {
    const double tr = w.trace();
    if (!(tr > 0.0)) throw SingularGramian("T-optimality needs tr W > 0");
    return 1.0 / tr;
  }

  const SymmetricEigen eig = SymEig(w);
  RequirePositiveDefinite(eig.values, "Evaluate");

  switch (metric) {
    case MetricKind::kAOptimality:
      return eig.values.cwiseInverse().sum();
    case MetricKind::kDOptimality:
      return std::exp(-eig.values.array().log().sum() / n);
    case MetricKind::kEOptimality:
      return 1.0 / eig.values(0);
    case MetricKind::kVOptimality:
    case MetricKind::kGOptimality: {
      // Columns of Lambda^{-1/2} Q^T C; their squared norms are diag(C^T W^-1 C).
      const Matrix whitened = eig.values.array().rsqrt().matrix().asDiagonal() *
                              (eig.vectors.transpose() * (*pool));
      const Vector diag = whitened.colwise().squaredNorm().transpose();
      return metric == MetricKind::kVOptimality ? diag.sum() : diag.maxCoeff();
    }
    default:
      break;
  }
  return 0.0;
}

// |rho(kappa W) kappa - rho(W)| / |rho(W)|.
inline double CheckHomogeneity(MetricKind metric,
                               const Eigen::Ref<const Matrix>& w,
                               const Matrix* pool, double kappa) {
  if (!(kappa > 1.0)) throw Error("homogeneity check needs kappa > 1");
  const double base = Evaluate(metric, w, pool);
  const Matrix scaled = kappa * w;
  const double lifted = Evaluate(metric, scaled, pool);
  return std::abs(lifted * kappa - base) / std::abs(base);
}

inline constexpr double kAxiomRelTol = 1e-9;

// Caller guarantees W1 <= W2; true iff rho(W2) <= rho(W1) up to roundoff.
inline bool CheckMonotonicity(MetricKind metric,
                              const Eigen::Ref<const Matrix>& w1,
                              const Eigen::Ref<const Matrix>& w2,
                              const Matrix* pool) {
  const double r1 = Evaluate(metric, w1, pool);
  const double r2 = Evaluate(metric, w2, pool);
  return r2 <= r1 + kAxiomRelTol * std::abs(r1);
}

inline bool CheckConvexity(MetricKind metric,
                           const Eigen::Ref<const Matrix>& w1,
                           const Eigen::Ref<const Matrix>& w2, double c,
                           const Matrix* pool) {
  const Matrix mix = c * w1 + (1.0 - c) * w2;
  const double r1 = Evaluate(metric, w1, pool);
  const double r2 = Evaluate(metric, w2, pool);
  const double rm = Evaluate(metric, mix, pool);
  const double rhs = c * r1 + (1.0 - c) * r2;
  return rm <= rhs + kAxiomRelTol * std::max(std::abs(r1), std::abs(r2));
}

// Metric value that stays finite on singular Gramians: the plain metric when
// W is positive definite, otherwise the metric of W + alpha I.
struct GramianScore {
  double value = 0.0;
  bool controllable = false;
};

inline GramianScore ScoreGramian(MetricKind metric,
                                 const Eigen::Ref<const Matrix>& w,
                                 const Matrix* pool, double alpha) {
  if (IsPositiveDefinite(w)) return {Evaluate(metric, w, pool), true};
  const Matrix ridged = w + alpha * Matrix::Identity(w.rows(), w.cols());
  return {Evaluate(metric, ridged, pool), false};
}

// 1e-8 lambda_max(W_full), the ridge used by the greedy and exhaustive
// schedulers when a partial Gramian is singular.
inline double DefaultRidge(const Eigen::Ref<const Matrix>& w_full) {
  return 1e-8 * SymEigenvalues(w_full).maxCoeff();
}

}  // namespace actsched

#endif  // ACTSCHED_METRICS_HPP_
