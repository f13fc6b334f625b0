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

#ifndef ACTSCHED_WEIGHTED_SCHEDULER_HPP_
#define ACTSCHED_WEIGHTED_SCHEDULER_HPP_

// Sparse weighted actuator schedules built on DualSet().
//
// Every scheduler whitens the controllability matrix, V = W^{-1/2} C, so
// that the columns of V decompose I_n, and picks a second decomposition U
// that encodes the budget being controlled:
//
//   two-sided   U = V              W_s sandwiched by (1 -/+ eps) W
//   max-ratio   U = I_{mt}         max s_i(k)^2 bounded
//   per-input   U = [I_m ... I_m] / sqrt(t)
//   per-time    U = blockdiag(1_m^T) / sqrt(m)
//
// The kappa = floor(d t) budget is the effective one: every certified
// constant below is computed from d_eff = kappa / t, which equals d whenever
// d t is an integer.

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "actsched/dual_set.hpp"
#include "actsched/errors.hpp"
#include "actsched/linalg.hpp"
#include "actsched/system.hpp"

namespace actsched {

enum class BudgetKind { kTwoSidedApprox, kMaxRatio, kPerInputEnergy, kPerTimeEnergy };

inline const char* BudgetKindName(BudgetKind kind) {
  switch (kind) {
    case BudgetKind::kTwoSidedApprox: return "two_sided_approx";
    case BudgetKind::kMaxRatio: return "max_ratio";
    case BudgetKind::kPerInputEnergy: return "per_input_energy";
    case BudgetKind::kPerTimeEnergy: return "per_time_energy";
  }
  return "?";
}

struct WeightedScheduleResult {
  Schedule schedule;
  BudgetKind budget_kind = BudgetKind::kTwoSidedApprox;
  int kappa = 0;
  double effective_d = 0.0;
  // Two-sided factor; NaN for the energy-budget schedulers.
  double epsilon = std::numeric_limits<double>::quiet_NaN();
  // rho(W_s) <= rho_bound_factor * rho(W) for every systemic metric.
  double rho_bound_factor = std::numeric_limits<double>::quiet_NaN();
  // Energy budget bound; NaN for the two-sided scheduler.
  double gamma = std::numeric_limits<double>::quiet_NaN();
  Vector dual_weights;  // raw DualSet output, by flat column of C(t)
};

inline int FloorBudget(int t, double d) {
  return static_cast<int>(std::floor(d * t + 1e-9));
}

inline int CeilBudget(int t, double d) {
  return static_cast<int>(std::ceil(d * t - 1e-9));
}

// 2 / (sqrt(x) + 1/sqrt(x)) with x = d t / n; at most one.
inline double EpsilonFromRatio(double ratio) {
  if (!(ratio >= 1.0)) {
    throw InvalidBudget("approximation factor needs d t >= n");
  }
  const double r = std::sqrt(ratio);
  return 2.0 / (r + 1.0 / r);
}

inline double EpsilonBound(int n, int t, double d) {
  return EpsilonFromRatio(d * t / n);
}

// Shared preprocessing: C(t), its whitened columns, and the budget.
struct WhitenedProblem {
  int n = 0;
  int m = 0;
  int t = 0;
  int kappa = 0;
  Matrix c;
  Matrix v;  // n x mt, V V^T = I_n
};

inline WhitenedProblem Whiten(const LtiSystem& sys, int t, double d) {
  CheckHorizon(t);
  WhitenedProblem p;
  p.n = sys.states();
  p.m = sys.inputs();
  p.t = t;
  if (t < p.n) {
    throw InvalidBudget("schedulers need a horizon t >= n");
  }
  if (!(d > 0.0)) throw InvalidBudget("d must be positive");
  p.kappa = FloorBudget(t, d);
  const int columns = p.m * t;
  if (p.kappa <= p.n || p.kappa > columns) {
    throw InvalidBudget("need n < floor(d t) <= m t (n=" + std::to_string(p.n) +
                        ", floor(d t)=" + std::to_string(p.kappa) +
                        ", m t=" + std::to_string(columns) + ")");
  }
  p.c = ControllabilityMatrix(sys, t);
  const ColumnSpectrum spec = ThinSvd(p.c);
  // Same criterion as IsPositiveDefinite on W = C C^T.
  const double smin = spec.sigma(spec.sigma.size() - 1);
  const double smax = spec.sigma(0);
  if (!(smax > 0.0) || !(smin * smin > kGramianRankTol * smax * smax)) {
    throw SingularGramian("system is not controllable at this horizon");
  }
  // C = U S R^T  =>  (C C^T)^{-1/2} C = U R^T.
  p.v = spec.left * spec.right.transpose();
  return p;
}

namespace internal {

inline WeightedScheduleResult Package(const WhitenedProblem& p,
                                      const WeightVector& w,
                                      BudgetKind kind, double scale) {
  WeightedScheduleResult r;
  r.budget_kind = kind;
  r.kappa = p.kappa;
  r.effective_d = static_cast<double>(p.kappa) / p.t;
  r.dual_weights = w.c;
  r.schedule = Schedule::FromColumnWeights(w.c * scale, p.m, p.t);
  const double lower = 1.0 - std::sqrt(static_cast<double>(p.n) / p.kappa);
  r.rho_bound_factor = 1.0 / (lower * lower);
  return r;
}

inline double Sq(double x) { return x * x; }

}  // namespace internal

// (1-eps) W <= W_s <= (1+eps) W with eps = EpsilonBound(n, t, kappa / t).
inline WeightedScheduleResult ScheduleTwoSided(const LtiSystem& sys, int t,
                                               double d) {
  const WhitenedProblem p = Whiten(sys, t, d);
  const WeightVector w =
      DualSet(DecompositionPair::Make(p.v, p.v), p.kappa);
  const double ratio = static_cast<double>(p.n) / p.kappa;
  WeightedScheduleResult r = internal::Package(
      p, w, BudgetKind::kTwoSidedApprox, 1.0 / (1.0 + ratio));
  r.epsilon = EpsilonFromRatio(1.0 / ratio);
  return r;
}

// max_{i,k} s_i(k)^2 <= (1 + sqrt(m / d))^2.
inline WeightedScheduleResult ScheduleMaxRatio(const LtiSystem& sys, int t,
                                               double d) {
  const WhitenedProblem p = Whiten(sys, t, d);
  const WeightVector w =
      DualSet(DecompositionPair::WithStandardBasis(p.v), p.kappa);
  WeightedScheduleResult r =
      internal::Package(p, w, BudgetKind::kMaxRatio, 1.0);
  r.gamma = internal::Sq(1.0 + std::sqrt(static_cast<double>(p.m) * p.t / p.kappa));
  return r;
}

// Columns grouped by input: U = [I_m, ..., I_m] / sqrt(t).
inline Matrix PerInputDecomposition(int m, int t) {
  Matrix u = Matrix::Zero(m, static_cast<Eigen::Index>(m) * t);
  const double w = 1.0 / std::sqrt(static_cast<double>(t));
  for (int k = 0; k < t; ++k) {
    for (int j = 0; j < m; ++j) u(j, FlatColumn(j, k, m)) = w;
  }
  return u;
}

// Columns grouped by block of C(t): U = [e_1 (m times), ..., e_t] / sqrt(m).
inline Matrix PerTimeDecomposition(int m, int t) {
  Matrix u = Matrix::Zero(t, static_cast<Eigen::Index>(m) * t);
  const double w = 1.0 / std::sqrt(static_cast<double>(m));
  for (int k = 0; k < t; ++k) {
    for (int j = 0; j < m; ++j) u(k, FlatColumn(j, k, m)) = w;
  }
  return u;
}

// max_i sum_k s_i(k)^2 <= t (1 + sqrt(m / (d t)))^2.
inline WeightedScheduleResult SchedulePerInput(const LtiSystem& sys, int t,
                                               double d) {
  const WhitenedProblem p = Whiten(sys, t, d);
  const WeightVector w = DualSet(
      DecompositionPair::Make(p.v, PerInputDecomposition(p.m, p.t)), p.kappa);
  WeightedScheduleResult r =
      internal::Package(p, w, BudgetKind::kPerInputEnergy, 1.0);
  r.gamma = p.t * internal::Sq(1.0 + std::sqrt(static_cast<double>(p.m) / p.kappa));
  return r;
}

// max_k sum_i s_i(k)^2 <= m (1 + sqrt(1 / d))^2.
inline WeightedScheduleResult SchedulePerTime(const LtiSystem& sys, int t,
                                              double d) {
  const WhitenedProblem p = Whiten(sys, t, d);
  const WeightVector w = DualSet(
      DecompositionPair::Make(p.v, PerTimeDecomposition(p.m, p.t)), p.kappa);
  WeightedScheduleResult r =
      internal::Package(p, w, BudgetKind::kPerTimeEnergy, 1.0);
  r.gamma = p.m * internal::Sq(1.0 + std::sqrt(static_cast<double>(p.t) / p.kappa));
  return r;
}

// Largest value of each energy budget realized by a schedule.
inline double MaxScalingRatio(const Schedule& s) { return s.squared().maxCoeff(); }
inline double MaxPerInputEnergy(const Schedule& s) {
  return s.squared().rowwise().sum().maxCoeff();
}
inline double MaxPerTimeEnergy(const Schedule& s) {
  return s.squared().colwise().sum().maxCoeff();
}

}  // namespace actsched

#endif  // ACTSCHED_WEIGHTED_SCHEDULER_HPP_
