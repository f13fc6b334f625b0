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

#ifndef ACTSCHED_GREEDY_HPP_
#define ACTSCHED_GREEDY_HPP_

// Greedy baselines. The static variant picks whole inputs that stay active
// at every step; the time-varying variant picks individual columns of the
// controllability matrix, each at most once. Both score candidates on the
// ridged Gramian W_s + alpha I so early, still singular steps are comparable,
// and both report the final value without the ridge when W_s is invertible.

#include <algorithm>
#include <limits>
#include <optional>
#include <vector>

#include "actsched/errors.hpp"
#include "actsched/linalg.hpp"
#include "actsched/metrics.hpp"
#include "actsched/parallel.hpp"
#include "actsched/system.hpp"
#include "actsched/weighted_scheduler.hpp"

namespace actsched {

struct GreedyStaticResult {
  std::vector<int> inputs;  // in pick order, 0-based
  Schedule schedule;
  std::optional<double> value;  // empty when the final Gramian is singular
  bool controllable = false;
};

struct GreedyTimeVaryingResult {
  Schedule schedule;
  std::vector<int> picks;  // flat column indices in pick order
  std::optional<double> value;
  bool controllable = false;
};

namespace internal {

// Index of the smallest finite score; ties go to the lowest index.
inline int ArgMinScore(const std::vector<double>& scores,
                       const std::vector<char>& available) {
  int best = -1;
  for (int j = 0; j < static_cast<int>(scores.size()); ++j) {
    if (!available[j]) continue;
    if (best < 0 || scores[j] < scores[best]) best = j;
  }
  return best;
}

inline std::optional<double> FinalValue(MetricKind metric, const Matrix& w,
                                        const Matrix* pool, bool* controllable) {
  *controllable = IsPositiveDefinite(w);
  if (!*controllable) return std::nullopt;
  return Evaluate(metric, w, pool);
}

inline double RidgedScore(MetricKind metric, const Matrix& x,
                          const Matrix* pool) {
  if (metric == MetricKind::kAOptimality) return TraceInverseSpd(x);
  try {
    return Evaluate(metric, x, pool);
  } catch (const SingularGramian&) {
    return std::numeric_limits<double>::infinity();
  }
}

inline void CheckRidge(double alpha) {
  if (!(alpha > 0.0)) throw InvalidBudget("ridge alpha must be positive");
}

}  // namespace internal

// Picks d inputs one at a time, each minimizing rho(W_s + W_j + alpha I)
// where W_j is the t-step Gramian of input j alone.
inline GreedyStaticResult GreedyStatic(const LtiSystem& sys, int t, int d,
                                       MetricKind metric, const Matrix* pool,
                                       double alpha) {
  CheckHorizon(t);
  internal::CheckRidge(alpha);
  const int n = sys.states();
  const int m = sys.inputs();
  if (d < 1 || d > m) throw InvalidBudget("static greedy needs 1 <= d <= m");

  const Matrix c = ControllabilityMatrix(sys, t);
  std::vector<Matrix> groups(m);
  ParallelFor(m, [&](int j) {
    Matrix cj(n, t);
    for (int k = 0; k < t; ++k) cj.col(k) = c.col(FlatColumn(j, k, m));
    groups[j] = cj * cj.transpose();
  });

  GreedyStaticResult out;
  std::vector<char> available(m, 1);
  Matrix ws = Matrix::Zero(n, n);
  const Matrix ridge = alpha * Matrix::Identity(n, n);
  for (int step = 0; step < d; ++step) {
    std::vector<double> scores(m, std::numeric_limits<double>::infinity());
    ParallelFor(m, [&](int j) {
      if (!available[j]) return;
      const Matrix x = ws + groups[j] + ridge;
      scores[j] = internal::RidgedScore(metric, x, pool);
    });
    const int pick = internal::ArgMinScore(scores, available);
    if (pick < 0) throw NoFeasibleIndex("no input left to pick");
    available[pick] = 0;
    ws += groups[pick];
    out.inputs.push_back(pick);
  }

  Matrix grid = Matrix::Zero(m, t);
  for (int j : out.inputs) grid.row(j).setOnes();
  out.schedule = Schedule(grid);
  out.value = internal::FinalValue(metric, Symmetrized(ws), pool,
                                   &out.controllable);
  return out;
}

// Picks min(ceil(d t), m t) distinct columns of C(t), each minimizing
// rho(W_s + c c^T + alpha I). For A-optimality the candidate scores use the
// rank-one update of tr(X^{-1}) with X = W_s + alpha I factored once per step.
inline GreedyTimeVaryingResult GreedyTimeVarying(const LtiSystem& sys, int t,
                                                 double d, MetricKind metric,
                                                 const Matrix* pool,
                                                 double alpha) {
  CheckHorizon(t);
  internal::CheckRidge(alpha);
  if (!(d > 0.0)) throw InvalidBudget("d must be positive");
  const int n = sys.states();
  const int m = sys.inputs();
  const int columns = m * t;
  const int budget = std::min(CeilBudget(t, d), columns);
  if (budget < 1) throw InvalidBudget("need ceil(d t) >= 1");

  const Matrix c = ControllabilityMatrix(sys, t);
  GreedyTimeVaryingResult out;
  std::vector<char> available(columns, 1);
  Matrix ws = Matrix::Zero(n, n);
  const Matrix ridge = alpha * Matrix::Identity(n, n);
  for (int step = 0; step < budget; ++step) {
    std::vector<double> scores(columns, std::numeric_limits<double>::infinity());
    const Matrix x = ws + ridge;
    if (metric == MetricKind::kAOptimality) {
      const Eigen::LLT<Matrix> llt(x);
      const Matrix xinv = llt.solve(Matrix::Identity(n, n));
      const double base = xinv.trace();
      ParallelFor(columns, [&](int j) {
        if (!available[j]) return;
        const Vector y = xinv * c.col(j);
        scores[j] = base - y.squaredNorm() / (1.0 + c.col(j).dot(y));
      });
    } else {
      ParallelFor(columns, [&](int j) {
        if (!available[j]) return;
        const Matrix xj = x + c.col(j) * c.col(j).transpose();
        scores[j] = internal::RidgedScore(metric, xj, pool);
      });
    }
    const int pick = internal::ArgMinScore(scores, available);
    if (pick < 0) throw NoFeasibleIndex("no column left to pick");
    available[pick] = 0;
    ws += c.col(pick) * c.col(pick).transpose();
    out.picks.push_back(pick);
  }

  Vector weights = Vector::Zero(columns);
  for (int j : out.picks) weights(j) = 1.0;
  out.schedule = Schedule::FromColumnWeights(weights, m, t);
  out.value = internal::FinalValue(metric, Symmetrized(ws), pool,
                                   &out.controllable);
  return out;
}

}  // namespace actsched

#endif  // ACTSCHED_GREEDY_HPP_
