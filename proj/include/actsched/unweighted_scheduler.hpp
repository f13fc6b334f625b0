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

#ifndef ACTSCHED_UNWEIGHTED_SCHEDULER_HPP_
#define ACTSCHED_UNWEIGHTED_SCHEDULER_HPP_

#include <algorithm>
#include <bit>
#include <optional>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "actsched/dual_set.hpp"
#include "actsched/errors.hpp"
#include "actsched/metrics.hpp"
#include "actsched/system.hpp"
#include "actsched/weighted_scheduler.hpp"

namespace actsched {

// 0/1 schedule from the max-ratio weights: s = ceil(sqrt(c) / (1 +
// sqrt(m / d))). rho(W_s) <= ((1 + sqrt(m/d)) / (1 - sqrt(n/dt)))^2 rho(W).
inline WeightedScheduleResult ScheduleUnweighted(const LtiSystem& sys, int t,
                                                 double d) {
  const WhitenedProblem p = Whiten(sys, t, d);
  const WeightVector w =
      DualSet(DecompositionPair::WithStandardBasis(p.v), p.kappa);
  const double root_gamma =
      1.0 + std::sqrt(static_cast<double>(p.m) * p.t / p.kappa);
  Vector binary(w.c.size());
  for (Eigen::Index i = 0; i < w.c.size(); ++i) {
    // sqrt(c) / root_gamma <= 1 by the max-ratio bound; min() absorbs
    // roundoff above 1.
    binary(i) = std::ceil(std::min(std::sqrt(w.c(i)) / root_gamma, 1.0));
  }
  WeightedScheduleResult r;
  r.budget_kind = BudgetKind::kMaxRatio;
  r.kappa = p.kappa;
  r.effective_d = static_cast<double>(p.kappa) / p.t;
  r.dual_weights = w.c;
  r.schedule = Schedule::FromColumnWeights(binary, p.m, p.t);
  const double lower = 1.0 - std::sqrt(static_cast<double>(p.n) / p.kappa);
  r.rho_bound_factor = (root_gamma * root_gamma) / (lower * lower);
  r.gamma = 1.0;
  return r;
}

// The rounding can drop columns, so the realized support is often below
// floor(d t). Scans kappa = n + 1 .. m t and returns the first schedule whose
// realized support equals `support`, if any.
inline std::optional<WeightedScheduleResult> ScheduleUnweightedWithSupport(
    const LtiSystem& sys, int t, int support) {
  const int n = sys.states();
  const int columns = sys.inputs() * t;
  for (int kappa = n + 1; kappa <= columns; ++kappa) {
    WeightedScheduleResult r =
        ScheduleUnweighted(sys, t, static_cast<double>(kappa) / t);
    if (r.schedule.SupportSize() == support) return r;
  }
  return std::nullopt;
}

inline constexpr int kMaxBruteForceCells = 20;

namespace internal {

// Controllable candidates beat singular ones; the ridge can make a singular
// Gramian score lower than an invertible one, so values are only compared
// within the same class.
inline bool Improves(const GramianScore& candidate, const GramianScore& best) {
  if (candidate.controllable != best.controllable) return candidate.controllable;
  return candidate.value < best.value;
}

}  // namespace internal
inline constexpr long long kMaxStaticSubsets = 100000;

struct ExactScheduleResult {
  Schedule schedule;
  double value = 0.0;
  bool controllable = false;
};

// Exhaustive solution of the time-varying 0/1 problem: every support of at
// most floor(d t) cells on the m x t grid. Cell (i, k) is bit i * t + k;
// masks are scanned in increasing order and only strict improvements are
// kept, so ties resolve to the smallest mask. Any invertible W_s beats every
// singular one.
inline ExactScheduleResult BruteForceSchedule(const LtiSystem& sys, int t,
                                              double d, MetricKind metric,
                                              const Matrix* pool,
                                              double alpha = -1.0) {
  CheckHorizon(t);
  const int m = sys.inputs();
  const int cells = m * t;
  if (cells > kMaxBruteForceCells) {
    throw TooLarge("exhaustive schedule search limited to m t <= 20");
  }
  const int budget = FloorBudget(t, d);
  if (budget < 1) throw InvalidBudget("exhaustive search needs floor(d t) >= 1");

  const Matrix c = ControllabilityMatrix(sys, t);
  if (alpha <= 0.0) alpha = DefaultRidge(c * c.transpose());

  // Rank-one term of each cell, indexed by cell bit.
  std::vector<Matrix> terms(cells);
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < t; ++k) {
      const int power = t - k - 1;
      const auto col = c.col(FlatColumn(i, power, m));
      terms[i * t + k] = col * col.transpose();
    }
  }

  const int n = sys.states();
  std::uint32_t best_mask = 0;
  GramianScore best{std::numeric_limits<double>::infinity(), false};
  const std::uint32_t end = std::uint32_t{1} << cells;
  for (std::uint32_t mask = 1; mask < end; ++mask) {
    if (std::popcount(mask) > budget) continue;
    Matrix w = Matrix::Zero(n, n);
    for (int b = 0; b < cells; ++b) {
      if (mask & (std::uint32_t{1} << b)) w += terms[b];
    }
    const GramianScore s = ScoreGramian(metric, w, pool, alpha);
    if (internal::Improves(s, best)) {
      best = s;
      best_mask = mask;
    }
  }

  Matrix grid = Matrix::Zero(m, t);
  for (int b = 0; b < cells; ++b) {
    if (best_mask & (std::uint32_t{1} << b)) grid(b / t, b % t) = 1.0;
  }
  return {Schedule(grid), best.value, best.controllable};
}

struct StaticSubsetResult {
  std::vector<int> inputs;  // ascending, 0-based
  double value = 0.0;
  bool controllable = false;
};

namespace internal {

inline double Binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace internal

// Exhaustive static problem: every input subset of size <= floor(d), each
// active at every time. Subsets are scanned by size, then lexicographically.
inline StaticSubsetResult BruteForceStatic(const LtiSystem& sys, int t,
                                           double d, MetricKind metric,
                                           const Matrix* pool,
                                           double alpha = -1.0) {
  CheckHorizon(t);
  const int m = sys.inputs();
  const int size = std::min(m, static_cast<int>(std::floor(d + 1e-9)));
  if (size < 1) throw InvalidBudget("static search needs floor(d) >= 1");
  if (internal::Binomial(m, size) > kMaxStaticSubsets) {
    throw TooLarge("static search limited to binomial(m, d) <= 1e5");
  }
  const Matrix w_full = Gramian(sys, t);
  if (alpha <= 0.0) alpha = DefaultRidge(w_full);

  std::vector<Matrix> per_input(m);
  for (int j = 0; j < m; ++j) per_input[j] = Gramian(sys.SubsetInputs({j}), t);

  StaticSubsetResult best{{}, std::numeric_limits<double>::infinity(), false};
  for (int k = 1; k <= size; ++k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      Matrix w = Matrix::Zero(sys.states(), sys.states());
      for (int j : idx) w += per_input[j];
      const GramianScore s = ScoreGramian(metric, w, pool, alpha);
      if (internal::Improves(s, {best.value, best.controllable})) {
        best = {idx, s.value, s.controllable};
      }
      int pos = k - 1;
      while (pos >= 0 && idx[pos] == m - k + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return best;
}

// All subsets of exactly `size` inputs whose static Gramian is positive
// definite.
inline std::vector<std::vector<int>> ControllableStaticSubsets(
    const LtiSystem& sys, int t, int size) {
  const int m = sys.inputs();
  std::vector<std::vector<int>> found;
  if (size < 1 || size > m) return found;
  std::vector<int> idx(size);
  for (int i = 0; i < size; ++i) idx[i] = i;
  while (true) {
    if (IsPositiveDefinite(Gramian(sys.SubsetInputs(idx), t))) found.push_back(idx);
    int pos = size - 1;
    while (pos >= 0 && idx[pos] == m - size + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < size; ++i) idx[i] = idx[i - 1] + 1;
  }
  return found;
}

}  // namespace actsched

#endif  // ACTSCHED_UNWEIGHTED_SCHEDULER_HPP_
