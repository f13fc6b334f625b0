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

#ifndef ACTSCHED_LEVERAGE_HPP_
#define ACTSCHED_LEVERAGE_HPP_

// Leverage scores of the controllability matrix and the randomized
// leverage-score scheduler.
//
// The score of column A^k b_j is (A^k b_j)^T (C C^T)^+ (A^k b_j). They are
// the diagonal of the projector C^T (C C^T)^+ C, so each lies in [0, 1] and
// they sum to rank C. The sampler draws ceil(d t) cells i.i.d. from
// pi = score / n and adds 1 / (M pi) to the squared scaling of each draw,
// which makes W_s an unbiased estimate of W.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "actsched/errors.hpp"
#include "actsched/linalg.hpp"
#include "actsched/random.hpp"
#include "actsched/system.hpp"
#include "actsched/weighted_scheduler.hpp"

namespace actsched {

struct LeverageTable {
  Matrix scores;  // m x t, entry (j, k) is the score of A^k b_j
  double total = 0.0;
  int rank = 0;
};

inline LeverageTable LeverageScores(const Eigen::Ref<const Matrix>& c, int m,
                                    int t) {
  const ColumnSpectrum spec = ThinSvd(c);
  const Eigen::Index r = spec.Rank(kPinvCutoff);
  // Column norms of the top-r right singular vectors, transposed.
  const Vector flat =
      spec.right.leftCols(r).rowwise().squaredNorm();
  LeverageTable out;
  out.scores = Matrix::Zero(m, t);
  for (int k = 0; k < t; ++k) {
    for (int j = 0; j < m; ++j) out.scores(j, k) = flat(FlatColumn(j, k, m));
  }
  out.total = out.scores.sum();
  out.rank = static_cast<int>(r);
  return out;
}

inline LeverageTable LeverageScores(const LtiSystem& sys, int t) {
  return LeverageScores(ControllabilityMatrix(sys, t), sys.inputs(), t);
}

// Sum of the scores of every column driven by input j.
inline double GroupLeverage(const LtiSystem& sys, int t, int input) {
  if (input < 0 || input >= sys.inputs()) {
    throw DimensionError("input index out of range");
  }
  return LeverageScores(sys, t).scores.row(input).sum();
}

// pi(i, k) over the schedule grid: column k is schedule time k and carries
// the score of A^{t-k-1} b_i, divided by n.
struct SamplingDistribution {
  Matrix pi;  // m x t
};

inline SamplingDistribution MakeSamplingDistribution(const LeverageTable& lev,
                                                     int n) {
  if (lev.total < n - 1e-6) {
    throw SingularGramian("leverage scores sum below n; system uncontrollable");
  }
  const int m = static_cast<int>(lev.scores.rows());
  const int t = static_cast<int>(lev.scores.cols());
  SamplingDistribution d;
  d.pi.resize(m, t);
  for (int time = 0; time < t; ++time) {
    d.pi.col(time) = lev.scores.col(t - time - 1) / static_cast<double>(n);
  }
  return d;
}

inline SamplingDistribution MakeSamplingDistribution(const LtiSystem& sys,
                                                     int t) {
  return MakeSamplingDistribution(LeverageScores(sys, t), sys.states());
}

struct SamplerOptions {
  // Accumulate 1/(M pi) into s itself (W_s then uses its square) instead of
  // into s^2. Biased; kept to reproduce the literal listing.
  bool accumulate_unsquared = false;
};

// Draws ceil(d t) cells by inverse CDF over the input-major flattening
// (cell index i * t + k) of pi.
inline Schedule SampleSchedule(const SamplingDistribution& dist, double d,
                               std::uint64_t seed,
                               const SamplerOptions& options = {}) {
  const int m = static_cast<int>(dist.pi.rows());
  const int t = static_cast<int>(dist.pi.cols());
  if (!(d > 0.0)) throw InvalidBudget("d must be positive");
  const int draws = CeilBudget(t, d);
  if (draws < 1) throw InvalidBudget("need ceil(d t) >= 1");

  std::vector<double> cdf(static_cast<size_t>(m) * t);
  double acc = 0.0;
  for (int i = 0; i < m; ++i) {
    for (int k = 0; k < t; ++k) {
      acc += dist.pi(i, k);
      cdf[static_cast<size_t>(i) * t + k] = acc;
    }
  }

  Rng rng(seed);
  Matrix grid = Matrix::Zero(m, t);
  for (int s = 0; s < draws; ++s) {
    const double u = rng.Uniform() * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) --it;
    size_t cell = static_cast<size_t>(it - cdf.begin());
    // Skip trailing zero-probability cells that share the final CDF value.
    while (dist.pi(static_cast<int>(cell / t), static_cast<int>(cell % t)) <= 0.0 &&
           cell > 0) {
      --cell;
    }
    const int i = static_cast<int>(cell / t);
    const int k = static_cast<int>(cell % t);
    grid(i, k) += 1.0 / (draws * dist.pi(i, k));
  }
  if (options.accumulate_unsquared) return Schedule(grid);
  return Schedule(grid.cwiseSqrt());
}

inline Schedule SampleSchedule(const LtiSystem& sys, int t, double d,
                               std::uint64_t seed,
                               const SamplerOptions& options = {}) {
  return SampleSchedule(MakeSamplingDistribution(sys, t), d, seed, options);
}

inline constexpr double kSamplerBudgetConstant = 4.0;

// d = c0 n ln n / (eps^2 t) with c0 = kSamplerBudgetConstant.
inline double SamplerBudget(double n, double t, double eps) {
  if (!(n >= 1.0) || !(t > 0.0)) throw InvalidEps("need n >= 1 and t > 0");
  if (!(eps >= 1.0 / std::sqrt(n)) || !(eps <= 1.0)) {
    throw InvalidEps("eps must lie in [1/sqrt(n), 1]");
  }
  return kSamplerBudgetConstant * n * std::log(n) / (eps * eps * t);
}

}  // namespace actsched

#endif  // ACTSCHED_LEVERAGE_HPP_
