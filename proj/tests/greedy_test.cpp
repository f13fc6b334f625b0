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


#include <cmath>

#include <gtest/gtest.h>

#include "actsched.hpp"
#include "test_util.hpp"

namespace actsched {
namespace {

constexpr MetricKind kA = MetricKind::kAOptimality;

double Ridge(const LtiSystem& sys, int t) { return DefaultRidge(Gramian(sys, t)); }

TEST(GreedyStaticTest, FullBudgetIsFullActuation) {
  const LtiSystem sys = Example1System();
  const GreedyStaticResult r = GreedyStatic(sys, 8, 8, kA, nullptr, Ridge(sys, 8));
  ASSERT_TRUE(r.value.has_value());
  EXPECT_NEAR(*r.value, Evaluate(kA, Gramian(sys, 8)), 1e-12);
  EXPECT_EQ(r.schedule.scalings(), Matrix::Ones(8, 8));
}

TEST(GreedyStaticTest, SingleInput) {
  Rng rng(2);
  const LtiSystem sys = testing::RandomSystem(rng, 3, 1);
  const GreedyStaticResult r = GreedyStatic(sys, 3, 1, kA, nullptr, 1e-8);
  EXPECT_EQ(r.inputs, (std::vector<int>{0}));
  EXPECT_TRUE(r.controllable);
}

// With the default ridge the greedy picks inputs 3, 2, 8 (1-based), one of
// the six controllable 3-subsets; exact rational arithmetic gives 1.1295585.
TEST(GreedyStaticTest, Example1ThreeInputs) {
  const LtiSystem sys = Example1System();
  const GreedyStaticResult r = GreedyStatic(sys, 8, 3, kA, nullptr, Ridge(sys, 8));
  EXPECT_EQ(r.inputs, (std::vector<int>{2, 1, 7}));
  EXPECT_TRUE(r.controllable);
  ASSERT_TRUE(r.value.has_value());
  EXPECT_NEAR(*r.value, 1.12955851818790, 1e-3);
}

TEST(GreedyStaticTest, Preconditions) {
  const LtiSystem sys = Example1System();
  EXPECT_THROW(GreedyStatic(sys, 8, 0, kA, nullptr, 1.0), InvalidBudget);
  EXPECT_THROW(GreedyStatic(sys, 8, 9, kA, nullptr, 1.0), InvalidBudget);
  EXPECT_THROW(GreedyStatic(sys, 8, 3, kA, nullptr, 0.0), InvalidBudget);
}

TEST(GreedyStaticTest, UncontrollableReportsNoValue) {
  const LtiSystem sys = Example1System();
  const GreedyStaticResult r = GreedyStatic(sys, 8, 1, kA, nullptr, Ridge(sys, 8));
  EXPECT_FALSE(r.controllable);
  EXPECT_FALSE(r.value.has_value());
}

TEST(GreedyTimeVaryingTest, FullBudgetIsFullActuation) {
  const LtiSystem sys = Example1System();
  const GreedyTimeVaryingResult r = GreedyTimeVarying(sys, 8, 8.0, kA, nullptr, Ridge(sys, 8));
  EXPECT_EQ(r.schedule.scalings(), Matrix::Ones(8, 8));
  ASSERT_TRUE(r.value.has_value());
  EXPECT_NEAR(*r.value, 0.132, 1e-3);
}

TEST(GreedyTimeVaryingTest, ScalarSystemPicksLargestColumnFirst) {
  Matrix a(1, 1);
  a << 1.5;
  Matrix b(1, 2);
  b << 0.3, -0.7;
  const LtiSystem sys(a, b);
  const GreedyTimeVaryingResult r = GreedyTimeVarying(sys, 4, 0.25, kA, nullptr, 1e-8);
  ASSERT_EQ(r.picks.size(), 1u);
  const Matrix c = ControllabilityMatrix(sys, 4);
  Eigen::Index best;
  c.row(0).cwiseAbs().maxCoeff(&best);
  EXPECT_EQ(r.picks[0], best);
}

TEST(GreedyTimeVaryingTest, ColumnsPickedOnceAndBinary) {
  const LtiSystem sys = Example1System();
  const GreedyTimeVaryingResult r = GreedyTimeVarying(sys, 8, 3.0, kA, nullptr, Ridge(sys, 8));
  EXPECT_EQ(r.picks.size(), 24u);
  EXPECT_TRUE(r.schedule.IsBinary());
  EXPECT_EQ(r.schedule.SupportSize(), 24);
  EXPECT_TRUE(r.controllable);
}

TEST(GreedyTimeVaryingTest, FastAOptimalityMatchesGenericScoring) {
  // The rank-one trace update must choose the same columns as scoring every
  // candidate by a fresh evaluation.
  Rng rng(55);
  const LtiSystem sys = testing::RandomSystem(rng, 4, 3);
  const int t = 5;
  const double alpha = 1e-3;
  const GreedyTimeVaryingResult fast = GreedyTimeVarying(sys, t, 2.0, kA, nullptr, alpha);
  const Matrix c = ControllabilityMatrix(sys, t);
  Matrix ws = Matrix::Zero(4, 4);
  std::vector<char> used(c.cols(), 0);
  std::vector<int> picks;
  for (int step = 0; step < 10; ++step) {
    int best = -1;
    double best_value = 0.0;
    for (int j = 0; j < c.cols(); ++j) {
      if (used[j]) continue;
      const Matrix x = ws + c.col(j) * c.col(j).transpose() + alpha * Matrix::Identity(4, 4);
      const double v = x.inverse().trace();
      if (best < 0 || v < best_value) {
        best = j;
        best_value = v;
      }
    }
    used[best] = 1;
    picks.push_back(best);
    ws += c.col(best) * c.col(best).transpose();
  }
  EXPECT_EQ(fast.picks, picks);
}

TEST(GreedyTimeVaryingTest, ValueNonIncreasingInBudget) {
  Rng rng(66);
  const LtiSystem sys = testing::RandomSystem(rng, 3, 2);
  const int t = 6;
  const double alpha = Ridge(sys, t);
  double prev = std::numeric_limits<double>::infinity();
  for (int budget = 3; budget <= 12; ++budget) {
    const GreedyTimeVaryingResult r =
        GreedyTimeVarying(sys, t, static_cast<double>(budget) / t, kA, nullptr, alpha);
    if (!r.value) continue;
    EXPECT_LE(*r.value, prev * (1.0 + 1e-9));
    prev = *r.value;
  }
}

TEST(GreedyTest, PoolMetricsAcceptTheFullPool) {
  const LtiSystem sys = Example1System();
  const Matrix c = ControllabilityMatrix(sys, 8);
  const GreedyTimeVaryingResult r =
      GreedyTimeVarying(sys, 8, 2.0, MetricKind::kGOptimality, &c, Ridge(sys, 8));
  EXPECT_EQ(r.picks.size(), 16u);
  const GreedyStaticResult s =
      GreedyStatic(sys, 8, 4, MetricKind::kVOptimality, &c, Ridge(sys, 8));
  EXPECT_EQ(s.inputs.size(), 4u);
}

}  // namespace
}  // namespace actsched
