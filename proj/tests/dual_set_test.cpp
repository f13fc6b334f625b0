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

BarrierState ScalarState(double lower_shift, double upper_shift) {
  BarrierState s;
  s.lower_matrix = Matrix::Zero(1, 1);
  s.upper_matrix = Matrix::Zero(1, 1);
  s.lower_shift = lower_shift;
  s.upper_shift = upper_shift;
  s.lower_step = 1.0;
  s.upper_step = 1.0;
  return s;
}

TEST(BarrierPhiTest, Lower) {
  EXPECT_DOUBLE_EQ(LowerBarrierPhi(0.0, Matrix::Identity(2, 2)), 2.0);
  EXPECT_DOUBLE_EQ(LowerBarrierPhi(-1.0, Eigen::Vector2d(1.0, 3.0).asDiagonal().toDenseMatrix()),
                   0.75);
  EXPECT_DOUBLE_EQ(LowerBarrierPhi(-3.0, Matrix::Zero(3, 3)), 1.0);
  EXPECT_THROW(LowerBarrierPhi(1.0, Matrix::Identity(2, 2)), BarrierViolation);
}

TEST(BarrierPhiTest, Upper) {
  EXPECT_DOUBLE_EQ(UpperBarrierPhi(2.0, Matrix::Zero(2, 2)), 1.0);
  EXPECT_DOUBLE_EQ(UpperBarrierPhi(3.0, Matrix::Identity(2, 2)), 1.0);
  EXPECT_DOUBLE_EQ(UpperBarrierPhi(4.0, Eigen::Vector2d(0.0, 2.0).asDiagonal().toDenseMatrix()),
                   0.75);
  EXPECT_THROW(UpperBarrierPhi(1.0, Matrix::Identity(2, 2)), BarrierViolation);
}

TEST(GainTest, ScalarHandComputation) {
  const BarrierState s = ScalarState(-2.0, 1.0);
  const Vector one = Vector::Ones(1);
  EXPECT_NEAR(LowerGain(one, s), 1.0, 1e-15);
  EXPECT_NEAR(UpperGain(one, s), 1.0, 1e-15);
  EXPECT_EQ(LowerGain(Vector::Zero(1), s), 0.0);
  EXPECT_EQ(UpperGain(Vector::Zero(1), s), 0.0);
}

TEST(GainTest, QuadraticInVector) {
  Rng rng(6);
  BarrierState s;
  s.lower_matrix = testing::RandomSpd(rng, 3, 10.0);
  s.upper_matrix = testing::RandomSpd(rng, 4, 10.0);
  s.lower_shift = -2.0;
  s.upper_shift = 12.0;
  s.lower_step = 1.0;
  s.upper_step = 1.5;
  const Vector v = testing::RandomGaussian(rng, 3, 1);
  const Vector u = testing::RandomGaussian(rng, 4, 1);
  EXPECT_NEAR(LowerGain(2.0 * v, s), 4.0 * LowerGain(v, s), 1e-12 * std::abs(LowerGain(v, s)));
  EXPECT_NEAR(UpperGain(2.0 * u, s), 4.0 * UpperGain(u, s), 1e-12 * std::abs(UpperGain(u, s)));
}

TEST(GainTest, DegenerateDenominator) {
  // With an empty-weight scalar matrix and a zero step both potentials agree.
  BarrierState s = ScalarState(-2.0, 1.0);
  s.lower_step = 0.0;
  EXPECT_THROW(LowerGain(Vector::Ones(1), s), DegenerateDenominator);
}

TEST(DecompositionPairTest, Validation) {
  EXPECT_THROW(DecompositionPair::Make(Matrix::Ones(1, 4), Matrix::Ones(1, 4)), DimensionError);
  const Matrix v = Matrix::Constant(1, 4, 0.5);
  EXPECT_NO_THROW(DecompositionPair::Make(v, v));
  // n must be strictly below the column count.
  EXPECT_THROW(DecompositionPair::WithStandardBasis(Matrix::Identity(3, 3)), DimensionError);
}

void ExpectLemmaBounds(const DecompositionPair& pair, const WeightVector& w) {
  const double kd = w.kappa;
  EXPECT_LE(w.Support(), w.kappa);
  EXPECT_GE(w.c.minCoeff(), 0.0);
  const Matrix lower = pair.v() * w.c.asDiagonal() * pair.v().transpose();
  const Matrix upper = pair.standard_basis()
                           ? Matrix(w.c.asDiagonal())
                           : Matrix(pair.u() * w.c.asDiagonal() * pair.u().transpose());
  const double lo = std::pow(1.0 - std::sqrt(pair.n() / kd), 2);
  const double hi = std::pow(1.0 + std::sqrt(pair.ell() / kd), 2);
  EXPECT_GE(SymEigenvalues(lower)(0), lo - 1e-8);
  EXPECT_LE(SymEigenvalues(upper).maxCoeff(), hi + 1e-8);
}

TEST(DualSetTest, ConstantColumnsExample) {
  const Matrix v = Matrix::Constant(1, 4, 0.5);
  const auto pair = DecompositionPair::Make(v, v);
  const WeightVector w = DualSet(pair, 2);
  EXPECT_LE(w.Support(), 2);
  const double sum = 0.25 * w.c.sum();
  EXPECT_GE(sum, std::pow(1.0 - std::sqrt(0.5), 2));
  EXPECT_LE(sum, std::pow(1.0 + std::sqrt(0.5), 2));
  // All columns tie at every round, so the lowest index is always chosen.
  EXPECT_EQ(w.picks, (std::vector<int>{0, 0}));
}

TEST(DualSetTest, RejectsBudgetOutsideRange) {
  Rng rng(1);
  const auto pair = DecompositionPair::WithStandardBasis(testing::RandomOrthonormalRows(rng, 3, 8));
  EXPECT_THROW(DualSet(pair, 3), InvalidBudget);
  EXPECT_THROW(DualSet(pair, 9), InvalidBudget);
}

TEST(DualSetTest, FullBudgetSatisfiesBounds) {
  Rng rng(12);
  const Matrix v = testing::RandomOrthonormalRows(rng, 3, 10);
  const auto pair = DecompositionPair::Make(v, v);
  ExpectLemmaBounds(pair, DualSet(pair, 10));
}

TEST(DualSetTest, StandardBasisFastPathMatchesDense) {
  Rng rng(13);
  const Matrix v = testing::RandomOrthonormalRows(rng, 4, 12);
  const WeightVector fast = DualSet(DecompositionPair::WithStandardBasis(v), 9);
  const WeightVector dense =
      DualSet(DecompositionPair::Make(v, Matrix::Identity(12, 12)), 9);
  EXPECT_EQ(fast.picks, dense.picks);
  EXPECT_LT((fast.c - dense.c).norm(), 1e-10 * fast.c.norm());
}

TEST(DualSetTest, DeterministicAndBarriersHold) {
  Rng rng(14);
  const Matrix v = testing::RandomOrthonormalRows(rng, 5, 30);
  const Matrix u = testing::RandomOrthonormalRows(rng, 7, 30);
  const auto pair = DecompositionPair::Make(v, u);
  DualSetOptions strict;
  strict.verify_barriers = true;
  const WeightVector a = DualSet(pair, 17, strict);
  const WeightVector b = DualSet(pair, 17);
  EXPECT_EQ(a.picks, b.picks);
  EXPECT_EQ(a.c, b.c);
  ExpectLemmaBounds(pair, a);
}

TEST(DualSetTest, RandomPairsSatisfyLemmaBounds) {
  Rng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const int t = testing::UniformInt(rng, 2, 40);
    const int n = testing::UniformInt(rng, 1, std::min(6, t - 1));
    const int ell = testing::UniformInt(rng, 1, t);
    const int kappa = testing::UniformInt(rng, n + 1, t);
    const auto pair = DecompositionPair::Make(testing::RandomOrthonormalRows(rng, n, t),
                                              testing::RandomOrthonormalRows(rng, ell, t));
    SCOPED_TRACE(::testing::Message() << "n=" << n << " l=" << ell << " t=" << t
                                      << " kappa=" << kappa);
    ExpectLemmaBounds(pair, DualSet(pair, kappa));
  }
}

}  // namespace
}  // namespace actsched
