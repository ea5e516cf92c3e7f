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

#include "mdms/core.h"

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "mdms/generators.h"
#include "mdms/utilities.h"
#include "test_support.h"

namespace mdms {
namespace {

using ::mdms::testing::Line;
using ::mdms::testing::MakeProblem;
using ::mdms::testing::RandomMetric;
using ::mdms::testing::ReferenceDiv;

TEST(DivTest, CollinearTriple) {
  auto inst = Line({0, 1, 2});
  const IndexSet s = {0, 1, 2};
  EXPECT_DOUBLE_EQ(Div(*inst, s), 1.0);
}

TEST(DivTest, SingletonAndEmptyGiveDiameter) {
  auto inst = Line({0, 1, 2, 5});
  EXPECT_DOUBLE_EQ(inst->diameter(), 5.0);
  for (int i = 0; i < 4; ++i) {
    const IndexSet s = {i};
    EXPECT_DOUBLE_EQ(Div(*inst, s), 5.0);
  }
  EXPECT_DOUBLE_EQ(Div(*inst, IndexSet{}), 5.0);
}

TEST(DivTest, CounterexamplePairAC) {
  auto g = GenCounterexample(false);
  EXPECT_DOUBLE_EQ(Div(*g.instance, IndexSet{0, 2}), 2.0);
  // c and d coincide.
  EXPECT_DOUBLE_EQ(g.instance->dist(2, 3), 0.0);
  EXPECT_DOUBLE_EQ(Div(*g.instance, IndexSet{0, 2, 3}), 0.0);
}

TEST(DivTest, RejectsBadIndices) {
  auto inst = Line({0, 1, 2});
  EXPECT_THROW(Div(*inst, IndexSet{3}), InputError);
  EXPECT_THROW(Div(*inst, IndexSet{-1}), InputError);
}

TEST(DivTest, NonincreasingUnderInsertion) {
  Rng rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng.Below(8));
    auto inst = RandomMetric(n, rng);
    IndexSet s;
    double prev = Div(*inst, s);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.Below(i + 1)]);
    for (int v : perm) {
      s.push_back(v);
      const double cur = Div(*inst, s);
      EXPECT_LE(cur, prev);
      EXPECT_DOUBLE_EQ(cur, ReferenceDiv(*inst, Canonical(s)));
      prev = cur;
    }
  }
}

TEST(DistToSetTest, EmptySetIsUnbounded) {
  auto inst = Line({0, 1, 4});
  EXPECT_FALSE(DistToSet(*inst, 0, IndexSet{}).has_value());
  EXPECT_DOUBLE_EQ(*DistToSet(*inst, 0, IndexSet{1, 2}), 1.0);
  EXPECT_DOUBLE_EQ(*DistToSet(*inst, 2, IndexSet{0}), 4.0);
}

TEST(InstanceTest, MatrixValidation) {
  Eigen::MatrixXd asym(2, 2);
  asym << 0, 1, 2, 0;
  EXPECT_THROW(Instance::FromMatrix(asym), InputError);
  Eigen::MatrixXd diag(2, 2);
  diag << 1, 1, 1, 0;
  EXPECT_THROW(Instance::FromMatrix(diag), InputError);
  Eigen::MatrixXd neg(2, 2);
  neg << 0, -1, -1, 0;
  EXPECT_THROW(Instance::FromMatrix(neg), InputError);
  Eigen::MatrixXd nan(2, 2);
  nan << 0, std::nan(""), std::nan(""), 0;
  EXPECT_THROW(Instance::FromMatrix(nan), InputError);
  Eigen::MatrixXd tri(3, 3);
  tri << 0, 1, 5, 1, 0, 1, 5, 1, 0;
  EXPECT_NO_THROW(Instance::FromMatrix(tri));
  EXPECT_THROW(Instance::FromMatrix(tri, true), InputError);
  EXPECT_FALSE(Instance::FromMatrix(tri).SatisfiesTriangle());
}

TEST(InstanceTest, DiametricalPairIsLexicographicallySmallest) {
  auto inst = Line({0, 3, 1, 3});
  EXPECT_DOUBLE_EQ(inst->diameter(), 3.0);
  EXPECT_EQ(inst->DiametricalPair(), std::make_pair(0, 1));
}

TEST(InstanceTest, CosineDistance) {
  Eigen::MatrixXd v(3, 2);
  v << 2, 0, -1, 0, 0, 3;
  const Instance inst = Instance::Cosine(v);
  EXPECT_NEAR(inst.dist(0, 1), 2.0, 1e-15);
  EXPECT_NEAR(inst.dist(0, 2), 1.0, 1e-15);
  EXPECT_EQ(inst.dist(1, 1), 0.0);
}

TEST(ObjectiveTest, CounterexampleTriple) {
  auto g = GenCounterexample(false);
  const Problem p = g.MakeProblem();
  const ObjectiveValue v = Objective(p, IndexSet{0, 1, 2});
  EXPECT_DOUBLE_EQ(v.f, 1.0);
  EXPECT_DOUBLE_EQ(v.g, 0.0);
  EXPECT_DOUBLE_EQ(v.div, 1.0);
}

TEST(ObjectiveTest, ZeroLambdaIsUtility) {
  Rng rng(5);
  auto inst = RandomMetric(7, rng);
  auto u = testing::RandomCoverage(7, rng);
  const Problem p = MakeProblem(inst, u, 0.0, 7);
  for (std::uint32_t mask = 1; mask < (1u << 7); ++mask) {
    const IndexSet s = testing::MaskToSet(mask, 7);
    EXPECT_EQ(Objective(p, s).f, u->Value(s));
  }
}

TEST(ObjectiveTest, GreedyHardPair) {
  const double eps = 0.1;
  auto g = GenGreedyHard(8, 6, eps);
  EXPECT_NEAR(Objective(g.MakeProblem(), IndexSet{0, 1}).f, 4.0 + 2.0 * eps, 1e-12);
}

TEST(ObjectiveTest, DecomposesAndCostsOneQuery) {
  Rng rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 4 + static_cast<int>(rng.Below(6));
    auto inst = RandomMetric(n, rng);
    auto u = testing::RandomBudgetAdditive(n, 3, rng);
    const double lambda = rng.Uniform() * 5;
    const Problem p = MakeProblem(inst, u, lambda, 3);
    const std::uint32_t mask = 1 + static_cast<std::uint32_t>(rng.Below((1u << n) - 1));
    const IndexSet s = testing::MaskToSet(mask, n);
    u->ResetQueries();
    const ObjectiveValue v = Objective(p, s);
    EXPECT_EQ(u->queries(), 1u);
    EXPECT_EQ(v.f, v.g + lambda * v.div);
    EXPECT_EQ(v.div, ReferenceDiv(*inst, s));
  }
}

TEST(ProblemTest, Validate) {
  auto inst = Line({0, 1, 2});
  auto u = std::make_shared<ZeroUtility>(3);
  EXPECT_NO_THROW(MakeProblem(inst, u, 1.0, 3).Validate());
  EXPECT_THROW(MakeProblem(inst, u, 1.0, 0).Validate(), ParameterError);
  EXPECT_THROW(MakeProblem(inst, u, 1.0, 4).Validate(), ParameterError);
  EXPECT_THROW(MakeProblem(inst, u, -1.0, 2).Validate(), ParameterError);
  EXPECT_THROW(MakeProblem(inst, u, 1.0, 2, 0.0).Validate(), ParameterError);
  EXPECT_THROW(MakeProblem(inst, u, 1.0, 2, 1.0).Validate(), ParameterError);
  EXPECT_THROW(MakeProblem(inst, std::make_shared<ZeroUtility>(4), 1.0, 2).Validate(),
               ParameterError);
}

TEST(ThresholdTest, GeometricHalfEpsilon) {
  // Points at 0 and 4: d_max = 4.
  auto inst = Line({0, 4});
  const std::vector<double> d = DistanceThresholds(*inst, Schedule::kGeometric, 0.5);
  // 1.5^3 = 3.375 <= 4 < 5.0625 = 1.5^4
  ASSERT_LT(std::pow(1.5, 3), 4.0);
  ASSERT_GT(std::pow(1.5, 4), 4.0);
  ASSERT_EQ(d.size(), 4u);
  const double expected[] = {1.0, 1.5, 2.25, 3.375};
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(d[i], expected[i], 1e-12);
}

TEST(ThresholdTest, ExhaustiveCollinear) {
  auto inst = Line({0, 1, 2});
  EXPECT_EQ(DistanceThresholds(*inst, Schedule::kExhaustive, 0.1),
            (std::vector<double>{0.5, 1.0, 2.0}));
}

TEST(ThresholdTest, GeometricLengthBoundAndRange) {
  Rng rng(3);
  auto inst = RandomMetric(6, rng);
  for (double eps : {0.01, 0.05, 0.1, 0.25, 0.5, 0.9}) {
    const auto d = DistanceThresholds(*inst, Schedule::kGeometric, eps);
    const double bound = 1 + std::ceil(std::log(2.0 / eps) / std::log(1.0 + eps));
    EXPECT_LE(static_cast<double>(d.size()), bound) << eps;
    EXPECT_FALSE(d.empty());
    for (std::size_t i = 0; i < d.size(); ++i) {
      EXPECT_GT(d[i], 0.0);
      EXPECT_LE(d[i], inst->diameter());
      if (i > 0) {
        EXPECT_GT(d[i], d[i - 1]);
      }
    }
  }
}

TEST(ThresholdTest, ZeroDiameter) {
  auto inst = Line({1, 1, 1});
  EXPECT_EQ(inst->diameter(), 0.0);
  for (Schedule s : {Schedule::kGeometric, Schedule::kExhaustive}) {
    for (double d : DistanceThresholds(*inst, s, 0.1)) EXPECT_EQ(d, 0.0);
  }
}

TEST(NearlyEqualTest, ScalesWithMagnitude) {
  EXPECT_TRUE(NearlyEqual(1e12, 1e12 + 1.0));
  EXPECT_FALSE(NearlyEqual(1.0, 1.0 + 1e-6));
  EXPECT_TRUE(NearlyEqual(0.0, 1e-10));
}

}  // namespace
}  // namespace mdms
