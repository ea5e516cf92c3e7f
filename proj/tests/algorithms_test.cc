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

#include "mdms/algorithms.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <gtest/gtest.h>

#include "mdms/generators.h"
#include "mdms/oracle.h"
#include "test_support.h"

namespace mdms {
namespace {

using ::mdms::testing::Line;
using ::mdms::testing::MakeProblem;
using ::mdms::testing::RandomMetric;
using ::mdms::testing::ReferenceDiv;
using ::mdms::testing::ReferenceOpt;

// Plain threshold greedy: gains by re-evaluation, candidates by scanning S.
IndexSet NaiveGreedy(const Instance& inst, const Utility& u, double d, int k) {
  IndexSet s;
  for (int step = 0; step < k; ++step) {
    int best = -1;
    double best_gain = 0.0;
    for (int v = 0; v < inst.size(); ++v) {
      if (std::find(s.begin(), s.end(), v) != s.end()) continue;
      bool far = true;
      for (int w : s) far = far && inst.dist(v, w) >= d;
      if (!far) continue;
      const double gain = u.GainByDifference(v, s);
      if (best < 0 || gain > best_gain) {
        best = v;
        best_gain = gain;
      }
    }
    if (best < 0) break;
    s.push_back(best);
  }
  std::sort(s.begin(), s.end());
  return s;
}

struct NaiveResult {
  IndexSet selected;
  double f = -std::numeric_limits<double>::infinity();
  std::optional<double> threshold;
};

// Every threshold run separately; later candidates win ties unless smaller.
NaiveResult NaiveGist(const Problem& p) {
  const Instance& inst = *p.instance;
  NaiveResult best;
  auto consider = [&](IndexSet s, std::optional<double> d) {
    const double f = p.utility->Value(s) + p.lambda * ReferenceDiv(inst, s);
    if (f > best.f || (f == best.f && s.size() >= best.selected.size())) {
      best = {std::move(s), f, d};
    }
  };
  consider(NaiveGreedy(inst, *p.utility, 0.0, p.k), std::nullopt);
  if (p.k >= 2 && inst.size() >= 2) {
    // Smallest lexicographic diametrical pair.
    std::pair<int, int> pair{0, 1};
    double far = -1;
    for (int i = 0; i < inst.size(); ++i) {
      for (int j = i + 1; j < inst.size(); ++j) {
        if (inst.dist(i, j) > far) {
          far = inst.dist(i, j);
          pair = {i, j};
        }
      }
    }
    consider({pair.first, pair.second}, std::nullopt);
  }
  for (double d : DistanceThresholds(inst, p.schedule, p.epsilon)) {
    consider(NaiveGreedy(inst, *p.utility, d, p.k), d);
  }
  return best;
}

// ---------------------------------------------------------------------------

TEST(GreedyIndependentSetTest, CollinearThreshold) {
  auto inst = Line({0, 1, 2});
  LinearUtility u({1, 1, 1});
  const GreedyResult r = GreedyIndependentSet(*inst, u, 1.5, 3);
  EXPECT_EQ(r.selected, (IndexSet{0, 2}));
  EXPECT_EQ(r.order, (std::vector<int>{0, 2}));
  EXPECT_DOUBLE_EQ(r.div, 2.0);
}

TEST(GreedyIndependentSetTest, CoverageAtZero) {
  auto inst = Line({0, 1, 2});
  CoverageUtility u({{1, 2}, {2, 3}, {3, 4}});
  const GreedyResult r = GreedyIndependentSet(*inst, u, 0.0, 2);
  EXPECT_EQ(r.selected, (IndexSet{0, 2}));
  EXPECT_EQ(u.Value(r.selected), 4.0);
}

TEST(GreedyIndependentSetTest, SingletonIsLowestArgmax) {
  Rng rng(12);
  auto inst = RandomMetric(7, rng);
  LinearUtility u({0.2, 0.9, 0.1, 0.9, 0.5, 0.9, 0.0});
  for (double d : {0.0, 0.3, 1.0, 100.0}) {
    EXPECT_EQ(GreedyIndependentSet(*inst, u, d, 1).selected, (IndexSet{1}));
  }
}

TEST(GreedyIndependentSetTest, MatchesNaiveAndIsIndependentAndMaximal) {
  Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng.Below(10));
    const int k = 1 + static_cast<int>(rng.Below(n));
    auto inst = RandomMetric(n, rng);
    auto u = trial % 2 ? testing::RandomCoverage(n, rng) : testing::RandomLinear(n, rng);
    const double d = rng.Uniform() * inst->diameter();
    const GreedyResult r = GreedyIndependentSet(*inst, *u, d, k);
    EXPECT_EQ(r.selected, NaiveGreedy(*inst, *u, d, k));
    EXPECT_LE(static_cast<int>(r.selected.size()), k);
    EXPECT_EQ(r.div, ReferenceDiv(*inst, r.selected));
    for (int a : r.selected) {
      for (int b : r.selected) {
        if (a != b) {
          EXPECT_GE(inst->dist(a, b), d);
        }
      }
    }
    if (static_cast<int>(r.selected.size()) < k) {
      // Maximal: every outside point is within d of the selection.
      for (int v = 0; v < n; ++v) {
        if (std::binary_search(r.selected.begin(), r.selected.end(), v)) continue;
        EXPECT_LT(*DistToSet(*inst, v, r.selected), d);
      }
    }
    // The reported interval reproduces the same output at its ends.
    if (std::isfinite(r.upper)) {
      EXPECT_EQ(GreedyIndependentSet(*inst, *u, r.upper, k).selected, r.selected);
    }
    if (std::isfinite(r.lower)) {
      const double just_above = std::nextafter(r.lower, std::numeric_limits<double>::infinity());
      EXPECT_EQ(GreedyIndependentSet(*inst, *u, just_above, k).selected, r.selected);
    }
  }
}

TEST(GreedyIndependentSetTest, RejectsBadArguments) {
  auto inst = Line({0, 1});
  LinearUtility u({1, 1});
  EXPECT_THROW(GreedyIndependentSet(*inst, u, -1.0, 1), ParameterError);
  EXPECT_THROW(GreedyIndependentSet(*inst, u, 0.0, 0), ParameterError);
  EXPECT_THROW(GreedyIndependentSet(*inst, LinearUtility({1, 1, 1}), 0.0, 1),
               ParameterError);
}

// ---------------------------------------------------------------------------

TEST(GistTest, GreedyHardReachesOptimum) {
  const GeneratedInstance g = GenGreedyHard(8, 6, 0.1);
  const Problem p = g.MakeProblem();
  const Solution s = Gist(p);
  EXPECT_NEAR(s.f_value, 7.1, 1e-12);
  EXPECT_NEAR(BruteForceOpt(p).opt_value, 7.1, 1e-12);
  EXPECT_EQ(s.selected.size(), 6u);
  EXPECT_EQ(s.algorithm, "gist");
}

TEST(GistTest, DiversityOnlyPairIsDiametrical) {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    auto inst = RandomMetric(8, rng);
    const Problem p = MakeProblem(inst, std::make_shared<ZeroUtility>(8), 1.0, 2);
    const Solution s = Gist(p);
    EXPECT_EQ(s.f_value, inst->diameter());
    ASSERT_EQ(s.selected.size(), 2u);
    EXPECT_EQ(inst->dist(s.selected[0], s.selected[1]), inst->diameter());
  }
}

TEST(GistTest, ZeroLambdaCoverageWithinGreedyBound) {
  Rng rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 6 + static_cast<int>(rng.Below(7));
    const int k = 2 + static_cast<int>(rng.Below(4));
    const Problem p = MakeProblem(RandomMetric(n, rng), testing::RandomCoverage(n, rng), 0.0, k);
    const double opt = ReferenceOpt(p);
    EXPECT_GE(Gist(p).f_value, (1.0 - 1.0 / std::numbers::e) * opt - 1e-12);
  }
}

TEST(GistTest, MatchesNaiveReference) {
  Rng rng(77);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng.Below(12));
    const int k = 1 + static_cast<int>(rng.Below(n));
    std::shared_ptr<const Utility> u;
    switch (trial % 3) {
      case 0: u = testing::RandomCoverage(n, rng); break;
      case 1: u = testing::RandomBudgetAdditive(n, k, rng); break;
      default: u = testing::RandomLinear(n, rng); break;
    }
    const double lambda = std::vector<double>{0.0, 0.1, 1.0, 10.0}[rng.Below(4)];
    const Schedule schedule = trial % 2 ? Schedule::kExhaustive : Schedule::kGeometric;
    const double eps = std::vector<double>{0.05, 0.1, 0.5}[rng.Below(3)];
    const Problem p = MakeProblem(RandomMetric(n, rng), u, lambda, k, eps, schedule);
    const Solution s = Gist(p);
    const NaiveResult ref = NaiveGist(p);
    EXPECT_EQ(s.selected, ref.selected) << trial;
    EXPECT_NEAR(s.f_value, ref.f, 1e-12) << trial;
    EXPECT_EQ(s.winning_threshold, ref.threshold) << trial;
    EXPECT_NEAR(s.f_value, s.g_value + lambda * s.div_value, 1e-12);
    EXPECT_EQ(s.div_value, ReferenceDiv(*p.instance, s.selected));
  }
}

TEST(GistTest, ParallelMatchesSequential) {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 10 + static_cast<int>(rng.Below(30));
    const int k = 1 + static_cast<int>(rng.Below(n));
    const Problem p = MakeProblem(RandomMetric(n, rng), testing::RandomBudgetAdditive(n, k, rng),
                                  1.0, k, 0.05,
                                  trial % 2 ? Schedule::kExhaustive : Schedule::kGeometric);
    const Solution seq = Gist(p);
    for (unsigned threads : {2u, 3u, 8u}) {
      AlgoConfig config;
      config.parallel_thresholds = true;
      config.threads = threads;
      EXPECT_EQ(Gist(p, config), seq);
    }
  }
}

TEST(GistTest, OracleCallsMatchCounterWhenSequential) {
  Rng rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 4 + static_cast<int>(rng.Below(20));
    const int k = 1 + static_cast<int>(rng.Below(n));
    const Problem p = MakeProblem(RandomMetric(n, rng), testing::RandomCoverage(n, rng), 1.0, k,
                                  0.1, trial % 2 ? Schedule::kExhaustive : Schedule::kGeometric);
    for (auto run : {+[](const Problem& q) { return Gist(q); },
                     +[](const Problem& q) { return SimpleBaseline(q); },
                     +[](const Problem& q) { return ClassicGreedy(q); },
                     +[](const Problem& q) { return ClassicGreedy(q, GreedyRule::kBestPrefix); },
                     +[](const Problem& q) { return RandomBaseline(q, 3); }}) {
      p.utility->ResetQueries();
      const Solution s = run(p);
      EXPECT_EQ(s.oracle_calls, p.utility->queries()) << s.algorithm;
    }
  }
}

TEST(GistTest, QueryBound) {
  Rng rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 4 + static_cast<int>(rng.Below(20));
    const int k = 1 + static_cast<int>(rng.Below(n));
    const Problem p = MakeProblem(RandomMetric(n, rng), testing::RandomCoverage(n, rng), 1.0, k);
    const auto d = DistanceThresholds(*p.instance, Schedule::kGeometric, p.epsilon);
    EXPECT_LE(Gist(p).oracle_calls,
              static_cast<std::uint64_t>(n) * k * (d.size() + 2));
  }
}

TEST(GistTest, Deterministic) {
  GaussianOptions o;
  o.k = 20;
  const Problem p = GenGaussian(150, 8, 4, o).MakeProblem(0.1, Schedule::kExhaustive);
  EXPECT_EQ(Gist(p), Gist(p));
}

TEST(GistTest, SinglePoint) {
  const Problem p = MakeProblem(Line({3.0}), std::make_shared<LinearUtility>(std::vector<double>{2.0}),
                                1.0, 1);
  const Solution s = Gist(p);
  EXPECT_EQ(s.selected, (IndexSet{0}));
  EXPECT_EQ(s.f_value, 2.0);
}

// ---------------------------------------------------------------------------

TEST(SimpleBaselineTest, DiversityOnly) {
  Rng rng(2);
  auto inst = RandomMetric(9, rng);
  for (int k = 2; k <= 5; ++k) {
    const Solution s = SimpleBaseline(MakeProblem(inst, std::make_shared<ZeroUtility>(9), 1.0, k));
    EXPECT_EQ(s.f_value, inst->diameter());
    EXPECT_EQ(s.algorithm, "simple");
  }
}

TEST(SimpleBaselineTest, GreedyHardTakesTheGreedyBranch) {
  const Solution s = SimpleBaseline(GenGreedyHard(8, 6, 0.1).MakeProblem());
  EXPECT_NEAR(s.f_value, 7.1, 1e-12);
  EXPECT_EQ(s.selected.size(), 6u);
}

TEST(SimpleBaselineTest, WarmUpBound) {
  const double bound = (std::numbers::e - 1.0) / (2.0 * std::numbers::e - 1.0);
  Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + static_cast<int>(rng.Below(7));
    const int k = 1 + static_cast<int>(rng.Below(4));
    const Problem p = MakeProblem(RandomMetric(n, rng),
                                  trial % 2 ? testing::RandomCoverage(n, rng)
                                            : testing::RandomBudgetAdditive(n, k, rng),
                                  std::vector<double>{0.1, 1.0, 10.0}[rng.Below(3)], std::min(k, n));
    EXPECT_GE(SimpleBaseline(p).f_value, bound * ReferenceOpt(p) - 1e-9);
  }
}

// ---------------------------------------------------------------------------

TEST(ClassicGreedyTest, GreedyHardPicksTheFarPair) {
  for (int k = 4; k <= 8; ++k) {
    const Solution s = ClassicGreedy(GenGreedyHard(8, k, 0.1).MakeProblem());
    EXPECT_EQ(s.selected, (IndexSet{0, 1})) << k;
    EXPECT_NEAR(s.f_value, 4.2, 1e-12);
    EXPECT_EQ(s.algorithm, "greedy");
  }
}

TEST(ClassicGreedyTest, BestPrefixNeverWorseThanStopRule) {
  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 3 + static_cast<int>(rng.Below(10));
    const int k = 1 + static_cast<int>(rng.Below(n));
    const Problem p = MakeProblem(RandomMetric(n, rng), testing::RandomCoverage(n, rng),
                                  rng.Uniform() * 3, k);
    const Solution stop = ClassicGreedy(p);
    const Solution prefix = ClassicGreedy(p, GreedyRule::kBestPrefix);
    EXPECT_GE(prefix.f_value, stop.f_value - 1e-12);
    EXPECT_EQ(prefix.algorithm, "greedy-prefix");
    EXPECT_NEAR(stop.f_value, Objective(p, stop.selected).f, 1e-12);
    EXPECT_NEAR(prefix.f_value, Objective(p, prefix.selected).f, 1e-12);
  }
}

TEST(ClassicGreedyTest, ZeroLambdaIsThresholdZeroGreedy) {
  Rng rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + static_cast<int>(rng.Below(10));
    const int k = 1 + static_cast<int>(rng.Below(n));
    const Problem p = MakeProblem(RandomMetric(n, rng), testing::RandomLinear(n, rng), 0.0, k);
    EXPECT_EQ(ClassicGreedy(p).selected,
              GreedyIndependentSet(*p.instance, *p.utility, 0.0, k).selected);
  }
}

TEST(ClassicGreedyTest, SinglePoint) {
  const Solution s = ClassicGreedy(
      MakeProblem(Line({0.0}), std::make_shared<ZeroUtility>(1), 1.0, 1));
  EXPECT_EQ(s.selected, (IndexSet{0}));
}

// ---------------------------------------------------------------------------

TEST(RandomBaselineTest, BestPrefixOfASample) {
  Rng rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng.Below(7));
    const int k = 1 + static_cast<int>(rng.Below(n));
    const Problem p = MakeProblem(RandomMetric(n, rng), testing::RandomCoverage(n, rng),
                                  rng.Uniform() * 2, k);
    const Solution s = RandomBaseline(p, trial);
    EXPECT_EQ(s.seed, std::optional<std::uint64_t>(trial));
    EXPECT_EQ(s, RandomBaseline(p, trial));
    EXPECT_NEAR(s.f_value, Objective(p, s.selected).f, 1e-12);
    EXPECT_LE(static_cast<int>(s.selected.size()), k);
    EXPECT_LE(s.f_value, ReferenceOpt(p) + 1e-12);
  }
}

TEST(RandomBaselineTest, FullSampleDiversityOnly) {
  // n = k, g = 0: the best prefix of any permutation is a pair (or the
  // singleton's d_max), so the value is at least the smallest distance.
  Rng rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng.Below(7));
    auto inst = RandomMetric(n, rng);
    const Problem p = MakeProblem(inst, std::make_shared<ZeroUtility>(n), 1.0, n);
    const Solution s = RandomBaseline(p, trial);
    EXPECT_EQ(s.selected.size(), 1u);  // singleton gives d_max, unbeatable
    EXPECT_EQ(s.f_value, inst->diameter());
  }
}

}  // namespace
}  // namespace mdms
