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

//
// Selection algorithms for max g(S) + lambda * div(S) s.t. |S| <= k.
//
// All argmax steps break ties toward the lowest index. Distance tests are
// exact floating-point comparisons: a point is a candidate iff
// dist(v, S) >= d.
//

#ifndef MDMS_ALGORITHMS_H_
#define MDMS_ALGORITHMS_H_

#include <cstdint>
#include <limits>
#include <vector>

#include "mdms/core.h"
#include "mdms/utilities.h"

namespace mdms {

struct GreedyResult {
  IndexSet selected;      // sorted
  std::vector<int> order;  // selection order
  // div(selected), accumulated during selection.
  double div = 0.0;
  // Every threshold d' in (lower, upper] makes exactly the same distance
  // decisions as the threshold that produced this result, hence the same
  // output. Infinite bounds mean unconstrained on that side.
  double lower = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();
  std::uint64_t gain_queries = 0;
};

// Greedy max-gain selection restricted to independent sets of the
// intersection graph G_d(V): repeatedly adds argmax_{v : dist(v,S) >= d} g(v|S)
// until |S| = k or no candidate is left.
GreedyResult GreedyIndependentSet(const Instance& instance,
                                  const Utility& utility, double d, int k);

struct AlgoConfig {
  // Fan threshold runs out over worker threads. Output is identical to the
  // sequential run.
  bool parallel_thresholds = false;
  unsigned threads = 0;  // 0: hardware concurrency
};

// Best of: the d = 0 greedy, a diametrical pair (k >= 2), and the greedy
// independent set at every threshold of problem.schedule. Later candidates
// replace the incumbent on ties.
Solution Gist(const Problem& problem, const AlgoConfig& config = {});

// Better of the d = 0 greedy and a diametrical pair (k >= 2).
Solution SimpleBaseline(const Problem& problem);

enum class GreedyRule {
  // Stop as soon as the best marginal f-gain is negative; the result is the
  // last prefix.
  kStopOnNegativeGain,
  // Run all k steps regardless of sign and return the best prefix.
  kBestPrefix,
};

// Greedy on f itself: adds argmax_v f(S + v) - f(S) each step.
Solution ClassicGreedy(const Problem& problem,
                       GreedyRule rule = GreedyRule::kStopOnNegativeGain);

// k uniform points without replacement in random order; best prefix.
Solution RandomBaseline(const Problem& problem, std::uint64_t seed);

}  // namespace mdms

#endif  // MDMS_ALGORITHMS_H_
