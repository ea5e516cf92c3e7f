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
// Exact exponential-time solvers, used as ground truth in tests and by the
// `verify` command.
//

#ifndef MDMS_ORACLE_H_
#define MDMS_ORACLE_H_

#include <cstdint>

#include "mdms/core.h"
#include "mdms/utilities.h"

namespace mdms {

// Refuse enumerations larger than this many subsets.
inline constexpr std::uint64_t kMaxEnumeratedSubsets = 10'000'000;

// Number of nonempty subsets of size <= k of an n-set, saturating at
// UINT64_MAX.
std::uint64_t CountSubsetsUpTo(int n, int k);

struct ExactResult {
  bool feasible = true;
  double opt_value = 0.0;
  IndexSet witness;
  std::uint64_t subsets_examined = 0;
};

// max f(S) over nonempty |S| <= k. Subsets are visited by size, then
// lexicographically. Ties prefer the larger set, then the first visited.
// Throws SizeGuardError past `max_subsets`.
ExactResult BruteForceOpt(const Problem& problem,
                          std::uint64_t max_subsets = kMaxEnumeratedSubsets);

// max g(S) over nonempty |S| <= k with div(S) >= d. Singletons qualify iff
// d <= d_max; when nothing qualifies the result is marked infeasible.
ExactResult BruteForceConstrained(const Instance& instance,
                                  const Utility& utility, double d, int k,
                                  std::uint64_t max_subsets = kMaxEnumeratedSubsets);

struct RatioReport {
  double ratio = 1.0;
  // opt = 0 while the algorithm value is not.
  bool degenerate = false;
};

RatioReport Ratio(double algorithm_value, double opt_value);

}  // namespace mdms

#endif  // MDMS_ORACLE_H_
