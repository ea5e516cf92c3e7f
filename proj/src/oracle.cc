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

#include "mdms/oracle.h"

#include <algorithm>
#include <limits>

namespace mdms {

std::uint64_t CountSubsetsUpTo(int n, int k) {
  constexpr std::uint64_t kCap = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 0;
  std::uint64_t binom = 1;  // C(n, 0)
  for (int s = 1; s <= std::min(n, k); ++s) {
    // C(n, s) = C(n, s-1) * (n - s + 1) / s, exact in integers.
    const std::uint64_t num = static_cast<std::uint64_t>(n - s + 1);
    if (binom > kCap / num) return kCap;
    binom = binom * num / static_cast<std::uint64_t>(s);
    if (total > kCap - binom) return kCap;
    total += binom;
  }
  return total;
}

namespace {

// Calls visit(subset) for every subset of size 1..k, by size then
// lexicographically.
template <typename Visit>
void ForEachSubset(int n, int k, Visit&& visit) {
  IndexSet s;
  for (int size = 1; size <= std::min(n, k); ++size) {
    s.resize(size);
    for (int i = 0; i < size; ++i) s[i] = i;
    for (;;) {
      visit(static_cast<const IndexSet&>(s));
      int i = size - 1;
      while (i >= 0 && s[i] == n - size + i) --i;
      if (i < 0) break;
      ++s[i];
      for (int j = i + 1; j < size; ++j) s[j] = s[j - 1] + 1;
    }
  }
}

void Guard(int n, int k, std::uint64_t max_subsets) {
  const std::uint64_t count = CountSubsetsUpTo(n, k);
  if (count > max_subsets) {
    throw SizeGuardError("exhaustive search over " + std::to_string(count) +
                         " subsets exceeds the limit of " +
                         std::to_string(max_subsets));
  }
}

double MinPairwise(const Instance& instance, const IndexSet& s) {
  if (s.size() <= 1) return instance.diameter();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      best = std::min(best, instance.dist(s[a], s[b]));
    }
  }
  return best;
}

}  // namespace

ExactResult BruteForceOpt(const Problem& problem, std::uint64_t max_subsets) {
  problem.Validate();
  const Instance& instance = *problem.instance;
  Guard(instance.size(), problem.k, max_subsets);

  ExactResult out;
  bool have = false;
  ForEachSubset(instance.size(), problem.k, [&](const IndexSet& s) {
    ++out.subsets_examined;
    const double f =
        problem.utility->Value(s) + problem.lambda * MinPairwise(instance, s);
    // Later subsets are never smaller, so `>=` with a size check keeps the
    // largest set and, within a size, the first one visited.
    if (!have || f > out.opt_value ||
        (f == out.opt_value && s.size() > out.witness.size())) {
      have = true;
      out.opt_value = f;
      out.witness = s;
    }
  });
  return out;
}

ExactResult BruteForceConstrained(const Instance& instance,
                                  const Utility& utility, double d, int k,
                                  std::uint64_t max_subsets) {
  if (utility.size() != instance.size()) {
    throw ParameterError("utility/instance size mismatch");
  }
  if (k < 1) throw ParameterError("k must be >= 1");
  Guard(instance.size(), k, max_subsets);

  ExactResult out;
  out.feasible = false;
  ForEachSubset(instance.size(), k, [&](const IndexSet& s) {
    ++out.subsets_examined;
    if (MinPairwise(instance, s) < d) return;
    const double g = utility.Value(s);
    if (!out.feasible || g > out.opt_value ||
        (g == out.opt_value && s.size() > out.witness.size())) {
      out.feasible = true;
      out.opt_value = g;
      out.witness = s;
    }
  });
  return out;
}

RatioReport Ratio(double algorithm_value, double opt_value) {
  if (opt_value == 0.0) return {1.0, algorithm_value != 0.0};
  return {algorithm_value / opt_value, false};
}

}  // namespace mdms
