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
#include <thread>

#include "mdms/random.h"

namespace mdms {

GreedyResult GreedyIndependentSet(const Instance& instance,
                                  const Utility& utility, double d, int k) {
  const int n = instance.size();
  if (utility.size() != n) throw ParameterError("utility/instance size mismatch");
  if (k < 1) throw ParameterError("k must be >= 1");
  if (!(d >= 0.0)) throw ParameterError("threshold d must be >= 0");

  GreedyResult out;
  auto state = utility.Start();
  // dist(v, S) for points still in play; meaningless while S is empty, where
  // every point is a candidate.
  std::vector<double> to_set(n, 0.0);
  std::vector<int> active(n);
  for (int v = 0; v < n; ++v) active[v] = v;
  double min_gap = 0.0;

  for (int step = 0; step < k; ++step) {
    int best = -1;
    double best_gain = 0.0;
    std::size_t kept = 0;
    for (int v : active) {
      if (step > 0) {
        if (to_set[v] >= d) {
          out.upper = std::min(out.upper, to_set[v]);
        } else {
          // dist(v, S) only shrinks, so v never becomes a candidate again.
          out.lower = std::max(out.lower, to_set[v]);
          continue;
        }
      }
      active[kept++] = v;
      const double gain = state->Gain(v);
      ++out.gain_queries;
      if (best < 0 || gain > best_gain) {
        best = v;
        best_gain = gain;
      }
    }
    active.resize(kept);
    if (best < 0) break;  // S is a maximal independent set of G_d(V)

    state->Add(best);
    out.order.push_back(best);
    if (step == 1) {
      min_gap = to_set[best];
    } else if (step > 1) {
      min_gap = std::min(min_gap, to_set[best]);
    }
    std::erase(active, best);
    for (int v : active) {
      const double dv = instance.dist(best, v);
      to_set[v] = step == 0 ? dv : std::min(to_set[v], dv);
    }
  }

  out.selected = Canonical(out.order);
  out.div = out.order.size() <= 1 ? instance.diameter() : min_gap;
  return out;
}

namespace {

struct Candidate {
  IndexSet selected;
  double f = 0.0;
  double g = 0.0;
  double div = 0.0;
};

// Later candidates win ties in f, except that a smaller set never displaces a
// larger one.
bool Replaces(const Candidate& t, const Candidate& s) {
  if (t.f != s.f) return t.f > s.f;
  return t.selected.size() >= s.selected.size();
}

Candidate Evaluate(const Problem& problem, IndexSet selected, double div) {
  Candidate c;
  c.g = problem.utility->Value(selected);
  c.div = div;
  c.f = c.g + problem.lambda * div;
  c.selected = std::move(selected);
  return c;
}

Solution ToSolution(Candidate c, const char* algorithm, std::uint64_t calls) {
  Solution s;
  s.selected = std::move(c.selected);
  s.f_value = c.f;
  s.g_value = c.g;
  s.div_value = c.div;
  s.oracle_calls = calls;
  s.algorithm = algorithm;
  return s;
}

// Consecutive thresholds D[first..last] that produce the same greedy output.
struct ThresholdGroup {
  std::size_t first = 0;
  std::size_t last = 0;
  double upper = 0.0;
  Candidate candidate;
  std::uint64_t queries = 0;  // gain queries + one evaluation
};

std::size_t LastCovered(const std::vector<double>& thresholds,
                        std::size_t from, std::size_t end, double upper) {
  const auto it = std::upper_bound(thresholds.begin() + from,
                                   thresholds.begin() + end, upper);
  return static_cast<std::size_t>(it - thresholds.begin()) - 1;
}

std::vector<ThresholdGroup> RunThresholds(const Problem& problem,
                                          const std::vector<double>& thresholds,
                                          std::size_t begin, std::size_t end) {
  std::vector<ThresholdGroup> groups;
  std::size_t i = begin;
  while (i < end) {
    GreedyResult r = GreedyIndependentSet(*problem.instance, *problem.utility,
                                          thresholds[i], problem.k);
    ThresholdGroup g;
    g.first = i;
    g.last = LastCovered(thresholds, i, end, r.upper);
    g.upper = r.upper;
    g.queries = r.gain_queries + 1;
    g.candidate = Evaluate(problem, std::move(r.selected), r.div);
    i = g.last + 1;
    groups.push_back(std::move(g));
  }
  return groups;
}

}  // namespace

Solution Gist(const Problem& problem, const AlgoConfig& config) {
  problem.Validate();
  const Instance& instance = *problem.instance;
  const std::vector<double> thresholds =
      DistanceThresholds(instance, problem.schedule, problem.epsilon);

  GreedyResult base = GreedyIndependentSet(instance, *problem.utility, 0.0, problem.k);
  std::uint64_t calls = base.gain_queries + 1;
  const double base_upper = base.upper;
  const Candidate first = Evaluate(problem, std::move(base.selected), base.div);
  Candidate best = first;
  std::optional<double> winning;

  if (problem.k >= 2 && instance.size() >= 2) {
    const auto [u, v] = instance.DiametricalPair();
    Candidate pair = Evaluate(problem, {u, v}, instance.dist(u, v));
    ++calls;
    if (Replaces(pair, best)) best = std::move(pair);
  }

  // Thresholds at or below the d = 0 run's upper bound reproduce that run, so
  // its output is reused for them at no extra queries.
  std::vector<ThresholdGroup> groups;
  std::size_t start = 0;
  if (!thresholds.empty() && thresholds.front() <= base_upper) {
    ThresholdGroup g;
    g.last = LastCovered(thresholds, 0, thresholds.size(), base_upper);
    g.upper = base_upper;
    g.candidate = first;
    groups.push_back(std::move(g));
    start = groups.back().last + 1;
  }

  unsigned workers = 1;
  if (config.parallel_thresholds) {
    workers = config.threads ? config.threads : std::thread::hardware_concurrency();
    workers = std::max(1u, workers);
  }
  const std::size_t remaining = thresholds.size() - start;
  if (workers <= 1 || remaining < 2) {
    auto rest = RunThresholds(problem, thresholds, start, thresholds.size());
    std::move(rest.begin(), rest.end(), std::back_inserter(groups));
  } else {
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, remaining));
    std::vector<std::vector<ThresholdGroup>> parts(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t lo = start + remaining * w / workers;
      const std::size_t hi = start + remaining * (w + 1) / workers;
      pool.emplace_back([&, w, lo, hi] {
        parts[w] = RunThresholds(problem, thresholds, lo, hi);
      });
    }
    for (auto& t : pool) t.join();
    // A chunk boundary can split what the sequential sweep sees as one group;
    // the split halves are identical runs, so fold them back together.
    for (auto& part : parts) {
      for (auto& g : part) {
        if (!groups.empty() && thresholds[g.first] <= groups.back().upper) {
          groups.back().last = g.last;
        } else {
          groups.push_back(std::move(g));
        }
      }
    }
  }

  for (auto& g : groups) {
    calls += g.queries;
    if (Replaces(g.candidate, best)) {
      best = std::move(g.candidate);
      winning = thresholds[g.last];
    }
  }

  Solution s = ToSolution(std::move(best), problem.schedule == Schedule::kGeometric
                                               ? "gist"
                                               : "gist-exhaustive",
                          calls);
  s.winning_threshold = winning;
  return s;
}

Solution SimpleBaseline(const Problem& problem) {
  problem.Validate();
  const Instance& instance = *problem.instance;
  GreedyResult base = GreedyIndependentSet(instance, *problem.utility, 0.0, problem.k);
  std::uint64_t calls = base.gain_queries + 1;
  Candidate best = Evaluate(problem, std::move(base.selected), base.div);
  if (problem.k >= 2 && instance.size() >= 2) {
    const auto [u, v] = instance.DiametricalPair();
    Candidate pair = Evaluate(problem, {u, v}, instance.dist(u, v));
    ++calls;
    if (pair.f > best.f) best = std::move(pair);
  }
  return ToSolution(std::move(best), "simple", calls);
}

namespace {

// Tracks a growing sequence and the value of every prefix.
class PrefixTracker {
 public:
  explicit PrefixTracker(const Problem& problem)
      : problem_(problem),
        to_set_(problem.instance->size(), 0.0),
        div_(problem.instance->diameter()) {}

  // div(S + v) given the current S.
  double DivWith(int v) const {
    if (order_.empty()) return problem_.instance->diameter();
    if (order_.size() == 1) return to_set_[v];
    return std::min(div_, to_set_[v]);
  }

  void Add(int v) {
    div_ = DivWith(v);
    const Instance& inst = *problem_.instance;
    for (int u = 0; u < inst.size(); ++u) {
      const double d = inst.dist(v, u);
      to_set_[u] = order_.empty() ? d : std::min(to_set_[u], d);
    }
    order_.push_back(v);
    sorted_.insert(std::upper_bound(sorted_.begin(), sorted_.end(), v), v);
    const double g = problem_.utility->Value(sorted_);
    ++calls_;
    const double f = g + problem_.lambda * div_;
    if (!best_ || f > best_->f) best_ = Candidate{sorted_, f, g, div_};
  }

  double div() const { return div_; }
  std::size_t size() const { return order_.size(); }
  std::uint64_t calls() const { return calls_; }
  Candidate best() const { return *best_; }
  Candidate last() const {
    const double g = problem_.utility->Value(sorted_);
    return Candidate{sorted_, g + problem_.lambda * div_, g, div_};
  }

 private:
  const Problem& problem_;
  std::vector<double> to_set_;
  std::vector<int> order_;
  IndexSet sorted_;
  double div_;
  std::optional<Candidate> best_;
  std::uint64_t calls_ = 0;
};

}  // namespace

Solution ClassicGreedy(const Problem& problem, GreedyRule rule) {
  problem.Validate();
  const int n = problem.instance->size();
  auto state = problem.utility->Start();
  PrefixTracker prefix(problem);
  std::vector<char> taken(n, 0);
  std::uint64_t calls = 0;

  for (int step = 0; step < problem.k; ++step) {
    const double current_div = prefix.div();
    int best = -1;
    double best_gain = 0.0;
    for (int v = 0; v < n; ++v) {
      if (taken[v]) continue;
      const double gain =
          state->Gain(v) + problem.lambda * (prefix.DivWith(v) - current_div);
      ++calls;
      if (best < 0 || gain > best_gain) {
        best = v;
        best_gain = gain;
      }
    }
    if (best < 0) break;
    if (rule == GreedyRule::kStopOnNegativeGain && step > 0 && best_gain < 0.0) {
      break;
    }
    state->Add(best);
    taken[best] = 1;
    prefix.Add(best);
  }

  Candidate out = rule == GreedyRule::kBestPrefix ? prefix.best() : prefix.last();
  // last() costs one more evaluation.
  calls += prefix.calls() + (rule == GreedyRule::kBestPrefix ? 0 : 1);
  return ToSolution(std::move(out),
                    rule == GreedyRule::kBestPrefix ? "greedy-prefix" : "greedy",
                    calls);
}

Solution RandomBaseline(const Problem& problem, std::uint64_t seed) {
  problem.Validate();
  const int n = problem.instance->size();
  Rng rng(seed);
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  // Partial Fisher-Yates: pool[0..k) is a uniform k-sample in uniform order.
  for (int i = 0; i < problem.k; ++i) {
    const int j = i + static_cast<int>(rng.Below(static_cast<std::uint64_t>(n - i)));
    std::swap(pool[i], pool[j]);
  }
  PrefixTracker prefix(problem);
  for (int i = 0; i < problem.k; ++i) prefix.Add(pool[i]);
  Solution s = ToSolution(prefix.best(), "random", prefix.calls());
  s.seed = seed;
  return s;
}

}  // namespace mdms
