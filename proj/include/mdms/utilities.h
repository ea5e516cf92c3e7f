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
// Utility set functions g : 2^V -> R behind a counted value oracle.
//
// Query accounting: Value() costs one query, Gain() (incremental or the
// per-kind fast path) costs one query, GainByDifference() costs two.
//

#ifndef MDMS_UTILITIES_H_
#define MDMS_UTILITIES_H_

#include <atomic>
#include <cstdint>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "mdms/core.h"

namespace mdms {

enum class UtilityKind {
  kLinear,
  kCoverage,
  kBudgetAdditive,
  kMarginSimilarity,
  kConstantZero,
  kTabulated,
};

const char* UtilityKindName(UtilityKind kind);

class Utility;

// Greedy-style incremental evaluation: maintains a current set and answers
// marginal-gain queries against it. Not thread-safe; one per worker.
class UtilityState {
 public:
  virtual ~UtilityState() = default;

  // g(v | S) for the current S; v must not be in S. One query.
  double Gain(int v);
  // S <- S + {v}. Free.
  virtual void Add(int v) = 0;

 protected:
  explicit UtilityState(const Utility& owner) : owner_(owner) {}
  virtual double DoGain(int v) const = 0;

 private:
  const Utility& owner_;
};

class Utility {
 public:
  Utility(const Utility&) = delete;
  Utility& operator=(const Utility&) = delete;
  virtual ~Utility() = default;

  virtual UtilityKind kind() const = 0;
  // Number of points the function is defined over.
  int size() const { return n_; }
  bool monotone_declared() const { return monotone_; }
  bool submodular_declared() const { return submodular_; }

  // g(S). Indices must be valid; duplicates are not allowed.
  double Value(IndexSpan s) const;

  // g(v | S) via the kind's fast path. Throws InputError if v is in S.
  double Gain(int v, IndexSpan s) const;

  // g(S + v) - g(S) through two Value() calls.
  double GainByDifference(int v, IndexSpan s) const;

  // Fresh incremental state at S = {}.
  std::unique_ptr<UtilityState> Start() const;

  std::uint64_t queries() const { return queries_.load(std::memory_order_relaxed); }
  void ResetQueries() const { queries_.store(0, std::memory_order_relaxed); }

 protected:
  Utility(int n, bool monotone, bool submodular)
      : n_(n), monotone_(monotone), submodular_(submodular) {}

  virtual double DoValue(IndexSpan s) const = 0;
  virtual std::unique_ptr<UtilityState> DoStart() const = 0;

 private:
  friend class UtilityState;
  void Count(std::uint64_t q) const {
    queries_.fetch_add(q, std::memory_order_relaxed);
  }
  void CheckSet(IndexSpan s) const;

  int n_;
  bool monotone_;
  bool submodular_;
  mutable std::atomic<std::uint64_t> queries_{0};
};

// g(S) = sum_{v in S} w(v), w >= 0.
class LinearUtility final : public Utility {
 public:
  explicit LinearUtility(std::vector<double> weights);
  UtilityKind kind() const override { return UtilityKind::kLinear; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  double DoValue(IndexSpan s) const override;
  std::unique_ptr<UtilityState> DoStart() const override;

  std::vector<double> weights_;
};

// g(S) = |union_{i in S} family[i]|. Element ids are arbitrary integers.
class CoverageUtility final : public Utility {
 public:
  explicit CoverageUtility(std::vector<std::vector<int>> family);
  UtilityKind kind() const override { return UtilityKind::kCoverage; }
  const std::vector<std::vector<int>>& family() const { return family_; }
  int universe_size() const { return universe_; }

 private:
  double DoValue(IndexSpan s) const override;
  std::unique_ptr<UtilityState> DoStart() const override;

  std::vector<std::vector<int>> family_;
  std::vector<std::vector<int>> dense_;  // family remapped to [0, universe_)
  int universe_ = 0;
};

// g(S) = alpha * min{ (1/k) sum_{i in S} w_i, beta }.
class BudgetAdditiveUtility final : public Utility {
 public:
  BudgetAdditiveUtility(std::vector<double> weights, double alpha, double beta,
                        int k);
  UtilityKind kind() const override { return UtilityKind::kBudgetAdditive; }
  const std::vector<double>& weights() const { return weights_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  int k() const { return k_; }

  // alpha * min{ total / k, beta }
  double Capped(double total) const;

 private:
  double DoValue(IndexSpan s) const override;
  std::unique_ptr<UtilityState> DoStart() const override;

  std::vector<double> weights_;
  double alpha_;
  double beta_;
  int k_;
};

struct SimilarityEdge {
  int i = 0;
  int j = 0;
  double s = 0.0;
};

// g(S) = alpha_s * sum_{i in S} u_i - beta_s * sum_{i != j in S, adjacent} s(i,j)
// The pair sum runs over ordered pairs, so each undirected edge inside S
// contributes twice. Submodular, not monotone.
//
// Two adjacency sources: an explicit edge list, or "dense" mode where every
// pair is adjacent with s(i, j) = 1 - dist(i, j) taken from a cosine instance.
class MarginSimilarityUtility final : public Utility {
 public:
  MarginSimilarityUtility(std::vector<double> uncertainty,
                          std::vector<SimilarityEdge> edges, double alpha_s,
                          double beta_s);
  MarginSimilarityUtility(std::vector<double> uncertainty,
                          std::shared_ptr<const Instance> dense_similarity,
                          double alpha_s, double beta_s);

  UtilityKind kind() const override { return UtilityKind::kMarginSimilarity; }
  const std::vector<double>& uncertainty() const { return uncertainty_; }
  double alpha_s() const { return alpha_s_; }
  double beta_s() const { return beta_s_; }
  bool dense() const { return dense_ != nullptr; }
  // Undirected edge list (i < j); empty in dense mode.
  std::vector<SimilarityEdge> edges() const;

  // Calls fn(j, s(i, j)) for every neighbor j of i.
  template <typename Fn>
  void ForEachNeighbor(int i, Fn&& fn) const {
    if (dense_) {
      for (int j = 0; j < size(); ++j) {
        if (j != i) fn(j, 1.0 - dense_->dist(i, j));
      }
    } else {
      for (const auto& [j, s] : adjacency_[i]) fn(j, s);
    }
  }

 private:
  double DoValue(IndexSpan s) const override;
  std::unique_ptr<UtilityState> DoStart() const override;

  std::vector<double> uncertainty_;
  std::vector<std::vector<std::pair<int, double>>> adjacency_;
  std::shared_ptr<const Instance> dense_;
  double alpha_s_;
  double beta_s_;
};

// g == 0.
class ZeroUtility final : public Utility {
 public:
  explicit ZeroUtility(int n) : Utility(n, true, true) {}
  UtilityKind kind() const override { return UtilityKind::kConstantZero; }

 private:
  double DoValue(IndexSpan) const override { return 0.0; }
  std::unique_ptr<UtilityState> DoStart() const override;
};

// Explicit value per subset, indexed by bitmask (bit i <-> point i).
// n <= 20. Declared neither monotone nor submodular.
class TabulatedUtility final : public Utility {
 public:
  static constexpr int kMaxPoints = 20;

  TabulatedUtility(int n, std::vector<double> values);
  UtilityKind kind() const override { return UtilityKind::kTabulated; }
  const std::vector<double>& values() const { return values_; }

  static std::uint32_t Mask(IndexSpan s);

 private:
  double DoValue(IndexSpan s) const override;
  std::unique_ptr<UtilityState> DoStart() const override;

  std::vector<double> values_;
};

// Tabulates f(S) = g(S) + lambda * div(S) over all 2^n subsets.
std::shared_ptr<TabulatedUtility> TabulateObjective(const Problem& problem);

struct PropertyViolation {
  enum class Type { kMonotonicity, kSubmodularity };
  Type type;
  IndexSet s;      // smaller set
  IndexSet t;      // larger set (== s for monotonicity violations)
  int x = -1;      // added element
  double gain_s = 0.0;  // g(x | S)
  double gain_t = 0.0;  // g(x | T); 0 for monotonicity violations
};

struct PropertyReport {
  bool exhaustive = false;
  std::uint64_t checks = 0;
  std::uint64_t monotonicity_violations = 0;
  std::uint64_t submodularity_violations = 0;
  // First witnesses in enumeration order (capped).
  std::vector<PropertyViolation> witnesses;

  bool clean() const {
    return monotonicity_violations == 0 && submodularity_violations == 0;
  }
};

// Searches for violations of g(x|S) >= 0 and g(x|S) >= g(x|T), S ⊆ T, x ∉ T.
// n <= kExhaustiveLimit: every (S, T, x) triple is checked and `trials` and
// `seed` are ignored. Otherwise `trials` random chains are sampled.
struct PropertyCheckOptions {
  static constexpr int kExhaustiveLimit = 10;
  int trials = 1000;
  std::uint64_t seed = 0;
  double tolerance = 1e-12;
  std::size_t max_witnesses = 4096;
};

PropertyReport CheckMonotoneSubmodular(const Utility& utility,
                                       const PropertyCheckOptions& options = {});

}  // namespace mdms

#endif  // MDMS_UTILITIES_H_
