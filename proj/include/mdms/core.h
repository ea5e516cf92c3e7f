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
// Core domain types: metric instances, problems, solutions and the
// objective f(S) = g(S) + lambda * div(S).
//

#ifndef MDMS_CORE_H_
#define MDMS_CORE_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace mdms {

class Utility;

// Malformed input: bad index, malformed file, inconsistent dimensions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parameters outside their admissible range (k > n, epsilon not in (0,1)...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Exhaustive enumeration refused because the instance is too large.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Index sets are kept sorted ascending without duplicates.
using IndexSet = std::vector<int>;
using IndexSpan = std::span<const int>;

// Sorts and deduplicates in place.
IndexSet Canonical(IndexSet s);

enum class Metric { kMatrix, kEuclidean, kCosine };

const char* MetricName(Metric m);

// A finite ground set V with a (pseudo)metric. The pairwise distance matrix
// is materialized on construction, so dist() is a table lookup. Immutable.
class Instance {
 public:
  // Dense symmetric matrix of nonnegative distances. Symmetry, zero diagonal
  // and nonnegativity are always checked (exactly); the O(n^3) triangle check
  // only runs when `check_triangle` is set.
  static Instance FromMatrix(Eigen::MatrixXd matrix, bool check_triangle = false);

  // One point per row, Euclidean distance.
  static Instance Euclidean(Eigen::MatrixXd points);

  // One vector per row, dist = 1 - <e_i, e_j>. Rows are normalized to unit
  // length when `normalize` is set.
  static Instance Cosine(Eigen::MatrixXd vectors, bool normalize = true);

  int size() const { return static_cast<int>(dist_.rows()); }
  Metric metric() const { return metric_; }

  double dist(int i, int j) const { return dist_(i, j); }
  const Eigen::MatrixXd& distances() const { return dist_; }

  // Point coordinates; empty (0 x 0) for matrix metrics.
  const Eigen::MatrixXd& points() const { return points_; }

  // max_{u,v} dist(u, v); 0 for n <= 1.
  double diameter() const { return diameter_; }

  // Lexicographically smallest pair (u < v) realizing the diameter.
  // Requires n >= 2.
  std::pair<int, int> DiametricalPair() const;

  // True iff dist(i,k) <= dist(i,j) + dist(j,k) + tol for all triples.
  bool SatisfiesTriangle(double tol = 1e-9) const;

  void CheckIndex(int i) const;
  void CheckIndices(IndexSpan s) const;

 private:
  Instance(Metric metric, Eigen::MatrixXd points, Eigen::MatrixXd dist);

  Metric metric_;
  Eigen::MatrixXd points_;
  Eigen::MatrixXd dist_;
  double diameter_ = 0.0;
  std::pair<int, int> diametrical_pair_{0, 0};
};

// Min pairwise distance of s; the diameter of V when |s| <= 1.
double Div(const Instance& instance, IndexSpan s);

// dist(v, S) = min_{u in S} dist(v, u). Unset optional means dist(v, {}),
// which is unbounded.
std::optional<double> DistToSet(const Instance& instance, int v, IndexSpan s);

enum class Schedule { kGeometric, kExhaustive };

const char* ScheduleName(Schedule s);

struct Problem {
  std::shared_ptr<const Instance> instance;
  std::shared_ptr<const Utility> utility;
  double lambda = 1.0;
  int k = 1;
  double epsilon = 0.1;
  Schedule schedule = Schedule::kGeometric;

  // Throws ParameterError unless k in [1, n], epsilon in (0, 1),
  // lambda >= 0 and the utility covers the instance.
  void Validate() const;
};

struct ObjectiveValue {
  double f = 0.0;
  double g = 0.0;
  double div = 0.0;
};

// f(S) = g(S) + lambda * div(S). One utility value query.
ObjectiveValue Objective(const Problem& problem, IndexSpan s);

struct Solution {
  IndexSet selected;
  double f_value = 0.0;
  double g_value = 0.0;
  double div_value = 0.0;
  std::optional<double> winning_threshold;
  std::uint64_t oracle_calls = 0;
  std::string algorithm;
  std::optional<std::uint64_t> seed;

  friend bool operator==(const Solution&, const Solution&) = default;
};

// Distance thresholds swept by the threshold algorithm, strictly increasing.
//   geometric:  (1+eps)^i * eps * d_max / 2 for all i >= 0 with
//               (1+eps)^i <= 2 / eps
//   exhaustive: distinct values of dist(u, v) / 2 and dist(u, v) over u != v
// Empty when d_max == 0.
std::vector<double> DistanceThresholds(const Instance& instance,
                                       Schedule schedule, double epsilon);

// Relative comparison used for objective values.
bool NearlyEqual(double a, double b, double rel_tol = 1e-9);

}  // namespace mdms

#endif  // MDMS_CORE_H_
