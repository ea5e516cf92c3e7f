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

#include <algorithm>
#include <cmath>
#include <limits>

#include "mdms/utilities.h"

namespace mdms {

IndexSet Canonical(IndexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

const char* MetricName(Metric m) {
  switch (m) {
    case Metric::kMatrix:
      return "matrix";
    case Metric::kEuclidean:
      return "euclidean";
    case Metric::kCosine:
      return "cosine";
  }
  return "?";
}

const char* ScheduleName(Schedule s) {
  return s == Schedule::kGeometric ? "geometric" : "exhaustive";
}

Instance::Instance(Metric metric, Eigen::MatrixXd points, Eigen::MatrixXd dist)
    : metric_(metric), points_(std::move(points)), dist_(std::move(dist)) {
  const int n = size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (dist_(i, j) > diameter_) {
        diameter_ = dist_(i, j);
        diametrical_pair_ = {i, j};
      }
    }
  }
  if (n >= 2 && diameter_ == 0.0) diametrical_pair_ = {0, 1};
}

Instance Instance::FromMatrix(Eigen::MatrixXd matrix, bool check_triangle) {
  if (matrix.rows() != matrix.cols()) {
    throw InputError("distance matrix must be square");
  }
  const Eigen::Index n = matrix.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    if (matrix(i, i) != 0.0) {
      throw InputError("distance matrix must have a zero diagonal");
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      const double d = matrix(i, j);
      if (!std::isfinite(d) || d < 0.0) {
        throw InputError("distances must be finite and nonnegative");
      }
      if (d != matrix(j, i)) {
        throw InputError("distance matrix must be symmetric");
      }
    }
  }
  Instance inst(Metric::kMatrix, Eigen::MatrixXd(), std::move(matrix));
  if (check_triangle && !inst.SatisfiesTriangle()) {
    throw InputError("distance matrix violates the triangle inequality");
  }
  return inst;
}

Instance Instance::Euclidean(Eigen::MatrixXd points) {
  if (!points.allFinite()) throw InputError("points must be finite");
  const Eigen::Index n = points.rows();
  Eigen::MatrixXd dist = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double d = (points.row(i) - points.row(j)).norm();
      dist(i, j) = d;
      dist(j, i) = d;
    }
  }
  return Instance(Metric::kEuclidean, std::move(points), std::move(dist));
}

Instance Instance::Cosine(Eigen::MatrixXd vectors, bool normalize) {
  if (!vectors.allFinite()) throw InputError("vectors must be finite");
  if (normalize) {
    for (Eigen::Index i = 0; i < vectors.rows(); ++i) {
      const double norm = vectors.row(i).norm();
      if (norm == 0.0) throw InputError("cannot normalize a zero vector");
      vectors.row(i) /= norm;
    }
  }
  const Eigen::Index n = vectors.rows();
  const Eigen::MatrixXd gram = vectors * vectors.transpose();
  Eigen::MatrixXd dist = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      // Rounding can push 1 - <e_i, e_j> slightly below zero.
      const double d = std::max(0.0, 1.0 - gram(i, j));
      dist(i, j) = d;
      dist(j, i) = d;
    }
  }
  return Instance(Metric::kCosine, std::move(vectors), std::move(dist));
}

std::pair<int, int> Instance::DiametricalPair() const {
  if (size() < 2) throw InputError("diametrical pair needs at least two points");
  return diametrical_pair_;
}

bool Instance::SatisfiesTriangle(double tol) const {
  const int n = size();
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const double dij = dist_(i, j);
      for (int k = 0; k < n; ++k) {
        if (dist_(i, k) > dij + dist_(j, k) + tol) return false;
      }
    }
  }
  return true;
}

void Instance::CheckIndex(int i) const {
  if (i < 0 || i >= size()) {
    throw InputError("index " + std::to_string(i) + " out of range [0, " +
                     std::to_string(size()) + ")");
  }
}

void Instance::CheckIndices(IndexSpan s) const {
  for (int i : s) CheckIndex(i);
}

double Div(const Instance& instance, IndexSpan s) {
  instance.CheckIndices(s);
  if (s.size() <= 1) return instance.diameter();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      best = std::min(best, instance.dist(s[a], s[b]));
    }
  }
  return best;
}

std::optional<double> DistToSet(const Instance& instance, int v, IndexSpan s) {
  instance.CheckIndex(v);
  instance.CheckIndices(s);
  if (s.empty()) return std::nullopt;
  double best = instance.dist(v, s[0]);
  for (int u : s.subspan(1)) best = std::min(best, instance.dist(v, u));
  return best;
}

void Problem::Validate() const {
  if (!instance || !utility) throw ParameterError("problem is missing data");
  const int n = instance->size();
  if (n == 0) throw ParameterError("instance is empty");
  if (utility->size() != n) {
    throw ParameterError("utility defined over " +
                         std::to_string(utility->size()) +
                         " points, instance has " + std::to_string(n));
  }
  if (k < 1 || k > n) {
    throw ParameterError("k must lie in [1, n]; got k = " + std::to_string(k));
  }
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw ParameterError("epsilon must lie in (0, 1)");
  }
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw ParameterError("lambda must be finite and nonnegative");
  }
}

ObjectiveValue Objective(const Problem& problem, IndexSpan s) {
  ObjectiveValue out;
  out.div = Div(*problem.instance, s);
  out.g = problem.utility->Value(s);
  out.f = out.g + problem.lambda * out.div;
  return out;
}

std::vector<double> DistanceThresholds(const Instance& instance,
                                       Schedule schedule, double epsilon) {
  std::vector<double> out;
  const double d_max = instance.diameter();
  if (instance.size() < 2 || d_max == 0.0) return out;

  if (schedule == Schedule::kGeometric) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
      throw ParameterError("epsilon must lie in (0, 1)");
    }
    const double base = epsilon * d_max / 2.0;
    const double limit = 2.0 / epsilon;
    for (int i = 0;; ++i) {
      const double scale = std::pow(1.0 + epsilon, i);
      if (scale > limit) break;
      out.push_back(std::min(scale * base, d_max));
    }
    return out;
  }

  const int n = instance.size();
  // Full distances too: above d_max / 2 the halves run out, and the greedy
  // only changes its decisions at distance values anyway.
  out.reserve(static_cast<std::size_t>(n) * (n - 1));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      out.push_back(instance.dist(i, j) / 2.0);
      out.push_back(instance.dist(i, j));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool NearlyEqual(double a, double b, double rel_tol) {
  const double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= rel_tol * scale;
}

}  // namespace mdms
