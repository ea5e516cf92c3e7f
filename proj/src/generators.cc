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

#include "mdms/generators.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mdms/random.h"

namespace mdms {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), degree_(n < 0 ? 0 : n, 0) {
  if (n < 0) throw InputError("graph size must be nonnegative");
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw InputError("edge endpoint out of range");
    }
    if (u == v) throw InputError("graph must not contain self-loops");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw InputError("graph must not contain duplicate edges");
  }
  for (const auto& [u, v] : edges) {
    ++degree_[u];
    ++degree_[v];
  }
  for (int d : degree_) max_degree_ = std::max(max_degree_, d);
  edges_ = std::move(edges);
}

bool Graph::adjacent(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

Graph RandomBoundedDegreeGraph(int n, int max_degree, double p,
                               std::uint64_t seed) {
  Rng rng(seed);
  std::vector<int> degree(n, 0);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const bool pick = rng.Uniform() < p;
      if (pick && degree[u] < max_degree && degree[v] < max_degree) {
        edges.emplace_back(u, v);
        ++degree[u];
        ++degree[v];
      }
    }
  }
  return Graph(n, std::move(edges));
}

Problem GeneratedInstance::MakeProblem(double epsilon, Schedule schedule) const {
  Problem p;
  p.instance = instance;
  p.utility = utility;
  p.lambda = lambda;
  p.k = k;
  p.epsilon = epsilon;
  p.schedule = schedule;
  return p;
}

GeneratedInstance GenGaussian(int n, int dim, std::uint64_t seed,
                              const GaussianOptions& options) {
  if (n < 1 || dim < 1) throw ParameterError("gaussian: n and dim must be >= 1");
  Rng rng(seed);
  Eigen::MatrixXd points(n, dim);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < dim; ++j) points(i, j) = rng.Normal();
  }
  std::vector<double> weights(n);
  for (double& w : weights) w = rng.Uniform();

  const int k = options.k > 0 ? options.k : n;
  GeneratedInstance out;
  out.instance = std::make_shared<Instance>(Instance::Euclidean(std::move(points)));
  out.utility = std::make_shared<BudgetAdditiveUtility>(
      std::move(weights), options.alpha, options.beta, k);
  out.lambda = 1.0 - options.alpha;
  out.k = std::min(k, n);
  out.family = "gaussian";
  out.params = {{"n", n},
                {"dim", dim},
                {"alpha", options.alpha},
                {"beta", options.beta},
                {"k", k}};
  out.seed = seed;
  return out;
}

GeneratedInstance GenGreedyHard(int n, int k, double eps) {
  if (!(n >= k && k >= 4)) throw ParameterError("greedy-hard: need n >= k >= 4");
  if (!(eps > 0.0 && eps < 1.0)) throw ParameterError("greedy-hard: need 0 < eps < 1");
  Eigen::MatrixXd m = Eigen::MatrixXd::Constant(n, n, 1.0 + eps);
  m.diagonal().setZero();
  m(0, 1) = m(1, 0) = 2.0 + 2.0 * eps;

  GeneratedInstance out;
  out.instance = std::make_shared<Instance>(Instance::FromMatrix(std::move(m), n <= 512));
  out.utility = std::make_shared<LinearUtility>(std::vector<double>(n, 1.0));
  out.lambda = 1.0;
  out.k = k;
  out.family = "greedy-hard";
  out.params = {{"n", n}, {"k", k}, {"eps", eps}};
  return out;
}

GeneratedInstance GenCounterexample(bool monotone_variant) {
  Eigen::MatrixXd points(4, 1);
  points << 0.0, 1.0, 2.0, 2.0;
  GeneratedInstance out;
  out.instance = std::make_shared<Instance>(Instance::Euclidean(std::move(points)));
  if (monotone_variant) {
    out.utility = std::make_shared<LinearUtility>(std::vector<double>(4, 2.0));
  } else {
    out.utility = std::make_shared<ZeroUtility>(4);
  }
  out.lambda = 1.0;
  out.k = 4;
  out.family = monotone_variant ? "counterexample-monotone" : "counterexample";
  out.params = {{"monotone", monotone_variant ? 1.0 : 0.0}};
  return out;
}

namespace {

void CheckAlpha(double alpha, int k, int n) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw ParameterError("alpha must lie in (0, 1]");
  if (k < 1 || k > n) throw ParameterError("k must lie in [1, n]");
}

}  // namespace

GeneratedInstance GenCliqueReduction(const Graph& graph, double alpha, int k) {
  const int n = graph.size();
  CheckAlpha(alpha, k, n);
  Eigen::MatrixXd m = Eigen::MatrixXd::Ones(n, n);
  m.diagonal().setZero();
  for (const auto& [u, v] : graph.edges()) m(u, v) = m(v, u) = 2.0;

  GeneratedInstance out;
  out.instance = std::make_shared<Instance>(Instance::FromMatrix(std::move(m), n <= 512));
  out.utility = std::make_shared<LinearUtility>(std::vector<double>(n, alpha / k));
  out.lambda = 1.0 - alpha;
  out.k = k;
  out.family = "clique";
  out.params = {{"n", n}, {"edges", graph.edges().size()}, {"alpha", alpha}, {"k", k}};
  return out;
}

Eigen::MatrixXd EmbedGraph(const Graph& graph) {
  const int n = graph.size();
  std::vector<std::pair<int, int>> augmented = graph.edges();
  for (int v = 0; v < n; ++v) augmented.emplace_back(v, v);
  std::sort(augmented.begin(), augmented.end());

  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, static_cast<Eigen::Index>(augmented.size()));
  for (Eigen::Index e = 0; e < h.cols(); ++e) {
    const auto [u, v] = augmented[e];
    h(u, e) = std::sqrt(1.0 / (2.0 * (graph.degree(u) + 1)));
    h(v, e) = std::sqrt(1.0 / (2.0 * (graph.degree(v) + 1)));
  }
  return h;
}

GeneratedInstance GenIndependentSetReduction(const Graph& graph, double alpha,
                                             int k) {
  const int n = graph.size();
  CheckAlpha(alpha, k, n);
  GeneratedInstance out;
  out.instance = std::make_shared<Instance>(Instance::Euclidean(EmbedGraph(graph)));
  out.utility = std::make_shared<LinearUtility>(std::vector<double>(n, alpha / k));
  out.lambda = 1.0 - alpha;
  out.k = k;
  out.family = "independent-set";
  out.params = {{"n", n},
                {"edges", graph.edges().size()},
                {"max_degree", graph.max_degree()},
                {"alpha", alpha},
                {"k", k}};
  return out;
}

GeneratedInstance GenCoverReduction(const std::vector<std::vector<int>>& family,
                                    const std::optional<std::vector<int>>& groups,
                                    std::optional<double> lambda_override) {
  if (family.empty()) throw InputError("cover reduction: empty set family");
  const int n = static_cast<int>(family.size());
  if (groups && static_cast<int>(groups->size()) != n) {
    throw InputError("cover reduction: one group id per set required");
  }
  std::vector<std::vector<int>> sets = family;
  std::vector<int> universe;
  for (auto& s : sets) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    universe.insert(universe.end(), s.begin(), s.end());
  }
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  const double unit = (1.0 - 1.0 / std::numbers::e) * static_cast<double>(universe.size());

  auto disjoint = [](const std::vector<int>& a, const std::vector<int>& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
      if (*i == *j) return false;
      if (*i < *j) ++i; else ++j;
    }
    return true;
  };

  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const bool far = disjoint(sets[i], sets[j]) && (!groups || (*groups)[i] != (*groups)[j]);
      m(i, j) = m(j, i) = far ? 2.0 * unit : unit;
    }
  }

  GeneratedInstance out;
  out.instance = std::make_shared<Instance>(Instance::FromMatrix(std::move(m), n <= 512));
  out.utility = std::make_shared<CoverageUtility>(family);
  out.lambda = lambda_override.value_or(1.0);
  out.k = n;
  out.family = "cover";
  out.params = {{"sets", n},
                {"universe", universe.size()},
                {"unit_distance", unit},
                {"grouped", groups ? 1.0 : 0.0}};
  return out;
}

}  // namespace mdms
