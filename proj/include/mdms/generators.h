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
// Instance families: synthetic Gaussian data, the greedy-failure instance,
// the non-submodularity counterexample, and the constructive reductions
// (clique, bounded-degree independent set via adjacency embedding, set
// family coverage).
//

#ifndef MDMS_GENERATORS_H_
#define MDMS_GENERATORS_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "mdms/core.h"
#include "mdms/utilities.h"

namespace mdms {

// Simple undirected graph. Edges are stored as (u, v) with u < v, sorted.
class Graph {
 public:
  // Throws InputError on self-loops, duplicate edges or bad endpoints.
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int size() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int degree(int v) const { return degree_[v]; }
  int max_degree() const { return max_degree_; }
  bool adjacent(int u, int v) const;

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> degree_;
  int max_degree_ = 0;
};

// Random simple graph: every pair (in lexicographic order) becomes an edge
// with probability p unless an endpoint already has max_degree neighbors.
Graph RandomBoundedDegreeGraph(int n, int max_degree, double p,
                               std::uint64_t seed);

struct GeneratedInstance {
  std::shared_ptr<const Instance> instance;
  std::shared_ptr<const Utility> utility;
  double lambda = 1.0;
  int k = 1;
  std::string family;
  std::map<std::string, double> params;
  std::optional<std::uint64_t> seed;

  Problem MakeProblem(double epsilon = 0.1,
                      Schedule schedule = Schedule::kGeometric) const;
};

struct GaussianOptions {
  double alpha = 0.95;
  double beta = 0.75;
  int k = 0;  // budget normalizer; 0 means n
};

// n points with i.i.d. N(0, 1) coordinates in R^dim (Euclidean metric) and
// weights w_i ~ U[0, 1], packaged with the budget-additive utility
// alpha * min{ sum w / k, beta } and lambda = 1 - alpha. Normals come from
// Box-Muller over mt19937_64, coordinates drawn row by row, then weights.
GeneratedInstance GenGaussian(int n, int dim, std::uint64_t seed,
                              const GaussianOptions& options = {});

// Greedy-failure instance: dist(0, 1) = 2 + 2 eps, every other pair 1 + eps,
// g(S) = |S|, lambda = 1. Requires n >= k >= 4 and 0 < eps < 1.
GeneratedInstance GenGreedyHard(int n, int k, double eps);

// Four collinear points a=0, b=1, c=2, d=2 with g == 0, or w(v) = 2 for the
// monotone variant. lambda = 1, k = 4.
GeneratedInstance GenCounterexample(bool monotone_variant);

// Distance 2 on edges, 1 on non-edges; w(v) = alpha / k; lambda = 1 - alpha.
GeneratedInstance GenCliqueReduction(const Graph& graph, double alpha, int k);

// Degree-normalized adjacency embedding, one row per node, n + m columns.
// A self-loop is added to every node; edges of the augmented graph are
// ordered lexicographically by (min endpoint, max endpoint), so the loop
// (v, v) sorts before every (v, w) with w > v. Entry (v, e) is
// sqrt(1 / (2 deg'(v))) when v is an endpoint of e, else 0.
Eigen::MatrixXd EmbedGraph(const Graph& graph);

// Euclidean instance on EmbedGraph rows; w(v) = alpha / k; lambda = 1 - alpha.
GeneratedInstance GenIndependentSetReduction(const Graph& graph, double alpha,
                                             int k);

// One point per set. With d = (1 - 1/e) * |union|, two sets are at distance
// 2d when they are disjoint and (if groups are given) in different groups,
// and at distance d otherwise. Coverage utility; lambda = 1 unless overridden.
GeneratedInstance GenCoverReduction(
    const std::vector<std::vector<int>>& family,
    const std::optional<std::vector<int>>& groups = std::nullopt,
    std::optional<double> lambda_override = std::nullopt);

}  // namespace mdms

#endif  // MDMS_GENERATORS_H_
