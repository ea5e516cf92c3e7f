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

#include "mdms/io.h"

#include <cmath>
#include <cstring>
#include <fstream>
#include <istream>
#include <sstream>

namespace mdms {

namespace {

// Runs fn, turning JSON library exceptions into InputError with context.
template <typename Fn>
auto Guarded(const std::string& what, Fn&& fn) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(what + ": " + e.what());
  }
}

Eigen::MatrixXd MatrixFromRows(const Json& rows, const char* field) {
  if (!rows.is_array()) throw InputError(std::string(field) + " must be an array of rows");
  const Eigen::Index n = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index dim = n == 0 ? 0 : static_cast<Eigen::Index>(rows[0].size());
  Eigen::MatrixXd m(n, dim);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Json& row = rows[i];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
      throw InputError(std::string(field) + ": row " + std::to_string(i) +
                       " has the wrong length");
    }
    for (Eigen::Index j = 0; j < dim; ++j) m(i, j) = row[j].get<double>();
  }
  return m;
}

Json RowsFromMatrix(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<double> Doubles(const Json& j, const char* field) {
  if (!j.contains(field)) throw InputError(std::string("missing field '") + field + "'");
  return j.at(field).get<std::vector<double>>();
}

void ExpectSize(std::size_t got, int n, const char* field) {
  if (static_cast<int>(got) != n) {
    throw InputError(std::string(field) + " has " + std::to_string(got) +
                     " entries, instance has " + std::to_string(n) + " points");
  }
}

}  // namespace

Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return Guarded(path, [&] { return Json::parse(in); });
}

void WriteJsonFile(const std::string& path, const Json& value) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << value.dump(1) << '\n';
}

Json InstanceToJson(const Instance& instance) {
  Json j;
  j["n"] = instance.size();
  j["metric"] = MetricName(instance.metric());
  if (instance.metric() == Metric::kMatrix) {
    j["matrix"] = RowsFromMatrix(instance.distances());
  } else {
    j["points"] = RowsFromMatrix(instance.points());
  }
  return j;
}

Instance InstanceFromJson(const Json& j, bool check_triangle) {
  return Guarded("instance", [&]() -> Instance {
    if (!j.is_object()) throw InputError("instance must be a JSON object");
    const int n = j.at("n").get<int>();
    const std::string metric = j.at("metric").get<std::string>();
    const bool has_points = j.contains("points");
    const bool has_matrix = j.contains("matrix");
    if (metric == "matrix") {
      if (!has_matrix || has_points) {
        throw InputError("matrix metric needs 'matrix' and no 'points'");
      }
      Eigen::MatrixXd m = MatrixFromRows(j["matrix"], "matrix");
      if (m.rows() != n) throw InputError("'n' does not match the matrix size");
      return Instance::FromMatrix(std::move(m), check_triangle);
    }
    if (metric != "euclidean" && metric != "cosine") {
      throw InputError("unknown metric '" + metric + "'");
    }
    if (!has_points || has_matrix) {
      throw InputError(metric + " metric needs 'points' and no 'matrix'");
    }
    Eigen::MatrixXd p = MatrixFromRows(j["points"], "points");
    if (p.rows() != n) throw InputError("'n' does not match the number of points");
    Instance inst = metric == "euclidean" ? Instance::Euclidean(std::move(p))
                                          : Instance::Cosine(std::move(p));
    if (check_triangle && !inst.SatisfiesTriangle()) {
      throw InputError("instance violates the triangle inequality");
    }
    return inst;
  });
}

Json UtilityToJson(const Utility& utility) {
  Json j;
  j["kind"] = UtilityKindName(utility.kind());
  switch (utility.kind()) {
    case UtilityKind::kLinear:
      j["weights"] = static_cast<const LinearUtility&>(utility).weights();
      break;
    case UtilityKind::kCoverage:
      j["sets"] = static_cast<const CoverageUtility&>(utility).family();
      break;
    case UtilityKind::kBudgetAdditive: {
      const auto& u = static_cast<const BudgetAdditiveUtility&>(utility);
      j["weights"] = u.weights();
      j["alpha"] = u.alpha();
      j["beta"] = u.beta();
      j["k"] = u.k();
      break;
    }
    case UtilityKind::kMarginSimilarity: {
      const auto& u = static_cast<const MarginSimilarityUtility&>(utility);
      j["uncertainty"] = u.uncertainty();
      j["alpha_s"] = u.alpha_s();
      j["beta_s"] = u.beta_s();
      if (u.dense()) {
        j["dense"] = true;
      } else {
        Json edges = Json::array();
        for (const auto& e : u.edges()) edges.push_back({e.i, e.j, e.s});
        j["edges"] = std::move(edges);
      }
      break;
    }
    case UtilityKind::kConstantZero:
      break;
    case UtilityKind::kTabulated:
      j["values"] = static_cast<const TabulatedUtility&>(utility).values();
      break;
  }
  return j;
}

std::shared_ptr<const Utility> UtilityFromJson(
    const Json& j, int n, std::shared_ptr<const Instance> instance,
    std::optional<int> budget_k) {
  return Guarded("utility", [&]() -> std::shared_ptr<const Utility> {
    if (!j.is_object()) throw InputError("utility must be a JSON object");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "linear") {
      auto w = Doubles(j, "weights");
      ExpectSize(w.size(), n, "weights");
      return std::make_shared<LinearUtility>(std::move(w));
    }
    if (kind == "coverage") {
      auto sets = j.at("sets").get<std::vector<std::vector<int>>>();
      ExpectSize(sets.size(), n, "sets");
      return std::make_shared<CoverageUtility>(std::move(sets));
    }
    if (kind == "budget_additive") {
      auto w = Doubles(j, "weights");
      ExpectSize(w.size(), n, "weights");
      std::optional<int> k = budget_k;
      if (j.contains("k") && !j["k"].is_null()) k = j["k"].get<int>();
      if (!k) throw InputError("budget_additive utility needs 'k'");
      return std::make_shared<BudgetAdditiveUtility>(
          std::move(w), j.at("alpha").get<double>(), j.at("beta").get<double>(), *k);
    }
    if (kind == "margin_similarity") {
      auto u = Doubles(j, "uncertainty");
      ExpectSize(u.size(), n, "uncertainty");
      const double alpha_s = j.at("alpha_s").get<double>();
      const double beta_s = j.at("beta_s").get<double>();
      if (j.value("dense", false)) {
        if (!instance) throw InputError("dense margin_similarity needs an instance");
        return std::make_shared<MarginSimilarityUtility>(std::move(u), instance,
                                                         alpha_s, beta_s);
      }
      return std::make_shared<MarginSimilarityUtility>(
          std::move(u), EdgesFromJson(j, instance.get()), alpha_s, beta_s);
    }
    if (kind == "zero") return std::make_shared<ZeroUtility>(n);
    if (kind == "tabulated") {
      return std::make_shared<TabulatedUtility>(n, Doubles(j, "values"));
    }
    throw InputError("unknown utility kind '" + kind + "'");
  });
}

Json ProvenanceToJson(const GeneratedInstance& generated) {
  Json j;
  j["family"] = generated.family;
  j["params"] = generated.params;
  j["seed"] = generated.seed ? Json(*generated.seed) : Json(nullptr);
  j["lambda"] = generated.lambda;
  j["k"] = generated.k;
  return j;
}

Graph GraphFromJson(const Json& j) {
  return Guarded("graph", [&] {
    return Graph(j.at("n").get<int>(),
                 j.at("edges").get<std::vector<std::pair<int, int>>>());
  });
}

Json GraphToJson(const Graph& graph) {
  return Json{{"n", graph.size()}, {"edges", graph.edges()}};
}

std::vector<SimilarityEdge> EdgesFromJson(const Json& j,
                                          const Instance* similarity) {
  return Guarded("edges", [&] {
    std::vector<SimilarityEdge> edges;
    for (const Json& e : j.at("edges")) {
      if (!e.is_array() || e.size() < 2 || e.size() > 3) {
        throw InputError("edges must be [i, j] or [i, j, s]");
      }
      SimilarityEdge edge{e[0].get<int>(), e[1].get<int>(), 0.0};
      if (e.size() == 3) {
        edge.s = e[2].get<double>();
      } else {
        if (!similarity) throw InputError("edge without similarity and no instance");
        similarity->CheckIndex(edge.i);
        similarity->CheckIndex(edge.j);
        edge.s = 1.0 - similarity->dist(edge.i, edge.j);
      }
      edges.push_back(edge);
    }
    return edges;
  });
}

EmbeddingRecords ReadEmbeddings(std::istream& in) {
  EmbeddingRecords out;
  std::vector<std::vector<double>> rows;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = "line " + std::to_string(line_no);
    Guarded(where, [&] {
      const Json rec = Json::parse(line);
      auto e = rec.at("embedding").get<std::vector<double>>();
      const double u = rec.at("uncertainty").get<double>();
      if (e.empty()) throw InputError(where + ": empty embedding");
      if (!rows.empty() && e.size() != rows.front().size()) {
        throw InputError(where + ": embedding has dimension " +
                         std::to_string(e.size()) + ", expected " +
                         std::to_string(rows.front().size()));
      }
      rows.push_back(std::move(e));
      out.uncertainty.push_back(u);
      return 0;
    });
  }
  const Eigen::Index n = static_cast<Eigen::Index>(rows.size());
  const Eigen::Index dim = n == 0 ? 0 : static_cast<Eigen::Index>(rows[0].size());
  out.embeddings.resize(n, dim);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index c = 0; c < dim; ++c) out.embeddings(i, c) = rows[i][c];
    if (std::abs(out.embeddings.row(i).norm() - 1.0) > 1e-6) {
      out.off_unit.push_back(static_cast<int>(i));
    }
  }
  return out;
}

std::uint64_t InstanceHash(const Instance& instance) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < len; ++i) {
      h ^= p[i];
      h *= 0x100000001b3ULL;
    }
  };
  const int metric = static_cast<int>(instance.metric());
  const int n = instance.size();
  mix(&metric, sizeof metric);
  mix(&n, sizeof n);
  mix(instance.distances().data(),
      sizeof(double) * static_cast<std::size_t>(instance.distances().size()));
  return h;
}

}  // namespace mdms
