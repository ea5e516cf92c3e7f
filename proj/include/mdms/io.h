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
// File formats.
//
// Instance (JSON):
//   { "n": int, "metric": "euclidean" | "cosine" | "matrix",
//     "points": [[float]]      -- euclidean / cosine
//     "matrix": [[float]]      -- matrix
//     "provenance": {...} }    -- optional, written by `gen`
//
// Utility (JSON), by "kind":
//   linear            { "weights": [float] }
//   coverage          { "sets": [[int]] }
//   budget_additive   { "weights": [float], "alpha": f, "beta": f, "k": int? }
//                     (k absent: the solve-time cardinality is used)
//   margin_similarity { "uncertainty": [float], "alpha_s": f, "beta_s": f,
//                       "edges": [[i, j, s]] }  or  "dense": true, where
//                     s(i, j) = 1 - dist(i, j) on the instance. The pair sum
//                     counts each edge inside S twice (ordered pairs).
//   zero              {}
//   tabulated         { "values": [float] }  (2^n entries, bit i = point i)
//
// Embeddings (JSON lines): one object per point,
//   { "embedding": [float], "uncertainty": float }
//

#ifndef MDMS_IO_H_
#define MDMS_IO_H_

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mdms/core.h"
#include "mdms/generators.h"
#include "mdms/utilities.h"

namespace mdms {

using Json = nlohmann::json;

Json ReadJsonFile(const std::string& path);
void WriteJsonFile(const std::string& path, const Json& value);

Json InstanceToJson(const Instance& instance);
Instance InstanceFromJson(const Json& j, bool check_triangle = false);

Json UtilityToJson(const Utility& utility);
// `instance` backs margin_similarity "dense" mode; `budget_k` fills in a
// missing budget-additive normalizer.
std::shared_ptr<const Utility> UtilityFromJson(
    const Json& j, int n, std::shared_ptr<const Instance> instance = nullptr,
    std::optional<int> budget_k = std::nullopt);

// { "family", "params", "seed", "lambda", "k" }
Json ProvenanceToJson(const GeneratedInstance& generated);

// { "n": int, "edges": [[u, v]] }
Graph GraphFromJson(const Json& j);
Json GraphToJson(const Graph& graph);

// { "edges": [[i, j]] or [[i, j, s]] }. Missing s is read from `similarity`
// as 1 - dist(i, j).
std::vector<SimilarityEdge> EdgesFromJson(const Json& j,
                                          const Instance* similarity);

struct EmbeddingRecords {
  Eigen::MatrixXd embeddings;  // one row per record, as read
  std::vector<double> uncertainty;
  // Records whose norm differed from 1 by more than 1e-6.
  std::vector<int> off_unit;
};

// Throws InputError (with the line number) on malformed records or
// inconsistent dimensions.
EmbeddingRecords ReadEmbeddings(std::istream& in);

// FNV-1a over the metric tag, n and the distance matrix bytes.
std::uint64_t InstanceHash(const Instance& instance);

}  // namespace mdms

#endif  // MDMS_IO_H_
