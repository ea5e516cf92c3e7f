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

#include "mdms/utilities.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

#include "mdms/random.h"

namespace mdms {

const char* UtilityKindName(UtilityKind kind) {
  switch (kind) {
    case UtilityKind::kLinear:
      return "linear";
    case UtilityKind::kCoverage:
      return "coverage";
    case UtilityKind::kBudgetAdditive:
      return "budget_additive";
    case UtilityKind::kMarginSimilarity:
      return "margin_similarity";
    case UtilityKind::kConstantZero:
      return "zero";
    case UtilityKind::kTabulated:
      return "tabulated";
  }
  return "?";
}

double UtilityState::Gain(int v) {
  owner_.Count(1);
  return DoGain(v);
}

void Utility::CheckSet(IndexSpan s) const {
  bool sorted = true;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= n_) {
      throw InputError("index " + std::to_string(s[i]) + " out of range [0, " +
                       std::to_string(n_) + ")");
    }
    if (i > 0 && s[i] <= s[i - 1]) sorted = false;
  }
  if (!sorted) {
    IndexSet copy(s.begin(), s.end());
    std::sort(copy.begin(), copy.end());
    if (std::adjacent_find(copy.begin(), copy.end()) != copy.end()) {
      throw InputError("index set contains duplicates");
    }
  }
}

double Utility::Value(IndexSpan s) const {
  CheckSet(s);
  Count(1);
  return DoValue(s);
}

double Utility::Gain(int v, IndexSpan s) const {
  CheckSet(s);
  if (v < 0 || v >= n_) throw InputError("index " + std::to_string(v) + " out of range");
  if (std::find(s.begin(), s.end(), v) != s.end()) {
    throw InputError("marginal gain of an element already in the set");
  }
  auto state = DoStart();
  for (int u : s) state->Add(u);
  return state->Gain(v);
}

double Utility::GainByDifference(int v, IndexSpan s) const {
  if (std::find(s.begin(), s.end(), v) != s.end()) {
    throw InputError("marginal gain of an element already in the set");
  }
  IndexSet with(s.begin(), s.end());
  with.push_back(v);
  std::sort(with.begin(), with.end());
  const double after = Value(with);
  return after - Value(s);
}

std::unique_ptr<UtilityState> Utility::Start() const { return DoStart(); }

// ---------------------------------------------------------------------------
// Linear

namespace {

class LinearState final : public UtilityState {
 public:
  explicit LinearState(const LinearUtility& u) : UtilityState(u), u_(u) {}
  void Add(int) override {}

 private:
  double DoGain(int v) const override { return u_.weights()[v]; }
  const LinearUtility& u_;
};

}  // namespace

LinearUtility::LinearUtility(std::vector<double> weights)
    : Utility(static_cast<int>(weights.size()), true, true),
      weights_(std::move(weights)) {
  for (double w : weights_) {
    if (!std::isfinite(w) || w < 0.0) {
      throw InputError("linear weights must be finite and nonnegative");
    }
  }
}

double LinearUtility::DoValue(IndexSpan s) const {
  double total = 0.0;
  for (int v : s) total += weights_[v];
  return total;
}

std::unique_ptr<UtilityState> LinearUtility::DoStart() const {
  return std::make_unique<LinearState>(*this);
}

// ---------------------------------------------------------------------------
// Coverage

namespace {

class CoverageState final : public UtilityState {
 public:
  CoverageState(const CoverageUtility& u, const std::vector<std::vector<int>>& dense)
      : UtilityState(u), dense_(dense), covered_(u.universe_size(), 0) {}

  void Add(int v) override {
    for (int e : dense_[v]) covered_[e] = 1;
  }

 private:
  double DoGain(int v) const override {
    int fresh = 0;
    for (int e : dense_[v]) fresh += covered_[e] ? 0 : 1;
    return fresh;
  }

  const std::vector<std::vector<int>>& dense_;
  std::vector<char> covered_;
};

}  // namespace

CoverageUtility::CoverageUtility(std::vector<std::vector<int>> family)
    : Utility(static_cast<int>(family.size()), true, true),
      family_(std::move(family)) {
  std::map<int, int> ids;
  for (const auto& set : family_) {
    for (int e : set) ids.emplace(e, 0);
  }
  for (auto& [element, id] : ids) id = universe_++;
  dense_.reserve(family_.size());
  for (const auto& set : family_) {
    std::vector<int> mapped;
    mapped.reserve(set.size());
    for (int e : set) mapped.push_back(ids[e]);
    std::sort(mapped.begin(), mapped.end());
    mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());
    dense_.push_back(std::move(mapped));
  }
}

double CoverageUtility::DoValue(IndexSpan s) const {
  std::vector<char> covered(universe_, 0);
  int count = 0;
  for (int v : s) {
    for (int e : dense_[v]) {
      if (!covered[e]) {
        covered[e] = 1;
        ++count;
      }
    }
  }
  return count;
}

std::unique_ptr<UtilityState> CoverageUtility::DoStart() const {
  return std::make_unique<CoverageState>(*this, dense_);
}

// ---------------------------------------------------------------------------
// Budget-additive

namespace {

class BudgetAdditiveState final : public UtilityState {
 public:
  explicit BudgetAdditiveState(const BudgetAdditiveUtility& u)
      : UtilityState(u), u_(u) {}

  void Add(int v) override { total_ += u_.weights()[v]; }

 private:
  double DoGain(int v) const override {
    return u_.Capped(total_ + u_.weights()[v]) - u_.Capped(total_);
  }

  const BudgetAdditiveUtility& u_;
  double total_ = 0.0;
};

}  // namespace

BudgetAdditiveUtility::BudgetAdditiveUtility(std::vector<double> weights,
                                             double alpha, double beta, int k)
    : Utility(static_cast<int>(weights.size()), true, true),
      weights_(std::move(weights)),
      alpha_(alpha),
      beta_(beta),
      k_(k) {
  for (double w : weights_) {
    if (!(w >= 0.0 && w <= 1.0)) {
      throw InputError("budget-additive weights must lie in [0, 1]");
    }
  }
  if (!(alpha >= 0.0 && alpha <= 1.0) || !(beta >= 0.0 && beta <= 1.0)) {
    throw InputError("budget-additive alpha and beta must lie in [0, 1]");
  }
  if (k < 1) throw InputError("budget-additive normalizer k must be >= 1");
}

double BudgetAdditiveUtility::Capped(double total) const {
  return alpha_ * std::min(total / k_, beta_);
}

double BudgetAdditiveUtility::DoValue(IndexSpan s) const {
  double total = 0.0;
  for (int v : s) total += weights_[v];
  return Capped(total);
}

std::unique_ptr<UtilityState> BudgetAdditiveUtility::DoStart() const {
  return std::make_unique<BudgetAdditiveState>(*this);
}

// ---------------------------------------------------------------------------
// Margin + pairwise similarity

namespace {

class MarginSimilarityState final : public UtilityState {
 public:
  explicit MarginSimilarityState(const MarginSimilarityUtility& u)
      : UtilityState(u), u_(u), similarity_to_set_(u.size(), 0.0) {}

  void Add(int v) override {
    u_.ForEachNeighbor(v, [&](int j, double s) { similarity_to_set_[j] += s; });
  }

 private:
  double DoGain(int v) const override {
    return u_.alpha_s() * u_.uncertainty()[v] -
           2.0 * u_.beta_s() * similarity_to_set_[v];
  }

  const MarginSimilarityUtility& u_;
  std::vector<double> similarity_to_set_;
};

void CheckMarginParams(const std::vector<double>& u, double alpha_s,
                       double beta_s) {
  for (double x : u) {
    if (!(x >= 0.0 && x <= 2.0)) {
      throw InputError("uncertainty scores must lie in [0, 2]");
    }
  }
  if (!(alpha_s >= 0.0) || !(beta_s >= 0.0) || !std::isfinite(alpha_s) ||
      !std::isfinite(beta_s)) {
    throw InputError("alpha_s and beta_s must be finite and nonnegative");
  }
}

}  // namespace

MarginSimilarityUtility::MarginSimilarityUtility(
    std::vector<double> uncertainty, std::vector<SimilarityEdge> edges,
    double alpha_s, double beta_s)
    : Utility(static_cast<int>(uncertainty.size()), false, true),
      uncertainty_(std::move(uncertainty)),
      adjacency_(uncertainty_.size()),
      alpha_s_(alpha_s),
      beta_s_(beta_s) {
  CheckMarginParams(uncertainty_, alpha_s, beta_s);
  const int n = size();
  for (const auto& e : edges) {
    if (e.i < 0 || e.i >= n || e.j < 0 || e.j >= n) {
      throw InputError("similarity edge endpoint out of range");
    }
    if (e.i == e.j) throw InputError("similarity edges cannot be self-loops");
    if (!(e.s >= -1.0 && e.s <= 1.0)) {
      throw InputError("similarity values must lie in [-1, 1]");
    }
    for (const auto& [j, s] : adjacency_[e.i]) {
      if (j == e.j) throw InputError("duplicate similarity edge");
    }
    adjacency_[e.i].emplace_back(e.j, e.s);
    adjacency_[e.j].emplace_back(e.i, e.s);
  }
  for (auto& row : adjacency_) std::sort(row.begin(), row.end());
}

MarginSimilarityUtility::MarginSimilarityUtility(
    std::vector<double> uncertainty,
    std::shared_ptr<const Instance> dense_similarity, double alpha_s,
    double beta_s)
    : Utility(static_cast<int>(uncertainty.size()), false, true),
      uncertainty_(std::move(uncertainty)),
      dense_(std::move(dense_similarity)),
      alpha_s_(alpha_s),
      beta_s_(beta_s) {
  CheckMarginParams(uncertainty_, alpha_s, beta_s);
  if (!dense_ || dense_->size() != size()) {
    throw InputError("dense similarity instance does not match the scores");
  }
}

std::vector<SimilarityEdge> MarginSimilarityUtility::edges() const {
  std::vector<SimilarityEdge> out;
  for (int i = 0; i < static_cast<int>(adjacency_.size()); ++i) {
    for (const auto& [j, s] : adjacency_[i]) {
      if (i < j) out.push_back({i, j, s});
    }
  }
  return out;
}

double MarginSimilarityUtility::DoValue(IndexSpan s) const {
  std::vector<char> in(size(), 0);
  for (int v : s) in[v] = 1;
  double margin = 0.0;
  double similarity = 0.0;
  for (int v : s) {
    margin += uncertainty_[v];
    ForEachNeighbor(v, [&](int j, double sim) {
      if (in[j]) similarity += sim;
    });
  }
  return alpha_s_ * margin - beta_s_ * similarity;
}

std::unique_ptr<UtilityState> MarginSimilarityUtility::DoStart() const {
  return std::make_unique<MarginSimilarityState>(*this);
}

// ---------------------------------------------------------------------------
// Zero and tabulated

namespace {

class ZeroState final : public UtilityState {
 public:
  explicit ZeroState(const Utility& u) : UtilityState(u) {}
  void Add(int) override {}

 private:
  double DoGain(int) const override { return 0.0; }
};

class TabulatedState final : public UtilityState {
 public:
  explicit TabulatedState(const TabulatedUtility& u) : UtilityState(u), u_(u) {}
  void Add(int v) override { mask_ |= 1u << v; }

 private:
  double DoGain(int v) const override {
    return u_.values()[mask_ | (1u << v)] - u_.values()[mask_];
  }

  const TabulatedUtility& u_;
  std::uint32_t mask_ = 0;
};

}  // namespace

std::unique_ptr<UtilityState> ZeroUtility::DoStart() const {
  return std::make_unique<ZeroState>(*this);
}

TabulatedUtility::TabulatedUtility(int n, std::vector<double> values)
    : Utility(n, false, false), values_(std::move(values)) {
  if (n < 0 || n > kMaxPoints) {
    throw InputError("tabulated utilities support at most 20 points");
  }
  if (values_.size() != (std::size_t{1} << n)) {
    throw InputError("tabulated utility needs 2^n values");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw InputError("tabulated values must be finite");
  }
}

std::uint32_t TabulatedUtility::Mask(IndexSpan s) {
  std::uint32_t mask = 0;
  for (int v : s) mask |= 1u << v;
  return mask;
}

double TabulatedUtility::DoValue(IndexSpan s) const { return values_[Mask(s)]; }

std::unique_ptr<UtilityState> TabulatedUtility::DoStart() const {
  return std::make_unique<TabulatedState>(*this);
}

std::shared_ptr<TabulatedUtility> TabulateObjective(const Problem& problem) {
  const int n = problem.instance->size();
  if (n > TabulatedUtility::kMaxPoints) {
    throw SizeGuardError("tabulation supports at most 20 points");
  }
  std::vector<double> values(std::size_t{1} << n);
  IndexSet members;
  for (std::uint32_t mask = 0; mask < values.size(); ++mask) {
    members.clear();
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) members.push_back(i);
    }
    values[mask] = Objective(problem, members).f;
  }
  return std::make_shared<TabulatedUtility>(n, std::move(values));
}

// ---------------------------------------------------------------------------
// Property checks

namespace {

IndexSet MaskToSet(std::uint32_t mask, int n) {
  IndexSet out;
  for (int i = 0; i < n; ++i) {
    if (mask & (1u << i)) out.push_back(i);
  }
  return out;
}

bool Below(double a, double b, double tol) {
  return a < b - tol * std::max({1.0, std::abs(a), std::abs(b)});
}

class Recorder {
 public:
  Recorder(PropertyReport& report, std::size_t cap) : report_(report), cap_(cap) {}

  void Monotonicity(IndexSet s, int x, double gain) {
    ++report_.monotonicity_violations;
    Push({PropertyViolation::Type::kMonotonicity, s, s, x, gain, 0.0});
  }
  void Submodularity(IndexSet s, IndexSet t, int x, double gs, double gt) {
    ++report_.submodularity_violations;
    Push({PropertyViolation::Type::kSubmodularity, std::move(s), std::move(t),
          x, gs, gt});
  }

 private:
  void Push(PropertyViolation v) {
    if (report_.witnesses.size() < cap_) report_.witnesses.push_back(std::move(v));
  }
  PropertyReport& report_;
  std::size_t cap_;
};

}  // namespace

PropertyReport CheckMonotoneSubmodular(const Utility& utility,
                                       const PropertyCheckOptions& options) {
  PropertyReport report;
  Recorder record(report, options.max_witnesses);
  const int n = utility.size();
  const double tol = options.tolerance;

  if (n <= PropertyCheckOptions::kExhaustiveLimit) {
    report.exhaustive = true;
    const std::uint32_t full = (1u << n) - 1;
    std::vector<double> table(std::size_t{1} << n);
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
      table[mask] = utility.Value(MaskToSet(mask, n));
    }
    for (std::uint32_t t = 0; t <= full; ++t) {
      for (int x = 0; x < n; ++x) {
        const std::uint32_t bit = 1u << x;
        if (t & bit) continue;
        const double gain_t = table[t | bit] - table[t];
        ++report.checks;
        if (Below(gain_t, 0.0, tol)) record.Monotonicity(MaskToSet(t, n), x, gain_t);
        // Every proper submask S of T.
        for (std::uint32_t s = (t - 1) & t;; s = (s - 1) & t) {
          if (s == t) break;
          const double gain_s = table[s | bit] - table[s];
          ++report.checks;
          if (Below(gain_s, gain_t, tol)) {
            record.Submodularity(MaskToSet(s, n), MaskToSet(t, n), x, gain_s,
                                 gain_t);
          }
          if (s == 0) break;
        }
      }
    }
    return report;
  }

  Rng rng(options.seed);
  for (int trial = 0; trial < options.trials; ++trial) {
    std::vector<char> in_t(n, 0);
    IndexSet t;
    IndexSet s;
    IndexSet outside;
    for (int i = 0; i < n; ++i) {
      if (rng.Next() & 1) {
        in_t[i] = 1;
        t.push_back(i);
        if (rng.Next() & 1) s.push_back(i);
      } else {
        outside.push_back(i);
      }
    }
    if (outside.empty()) continue;
    const int x = outside[rng.Below(outside.size())];
    auto with = [x](IndexSet set) {
      set.insert(std::upper_bound(set.begin(), set.end(), x), x);
      return set;
    };
    const double gain_s = utility.Value(with(s)) - utility.Value(s);
    const double gain_t = utility.Value(with(t)) - utility.Value(t);
    report.checks += 2;
    if (Below(gain_s, 0.0, tol)) record.Monotonicity(s, x, gain_s);
    if (Below(gain_t, 0.0, tol)) record.Monotonicity(t, x, gain_t);
    if (Below(gain_s, gain_t, tol)) record.Submodularity(s, t, x, gain_s, gain_t);
  }
  return report;
}

}  // namespace mdms
