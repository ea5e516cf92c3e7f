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

#include "cli.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mdms/algorithms.h"
#include "mdms/core.h"
#include "mdms/generators.h"
#include "mdms/io.h"
#include "mdms/oracle.h"
#include "mdms/utilities.h"

namespace mdms {
namespace {

const std::vector<std::string> kKnownAlgorithms = {
    "gist", "gist-exhaustive", "simple", "greedy", "greedy-prefix", "random"};
// Expansion of "all".
const std::vector<std::string> kAllAlgorithms = {"gist", "simple", "greedy",
                                                 "random", "gist-exhaustive"};

std::string Num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string Hex(std::uint64_t x) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

std::vector<std::string> SplitList(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <typename T>
T ParseNumber(const std::string& s, const char* what) {
  std::istringstream in(s);
  T v{};
  if (!(in >> v) || !(in >> std::ws).eof()) {
    throw ParameterError(std::string("bad ") + what + " '" + s + "'");
  }
  return v;
}

std::vector<std::string> ExpandAlgorithms(const std::string& spec) {
  std::vector<std::string> out;
  for (const std::string& name : SplitList(spec)) {
    if (name == "all") {
      out.insert(out.end(), kAllAlgorithms.begin(), kAllAlgorithms.end());
    } else if (std::find(kKnownAlgorithms.begin(), kKnownAlgorithms.end(), name) !=
               kKnownAlgorithms.end()) {
      out.push_back(name);
    } else {
      throw ParameterError("unknown algorithm '" + name + "'");
    }
  }
  if (out.empty()) throw ParameterError("no algorithm given");
  return out;
}

// Instance file plus utility file, with what the instance's provenance says
// about lambda and k.
struct Inputs {
  std::shared_ptr<const Instance> instance;
  Json utility_json;
  std::optional<double> lambda;
  std::optional<int> k;
  std::uint64_t hash = 0;

  // The utility, with a missing budget normalizer set to k.
  std::shared_ptr<const Utility> UtilityFor(int k_value) const {
    return UtilityFromJson(utility_json, instance->size(), instance, k_value);
  }
};

Inputs LoadInputs(const std::string& instance_path, const std::string& utility_path,
                  bool check_triangle) {
  Inputs in;
  const Json ij = ReadJsonFile(instance_path);
  in.instance = std::make_shared<Instance>(InstanceFromJson(ij, check_triangle));
  in.utility_json = ReadJsonFile(utility_path);
  if (ij.contains("provenance")) {
    const Json& p = ij["provenance"];
    if (p.contains("lambda") && p["lambda"].is_number()) in.lambda = p["lambda"].get<double>();
    if (p.contains("k") && p["k"].is_number_integer()) in.k = p["k"].get<int>();
  }
  in.hash = InstanceHash(*in.instance);
  return in;
}

struct Record {
  Solution solution;
  int k = 0;
  std::uint64_t seed = 0;
  double wall_ms = 0.0;
};

Solution RunAlgorithm(const std::string& name, Problem problem, std::uint64_t seed,
                      const AlgoConfig& config) {
  if (name == "gist") return Gist(problem, config);
  if (name == "gist-exhaustive") {
    problem.schedule = Schedule::kExhaustive;
    return Gist(problem, config);
  }
  if (name == "simple") return SimpleBaseline(problem);
  if (name == "greedy") return ClassicGreedy(problem, GreedyRule::kStopOnNegativeGain);
  if (name == "greedy-prefix") return ClassicGreedy(problem, GreedyRule::kBestPrefix);
  if (name == "random") return RandomBaseline(problem, seed);
  throw ParameterError("unknown algorithm '" + name + "'");
}

Record Timed(const std::string& name, const Problem& problem, std::uint64_t seed,
             const AlgoConfig& config, bool stable) {
  const auto start = std::chrono::steady_clock::now();
  Record r;
  r.solution = RunAlgorithm(name, problem, seed, config);
  const auto stop = std::chrono::steady_clock::now();
  r.k = problem.k;
  r.seed = seed;
  r.wall_ms = stable ? 0.0
                     : std::chrono::duration<double, std::milli>(stop - start).count();
  return r;
}

std::string CsvRow(const Record& r) {
  const Solution& s = r.solution;
  std::string row = s.algorithm + "," + std::to_string(r.k) + "," +
                    std::to_string(r.seed) + "," + Num(s.f_value) + "," +
                    Num(s.g_value) + "," + Num(s.div_value) + "," +
                    std::to_string(s.oracle_calls) + ",";
  char ms[32];
  std::snprintf(ms, sizeof ms, "%.3f", r.wall_ms);
  row += ms;
  row += ",";
  if (s.winning_threshold) row += Num(*s.winning_threshold);
  return row;
}

Json RecordJson(const Record& r, std::uint64_t hash) {
  const Solution& s = r.solution;
  return Json{{"algorithm", s.algorithm},
              {"k", r.k},
              {"seed", r.seed},
              {"f", s.f_value},
              {"g", s.g_value},
              {"div", s.div_value},
              {"oracle_calls", s.oracle_calls},
              {"wall_time_ms", r.wall_ms},
              {"threshold", s.winning_threshold ? Json(*s.winning_threshold) : Json()},
              {"selected", s.selected},
              {"instance_hash", Hex(hash)}};
}

void Emit(const std::vector<Record>& records, const std::string& format,
          const std::string& out_path, std::uint64_t hash, std::ostream& out) {
  std::ostringstream text;
  if (format == "json") {
    Json arr = Json::array();
    for (const Record& r : records) arr.push_back(RecordJson(r, hash));
    text << arr.dump(1) << '\n';
  } else {
    text << kCsvHeader << '\n';
    for (const Record& r : records) text << CsvRow(r) << '\n';
  }
  if (out_path.empty()) {
    out << text.str();
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw InputError("cannot write " + out_path);
  f << text.str();
}

void CheckFormat(const std::string& format) {
  if (format != "csv" && format != "json") {
    throw ParameterError("--format must be csv or json");
  }
}

Schedule ParseSchedule(const std::string& s) {
  if (s == "geometric") return Schedule::kGeometric;
  if (s == "exhaustive") return Schedule::kExhaustive;
  throw ParameterError("--schedule must be geometric or exhaustive");
}

AlgoConfig ThreadConfig(unsigned threads) {
  AlgoConfig config;
  config.parallel_thresholds = threads != 1;
  config.threads = threads;
  return config;
}

// ---------------------------------------------------------------------------
// gen

struct GenFlags {
  std::string family;
  int n = 0;
  int dim = 64;
  int k = 0;
  double eps_inst = 0.1;
  double alpha = -1.0;
  double beta = 0.75;
  std::uint64_t seed = 0;
  std::string graph_path;
  int max_degree = 3;
  double edge_prob = 0.3;
  std::string sets_path;
  double lambda = -1.0;
  std::string instance_out;
  std::string utility_out;
};

Graph LoadOrDrawGraph(const GenFlags& f) {
  if (!f.graph_path.empty()) return GraphFromJson(ReadJsonFile(f.graph_path));
  const int n = f.n > 0 ? f.n : 10;
  return RandomBoundedDegreeGraph(n, f.max_degree, f.edge_prob, f.seed);
}

int CmdGen(const GenFlags& f, std::ostream& out) {
  GeneratedInstance g;
  bool budget_follows_k = false;
  if (f.family == "gaussian") {
    GaussianOptions o;
    o.alpha = f.alpha < 0 ? 0.95 : f.alpha;
    o.beta = f.beta;
    o.k = f.k;
    g = GenGaussian(f.n > 0 ? f.n : 1000, f.dim, f.seed, o);
    budget_follows_k = f.k == 0;
  } else if (f.family == "greedy-hard") {
    g = GenGreedyHard(f.n > 0 ? f.n : 8, f.k > 0 ? f.k : 6, f.eps_inst);
  } else if (f.family == "counterexample" || f.family == "counterexample-monotone") {
    g = GenCounterexample(f.family == "counterexample-monotone");
  } else if (f.family == "clique" || f.family == "independent-set") {
    const Graph graph = LoadOrDrawGraph(f);
    if (f.k <= 0) throw ParameterError(f.family + " needs --k");
    const double alpha = f.alpha < 0 ? 0.5 : f.alpha;
    g = f.family == "clique" ? GenCliqueReduction(graph, alpha, f.k)
                             : GenIndependentSetReduction(graph, alpha, f.k);
    if (f.graph_path.empty()) g.seed = f.seed;
  } else if (f.family == "cover") {
    if (f.sets_path.empty()) throw ParameterError("cover needs --sets");
    const Json j = ReadJsonFile(f.sets_path);
    auto [family, groups] = [&] {
      try {
        std::optional<std::vector<int>> gr;
        if (j.contains("groups")) gr = j["groups"].get<std::vector<int>>();
        return std::make_pair(j.at("sets").get<std::vector<std::vector<int>>>(), gr);
      } catch (const Json::exception& e) {
        throw InputError(f.sets_path + ": " + e.what());
      }
    }();
    std::optional<double> lambda;
    if (f.lambda >= 0) lambda = f.lambda;
    g = GenCoverReduction(family, groups, lambda);
  } else {
    throw ParameterError("unknown family '" + f.family + "'");
  }

  Json ij = InstanceToJson(*g.instance);
  ij["provenance"] = ProvenanceToJson(g);
  Json uj = UtilityToJson(*g.utility);
  if (budget_follows_k) uj.erase("k");
  WriteJsonFile(f.instance_out, ij);
  WriteJsonFile(f.utility_out, uj);
  out << "wrote " << g.family << " instance with n = " << g.instance->size()
      << " to " << f.instance_out << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------------------
// solve / sweep / verify shared flags

struct ProblemFlags {
  std::string instance;
  std::string utility;
  double lambda = 0.0;
  int k = 0;
  double epsilon = 0.1;
  bool check_triangle = false;
  CLI::Option* lambda_opt = nullptr;
  CLI::Option* k_opt = nullptr;

  void Register(CLI::App* app, bool with_k) {
    app->add_option("--instance", instance, "instance JSON")->required();
    app->add_option("--utility", utility, "utility JSON")->required();
    lambda_opt = app->add_option("--lambda", lambda, "diversity weight (default: provenance)");
    if (with_k) k_opt = app->add_option("--k", k, "cardinality (default: provenance)");
    app->add_option("--epsilon", epsilon, "threshold accuracy")->capture_default_str();
    app->add_flag("--check-triangle", check_triangle, "verify the triangle inequality");
  }

  double Lambda(const Inputs& in) const {
    if (lambda_opt->count()) return lambda;
    if (in.lambda) return *in.lambda;
    throw ParameterError("--lambda not given and the instance has no provenance");
  }
  int K(const Inputs& in) const {
    if (k_opt && k_opt->count()) return k;
    if (in.k) return *in.k;
    throw ParameterError("--k not given and the instance has no provenance");
  }
};

Problem BuildProblem(const Inputs& in, double lambda, int k, double epsilon,
                     Schedule schedule) {
  Problem p;
  p.instance = in.instance;
  p.lambda = lambda;
  p.k = k;
  p.epsilon = epsilon;
  p.schedule = schedule;
  if (k >= 1 && k <= in.instance->size()) p.utility = in.UtilityFor(k);
  else p.utility = in.UtilityFor(1);
  p.Validate();
  return p;
}

struct SolveFlags {
  ProblemFlags problem;
  std::string algorithm = "gist";
  std::string schedule = "geometric";
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "csv";
  unsigned threads = 1;
  bool stable = false;
};

int CmdSolve(const SolveFlags& f, std::ostream& out) {
  CheckFormat(f.format);
  const Schedule schedule = ParseSchedule(f.schedule);
  const std::vector<std::string> algorithms = ExpandAlgorithms(f.algorithm);
  const Inputs in = LoadInputs(f.problem.instance, f.problem.utility, f.problem.check_triangle);
  const Problem p = BuildProblem(in, f.problem.Lambda(in), f.problem.K(in),
                                 f.problem.epsilon, schedule);
  std::vector<Record> records;
  for (const std::string& name : algorithms) {
    records.push_back(Timed(name, p, f.seed, ThreadConfig(f.threads), f.stable));
  }
  Emit(records, f.format, f.out, in.hash, out);
  return kExitOk;
}

struct SweepFlags {
  ProblemFlags problem;
  std::string k_list;
  std::string k_range;
  std::string algorithms = "all";
  std::string schedule = "geometric";
  std::string seeds;
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "csv";
  unsigned threads = 1;
  bool stable = false;
};

std::vector<int> SweepKs(const SweepFlags& f) {
  std::vector<int> ks;
  for (const std::string& s : SplitList(f.k_list)) ks.push_back(ParseNumber<int>(s, "k"));
  if (!f.k_range.empty()) {
    // start:stop[:step], inclusive.
    std::vector<int> parts;
    std::stringstream in(f.k_range);
    std::string item;
    while (std::getline(in, item, ':')) parts.push_back(ParseNumber<int>(item, "k range"));
    if (parts.size() < 2 || parts.size() > 3) throw ParameterError("--k-range is start:stop[:step]");
    const int step = parts.size() == 3 ? parts[2] : 1;
    if (step <= 0) throw ParameterError("--k-range step must be positive");
    for (int k = parts[0]; k <= parts[1]; k += step) ks.push_back(k);
  }
  if (ks.empty()) throw ParameterError("sweep needs --k-list or --k-range");
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  return ks;
}

int CmdSweep(const SweepFlags& f, std::ostream& out) {
  CheckFormat(f.format);
  const Schedule schedule = ParseSchedule(f.schedule);
  std::vector<std::string> algorithms = ExpandAlgorithms(f.algorithms);
  std::sort(algorithms.begin(), algorithms.end());
  algorithms.erase(std::unique(algorithms.begin(), algorithms.end()), algorithms.end());
  const std::vector<int> ks = SweepKs(f);
  std::vector<std::uint64_t> seeds;
  for (const std::string& s : SplitList(f.seeds)) seeds.push_back(ParseNumber<std::uint64_t>(s, "seed"));
  if (seeds.empty()) seeds.push_back(f.seed);
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());

  const Inputs in = LoadInputs(f.problem.instance, f.problem.utility, f.problem.check_triangle);
  const double lambda = f.problem.Lambda(in);
  const AlgoConfig config = ThreadConfig(f.threads);
  std::vector<Record> records;
  for (int k : ks) {
    const Problem p = BuildProblem(in, lambda, k, f.problem.epsilon, schedule);
    for (const std::string& name : algorithms) {
      // Only `random` reads the seed; the others run once per k.
      std::optional<Record> cached;
      for (std::uint64_t seed : seeds) {
        if (name == "random" || !cached) {
          cached = Timed(name, p, seed, config, f.stable);
        }
        Record r = *cached;
        r.seed = seed;
        records.push_back(std::move(r));
      }
    }
  }
  Emit(records, f.format, f.out, in.hash, out);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyFlags {
  ProblemFlags problem;
  std::uint64_t seed = 0;
  std::string out;
};

// Proven lower bound on f / OPT for `algorithm`, if any.
std::optional<double> GuaranteeFor(const std::string& algorithm, const Utility& u,
                                   double epsilon) {
  const bool linear = u.kind() == UtilityKind::kLinear ||
                      u.kind() == UtilityKind::kConstantZero;
  const bool monotone_submodular = u.monotone_declared() && u.submodular_declared();
  if (!monotone_submodular) return std::nullopt;
  if (algorithm == "gist") return linear ? 2.0 / 3.0 - epsilon : 0.5 - epsilon;
  if (algorithm == "gist-exhaustive") return linear ? 2.0 / 3.0 : 0.5 - epsilon;
  if (algorithm == "simple") {
    const double e = std::numbers::e;
    return (e - 1.0) / (2.0 * e - 1.0);
  }
  return std::nullopt;
}

int CmdVerify(const VerifyFlags& f, std::ostream& out) {
  const Inputs in = LoadInputs(f.problem.instance, f.problem.utility, f.problem.check_triangle);
  const Problem p = BuildProblem(in, f.problem.Lambda(in), f.problem.K(in),
                                 f.problem.epsilon, Schedule::kGeometric);
  const std::uint64_t count = CountSubsetsUpTo(p.instance->size(), p.k);
  if (count > kMaxEnumeratedSubsets) {
    throw SizeGuardError("verify: more than " + std::to_string(kMaxEnumeratedSubsets) +
                         " subsets to enumerate; shrink n or k");
  }
  const ExactResult opt = BruteForceOpt(p);

  constexpr double kSlack = 1e-9;
  bool violated = false;
  Json report = Json::array();
  char line[256];
  std::snprintf(line, sizeof line, "%-16s %-22s %-12s %-10s %s\n", "algorithm", "f",
                "ratio", "bound", "status");
  out << line;
  for (const std::string& name : kKnownAlgorithms) {
    const Solution s = RunAlgorithm(name, p, f.seed, {});
    const RatioReport ratio = Ratio(s.f_value, opt.opt_value);
    const std::optional<double> bound = GuaranteeFor(name, *p.utility, p.epsilon);
    std::string status = "ok";
    if (bound && !ratio.degenerate && ratio.ratio < *bound - kSlack) {
      status = "VIOLATION";
      violated = true;
    } else if (!bound && !ratio.degenerate && ratio.ratio < 0.5) {
      status = "below 1/2 (no guarantee)";
    } else if (!bound) {
      status = "no guarantee";
    }
    std::snprintf(line, sizeof line, "%-16s %-22.17g %-12.6f %-10s %s\n", name.c_str(),
                  s.f_value, ratio.ratio,
                  bound ? std::to_string(*bound).substr(0, 8).c_str() : "-",
                  status.c_str());
    out << line;
    report.push_back(Json{{"algorithm", name},
                          {"f", s.f_value},
                          {"ratio", ratio.ratio},
                          {"degenerate", ratio.degenerate},
                          {"bound", bound ? Json(*bound) : Json()},
                          {"status", status},
                          {"selected", s.selected}});
  }
  out << "opt " << Num(opt.opt_value) << " witness [";
  for (std::size_t i = 0; i < opt.witness.size(); ++i) {
    out << (i ? "," : "") << opt.witness[i];
  }
  out << "]\n";
  if (!f.out.empty()) {
    WriteJsonFile(f.out, Json{{"opt", opt.opt_value},
                              {"witness", opt.witness},
                              {"subsets_examined", opt.subsets_examined},
                              {"algorithms", report},
                              {"violation", violated}});
  }
  return violated ? kExitViolation : kExitOk;
}

// ---------------------------------------------------------------------------
// ingest

inline constexpr int kMaxDenseIngest = 5000;

struct IngestFlags {
  std::string embeddings;
  std::string utility = "margin";
  double alpha = -1.0;
  double alpha_s = 0.9;
  double beta_s = 0.1;
  std::string edges;
  double lambda = -1.0;
  int k = 0;
  double epsilon = 0.1;
  std::string out;
};

int CmdIngest(const IngestFlags& f, std::ostream& out, std::ostream& err) {
  const bool submod = f.utility == "margin_similarity" || f.utility == "submod";
  if (!submod && f.utility != "margin") {
    throw ParameterError("--utility must be margin or margin_similarity");
  }
  std::ifstream file(f.embeddings);
  if (!file) throw InputError("cannot open " + f.embeddings);
  EmbeddingRecords rec = ReadEmbeddings(file);
  const int n = static_cast<int>(rec.uncertainty.size());
  if (n == 0) throw InputError(f.embeddings + ": no records");
  if (n > kMaxDenseIngest) {
    throw SizeGuardError("ingest keeps a dense distance matrix; n = " +
                         std::to_string(n) + " exceeds " +
                         std::to_string(kMaxDenseIngest));
  }
  if (!rec.off_unit.empty()) {
    err << "warning: " << rec.off_unit.size()
        << " embedding(s) not unit length; normalized (first: record "
        << rec.off_unit.front() << ")\n";
  }
  auto instance = std::make_shared<Instance>(Instance::Cosine(std::move(rec.embeddings)));

  const double alpha = f.alpha >= 0 ? f.alpha : (submod ? 0.95 : 0.9);
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw ParameterError("--alpha must lie in [0, 1]");
  std::shared_ptr<const Utility> utility;
  if (!submod) {
    std::vector<double> w = rec.uncertainty;
    for (double& x : w) x *= alpha;
    utility = std::make_shared<LinearUtility>(std::move(w));
  } else if (!f.edges.empty()) {
    utility = std::make_shared<MarginSimilarityUtility>(
        rec.uncertainty, EdgesFromJson(ReadJsonFile(f.edges), instance.get()),
        alpha * f.alpha_s, alpha * f.beta_s);
  } else {
    utility = std::make_shared<MarginSimilarityUtility>(rec.uncertainty, instance,
                                                        alpha * f.alpha_s, alpha * f.beta_s);
  }

  Problem p;
  p.instance = instance;
  p.utility = utility;
  p.lambda = f.lambda >= 0 ? f.lambda : 1.0 - alpha;
  p.k = f.k;
  p.epsilon = f.epsilon;
  p.Validate();
  const Solution s = Gist(p);
  const Json result{{"selected", s.selected},
                    {"f", s.f_value},
                    {"g", s.g_value},
                    {"div", s.div_value},
                    {"oracle_calls", s.oracle_calls},
                    {"threshold", s.winning_threshold ? Json(*s.winning_threshold) : Json()},
                    {"utility", submod ? "margin_similarity" : "margin"},
                    {"alpha", alpha},
                    {"lambda", p.lambda},
                    {"k", p.k},
                    {"n", n}};
  if (f.out.empty()) {
    out << result.dump(1) << '\n';
  } else {
    WriteJsonFile(f.out, result);
  }
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Diversity-regularized subset selection"};
  app.name("mdms");
  app.require_subcommand(1);

  GenFlags gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate an instance family");
  gen_cmd->add_option("family", gen.family,
                      "gaussian | greedy-hard | counterexample | counterexample-monotone"
                      " | clique | independent-set | cover")
      ->required();
  gen_cmd->add_option("--n", gen.n, "number of points (gaussian, greedy-hard, random graphs)");
  gen_cmd->add_option("--dim", gen.dim, "gaussian dimension")->capture_default_str();
  gen_cmd->add_option("--k", gen.k, "cardinality");
  gen_cmd->add_option("--eps-inst", gen.eps_inst, "greedy-hard epsilon")->capture_default_str();
  gen_cmd->add_option("--alpha", gen.alpha, "utility/diversity trade-off");
  gen_cmd->add_option("--beta", gen.beta, "gaussian budget cap")->capture_default_str();
  gen_cmd->add_option("--seed", gen.seed, "random seed")->capture_default_str();
  gen_cmd->add_option("--graph", gen.graph_path, "graph JSON {n, edges}");
  gen_cmd->add_option("--max-degree", gen.max_degree, "random graph degree cap")->capture_default_str();
  gen_cmd->add_option("--edge-prob", gen.edge_prob, "random graph edge probability")->capture_default_str();
  gen_cmd->add_option("--sets", gen.sets_path, "set family JSON {sets, groups?}");
  gen_cmd->add_option("--lambda", gen.lambda, "cover: diversity weight");
  gen_cmd->add_option("--instance-out", gen.instance_out, "instance JSON to write")->required();
  gen_cmd->add_option("--utility-out", gen.utility_out, "utility JSON to write")->required();

  SolveFlags solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "run one algorithm (or all)");
  solve.problem.Register(solve_cmd, true);
  solve_cmd->add_option("--algorithm", solve.algorithm,
                        "gist | gist-exhaustive | simple | greedy | greedy-prefix | random | all")
      ->capture_default_str();
  solve_cmd->add_option("--schedule", solve.schedule, "geometric | exhaustive")->capture_default_str();
  solve_cmd->add_option("--seed", solve.seed, "seed for random")->capture_default_str();
  solve_cmd->add_option("--out", solve.out, "output file (default stdout)");
  solve_cmd->add_option("--format", solve.format, "csv | json")->capture_default_str();
  solve_cmd->add_option("--threads", solve.threads, "threshold workers (0: all cores)")->capture_default_str();
  solve_cmd->add_flag("--stable", solve.stable, "write 0 for wall times");

  SweepFlags sweep;
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "algorithms x k x seeds, one row each");
  sweep.problem.Register(sweep_cmd, false);
  sweep_cmd->add_option("--k-list", sweep.k_list, "comma-separated k values");
  sweep_cmd->add_option("--k-range", sweep.k_range, "start:stop[:step], inclusive");
  sweep_cmd->add_option("--algorithms", sweep.algorithms, "comma list or all")->capture_default_str();
  sweep_cmd->add_option("--schedule", sweep.schedule, "geometric | exhaustive")->capture_default_str();
  sweep_cmd->add_option("--seeds", sweep.seeds, "comma-separated seeds");
  sweep_cmd->add_option("--seed", sweep.seed, "single seed when --seeds is absent")->capture_default_str();
  sweep_cmd->add_option("--out", sweep.out, "output file (default stdout)");
  sweep_cmd->add_option("--format", sweep.format, "csv | json")->capture_default_str();
  sweep_cmd->add_option("--threads", sweep.threads, "threshold workers (0: all cores)")->capture_default_str();
  sweep_cmd->add_flag("--stable", sweep.stable, "write 0 for wall times");

  VerifyFlags verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "compare every algorithm with the exact optimum");
  verify.problem.Register(verify_cmd, true);
  verify_cmd->add_option("--seed", verify.seed, "seed for random")->capture_default_str();
  verify_cmd->add_option("--out", verify.out, "JSON report file");

  IngestFlags ingest;
  CLI::App* ingest_cmd = app.add_subcommand("ingest", "select from an embeddings file");
  ingest_cmd->add_option("--embeddings", ingest.embeddings, "JSON lines {embedding, uncertainty}")->required();
  ingest_cmd->add_option("--utility", ingest.utility, "margin | margin_similarity")->capture_default_str();
  ingest_cmd->add_option("--alpha", ingest.alpha, "utility weight (default 0.9 margin, 0.95 margin_similarity)");
  ingest_cmd->add_option("--alpha-s", ingest.alpha_s, "uncertainty weight")->capture_default_str();
  ingest_cmd->add_option("--beta-s", ingest.beta_s, "similarity penalty")->capture_default_str();
  ingest_cmd->add_option("--edges", ingest.edges, "similarity edges JSON (default: dense)");
  ingest_cmd->add_option("--lambda", ingest.lambda, "diversity weight (default 1 - alpha)");
  ingest_cmd->add_option("--k", ingest.k, "number to select")->required();
  ingest_cmd->add_option("--epsilon", ingest.epsilon, "threshold accuracy")->capture_default_str();
  ingest_cmd->add_option("--out", ingest.out, "result JSON (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  try {
    if (*gen_cmd) return CmdGen(gen, out);
    if (*solve_cmd) return CmdSolve(solve, out);
    if (*sweep_cmd) return CmdSweep(sweep, out);
    if (*verify_cmd) return CmdVerify(verify, out);
    if (*ingest_cmd) return CmdIngest(ingest, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParameter;
  } catch (const SizeGuardError& e) {
    err << "error: " << e.what() << '\n';
    return kExitSizeGuard;
  }
  return kExitInput;
}

}  // namespace mdms
