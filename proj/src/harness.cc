// Copyright 2026 The ncg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ncg/harness.h"

#include <openssl/evp.h>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "ncg/errors.h"
#include "ncg/optimum.h"
#include "ncg/profile_io.h"
#include "ncg/structure.h"

namespace ncg {

const char* ModeName(Mode mode) {
  switch (mode) {
    case Mode::kVerify: return "verify";
    case Mode::kBestResponse: return "best-response";
    case Mode::kDynamics: return "dynamics";
    case Mode::kEnumerate: return "enumerate";
    case Mode::kSearch: return "search";
    case Mode::kAudit: return "audit";
    case Mode::kPoa: return "poa";
    case Mode::kOptimum: return "optimum";
  }
  return "unknown";
}

void ValidateExperiment(const ExperimentConfig& c) {
  auto require = [](bool ok, const std::string& msg) {
    NCG_CHECK(ok, ErrorCode::kInvalidArgument, msg);
  };
  const std::string mode = ModeName(c.mode);
  const bool has_game = c.n.has_value() && c.alpha.has_value();
  require(c.workers >= 1, "--workers must be at least 1");
  switch (c.mode) {
    case Mode::kVerify:
      require(c.input_path.has_value(), mode + " needs --in");
      break;
    case Mode::kBestResponse:
      require(c.input_path.has_value(), mode + " needs --in");
      require(c.agent.has_value(), mode + " needs --agent");
      break;
    case Mode::kDynamics:
      require(c.input_path.has_value() || has_game, mode + " needs --in or --n and --alpha");
      require(c.budget >= 1, "--budget must be at least 1");
      break;
    case Mode::kAudit:
      require(c.input_path.has_value() || has_game, mode + " needs --in or --n and --alpha");
      break;
    case Mode::kSearch:
      require(has_game, mode + " needs --n and --alpha");
      require(c.iterations >= 1, "--iters must be at least 1");
      break;
    case Mode::kEnumerate:
    case Mode::kPoa:
    case Mode::kOptimum:
      require(has_game, mode + " needs --n and --alpha");
      require(!c.input_path.has_value(), mode + " does not read --in");
      break;
  }
  if (c.witness_text_path) require(c.mode == Mode::kAudit, "--witness-text is audit-only");
}

nlohmann::json RunManifest::ToJson() const {
  nlohmann::json j;
  j["tool_version"] = tool_version;
  j["csv_schema"] = csv_schema;
  j["config"] = config;
  j["summary"] = summary;
  j["wall_seconds"] = wall_seconds;
  nlohmann::json d = nlohmann::json::object();
  for (const auto& [path, hex] : digests) d[path] = hex;
  j["digests"] = d;
  return j;
}

std::string Sha256Hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned int i = 0; i < length; ++i) {
    out << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  }
  return out.str();
}

int ExitCodeFor(const std::exception& error) {
  const auto* e = dynamic_cast<const NcgError*>(&error);
  if (e == nullptr) return 1;
  switch (e->code()) {
    case ErrorCode::kInvalidArgument:
      return 2;
    case ErrorCode::kBadHeader:
    case ErrorCode::kBadVertexIndex:
    case ErrorCode::kDuplicateBuy:
    case ErrorCode::kBadRational:
    case ErrorCode::kBadSyntax:
      return 3;
    case ErrorCode::kSizeGuard:
      return 4;
    case ErrorCode::kDisconnected:
    case ErrorCode::kPreconditionUnmet:
    case ErrorCode::kNotTree:
    case ErrorCode::kNotEquilibrium:
      return 5;
    default:
      return 1;
  }
}

namespace {

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

class CsvWriter {
 public:
  explicit CsvWriter(const std::vector<std::string>& header) { Row(header); }
  void Row(const std::vector<std::string>& fields) {
    for (size_t i = 0; i < fields.size(); ++i) out_ << (i ? "," : "") << CsvField(fields[i]);
    out_ << "\n";
  }
  std::string str() const { return out_.str(); }

 private:
  std::ostringstream out_;
};

std::string Bool(bool b) { return b ? "true" : "false"; }

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  NCG_CHECK(in.good(), ErrorCode::kInvalidArgument, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  NCG_CHECK(out.good(), ErrorCode::kInvalidArgument, "cannot write '" + path + "'");
  out << data;
}

struct Game {
  GameConfig config;
  std::optional<StrategyProfile> profile;
};

Game ResolveGame(const ExperimentConfig& c) {
  Game game;
  std::optional<Rational> alpha;
  if (c.alpha) {
    alpha = ParseRational(*c.alpha);
  }
  if (c.input_path) {
    ParsedProfile parsed = ParseProfile(ReadFile(*c.input_path));
    NCG_CHECK(!c.n || *c.n == parsed.config.n, ErrorCode::kInvalidArgument,
              "--n disagrees with the profile file");
    NCG_CHECK(!alpha || *alpha == parsed.config.alpha, ErrorCode::kInvalidArgument,
              "--alpha disagrees with the profile file");
    game.config = parsed.config;
    game.profile = std::move(parsed.profile);
  } else {
    game.config.n = *c.n;
    game.config.alpha = *alpha;
  }
  ValidateConfig(game.config);
  return game;
}

const std::vector<std::string> kEquilibriumColumns = {
    "alpha", "n", "profile_id", "edges", "is_tree", "social_cost", "max_agent_cost"};

void EquilibriumRows(CsvWriter& csv, const GameConfig& config,
                     const std::vector<StrategyProfile>& profiles) {
  for (const auto& p : profiles) {
    csv.Row({ToString(config.alpha), std::to_string(config.n), OwnershipString(p),
             PurchasesToken(p), Bool(IsTree(BuildGraph(p).graph())),
             SocialCost(config, p).ToString(), MaxAgentCost(config, p).ToString()});
  }
}

std::string Schema(const std::vector<std::string>& columns) {
  std::string s = std::string(kCsvVersion) + ":";
  for (size_t i = 0; i < columns.size(); ++i) s += (i ? "," : "") + columns[i];
  return s;
}

nlohmann::json EchoConfig(const ExperimentConfig& c) {
  nlohmann::json j;
  j["mode"] = ModeName(c.mode);
  if (c.n) j["n"] = *c.n;
  if (c.alpha) j["alpha"] = *c.alpha;
  j["seed"] = c.seed;
  j["budget"] = c.budget;
  j["iterations"] = c.iterations;
  if (c.agent) j["agent"] = *c.agent;
  j["schedule"] = ScheduleName(c.schedule);
  if (c.input_path) j["input"] = *c.input_path;
  if (c.output_path) j["output"] = *c.output_path;
  j["workers"] = c.workers;
  return j;
}

void RunVerify(const Game& g, RunOutput& out) {
  const std::vector<std::string> cols = {"profile_id", "n", "alpha", "is_nash", "agent",
                                         "old_strategy", "new_strategy", "old_cost",
                                         "new_cost"};
  CsvWriter csv(cols);
  const auto report = IsNash(g.config, *g.profile);
  std::vector<std::string> row = {OwnershipString(*g.profile), std::to_string(g.config.n),
                                  ToString(g.config.alpha), Bool(report.is_nash)};
  if (report.witness) {
    const auto& w = *report.witness;
    row.insert(row.end(), {std::to_string(w.agent), StrategyToString(w.old_strategy),
                           StrategyToString(w.new_strategy), w.old_cost.ToString(),
                           w.new_cost.ToString()});
  } else {
    row.insert(row.end(), {"", "", "", "", ""});
  }
  csv.Row(row);
  out.csv = csv.str();
  out.manifest.csv_schema = Schema(cols);
  out.manifest.summary["is_nash"] = report.is_nash;
}

void RunBestResponse(const Game& g, int agent, RunOutput& out) {
  const std::vector<std::string> cols = {"agent", "current_strategy", "current_cost",
                                         "best_strategy", "best_cost", "improves"};
  CsvWriter csv(cols);
  const auto best = BestResponseExact(g.config, *g.profile, agent);
  const Cost current = AgentCost(g.config, *g.profile, agent).total;
  csv.Row({std::to_string(agent), StrategyToString(g.profile->purchases(agent)),
           current.ToString(), StrategyToString(best.strategy), best.cost.ToString(),
           Bool(best.cost < current)});
  out.csv = csv.str();
  out.manifest.csv_schema = Schema(cols);
}

void RunDynamics(const Game& g, const ExperimentConfig& c, RunOutput& out) {
  const std::vector<std::string> cols = {"step", "activation", "agent", "strategy_before",
                                         "strategy_after", "cost_before", "cost_after"};
  CsvWriter csv(cols);
  const StrategyProfile initial = g.profile ? *g.profile : StrategyProfile(g.config.n);
  const auto trace = BestResponseDynamics(g.config, initial, c.schedule, c.seed, c.budget);
  for (size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    csv.Row({std::to_string(i), std::to_string(s.activation), std::to_string(s.agent),
             StrategyToString(s.strategy_before), StrategyToString(s.strategy_after),
             s.cost_before.ToString(), s.cost_after.ToString()});
  }
  out.csv = csv.str();
  out.manifest.csv_schema = Schema(cols);
  out.manifest.summary["outcome"] = DynamicsOutcomeName(trace.outcome);
  out.manifest.summary["activations"] = trace.activations;
  out.manifest.summary["moves"] = trace.steps.size();
  out.manifest.summary["final_profile"] = SerializeProfile(g.config, trace.final_profile);
}

void RunEnumerate(const Game& g, const ExperimentConfig& c, RunOutput& out) {
  CsvWriter csv(kEquilibriumColumns);
  const auto result = EnumerateEquilibria(g.config, c.workers);
  EquilibriumRows(csv, g.config, result.equilibria);
  out.csv = csv.str();
  out.manifest.csv_schema = Schema(kEquilibriumColumns);
  auto& s = out.manifest.summary;
  s["equilibria"] = result.equilibria.size();
  s["tree_count"] = result.tree_count;
  s["nontree_count"] = result.nontree_count;
  s["isomorphism_classes"] = CountIsomorphismClasses(result.equilibria);
  if (result.worst_cost) s["worst_cost"] = ToString(*result.worst_cost);
  if (result.best_cost) s["best_cost"] = ToString(*result.best_cost);
}

void RunSearch(const Game& g, const ExperimentConfig& c, RunOutput& out) {
  CsvWriter csv(kEquilibriumColumns);
  const auto found = SearchNontreeEquilibria(g.config, c.seed, c.iterations, c.workers);
  EquilibriumRows(csv, g.config, found);
  out.csv = csv.str();
  out.manifest.csv_schema = Schema(kEquilibriumColumns);
  out.manifest.summary["found"] = found.size();
}

void RunAudit(const Game& g, const ExperimentConfig& c, RunOutput& out) {
  const std::vector<std::string> cols = {"profile_id", "check_id", "applicable", "passed",
                                         "witness_summary"};
  CsvWriter csv(cols);
  std::vector<StrategyProfile> targets;
  if (g.profile) {
    targets.push_back(*g.profile);
  } else {
    targets = EnumerateEquilibria(g.config, c.workers).equilibria;
  }
  std::ostringstream text;
  int failures = 0;
  for (const auto& p : targets) {
    const std::string id = OwnershipString(p);
    const AuditReport report = AuditEquilibriumStructure(g.config, p);
    failures += report.FailureCount();
    for (const auto& check : report.checks) {
      std::string summary;
      if (!check.applicable) {
        summary = check.note.empty() ? "gate " + check.gate : check.note;
      } else if (check.vacuous) {
        summary = "vacuous: " + check.note;
      }
      for (const auto& w : check.witnesses) {
        summary += (summary.empty() ? "" : " | ") + w.Summary();
      }
      csv.Row({id, check.id, Bool(check.applicable), Bool(check.passed), summary});
      if (!check.witnesses.empty()) {
        text << "profile " << id << "  check " << check.id << " (" << check.gate << ")\n";
        for (const auto& w : check.witnesses) text << "  " << w.Summary() << "\n";
        text << "\n";
      }
    }
  }
  out.csv = csv.str();
  out.manifest.csv_schema = Schema(cols);
  out.manifest.summary["profiles"] = targets.size();
  out.manifest.summary["failures"] = failures;
  if (c.witness_text_path) {
    WriteFile(*c.witness_text_path, text.str());
  }
}

void RunPoa(const Game& g, const ExperimentConfig& c, RunOutput& out) {
  const std::vector<std::string> cols = {"alpha", "n", "worst_eq_cost", "opt_cost", "poa",
                                         "exhaustive"};
  CsvWriter csv(cols);
  const PoAReport r = PriceOfAnarchy(g.config, c.workers);
  csv.Row({ToString(r.alpha), std::to_string(r.n),
           r.worst_equilibrium_cost ? ToString(*r.worst_equilibrium_cost) : "none",
           ToString(r.optimum_cost), r.poa ? ToString(*r.poa) : "undefined",
           Bool(r.exhaustive)});
  out.csv = csv.str();
  out.manifest.csv_schema = Schema(cols);
  out.manifest.summary["equilibria_considered"] = r.equilibria_considered;
  out.manifest.summary["optimum_crosschecked"] = r.optimum_crosschecked;
}

void RunOptimum(const Game& g, const ExperimentConfig& c, RunOutput& out) {
  const std::vector<std::string> cols = {"alpha", "n", "method", "cost", "shape", "edges"};
  CsvWriter csv(cols);
  std::vector<OptimumResult> results{OptimumAnalytic(g.config)};
  if (g.config.n <= kMaxBruteForceOptimumAgents) {
    results.push_back(OptimumBruteforce(g.config, c.workers));
  }
  for (const auto& r : results) {
    csv.Row({ToString(g.config.alpha), std::to_string(g.config.n), OptimumMethodName(r.method),
             ToString(r.cost), r.shape, PurchasesToken(r.witness)});
  }
  out.csv = csv.str();
  out.manifest.csv_schema = Schema(cols);
}

}  // namespace

RunOutput Run(const ExperimentConfig& config) {
  ValidateExperiment(config);
  const auto start = std::chrono::steady_clock::now();
  const Game game = ResolveGame(config);
  RunOutput out;
  out.manifest.config = EchoConfig(config);
  out.manifest.config["resolved_n"] = game.config.n;
  out.manifest.config["resolved_alpha"] = ToString(game.config.alpha);

  switch (config.mode) {
    case Mode::kVerify: RunVerify(game, out); break;
    case Mode::kBestResponse: RunBestResponse(game, *config.agent, out); break;
    case Mode::kDynamics: RunDynamics(game, config, out); break;
    case Mode::kEnumerate: RunEnumerate(game, config, out); break;
    case Mode::kSearch: RunSearch(game, config, out); break;
    case Mode::kAudit: RunAudit(game, config, out); break;
    case Mode::kPoa: RunPoa(game, config, out); break;
    case Mode::kOptimum: RunOptimum(game, config, out); break;
  }

  out.manifest.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (config.output_path) {
    WriteFile(*config.output_path, out.csv);
    out.manifest.digests.emplace_back(*config.output_path, Sha256Hex(out.csv));
    if (config.witness_text_path) {
      out.manifest.digests.emplace_back(*config.witness_text_path,
                                        Sha256Hex(ReadFile(*config.witness_text_path)));
    }
    WriteFile(*config.output_path + ".manifest.json", out.manifest.ToJson().dump(2) + "\n");
  }
  return out;
}

}  // namespace ncg
