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

#include "ncg/equilibrium.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "mask_kernel.h"
#include "ncg/errors.h"

namespace ncg {

using internal::Adjacency;
using internal::Bit;
using internal::CompareCost;
using internal::LinearCost;
using internal::Mask;
using internal::MaskProfile;
using internal::MaskToVector;
using internal::ToCost;

namespace {

void CheckInputs(const GameConfig& config, const StrategyProfile& profile) {
  ValidateConfig(config);
  NCG_CHECK(profile.num_agents() == config.n, ErrorCode::kInvalidArgument,
            "profile size does not match n");
}

void CheckAgent(const GameConfig& config, int agent) {
  NCG_CHECK(agent >= 0 && agent < config.n, ErrorCode::kBadVertexIndex,
            "agent " + std::to_string(agent) + " out of range");
}

void CheckExhaustive(int n) {
  NCG_CHECK(n <= kMaxExhaustiveAgents, ErrorCode::kSizeGuard,
            "exhaustive best responses need n <= " +
                std::to_string(kMaxExhaustiveAgents) + ", got " + std::to_string(n));
}

int ClampWorkers(int workers) { return std::max(1, workers); }

// Runs fn(worker_index) on `workers` threads (inline when 1).
template <typename Fn>
void ParallelFor(int workers, Fn fn) {
  if (workers == 1) {
    fn(0);
    return;
  }
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        fn(w);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

// Best responses and verification --------------------------------------------

BestResponse BestResponseExact(const GameConfig& config, const StrategyProfile& profile,
                               int agent) {
  CheckInputs(config, profile);
  CheckAgent(config, agent);
  CheckExhaustive(config.n);
  const MaskProfile mp = internal::ToMaskProfile(profile);
  const auto adjacency = Adjacency(mp);
  const auto best = internal::BestResponseMask(config.alpha, mp, adjacency, agent);
  return {MaskToVector(best.strategy), ToCost(config.alpha, best.cost)};
}

StrategyProfile ApplyWitness(const StrategyProfile& profile, const DeviationWitness& witness) {
  StrategyProfile out = profile;
  out.SetPurchases(witness.agent, witness.new_strategy);
  return out;
}

bool VerifyWitness(const GameConfig& config, const StrategyProfile& profile,
                   const DeviationWitness& witness) {
  if (witness.agent < 0 || witness.agent >= profile.num_agents()) return false;
  if (profile.purchases(witness.agent) != witness.old_strategy) return false;
  StrategyProfile deviated;
  try {
    deviated = ApplyWitness(profile, witness);
  } catch (const NcgError&) {
    return false;
  }
  const Cost old_cost = AgentCost(config, profile, witness.agent).total;
  const Cost new_cost = AgentCost(config, deviated, witness.agent).total;
  return old_cost == witness.old_cost && new_cost == witness.new_cost &&
         new_cost < old_cost;
}

EquilibriumReport IsNash(const GameConfig& config, const StrategyProfile& profile,
                         bool per_agent_best) {
  CheckInputs(config, profile);
  CheckExhaustive(config.n);
  const MaskProfile mp = internal::ToMaskProfile(profile);
  const auto adjacency = Adjacency(mp);
  EquilibriumReport report;
  if (per_agent_best) report.per_agent_best.emplace();
  for (int v = 0; v < config.n; ++v) {
    const LinearCost current = internal::CurrentCostMask(mp, adjacency, v);
    const auto best = internal::BestResponseMask(config.alpha, mp, adjacency, v);
    if (per_agent_best) report.per_agent_best->push_back(ToCost(config.alpha, best.cost));
    if (report.is_nash && CompareCost(config.alpha, best.cost, current) < 0) {
      report.is_nash = false;
      report.witness = DeviationWitness{v, profile.purchases(v), MaskToVector(best.strategy),
                                        ToCost(config.alpha, current),
                                        ToCost(config.alpha, best.cost)};
      if (!per_agent_best) break;
    }
  }
  return report;
}

std::optional<DeviationWitness> ImprovingMoveHeuristic(const GameConfig& config,
                                                       const StrategyProfile& profile,
                                                       int agent) {
  CheckInputs(config, profile);
  CheckAgent(config, agent);
  const MaskProfile mp = internal::ToMaskProfile(profile);
  const auto adjacency = Adjacency(mp);
  const int n = config.n;
  const Mask own = mp.buys[agent];
  const Mask incoming = internal::Incoming(mp, agent);
  const Mask non_neighbors =
      internal::FullMask(n) & ~adjacency[agent] & ~Bit(agent);
  const LinearCost current = internal::CurrentCostMask(mp, adjacency, agent);

  std::optional<Mask> best_strategy;
  LinearCost best_cost = current;
  auto consider = [&](Mask strategy) {
    const LinearCost c{std::popcount(strategy),
                       internal::EccentricityWith(n, agent, incoming | strategy, adjacency)};
    if (CompareCost(config.alpha, c, best_cost) < 0) {
      best_cost = c;
      best_strategy = strategy;
    }
  };
  for (Mask r = own; r; r &= r - 1) consider(own & ~(r & (~r + 1)));
  for (Mask a = non_neighbors; a; a &= a - 1) consider(own | (a & (~a + 1)));
  for (Mask r = own; r; r &= r - 1) {
    for (Mask a = non_neighbors; a; a &= a - 1) {
      consider((own & ~(r & (~r + 1))) | (a & (~a + 1)));
    }
  }
  if (!best_strategy) return std::nullopt;
  return DeviationWitness{agent, profile.purchases(agent), MaskToVector(*best_strategy),
                          ToCost(config.alpha, current), ToCost(config.alpha, best_cost)};
}

// Dynamics -------------------------------------------------------------------

const char* ScheduleName(Schedule s) {
  return s == Schedule::kRoundRobin ? "rr" : "rand";
}

const char* DynamicsOutcomeName(DynamicsOutcome o) {
  switch (o) {
    case DynamicsOutcome::kConverged: return "converged";
    case DynamicsOutcome::kCycle: return "cycle";
    case DynamicsOutcome::kBudgetExhausted: return "budget_exhausted";
  }
  return "unknown";
}

DynamicsTrace BestResponseDynamics(const GameConfig& config, const StrategyProfile& initial,
                                   Schedule schedule, std::uint64_t seed, int budget) {
  CheckInputs(config, initial);
  CheckExhaustive(config.n);
  NCG_CHECK(budget >= 1, ErrorCode::kInvalidArgument, "step budget must be at least 1");
  const int n = config.n;
  MaskProfile mp = internal::ToMaskProfile(initial);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);

  DynamicsTrace trace;
  std::vector<bool> stable(n, false);
  int stable_count = 0;
  std::set<std::vector<Mask>> seen;
  auto fingerprint = [&](int next_agent) {
    std::vector<Mask> key = mp.buys;
    key.push_back(static_cast<Mask>(next_agent));
    return key;
  };
  if (schedule == Schedule::kRoundRobin) seen.insert(fingerprint(0));

  trace.outcome = DynamicsOutcome::kBudgetExhausted;
  for (int activation = 0; activation < budget; ++activation) {
    const int v = schedule == Schedule::kRoundRobin ? activation % n : pick(rng);
    ++trace.activations;
    const auto adjacency = Adjacency(mp);
    const LinearCost current = internal::CurrentCostMask(mp, adjacency, v);
    const auto best = internal::BestResponseMask(config.alpha, mp, adjacency, v);
    if (CompareCost(config.alpha, best.cost, current) < 0) {
      trace.steps.push_back({activation, v, MaskToVector(mp.buys[v]),
                             MaskToVector(best.strategy), ToCost(config.alpha, current),
                             ToCost(config.alpha, best.cost)});
      mp.buys[v] = best.strategy;
      std::fill(stable.begin(), stable.end(), false);
      stable[v] = true;
      stable_count = 1;
    } else if (!stable[v]) {
      stable[v] = true;
      ++stable_count;
    }
    if (stable_count == n) {
      trace.outcome = DynamicsOutcome::kConverged;
      break;
    }
    if (schedule == Schedule::kRoundRobin &&
        !seen.insert(fingerprint((activation + 1) % n)).second) {
      trace.outcome = DynamicsOutcome::kCycle;
      break;
    }
  }
  trace.final_profile = internal::FromMaskProfile(mp);
  return trace;
}

// Enumeration ----------------------------------------------------------------

namespace {

std::vector<Edge> AllPairs(int n) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  return pairs;
}

// Decodes a base-3 ownership code (digit i belongs to pairs[i]).
void DecodeOwnership(std::uint64_t code, const std::vector<Edge>& pairs, MaskProfile& mp) {
  std::fill(mp.buys.begin(), mp.buys.end(), 0);
  for (const Edge& e : pairs) {
    const int digit = static_cast<int>(code % 3);
    code /= 3;
    if (digit == 1) mp.buys[e.u] |= Bit(e.v);
    if (digit == 2) mp.buys[e.v] |= Bit(e.u);
  }
}

}  // namespace

EnumerationResult EnumerateEquilibria(const GameConfig& config, int workers) {
  ValidateConfig(config);
  NCG_CHECK(config.n <= kMaxEnumerationAgents, ErrorCode::kSizeGuard,
            "equilibrium enumeration needs n <= " +
                std::to_string(kMaxEnumerationAgents) + ", got " +
                std::to_string(config.n));
  workers = ClampWorkers(workers);
  const int n = config.n;
  const auto pairs = AllPairs(n);
  std::uint64_t total = 1;
  for (size_t i = 0; i < pairs.size(); ++i) total *= 3;

  std::vector<std::vector<std::uint64_t>> found(workers);
  ParallelFor(workers, [&](int w) {
    const std::uint64_t begin = total * w / workers;
    const std::uint64_t end = total * (w + 1) / workers;
    MaskProfile mp{n, std::vector<Mask>(n, 0)};
    for (std::uint64_t code = begin; code < end; ++code) {
      DecodeOwnership(code, pairs, mp);
      if (n > 1 && !internal::IsConnectedMask(n, Adjacency(mp))) continue;
      if (internal::FindImprovingAgent(config.alpha, mp).agent < 0) {
        found[w].push_back(code);
      }
    }
  });

  EnumerationResult result;
  result.alpha = config.alpha;
  result.n = n;
  MaskProfile mp{n, std::vector<Mask>(n, 0)};
  for (const auto& chunk : found) {
    for (std::uint64_t code : chunk) {
      DecodeOwnership(code, pairs, mp);
      result.equilibria.push_back(internal::FromMaskProfile(mp));
    }
  }
  std::sort(result.equilibria.begin(), result.equilibria.end());
  for (const auto& eq : result.equilibria) {
    if (IsTree(BuildGraph(eq).graph())) {
      ++result.tree_count;
    } else {
      ++result.nontree_count;
    }
    const Cost cost = SocialCost(config, eq);
    if (!result.worst_cost || cost.value() > *result.worst_cost) result.worst_cost = cost.value();
    if (!result.best_cost || cost.value() < *result.best_cost) result.best_cost = cost.value();
  }
  return result;
}

// Stochastic search ----------------------------------------------------------

namespace {

std::mt19937_64 IterationRng(std::uint64_t seed, int iteration) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(iteration)};
  return std::mt19937_64(seq);
}

StrategyProfile RandomProfile(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> density_dist(0.15, 0.85);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const double density = density_dist(rng);
  StrategyProfile profile(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng) >= density) continue;
      if (coin(rng) < 0.5) {
        profile.AddPurchase(u, v);
      } else {
        profile.AddPurchase(v, u);
      }
    }
  }
  return profile;
}

std::optional<StrategyProfile> SearchOnce(const GameConfig& config, std::mt19937_64& rng) {
  const int n = config.n;
  StrategyProfile profile = RandomProfile(n, rng);

  // Single-move descent.
  for (int pass = 0; pass < 20 * n; ++pass) {
    bool moved = false;
    for (int v = 0; v < n; ++v) {
      if (auto w = ImprovingMoveHeuristic(config, profile, v)) {
        profile.SetPurchases(v, w->new_strategy);
        moved = true;
      }
    }
    if (!moved) break;
  }

  auto accept = [&](const StrategyProfile& p) -> std::optional<StrategyProfile> {
    const OwnedGraph owned = BuildGraph(p);
    const Graph& g = owned.graph();
    if (!IsConnected(g) || IsTree(g)) return std::nullopt;
    if (!IsNash(config, p).is_nash) return std::nullopt;
    return p;
  };
  if (auto hit = accept(profile)) return hit;

  // Short exact polish; only converged states can be equilibria.
  const auto trace =
      BestResponseDynamics(config, profile, Schedule::kRoundRobin, 0, 6 * n);
  if (trace.outcome == DynamicsOutcome::kConverged) return accept(trace.final_profile);
  return std::nullopt;
}

}  // namespace

std::vector<StrategyProfile> SearchNontreeEquilibria(const GameConfig& config,
                                                     std::uint64_t seed, int iterations,
                                                     int workers) {
  ValidateConfig(config);
  NCG_CHECK(iterations >= 1, ErrorCode::kInvalidArgument, "iterations must be at least 1");
  CheckExhaustive(config.n);
  workers = ClampWorkers(workers);

  std::vector<std::set<StrategyProfile>> found(workers);
  ParallelFor(workers, [&](int w) {
    const int begin = static_cast<int>(static_cast<std::int64_t>(iterations) * w / workers);
    const int end = static_cast<int>(static_cast<std::int64_t>(iterations) * (w + 1) / workers);
    for (int it = begin; it < end; ++it) {
      auto rng = IterationRng(seed, it);
      if (auto hit = SearchOnce(config, rng)) found[w].insert(std::move(*hit));
    }
  });

  std::set<StrategyProfile> merged;
  for (auto& s : found) merged.insert(s.begin(), s.end());
  return {merged.begin(), merged.end()};
}

// Canonical forms ------------------------------------------------------------

std::string OwnershipString(const StrategyProfile& profile) {
  const int n = profile.num_agents();
  std::string out;
  out.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      out += static_cast<char>('0' + (profile.Buys(u, v) ? 1 : 0) +
                               (profile.Buys(v, u) ? 2 : 0));
    }
  }
  return out;
}

StrategyProfile PermuteProfile(const StrategyProfile& profile, const std::vector<int>& perm) {
  const int n = profile.num_agents();
  NCG_CHECK(static_cast<int>(perm.size()) == n, ErrorCode::kInvalidArgument,
            "permutation size mismatch");
  std::vector<std::vector<int>> buys(n);
  for (const auto& [u, v] : profile.PurchaseList()) buys[perm[u]].push_back(perm[v]);
  return StrategyProfile::FromPurchases(std::move(buys));
}

std::string CanonicalOwnershipString(const StrategyProfile& profile) {
  const int n = profile.num_agents();
  NCG_CHECK(n <= kMaxCanonicalAgents, ErrorCode::kSizeGuard,
            "canonical forms need n <= " + std::to_string(kMaxCanonicalAgents));
  // Ownership code of each ordered pair, read once.
  std::vector<int> owns(static_cast<size_t>(n) * n, 0);
  for (const auto& [u, v] : profile.PurchaseList()) owns[u * n + v] = 1;
  std::vector<int> inverse(n);
  std::iota(inverse.begin(), inverse.end(), 0);
  std::string best;
  std::string current(static_cast<size_t>(n) * (n - 1) / 2, '0');
  do {
    // inverse[x] = original vertex placed at new label x.
    size_t idx = 0;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        const int u = inverse[a];
        const int v = inverse[b];
        current[idx++] = static_cast<char>('0' + owns[u * n + v] + 2 * owns[v * n + u]);
      }
    }
    if (best.empty() || current < best) best = current;
  } while (std::next_permutation(inverse.begin(), inverse.end()));
  return best;
}

int CountIsomorphismClasses(const std::vector<StrategyProfile>& profiles) {
  std::set<std::pair<int, std::string>> classes;
  for (const auto& p : profiles) classes.emplace(p.num_agents(), CanonicalOwnershipString(p));
  return static_cast<int>(classes.size());
}

}  // namespace ncg
