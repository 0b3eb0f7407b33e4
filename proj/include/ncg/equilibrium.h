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

#ifndef NCG_EQUILIBRIUM_H_
#define NCG_EQUILIBRIUM_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncg/game.h"
#include "ncg/rational.h"

namespace ncg {

// Exact best responses enumerate all 2^(n-1) strategies of one agent.
inline constexpr int kMaxExhaustiveAgents = 20;
// Equilibrium enumeration walks all 3^(n(n-1)/2) single-owner profiles.
inline constexpr int kMaxEnumerationAgents = 6;
// Bitmask kernels; the single-move heuristic works up to this size.
inline constexpr int kMaxMaskAgents = 64;
// Vertex-permutation canonical forms are factorial in n.
inline constexpr int kMaxCanonicalAgents = 8;

struct BestResponse {
  std::vector<int> strategy;
  Cost cost;
};

// Minimum-cost strategy of `agent` with everyone else fixed. Ties go to the
// fewest purchases, then the lexicographically smallest purchase set.
// Throws NcgError(kSizeGuard) for n > kMaxExhaustiveAgents.
BestResponse BestResponseExact(const GameConfig& config, const StrategyProfile& profile,
                               int agent);

// A strictly improving unilateral change of one agent's strategy.
struct DeviationWitness {
  int agent = 0;
  std::vector<int> old_strategy;
  std::vector<int> new_strategy;
  Cost old_cost;
  Cost new_cost;
};

// Recomputes both costs from scratch (independently of the search kernels)
// and checks that they match the recorded ones and improve strictly.
bool VerifyWitness(const GameConfig& config, const StrategyProfile& profile,
                   const DeviationWitness& witness);

// `profile` with the witness's agent switched to its new strategy.
StrategyProfile ApplyWitness(const StrategyProfile& profile, const DeviationWitness& witness);

struct EquilibriumReport {
  bool is_nash = true;
  std::optional<DeviationWitness> witness;
  // Best-response cost of every agent, filled when requested.
  std::optional<std::vector<Cost>> per_agent_best;
};

// Nash iff no agent has a strictly cheaper strategy. When not, the witness is
// an optimal deviation of the lowest-indexed agent that can improve.
EquilibriumReport IsNash(const GameConfig& config, const StrategyProfile& profile,
                         bool per_agent_best = false);

// Best strictly improving single move (drop one purchase, buy one link to a
// non-neighbor, or swap one purchase to a non-neighbor). nullopt does not
// imply equilibrium.
std::optional<DeviationWitness> ImprovingMoveHeuristic(const GameConfig& config,
                                                       const StrategyProfile& profile,
                                                       int agent);

enum class Schedule { kRoundRobin, kUniformRandom };
enum class DynamicsOutcome { kConverged, kCycle, kBudgetExhausted };

const char* ScheduleName(Schedule s);
const char* DynamicsOutcomeName(DynamicsOutcome o);

struct DynamicsStep {
  int activation = 0;  // 0-based index of the activation that moved
  int agent = 0;
  std::vector<int> strategy_before;
  std::vector<int> strategy_after;
  Cost cost_before;
  Cost cost_after;
};

struct DynamicsTrace {
  std::vector<DynamicsStep> steps;
  DynamicsOutcome outcome = DynamicsOutcome::kBudgetExhausted;
  StrategyProfile final_profile;
  int activations = 0;
};

// Activates agents (round-robin from agent 0, or uniformly at random) and
// lets each switch to its exact best response when that is strictly better.
// Stops when every agent is stable (converged), when a round-robin state
// recurs (cycle), or after `budget` activations.
DynamicsTrace BestResponseDynamics(const GameConfig& config, const StrategyProfile& initial,
                                   Schedule schedule, std::uint64_t seed, int budget);

struct EnumerationResult {
  Rational alpha{1};
  int n = 0;
  std::vector<StrategyProfile> equilibria;  // sorted
  int tree_count = 0;
  int nontree_count = 0;
  std::optional<Rational> worst_cost;
  std::optional<Rational> best_cost;
};

// All pure Nash equilibria among single-owner profiles. Output does not
// depend on `workers`. Throws kSizeGuard for n > kMaxEnumerationAgents.
EnumerationResult EnumerateEquilibria(const GameConfig& config, int workers = 1);

// Seeded stochastic search for equilibria whose graph has a cycle. Every
// returned profile passed IsNash. Sorted, deduplicated, independent of
// `workers`.
std::vector<StrategyProfile> SearchNontreeEquilibria(const GameConfig& config,
                                                     std::uint64_t seed, int iterations,
                                                     int workers = 1);

// One char per vertex pair (u < v, lexicographic): '0' absent, '1' bought by
// u, '2' bought by v, '3' bought by both.
std::string OwnershipString(const StrategyProfile& profile);

// Vertex i of `profile` becomes perm[i].
StrategyProfile PermuteProfile(const StrategyProfile& profile, const std::vector<int>& perm);

// Lexicographically smallest ownership string over all relabelings.
std::string CanonicalOwnershipString(const StrategyProfile& profile);

int CountIsomorphismClasses(const std::vector<StrategyProfile>& profiles);

}  // namespace ncg

#endif  // NCG_EQUILIBRIUM_H_
