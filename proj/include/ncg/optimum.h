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

#ifndef NCG_OPTIMUM_H_
#define NCG_OPTIMUM_H_

#include <optional>
#include <string>
#include <vector>

#include "ncg/game.h"
#include "ncg/rational.h"

namespace ncg {

// Brute-force optima enumerate all 2^(n(n-1)/2) graphs.
inline constexpr int kMaxBruteForceOptimumAgents = 6;

enum class OptimumMethod { kAnalytic, kBruteForce };
const char* OptimumMethodName(OptimumMethod m);

struct OptimumResult {
  Rational cost{0};
  StrategyProfile witness;
  OptimumMethod method = OptimumMethod::kAnalytic;
  std::string shape;  // "star", "clique", "edge", "single", or "graph"
};

// Star centered at 0 with every leaf buying its link.
StrategyProfile StarProfile(int n);
// Complete graph, each link bought by its smaller endpoint.
StrategyProfile CliqueProfile(int n);

// min(star, clique); the star wins ties. n <= 2 handled directly.
OptimumResult OptimumAnalytic(const GameConfig& config);

// Exact minimum over all graphs (ownership does not change social cost).
// Ties go to the smallest edge-subset code. Throws kSizeGuard for n > 6.
OptimumResult OptimumBruteforce(const GameConfig& config, int workers = 1);

enum class PoAStatus { kDefined, kNoEquilibria };

struct PoAReport {
  Rational alpha{1};
  int n = 0;
  PoAStatus status = PoAStatus::kNoEquilibria;
  std::optional<Rational> worst_equilibrium_cost;
  Rational optimum_cost{0};
  std::optional<Rational> poa;  // absent unless status == kDefined
  int equilibria_considered = 0;
  bool exhaustive = false;
  bool optimum_crosschecked = false;
};

// Exhaustive over all equilibria (n <= 6).
PoAReport PriceOfAnarchy(const GameConfig& config, int workers = 1);

// Over a caller-supplied equilibrium list; marked non-exhaustive.
PoAReport PriceOfAnarchy(const GameConfig& config,
                         const std::vector<StrategyProfile>& equilibria);

struct TreePoACertificate {
  Hops diameter = 0;
  Rational diameter_bound{0};  // 2 alpha + 3
  bool diameter_ok = false;

  Rational cost{0};
  Rational optimum{0};
  Rational ratio{0};
  bool ratio_ok = false;  // ratio < 3

  int center = 0;
  int deepest_leaf = 0;
  Cost leaf_cost;
  Cost leaf_cost_with_link;  // after the leaf also buys (leaf, center)
  bool add_link_non_improving = false;

  bool AllPassed() const { return diameter_ok && ratio_ok && add_link_non_improving; }
};

// Throws kNotTree or kNotEquilibrium when the preconditions fail.
TreePoACertificate CertifyTreePoA(const GameConfig& config, const StrategyProfile& profile);

}  // namespace ncg

#endif  // NCG_OPTIMUM_H_
