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

#include "ncg/optimum.h"

#include <algorithm>
#include <thread>

#include "mask_kernel.h"
#include "ncg/equilibrium.h"
#include "ncg/errors.h"

namespace ncg {

using internal::Bit;
using internal::Mask;

const char* OptimumMethodName(OptimumMethod m) {
  return m == OptimumMethod::kAnalytic ? "analytic" : "brute-force";
}

StrategyProfile StarProfile(int n) {
  StrategyProfile p(n);
  for (int leaf = 1; leaf < n; ++leaf) p.AddPurchase(leaf, 0);
  return p;
}

StrategyProfile CliqueProfile(int n) {
  StrategyProfile p(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) p.AddPurchase(u, v);
  }
  return p;
}

OptimumResult OptimumAnalytic(const GameConfig& config) {
  ValidateConfig(config);
  const std::int64_t n = config.n;
  OptimumResult r;
  r.method = OptimumMethod::kAnalytic;
  if (n == 1) {
    r.cost = 0;
    r.witness = StrategyProfile(1);
    r.shape = "single";
    return r;
  }
  if (n == 2) {
    r.cost = config.alpha + 2;
    r.witness = StarProfile(2);
    r.shape = "edge";
    return r;
  }
  const Rational star = Rational(n - 1) * config.alpha + (2 * n - 1);
  const Rational clique = config.alpha * (n * (n - 1) / 2) + n;
  if (star <= clique) {
    r.cost = star;
    r.witness = StarProfile(config.n);
    r.shape = "star";
  } else {
    r.cost = clique;
    r.witness = CliqueProfile(config.n);
    r.shape = "clique";
  }
  return r;
}

OptimumResult OptimumBruteforce(const GameConfig& config, int workers) {
  ValidateConfig(config);
  NCG_CHECK(config.n <= kMaxBruteForceOptimumAgents, ErrorCode::kSizeGuard,
            "brute-force optimum needs n <= " +
                std::to_string(kMaxBruteForceOptimumAgents));
  const int n = config.n;
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  workers = std::max(1, workers);

  struct Best {
    std::uint64_t code = 0;
    internal::LinearCost cost{0, kInfiniteHops};
  };
  std::vector<Best> best(workers);
  auto scan = [&](int w) {
    const std::uint64_t begin = total * w / workers;
    const std::uint64_t end = total * (w + 1) / workers;
    std::vector<Mask> adj(n);
    for (std::uint64_t code = begin; code < end; ++code) {
      std::fill(adj.begin(), adj.end(), 0);
      int edges = 0;
      for (size_t i = 0; i < pairs.size(); ++i) {
        if (code >> i & 1) {
          adj[pairs[i].u] |= Bit(pairs[i].v);
          adj[pairs[i].v] |= Bit(pairs[i].u);
          ++edges;
        }
      }
      Hops sum = 0;
      for (int v = 0; v < n && sum != kInfiniteHops; ++v) {
        sum = AddHops(sum, internal::EccentricityWith(n, v, adj[v], adj));
      }
      const internal::LinearCost c{edges, sum};
      if (code == begin || internal::CompareCost(config.alpha, c, best[w].cost) < 0) {
        best[w] = {code, c};
      }
    }
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(scan, w);
    for (auto& t : threads) t.join();
  }
  Best winner = best[0];
  for (int w = 1; w < workers; ++w) {
    if (total * w / workers == total * (w + 1) / workers) continue;  // empty chunk
    if (internal::CompareCost(config.alpha, best[w].cost, winner.cost) < 0) winner = best[w];
  }

  OptimumResult r;
  r.method = OptimumMethod::kBruteForce;
  r.cost = internal::ToCost(config.alpha, winner.cost).value();
  r.witness = StrategyProfile(n);
  for (size_t i = 0; i < pairs.size(); ++i) {
    if (winner.code >> i & 1) r.witness.AddPurchase(pairs[i].u, pairs[i].v);
  }
  r.shape = "graph";
  return r;
}

namespace {

PoAReport BuildReport(const GameConfig& config, const std::vector<StrategyProfile>& equilibria,
                      bool exhaustive) {
  PoAReport report;
  report.alpha = config.alpha;
  report.n = config.n;
  report.exhaustive = exhaustive;
  report.optimum_cost = OptimumAnalytic(config).cost;
  if (config.n <= kMaxBruteForceOptimumAgents) {
    const Rational brute = OptimumBruteforce(config).cost;
    NCG_CHECK(brute == report.optimum_cost, ErrorCode::kInternal,
              "analytic optimum " + ToString(report.optimum_cost) +
                  " disagrees with brute force " + ToString(brute));
    report.optimum_crosschecked = true;
  }
  report.equilibria_considered = static_cast<int>(equilibria.size());
  for (const auto& eq : equilibria) {
    const Cost c = SocialCost(config, eq);
    NCG_CHECK(!c.is_infinite(), ErrorCode::kInvalidArgument,
              "supplied equilibrium has infinite cost");
    if (!report.worst_equilibrium_cost || c.value() > *report.worst_equilibrium_cost) {
      report.worst_equilibrium_cost = c.value();
    }
  }
  if (!report.worst_equilibrium_cost) {
    report.status = PoAStatus::kNoEquilibria;
    return report;
  }
  report.status = PoAStatus::kDefined;
  // Single agent: both costs are 0 and every outcome is optimal.
  report.poa = report.optimum_cost == Rational(0) ? Rational(1)
                                        : *report.worst_equilibrium_cost / report.optimum_cost;
  return report;
}

}  // namespace

PoAReport PriceOfAnarchy(const GameConfig& config, int workers) {
  const EnumerationResult all = EnumerateEquilibria(config, workers);
  return BuildReport(config, all.equilibria, /*exhaustive=*/true);
}

PoAReport PriceOfAnarchy(const GameConfig& config,
                         const std::vector<StrategyProfile>& equilibria) {
  ValidateConfig(config);
  return BuildReport(config, equilibria, /*exhaustive=*/false);
}

TreePoACertificate CertifyTreePoA(const GameConfig& config, const StrategyProfile& profile) {
  ValidateConfig(config);
  const OwnedGraph owned = BuildGraph(profile);
  NCG_CHECK(IsTree(owned.graph()), ErrorCode::kNotTree, "profile graph is not a tree");
  NCG_CHECK(IsNash(config, profile).is_nash, ErrorCode::kNotEquilibrium,
            "profile is not a Nash equilibrium");

  const DistanceTable dist = AllPairsDistances(owned);
  const Metrics m = ComputeMetrics(dist);
  TreePoACertificate cert;
  cert.diameter = m.diameter;
  cert.diameter_bound = 2 * config.alpha + 3;
  cert.diameter_ok = Rational(m.diameter) <= cert.diameter_bound;

  cert.cost = SocialCost(config, profile).value();
  cert.optimum = OptimumAnalytic(config).cost;
  cert.ratio = cert.optimum == Rational(0) ? Rational(1) : cert.cost / cert.optimum;
  cert.ratio_ok = cert.ratio < 3;

  cert.center = m.centers.front();
  cert.deepest_leaf = -1;
  for (int u = 0; u < config.n; ++u) {
    if (dist.at(u, cert.center) == m.radius && m.ecc[u] == m.diameter) {
      cert.deepest_leaf = u;
      break;
    }
  }
  NCG_CHECK(cert.deepest_leaf >= 0 || config.n == 1, ErrorCode::kInternal,
            "tree without a diametral vertex at radius from the center");

  if (config.n == 1) {
    cert.deepest_leaf = 0;
    cert.leaf_cost = cert.leaf_cost_with_link = Cost(0);
    cert.add_link_non_improving = true;
    return cert;
  }
  const int u = cert.deepest_leaf;
  cert.leaf_cost = AgentCost(config, profile, u).total;
  if (profile.Buys(u, cert.center)) {
    cert.leaf_cost_with_link = cert.leaf_cost;
  } else {
    StrategyProfile deviated = profile;
    deviated.AddPurchase(u, cert.center);
    cert.leaf_cost_with_link = AgentCost(config, deviated, u).total;
  }
  cert.add_link_non_improving = cert.leaf_cost_with_link >= cert.leaf_cost;
  return cert;
}

}  // namespace ncg
