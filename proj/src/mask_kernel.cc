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

#include "mask_kernel.h"

#include "ncg/equilibrium.h"
#include "ncg/errors.h"

namespace ncg::internal {

MaskProfile ToMaskProfile(const StrategyProfile& profile) {
  MaskProfile out;
  out.n = profile.num_agents();
  NCG_CHECK(out.n <= kMaxMaskAgents, ErrorCode::kSizeGuard,
            "bitmask kernels support at most 64 agents");
  out.buys.assign(out.n, 0);
  for (int u = 0; u < out.n; ++u) out.buys[u] = VectorToMask(profile.purchases(u));
  return out;
}

StrategyProfile FromMaskProfile(const MaskProfile& profile) {
  StrategyProfile out(profile.n);
  for (int u = 0; u < profile.n; ++u) out.SetPurchases(u, MaskToVector(profile.buys[u]));
  return out;
}

std::vector<int> MaskToVector(Mask m) {
  std::vector<int> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

Mask VectorToMask(const std::vector<int>& v) {
  Mask m = 0;
  for (int x : v) m |= Bit(x);
  return m;
}

std::vector<Mask> Adjacency(const MaskProfile& profile) {
  std::vector<Mask> adj(profile.n, 0);
  for (int u = 0; u < profile.n; ++u) {
    adj[u] |= profile.buys[u];
    for (Mask t = profile.buys[u]; t; t &= t - 1) adj[std::countr_zero(t)] |= Bit(u);
  }
  return adj;
}

Mask Incoming(const MaskProfile& profile, int v) {
  Mask in = 0;
  for (int w = 0; w < profile.n; ++w) {
    if (profile.buys[w] & Bit(v)) in |= Bit(w);
  }
  return in;
}

namespace {

// For equal-size sets: is a lexicographically smaller than b as sorted lists?
bool LexLess(Mask a, Mask b) {
  const Mask diff = a ^ b;
  if (!diff) return false;
  return a & (diff & (~diff + 1));
}

}  // namespace

MaskBestResponse BestResponseMask(const Rational& alpha, const MaskProfile& profile,
                                  const std::vector<Mask>& adjacency, int v) {
  const int n = profile.n;
  NCG_CHECK(n <= kMaxExhaustiveAgents, ErrorCode::kSizeGuard,
            "exact best response needs n <= " + std::to_string(kMaxExhaustiveAgents));
  const Mask incoming = Incoming(profile, v);
  const Mask low = Bit(v) - 1;
  const Hops min_usage = n > 1 ? 1 : 0;
  const std::uint64_t count = std::uint64_t{1} << (n - 1);

  MaskBestResponse best;
  best.strategy = 0;
  best.cost = {0, EccentricityWith(n, v, incoming, adjacency)};
  for (std::uint64_t sub = 1; sub < count; ++sub) {
    const int k = std::popcount(sub);
    if (CompareCost(alpha, {k, min_usage}, best.cost) > 0) continue;
    const Mask strategy = (sub & low) | ((sub & ~low) << 1);
    const LinearCost cand{k, EccentricityWith(n, v, incoming | strategy, adjacency)};
    const int cmp = CompareCost(alpha, cand, best.cost);
    if (cmp < 0 || (cmp == 0 && (k < best.cost.purchases ||
                                 (k == best.cost.purchases &&
                                  LexLess(strategy, best.strategy))))) {
      best.strategy = strategy;
      best.cost = cand;
    }
  }
  return best;
}

LinearCost CurrentCostMask(const MaskProfile& profile, const std::vector<Mask>& adjacency,
                           int v) {
  return {std::popcount(profile.buys[v]),
          EccentricityWith(profile.n, v, adjacency[v], adjacency)};
}

MaskNashResult FindImprovingAgent(const Rational& alpha, const MaskProfile& profile) {
  const auto adjacency = Adjacency(profile);
  MaskNashResult result;
  for (int v = 0; v < profile.n; ++v) {
    const LinearCost current = CurrentCostMask(profile, adjacency, v);
    const MaskBestResponse best = BestResponseMask(alpha, profile, adjacency, v);
    if (CompareCost(alpha, best.cost, current) < 0) {
      result.agent = v;
      result.best = best;
      result.current = current;
      return result;
    }
  }
  return result;
}

bool IsConnectedMask(int n, const std::vector<Mask>& adjacency) {
  if (n <= 1) return true;
  return EccentricityWith(n, 0, adjacency[0], adjacency) != kInfiniteHops;
}

}  // namespace ncg::internal
