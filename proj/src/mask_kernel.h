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

#ifndef NCG_SRC_MASK_KERNEL_H_
#define NCG_SRC_MASK_KERNEL_H_

#include <bit>
#include <cstdint>
#include <vector>

#include "ncg/game.h"
#include "ncg/rational.h"

// Bitmask representation of profiles for the exhaustive searches. Bit i of a
// mask stands for vertex i.

namespace ncg::internal {

using Mask = std::uint64_t;

inline Mask Bit(int i) { return Mask{1} << i; }
inline Mask FullMask(int n) { return n == 64 ? ~Mask{0} : Bit(n) - 1; }

struct MaskProfile {
  int n = 0;
  std::vector<Mask> buys;  // buys[u] = targets purchased by u
};

MaskProfile ToMaskProfile(const StrategyProfile& profile);
StrategyProfile FromMaskProfile(const MaskProfile& profile);
std::vector<int> MaskToVector(Mask m);
Mask VectorToMask(const std::vector<int>& v);

// adjacency[u] = neighbors of u in the induced graph.
std::vector<Mask> Adjacency(const MaskProfile& profile);

// Vertices that purchased a link to v.
Mask Incoming(const MaskProfile& profile, int v);

// Eccentricity of `source` when its neighborhood is `source_neighbors` and
// every other vertex u keeps adjacency[u] (bits pointing at `source` are
// irrelevant). kInfiniteHops if some vertex is unreachable.
inline Hops EccentricityWith(int n, int source, Mask source_neighbors,
                             const std::vector<Mask>& adjacency) {
  const Mask full = FullMask(n);
  Mask visited = Bit(source) | source_neighbors;
  if (visited == full) return source_neighbors ? 1 : 0;
  Mask frontier = source_neighbors & ~Bit(source);
  Hops level = 1;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adjacency[std::countr_zero(f)];
    next &= ~visited;
    if (!next) break;
    visited |= next;
    ++level;
    if (visited == full) return level;
    frontier = next;
  }
  return kInfiniteHops;
}

// alpha * purchases + usage, compared exactly without building rationals.
struct LinearCost {
  int purchases = 0;
  Hops usage = 0;
};

// Returns <0, 0, >0 as a is cheaper than, equal to, costlier than b.
inline int CompareCost(const Rational& alpha, const LinearCost& a, const LinearCost& b) {
  const bool a_inf = a.usage == kInfiniteHops;
  const bool b_inf = b.usage == kInfiniteHops;
  if (a_inf || b_inf) return static_cast<int>(a_inf) - static_cast<int>(b_inf);
  const __int128 p = alpha.numerator();
  const __int128 q = alpha.denominator();
  const __int128 lhs = p * a.purchases + q * a.usage;
  const __int128 rhs = p * b.purchases + q * b.usage;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

inline Cost ToCost(const Rational& alpha, const LinearCost& c) {
  if (c.usage == kInfiniteHops) return Cost::Infinite();
  return Cost(alpha * static_cast<std::int64_t>(c.purchases) +
              static_cast<std::int64_t>(c.usage));
}

struct MaskBestResponse {
  Mask strategy = 0;
  LinearCost cost;
};

// Exhaustive best response of agent v (n <= kMaxExhaustiveAgents).
MaskBestResponse BestResponseMask(const Rational& alpha, const MaskProfile& profile,
                                  const std::vector<Mask>& adjacency, int v);

// Current cost of agent v.
LinearCost CurrentCostMask(const MaskProfile& profile, const std::vector<Mask>& adjacency,
                           int v);

// First agent (lowest index) with a strictly better best response, or -1.
struct MaskNashResult {
  int agent = -1;
  MaskBestResponse best;
  LinearCost current;
};
MaskNashResult FindImprovingAgent(const Rational& alpha, const MaskProfile& profile);

bool IsConnectedMask(int n, const std::vector<Mask>& adjacency);

}  // namespace ncg::internal

#endif  // NCG_SRC_MASK_KERNEL_H_
