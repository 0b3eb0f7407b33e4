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

#ifndef NCG_TESTS_TEST_UTIL_H_
#define NCG_TESTS_TEST_UTIL_H_

#include <random>
#include <utility>
#include <vector>

#include "ncg/game.h"
#include "oracles.h"

namespace ncg::testing {

// Profile from (buyer, target) pairs.
inline StrategyProfile Make(int n, const std::vector<std::pair<int, int>>& buys) {
  StrategyProfile p(n);
  for (auto [u, v] : buys) p.AddPurchase(u, v);
  return p;
}

inline GameConfig Config(int n, Rational alpha) { return GameConfig{n, alpha}; }

inline ncg_oracle::Buys ToOracle(const StrategyProfile& p) {
  ncg_oracle::Buys b(p.num_agents());
  for (int u = 0; u < p.num_agents(); ++u) b[u] = p.purchases(u);
  return b;
}

inline Graph MakeGraph(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.AddEdge(u, v);
  return g;
}

inline std::vector<std::pair<int, int>> Cycle(int k) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
  return e;
}

inline std::vector<std::pair<int, int>> Complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  }
  return e;
}

// Each unordered pair independently: absent, low buys, high buys, or both
// (both only when allow_double).
inline StrategyProfile RandomProfile(int n, double density, bool allow_double,
                                     std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  StrategyProfile p(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (unit(rng) >= density) continue;
      const double r = unit(rng);
      if (allow_double && r < 0.1) {
        p.AddPurchase(u, v);
        p.AddPurchase(v, u);
      } else if (r < 0.55) {
        p.AddPurchase(u, v);
      } else {
        p.AddPurchase(v, u);
      }
    }
  }
  return p;
}

// All 3^(n(n-1)/2) single-owner profiles, in base-3 order over pairs.
template <typename Fn>
void ForEachProfile(int n, Fn fn) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  long total = 1;
  for (size_t i = 0; i < pairs.size(); ++i) total *= 3;
  for (long code = 0; code < total; ++code) {
    StrategyProfile p(n);
    long c = code;
    for (auto [u, v] : pairs) {
      const int digit = static_cast<int>(c % 3);
      c /= 3;
      if (digit == 1) p.AddPurchase(u, v);
      if (digit == 2) p.AddPurchase(v, u);
    }
    fn(p);
  }
}

}  // namespace ncg::testing

#endif  // NCG_TESTS_TEST_UTIL_H_
