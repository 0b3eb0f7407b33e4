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

#include "oracles.h"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace ncg_oracle {

Matrix AdjacencyFromBuys(const Buys& buys) {
  const int n = static_cast<int>(buys.size());
  Matrix a(n, std::vector<int>(n, 0));
  for (int u = 0; u < n; ++u) {
    for (int v : buys[u]) a[u][v] = a[v][u] = 1;
  }
  return a;
}

Matrix FloydWarshall(const Matrix& adjacency) {
  const int n = static_cast<int>(adjacency.size());
  Matrix d(n, std::vector<int>(n, kInf));
  for (int i = 0; i < n; ++i) {
    d[i][i] = 0;
    for (int j = 0; j < n; ++j) {
      if (adjacency[i][j]) d[i][j] = 1;
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
      }
    }
  }
  return d;
}

PlainCost AgentCost(const Buys& buys, int agent) {
  const Matrix d = FloydWarshall(AdjacencyFromBuys(buys));
  PlainCost c;
  c.bought = static_cast<std::int64_t>(buys[agent].size());
  for (int x : d[agent]) c.ecc = std::max<std::int64_t>(c.ecc, x);
  if (c.ecc >= kInf) c.ecc = kInf;
  return c;
}

int Compare(std::int64_t p, std::int64_t q, const PlainCost& a, const PlainCost& b) {
  const bool ia = a.ecc >= kInf;
  const bool ib = b.ecc >= kInf;
  if (ia || ib) return ia == ib ? 0 : (ia ? 1 : -1);
  const std::int64_t lhs = p * a.bought + q * a.ecc;
  const std::int64_t rhs = p * b.bought + q * b.ecc;
  return lhs < rhs ? -1 : (lhs > rhs ? 1 : 0);
}

PlainCost BestCost(const Buys& buys, int agent, std::int64_t p, std::int64_t q) {
  const int n = static_cast<int>(buys.size());
  std::vector<int> others;
  for (int v = 0; v < n; ++v) {
    if (v != agent) others.push_back(v);
  }
  PlainCost best{0, kInf};
  bool first = true;
  for (std::uint32_t s = 0; s < (1u << others.size()); ++s) {
    Buys trial = buys;
    trial[agent].clear();
    for (size_t i = 0; i < others.size(); ++i) {
      if (s >> i & 1) trial[agent].push_back(others[i]);
    }
    const PlainCost c = AgentCost(trial, agent);
    if (first || Compare(p, q, c, best) < 0) best = c;
    first = false;
  }
  return best;
}

bool IsNash(const Buys& buys, std::int64_t p, std::int64_t q) {
  for (int u = 0; u < static_cast<int>(buys.size()); ++u) {
    if (Compare(p, q, BestCost(buys, u, p, q), AgentCost(buys, u)) < 0) return false;
  }
  return true;
}

std::vector<std::vector<int>> SimpleCycles(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [u, v] : edges) adj[u][v] = adj[v][u] = true;
  std::vector<std::vector<int>> cycles;
  std::vector<int> path;
  std::vector<bool> used(n, false);
  std::function<void(int, int)> extend = [&](int start, int at) {
    for (int next = start; next < n; ++next) {
      if (!adj[at][next]) continue;
      if (next == start) {
        // Keep one orientation: second vertex smaller than the last.
        if (path.size() >= 3 && path[1] < path.back()) cycles.push_back(path);
        continue;
      }
      if (used[next]) continue;
      used[next] = true;
      path.push_back(next);
      extend(start, next);
      path.pop_back();
      used[next] = false;
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    used.assign(n, false);
    used[s] = true;
    extend(s, s);
  }
  return cycles;
}

int Girth(int n, const std::vector<std::pair<int, int>>& edges) {
  int best = 0;
  for (const auto& c : SimpleCycles(n, edges)) {
    const int len = static_cast<int>(c.size());
    if (best == 0 || len < best) best = len;
  }
  return best;
}

std::set<std::set<std::pair<int, int>>> CyclicBlocks(
    int n, const std::vector<std::pair<int, int>>& edges) {
  auto norm = [](int a, int b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
  std::map<std::pair<int, int>, int> index;
  for (auto [u, v] : edges) index.emplace(norm(u, v), static_cast<int>(index.size()));
  std::vector<int> parent(index.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  std::vector<bool> on_cycle(index.size(), false);
  for (const auto& c : SimpleCycles(n, edges)) {
    const int first = index.at(norm(c[0], c[1]));
    for (size_t i = 0; i < c.size(); ++i) {
      const int e = index.at(norm(c[i], c[(i + 1) % c.size()]));
      on_cycle[e] = true;
      parent[find(e)] = find(first);
    }
  }
  std::map<int, std::set<std::pair<int, int>>> groups;
  for (const auto& [e, i] : index) {
    if (on_cycle[i]) groups[find(i)].insert(e);
  }
  std::set<std::set<std::pair<int, int>>> out;
  for (auto& [root, g] : groups) out.insert(g);
  return out;
}

bool Connected(int n, const std::vector<std::pair<int, int>>& edges) {
  Matrix a(n, std::vector<int>(n, 0));
  for (auto [u, v] : edges) a[u][v] = a[v][u] = 1;
  const Matrix d = FloydWarshall(a);
  for (int v = 0; v < n; ++v) {
    if (d[0][v] >= kInf) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> RandomConnectedGraph(int n, double density,
                                                      std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  while (true) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (coin(rng)) edges.emplace_back(u, v);
      }
    }
    if (Connected(n, edges)) return edges;
  }
}

}  // namespace ncg_oracle
