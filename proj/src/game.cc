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

#include "ncg/game.h"

#include <algorithm>
#include <deque>

#include "ncg/errors.h"

namespace ncg {

void ValidateConfig(const GameConfig& config) {
  NCG_CHECK(config.n >= 1, ErrorCode::kInvalidArgument,
            "agent count must be at least 1");
  NCG_CHECK(config.alpha > 0, ErrorCode::kInvalidArgument,
            "alpha must be positive, got " + ToString(config.alpha));
}

// StrategyProfile ------------------------------------------------------------

namespace {

void CheckTarget(int n, int buyer, int target) {
  NCG_CHECK(buyer >= 0 && buyer < n, ErrorCode::kBadVertexIndex,
            "agent " + std::to_string(buyer) + " out of range");
  NCG_CHECK(target >= 0 && target < n, ErrorCode::kBadVertexIndex,
            "target " + std::to_string(target) + " out of range");
  NCG_CHECK(target != buyer, ErrorCode::kBadVertexIndex,
            "agent " + std::to_string(buyer) + " cannot buy a link to itself");
}

}  // namespace

StrategyProfile StrategyProfile::FromPurchases(std::vector<std::vector<int>> buys) {
  StrategyProfile profile(static_cast<int>(buys.size()));
  for (int agent = 0; agent < profile.num_agents(); ++agent) {
    profile.SetPurchases(agent, std::move(buys[agent]));
  }
  return profile;
}

bool StrategyProfile::Buys(int buyer, int target) const {
  const auto& s = buys_[buyer];
  return std::binary_search(s.begin(), s.end(), target);
}

int StrategyProfile::TotalPurchases() const {
  int total = 0;
  for (const auto& s : buys_) total += static_cast<int>(s.size());
  return total;
}

void StrategyProfile::SetPurchases(int agent, std::vector<int> targets) {
  for (int t : targets) CheckTarget(num_agents(), agent, t);
  std::sort(targets.begin(), targets.end());
  NCG_CHECK(std::adjacent_find(targets.begin(), targets.end()) == targets.end(),
            ErrorCode::kDuplicateBuy,
            "agent " + std::to_string(agent) + " buys the same link twice");
  buys_[agent] = std::move(targets);
}

void StrategyProfile::AddPurchase(int buyer, int target) {
  CheckTarget(num_agents(), buyer, target);
  auto& s = buys_[buyer];
  auto it = std::lower_bound(s.begin(), s.end(), target);
  NCG_CHECK(it == s.end() || *it != target, ErrorCode::kDuplicateBuy,
            "agent " + std::to_string(buyer) + " already buys " +
                std::to_string(target));
  s.insert(it, target);
}

void StrategyProfile::RemovePurchase(int buyer, int target) {
  auto& s = buys_[buyer];
  auto it = std::lower_bound(s.begin(), s.end(), target);
  NCG_CHECK(it != s.end() && *it == target, ErrorCode::kInvalidArgument,
            "agent " + std::to_string(buyer) + " does not buy " +
                std::to_string(target));
  s.erase(it);
}

std::vector<std::pair<int, int>> StrategyProfile::PurchaseList() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < num_agents(); ++u) {
    for (int v : buys_[u]) out.emplace_back(u, v);
  }
  return out;
}

// Graph ----------------------------------------------------------------------

Graph::Graph(int n, const std::vector<Edge>& edges) : adjacency_(n) {
  for (const Edge& e : edges) AddEdge(e.u, e.v);
}

bool Graph::HasEdge(int u, int v) const {
  const auto& a = adjacency_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

void Graph::AddEdge(int u, int v) {
  NCG_CHECK(u != v, ErrorCode::kInvalidArgument, "self-loop");
  NCG_CHECK(u >= 0 && v >= 0 && u < num_vertices() && v < num_vertices(),
            ErrorCode::kBadVertexIndex, "edge endpoint out of range");
  if (HasEdge(u, v)) return;
  auto insert = [](std::vector<int>& list, int x) {
    list.insert(std::lower_bound(list.begin(), list.end(), x), x);
  };
  insert(adjacency_[u], v);
  insert(adjacency_[v], u);
  const Edge e(u, v);
  edges_.insert(std::lower_bound(edges_.begin(), edges_.end(), e), e);
}

void Graph::RemoveEdge(int u, int v) {
  if (!HasEdge(u, v)) return;
  auto erase = [](std::vector<int>& list, int x) {
    list.erase(std::lower_bound(list.begin(), list.end(), x));
  };
  erase(adjacency_[u], v);
  erase(adjacency_[v], u);
  edges_.erase(std::lower_bound(edges_.begin(), edges_.end(), Edge(u, v)));
}

// OwnedGraph -----------------------------------------------------------------

std::uint8_t OwnedGraph::OwnerBitsOf(int u, int v) const {
  const auto& edges = graph_.edges();
  const Edge e(u, v);
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || *it != e) return kOwnerNone;
  return owners_[it - edges.begin()];
}

std::vector<int> OwnedGraph::Owners(int u, int v) const {
  const Edge e(u, v);
  const std::uint8_t bits = OwnerBitsOf(u, v);
  std::vector<int> out;
  if (bits & kOwnerLow) out.push_back(e.u);
  if (bits & kOwnerHigh) out.push_back(e.v);
  return out;
}

bool OwnedGraph::IsOwnedBy(int u, int v, int buyer) const {
  const Edge e(u, v);
  const std::uint8_t bits = OwnerBitsOf(u, v);
  if (buyer == e.u) return bits & kOwnerLow;
  if (buyer == e.v) return bits & kOwnerHigh;
  return false;
}

OwnedGraph BuildGraph(const StrategyProfile& profile) {
  const int n = profile.num_agents();
  Graph graph(n);
  for (const auto& [buyer, target] : profile.PurchaseList()) {
    graph.AddEdge(buyer, target);
  }
  std::vector<std::uint8_t> owners(graph.edges().size(), kOwnerNone);
  for (const auto& [buyer, target] : profile.PurchaseList()) {
    const Edge e(buyer, target);
    const auto& edges = graph.edges();
    const auto idx = std::lower_bound(edges.begin(), edges.end(), e) - edges.begin();
    owners[idx] |= (buyer == e.u) ? kOwnerLow : kOwnerHigh;
  }
  return OwnedGraph(std::move(graph), std::move(owners));
}

// Distances ------------------------------------------------------------------

std::vector<Hops> BfsDistances(const Graph& graph, int source) {
  std::vector<Hops> dist(graph.num_vertices(), kInfiniteHops);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : graph.neighbors(u)) {
      if (dist[w] == kInfiniteHops) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

DistanceTable AllPairsDistances(const Graph& graph) {
  const int n = graph.num_vertices();
  DistanceTable table(n);
  for (int s = 0; s < n; ++s) {
    const auto dist = BfsDistances(graph, s);
    for (int t = 0; t < n; ++t) table.set(s, t, dist[t]);
  }
  return table;
}

Metrics ComputeMetrics(const DistanceTable& table) {
  const int n = table.size();
  Metrics m;
  m.ecc.assign(n, 0);
  bool disconnected = false;
  for (int u = 0; u < n && !disconnected; ++u) {
    for (int v = 0; v < n; ++v) {
      const Hops d = table.at(u, v);
      if (d == kInfiniteHops) {
        disconnected = true;
        break;
      }
      m.ecc[u] = std::max(m.ecc[u], d);
    }
  }
  if (disconnected) {
    m.ecc.assign(n, kInfiniteHops);
    m.radius = m.diameter = kInfiniteHops;
    m.centers.resize(n);
    for (int v = 0; v < n; ++v) m.centers[v] = v;
    return m;
  }
  m.radius = *std::min_element(m.ecc.begin(), m.ecc.end());
  m.diameter = *std::max_element(m.ecc.begin(), m.ecc.end());
  for (int v = 0; v < n; ++v) {
    if (m.ecc[v] == m.radius) m.centers.push_back(v);
  }
  return m;
}

bool IsConnected(const Graph& graph) {
  if (graph.num_vertices() == 0) return true;
  const auto dist = BfsDistances(graph, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](Hops d) { return d == kInfiniteHops; });
}

bool IsTree(const Graph& graph) {
  return graph.num_edges() == graph.num_vertices() - 1 && IsConnected(graph);
}

// Costs ----------------------------------------------------------------------

namespace {

void CheckProfileMatches(const GameConfig& config, const StrategyProfile& profile) {
  ValidateConfig(config);
  NCG_CHECK(profile.num_agents() == config.n, ErrorCode::kInvalidArgument,
            "profile has " + std::to_string(profile.num_agents()) +
                " agents, config says " + std::to_string(config.n));
}

Hops Eccentricity(const Graph& graph, int v) {
  const auto dist = BfsDistances(graph, v);
  return *std::max_element(dist.begin(), dist.end());
}

}  // namespace

CostBreakdown AgentCost(const GameConfig& config, const StrategyProfile& profile,
                        int agent) {
  CheckProfileMatches(config, profile);
  NCG_CHECK(agent >= 0 && agent < config.n, ErrorCode::kBadVertexIndex,
            "agent " + std::to_string(agent) + " out of range");
  const OwnedGraph g = BuildGraph(profile);
  CostBreakdown c;
  c.creation = config.alpha * static_cast<std::int64_t>(profile.purchases(agent).size());
  c.usage = Eccentricity(g.graph(), agent);
  c.total = Cost(c.creation) + Cost::FromHops(c.usage);
  return c;
}

Cost SocialCost(const GameConfig& config, const StrategyProfile& profile) {
  CheckProfileMatches(config, profile);
  const OwnedGraph g = BuildGraph(profile);
  Cost total = config.alpha * static_cast<std::int64_t>(profile.TotalPurchases());
  for (int v = 0; v < config.n; ++v) {
    total += Cost::FromHops(Eccentricity(g.graph(), v));
  }
  return total;
}

Cost MaxAgentCost(const GameConfig& config, const StrategyProfile& profile) {
  CheckProfileMatches(config, profile);
  const OwnedGraph g = BuildGraph(profile);
  Cost worst(0);
  for (int v = 0; v < config.n; ++v) {
    const Cost c = Cost(config.alpha * static_cast<std::int64_t>(
                            profile.purchases(v).size())) +
                   Cost::FromHops(Eccentricity(g.graph(), v));
    if (c > worst) worst = c;
  }
  return worst;
}

}  // namespace ncg
