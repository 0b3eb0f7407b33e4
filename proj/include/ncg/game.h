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

#ifndef NCG_GAME_H_
#define NCG_GAME_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ncg/rational.h"

// Max-distance network creation game: agents buy links at unit price alpha
// and pay their eccentricity in the induced graph as usage cost.

namespace ncg {

struct GameConfig {
  int n = 1;
  Rational alpha{1};
};

// Throws NcgError(kInvalidArgument) unless n >= 1 and alpha > 0.
void ValidateConfig(const GameConfig& config);

// Undirected vertex pair, normalized so that u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Per-agent purchase sets, kept sorted. Agents are 0-indexed.
class StrategyProfile {
 public:
  StrategyProfile() = default;
  explicit StrategyProfile(int n) : buys_(n) {}

  // Validates (no self-purchase, indices in range, no duplicates) and sorts.
  static StrategyProfile FromPurchases(std::vector<std::vector<int>> buys);

  int num_agents() const { return static_cast<int>(buys_.size()); }
  const std::vector<int>& purchases(int agent) const { return buys_[agent]; }
  bool Buys(int buyer, int target) const;
  int TotalPurchases() const;

  void SetPurchases(int agent, std::vector<int> targets);
  void AddPurchase(int buyer, int target);
  void RemovePurchase(int buyer, int target);

  // Purchases as (buyer, target) pairs in (buyer, target) order.
  std::vector<std::pair<int, int>> PurchaseList() const;

  friend bool operator==(const StrategyProfile&, const StrategyProfile&) = default;
  friend auto operator<=>(const StrategyProfile& a, const StrategyProfile& b) {
    return a.buys_ <=> b.buys_;
  }

 private:
  std::vector<std::vector<int>> buys_;
};

// Simple undirected graph with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adjacency_(n) {}
  Graph(int n, const std::vector<Edge>& edges);

  int num_vertices() const { return static_cast<int>(adjacency_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool HasEdge(int u, int v) const;

  // Adds {u, v}; a no-op if present. Rejects self-loops.
  void AddEdge(int u, int v);
  void RemoveEdge(int u, int v);

 private:
  std::vector<std::vector<int>> adjacency_;
  std::vector<Edge> edges_;  // sorted
};

// Which endpoints paid for an edge.
enum OwnerBits : std::uint8_t {
  kOwnerNone = 0,
  kOwnerLow = 1,   // the endpoint with the smaller index
  kOwnerHigh = 2,  // the endpoint with the larger index
  kOwnerBoth = 3,
};

class OwnedGraph {
 public:
  OwnedGraph() = default;
  OwnedGraph(Graph graph, std::vector<std::uint8_t> owners)
      : graph_(std::move(graph)), owners_(std::move(owners)) {}

  const Graph& graph() const { return graph_; }
  int num_vertices() const { return graph_.num_vertices(); }
  const std::vector<Edge>& edges() const { return graph_.edges(); }

  // Owner bits of edge {u, v}; kOwnerNone if absent.
  std::uint8_t OwnerBitsOf(int u, int v) const;
  // Buyers of edge {u, v} in increasing order; empty if absent.
  std::vector<int> Owners(int u, int v) const;
  bool IsOwnedBy(int u, int v, int buyer) const;

 private:
  Graph graph_;
  std::vector<std::uint8_t> owners_;  // aligned with graph_.edges()
};

// n x n hop counts; kInfiniteHops across components.
class DistanceTable {
 public:
  DistanceTable() = default;
  explicit DistanceTable(int n) : n_(n), dist_(static_cast<size_t>(n) * n, kInfiniteHops) {}

  int size() const { return n_; }
  Hops at(int u, int v) const { return dist_[static_cast<size_t>(u) * n_ + v]; }
  void set(int u, int v, Hops d) { dist_[static_cast<size_t>(u) * n_ + v] = d; }

 private:
  int n_ = 0;
  std::vector<Hops> dist_;
};

struct Metrics {
  std::vector<Hops> ecc;
  Hops radius = kInfiniteHops;
  Hops diameter = kInfiniteHops;
  std::vector<int> centers;
};

struct CostBreakdown {
  Rational creation{0};
  Hops usage = 0;
  Cost total;
};

OwnedGraph BuildGraph(const StrategyProfile& profile);

// Hop distances from `source` by breadth-first search.
std::vector<Hops> BfsDistances(const Graph& graph, int source);
DistanceTable AllPairsDistances(const Graph& graph);
inline DistanceTable AllPairsDistances(const OwnedGraph& graph) {
  return AllPairsDistances(graph.graph());
}

// Eccentricities, radius, diameter and central vertices. Any infinite entry
// makes every eccentricity infinite.
Metrics ComputeMetrics(const DistanceTable& table);

bool IsConnected(const Graph& graph);
// Connected with exactly n - 1 edges.
bool IsTree(const Graph& graph);

CostBreakdown AgentCost(const GameConfig& config, const StrategyProfile& profile,
                        int agent);

// Sum of agent costs: alpha * (total purchases) + sum of eccentricities. A
// double-purchased edge is paid twice.
Cost SocialCost(const GameConfig& config, const StrategyProfile& profile);

// Largest agent total cost.
Cost MaxAgentCost(const GameConfig& config, const StrategyProfile& profile);

}  // namespace ncg

#endif  // NCG_GAME_H_
