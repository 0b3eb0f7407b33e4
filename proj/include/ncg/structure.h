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

#ifndef NCG_STRUCTURE_H_
#define NCG_STRUCTURE_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncg/game.h"
#include "ncg/rational.h"

// Structural objects of equilibrium graphs (blocks, shortest-path trees,
// min cycles, degree-2 paths, shopping vertices) and an audit that evaluates
// the known structural properties of equilibria on a concrete profile.

namespace ncg {

// A maximal biconnected subgraph with at least three vertices.
struct BiconnectedComponent {
  std::vector<int> vertices;  // sorted
  std::vector<Edge> edges;    // sorted
  Rational average_degree{0};

  bool Contains(int v) const;
  int Degree(int v) const;
};

// Blocks with >= 3 vertices, sorted by their vertex lists. Empty for forests.
std::vector<BiconnectedComponent> BiconnectedComponents(const Graph& graph);

// The component's own graph on the full vertex range (outside vertices are
// isolated).
Graph ComponentGraph(int n, const BiconnectedComponent& component);

struct ShortestPathTree {
  int root = 0;
  std::vector<int> parent;  // -1 for the root
  std::vector<Hops> depth;

  bool IsTreeEdge(int u, int v) const { return parent[u] == v || parent[v] == u; }
};

// BFS tree where every vertex takes its smallest-index neighbor one level up
// as parent. Throws NcgError(kDisconnected) if a vertex is unreachable.
ShortestPathTree BuildShortestPathTree(const Graph& graph, int root);

// Vertices of a shortest cycle through `edge` in cyclic order, starting
// edge.u and ending edge.v; nullopt if `edge` is a bridge.
std::optional<std::vector<int>> ShortestCycleThroughEdge(const Graph& graph, Edge edge);

struct MinCycle {
  std::vector<int> vertices;  // cyclic order
  int length = 0;
  bool directed = false;
  std::vector<std::vector<int>> owners;  // owners of (vertices[i], vertices[i+1])
};

// Shortest cycle through `edge`, which always is a min cycle (checked on
// every call; a violation throws kInternal). nullopt for bridges.
std::optional<MinCycle> MinCycleThroughEdge(const OwnedGraph& graph, Edge edge);

// Every pair of cycle vertices is as close along the cycle as in the graph.
bool IsMinCycle(const Graph& graph, const std::vector<int>& cycle);
bool IsMinCycle(const DistanceTable& distances, const std::vector<int>& cycle);

// Some orientation of the cycle has every vertex buying the link to its
// successor.
bool IsDirectedCycle(const StrategyProfile& profile, const std::vector<int>& cycle);

std::optional<int> Girth(const Graph& graph);
std::optional<std::vector<int>> ShortestCycle(const Graph& graph);

// x_0, x_1..x_k, x_{k+1}: interior vertices have degree 2 in the component,
// endpoints do not.
struct TwoDegreePath {
  int start = 0;
  int end = 0;
  std::vector<int> interior;

  int k() const { return static_cast<int>(interior.size()); }
};

struct TwoDegreePaths {
  std::vector<TwoDegreePath> paths;
  // The component is a bare cycle: every vertex has degree 2, so no path has
  // valid endpoints.
  bool full_cycle = false;
};

TwoDegreePaths FindTwoDegreePaths(const BiconnectedComponent& component);

// Every vertex of the graph mapped to its unique closest component vertex.
struct ClosestAssignment {
  std::vector<int> closest;

  std::vector<int> Members(int component_vertex) const;
};

// Throws kDisconnected if the graph is disconnected, kAssignmentAmbiguous if
// a vertex has two closest component vertices.
ClosestAssignment ComputeClosestAssignment(const Graph& graph,
                                           const BiconnectedComponent& component);

// Component vertices buying at least one component edge outside the
// shortest-path tree. The tree restricted to the component is itself a tree,
// rooted at the component vertex nearest the global root.
struct ShoppingVertexSet {
  ShortestPathTree tree;
  int component_root = 0;
  std::vector<int> component_parent;  // -1 for root and non-members
  std::vector<Hops> component_depth;  // -1 for non-members
  std::vector<Edge> nontree_edges;
  std::vector<std::pair<int, std::vector<Edge>>> members;  // sorted by vertex

  int LowestCommonAncestor(int a, int b) const;
  int TreeDistance(int a, int b) const;
};

ShoppingVertexSet ShoppingVertices(const StrategyProfile& profile,
                                   const BiconnectedComponent& component, int root);

// Audit ----------------------------------------------------------------------

struct Witness {
  std::string kind;  // "cycle", "vertex", "vertex_pair", "path", "component"
  std::vector<int> vertices;
  std::string detail;

  std::string Summary() const;
};

struct CheckRecord {
  std::string id;
  std::string gate;  // alpha range under which the property is claimed
  bool applicable = false;
  bool vacuous = false;  // applicable, but nothing to check
  bool passed = true;
  std::string note;
  std::vector<Witness> witnesses;
};

struct AuditReport {
  std::vector<CheckRecord> checks;

  bool AllApplicablePassed() const;
  int FailureCount() const;
  const CheckRecord* Find(const std::string& id) const;
};

// Check ids, in report order.
const std::vector<std::string>& AuditCheckIds();

// Runs on any profile; a failing check is meaningful only for equilibria.
AuditReport AuditEquilibriumStructure(const GameConfig& config,
                                      const StrategyProfile& profile);

// Swap-to-b deviation -------------------------------------------------------

// Agent `a` swaps a purchased link (a, a1) for (a, b), where a1 is a's parent
// in a shortest-path tree at b or (a, a1) is a non-tree edge, and drops every
// other purchased non-tree link.
struct CrucialDeviation {
  int a = 0;
  int b = 0;
  int a1 = 0;
  std::vector<int> extra_removed;
  std::vector<int> old_strategy;
  std::vector<int> new_strategy;
  Cost old_cost;
  Cost new_cost;
  Hops old_usage = 0;
  Hops new_usage = 0;
  Hops ecc_b = 0;
  // ecc(b) + 1 - alpha * |extra_removed|: the bound on ecc(a) implied if the
  // profile is an equilibrium.
  Rational implied_bound{0};
  bool new_usage_within_ecc_b_plus_1 = false;
  bool old_usage_within_implied_bound = false;
};

// Throws kPreconditionUnmet when `a` buys no qualifying link under
// `tree_at_b` (or a == b), kInvalidArgument if the tree is not rooted at b.
CrucialDeviation BuildCrucialDeviation(const GameConfig& config,
                                       const StrategyProfile& profile, int a, int b,
                                       const ShortestPathTree& tree_at_b);

// A shortest-path tree at b under which `a` has a qualifying purchase, found
// by re-choosing parents among equally short options.
std::optional<ShortestPathTree> FindQualifyingTree(const StrategyProfile& profile, int a,
                                                   int b);

}  // namespace ncg

#endif  // NCG_STRUCTURE_H_
