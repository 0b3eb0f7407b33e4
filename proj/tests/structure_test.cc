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

#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "ncg/equilibrium.h"
#include "ncg/errors.h"
#include "ncg/structure.h"
#include "test_util.h"

namespace ncg {
namespace {

using testing::Config;
using testing::Make;
using testing::MakeGraph;

StrategyProfile DirectedCycle(int k) {
  StrategyProfile p(k);
  for (int i = 0; i < k; ++i) p.AddPurchase(i, (i + 1) % k);
  return p;
}

std::vector<std::pair<int, int>> EdgesOf(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

TEST_CASE("biconnected components") {
  CHECK(BiconnectedComponents(MakeGraph(4, {{0, 1}, {1, 2}, {1, 3}})).empty());

  auto comps = BiconnectedComponents(MakeGraph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}}));
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].vertices == std::vector<int>{0, 1, 2, 3});
  CHECK(comps[0].average_degree == Rational(2));
  CHECK(comps[0].Contains(2));
  CHECK_FALSE(comps[0].Contains(4));

  comps = BiconnectedComponents(MakeGraph(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}}));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].vertices.size() == 3);
  CHECK(comps[1].vertices.size() == 3);

  comps = BiconnectedComponents(MakeGraph(4, testing::Complete(4)));
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].average_degree == Rational(3));
  CHECK(comps[0].Degree(0) == 3);
  const Graph h = ComponentGraph(4, comps[0]);
  CHECK(h.num_edges() == 6);
}

TEST_CASE("shortest path tree") {
  const auto star = BuildShortestPathTree(MakeGraph(4, {{0, 1}, {0, 2}, {0, 3}}), 0);
  CHECK(star.parent[0] == -1);
  for (int v = 1; v < 4; ++v) CHECK(star.depth[v] == 1);

  const auto c4 = BuildShortestPathTree(MakeGraph(4, testing::Cycle(4)), 0);
  CHECK(c4.depth[2] == 2);
  CHECK(c4.parent[2] == 1);
  CHECK(c4.IsTreeEdge(1, 2));
  CHECK_FALSE(c4.IsTreeEdge(2, 3));

  const auto path = BuildShortestPathTree(MakeGraph(4, {{0, 1}, {1, 2}, {2, 3}}), 0);
  CHECK(path.parent == std::vector<int>{-1, 0, 1, 2});

  CHECK_THROWS_AS(BuildShortestPathTree(MakeGraph(3, {{0, 1}}), 0), NcgError);
}

TEST_CASE("min cycle through edge") {
  const OwnedGraph tree = BuildGraph(Make(3, {{0, 1}, {1, 2}}));
  CHECK_FALSE(MinCycleThroughEdge(tree, Edge(0, 1)).has_value());

  const OwnedGraph c5 = BuildGraph(DirectedCycle(5));
  for (const Edge& e : c5.edges()) {
    const auto c = MinCycleThroughEdge(c5, e);
    REQUIRE(c.has_value());
    CHECK(c->length == 5);
    CHECK(c->directed);
    CHECK(IsMinCycle(c5.graph(), c->vertices));
  }

  StrategyProfile k4(4);
  for (auto [u, v] : testing::Complete(4)) k4.AddPurchase(u, v);
  const auto t = MinCycleThroughEdge(BuildGraph(k4), Edge(0, 1));
  REQUIRE(t.has_value());
  CHECK(t->length == 3);
  CHECK(t->vertices.front() == 0);
  CHECK(t->vertices.back() == 1);
}

TEST_CASE("is min cycle and directed cycle") {
  const Graph k4 = MakeGraph(4, testing::Complete(4));
  CHECK(IsMinCycle(k4, {0, 1, 2}));
  CHECK_FALSE(IsMinCycle(k4, {0, 1, 2, 3}));
  CHECK(IsMinCycle(MakeGraph(6, testing::Cycle(6)), {0, 1, 2, 3, 4, 5}));
  CHECK(IsMinCycle(AllPairsDistances(k4), {0, 1, 2}));

  CHECK(IsDirectedCycle(Make(3, {{0, 1}, {1, 2}, {2, 0}}), {0, 1, 2}));
  CHECK_FALSE(IsDirectedCycle(Make(3, {{0, 1}, {0, 2}, {1, 2}}), {0, 1, 2}));
  CHECK(IsDirectedCycle(Make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), {0, 1, 2, 3}));
  CHECK(IsDirectedCycle(Make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}), {0, 3, 2, 1}));
}

TEST_CASE("girth") {
  CHECK_FALSE(Girth(MakeGraph(4, {{0, 1}, {1, 2}, {1, 3}})).has_value());
  CHECK(Girth(MakeGraph(5, testing::Cycle(5))) == 5);
  CHECK(Girth(MakeGraph(4, testing::Complete(4))) == 3);
  const auto c = ShortestCycle(MakeGraph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {3, 4}, {4, 5}, {5, 3}}));
  REQUIRE(c.has_value());
  CHECK(c->size() == 3);
}

TEST_CASE("two degree paths") {
  auto c6 = BiconnectedComponents(MakeGraph(6, testing::Cycle(6)));
  REQUIRE(c6.size() == 1);
  const auto cyc = FindTwoDegreePaths(c6[0]);
  CHECK(cyc.full_cycle);
  CHECK(cyc.paths.empty());

  // Hubs 0 and 1 joined by paths with 2, 2 and 3 interior vertices.
  const Graph theta = MakeGraph(9, {{0, 2}, {2, 3}, {3, 1}, {0, 4}, {4, 5}, {5, 1},
                                    {0, 6}, {6, 7}, {7, 8}, {8, 1}});
  auto comps = BiconnectedComponents(theta);
  REQUIRE(comps.size() == 1);
  const auto tp = FindTwoDegreePaths(comps[0]);
  CHECK_FALSE(tp.full_cycle);
  std::vector<int> ks;
  for (const auto& p : tp.paths) ks.push_back(p.k());
  std::sort(ks.begin(), ks.end());
  CHECK(ks == std::vector<int>{2, 2, 3});

  comps = BiconnectedComponents(MakeGraph(4, testing::Complete(4)));
  CHECK(FindTwoDegreePaths(comps[0]).paths.empty());
}

TEST_CASE("closest assignment") {
  const Graph g = MakeGraph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}});
  const auto comps = BiconnectedComponents(g);
  REQUIRE(comps.size() == 1);
  const auto s = ComputeClosestAssignment(g, comps[0]);
  CHECK(s.Members(0) == std::vector<int>{0, 4, 5});
  CHECK(s.Members(1) == std::vector<int>{1});

  const Graph c5 = MakeGraph(5, testing::Cycle(5));
  const auto only = ComputeClosestAssignment(c5, BiconnectedComponents(c5)[0]);
  for (int v = 0; v < 5; ++v) CHECK(only.Members(v) == std::vector<int>{v});

  CHECK_THROWS_AS(ComputeClosestAssignment(MakeGraph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {5, 6}}),
                                           comps[0]),
                  NcgError);
}

TEST_CASE("shopping vertices") {
  const StrategyProfile c4 = DirectedCycle(4);
  const auto comps = BiconnectedComponents(BuildGraph(c4).graph());
  REQUIRE(comps.size() == 1);
  const auto shop = ShoppingVertices(c4, comps[0], 0);
  CHECK(shop.nontree_edges == std::vector<Edge>{Edge(2, 3)});
  REQUIRE(shop.members.size() == 1);
  CHECK(shop.members[0].first == 2);
  CHECK(shop.LowestCommonAncestor(2, 3) == 0);
  CHECK(shop.TreeDistance(2, 3) == 3);
}

TEST_CASE("audit of a tree equilibrium passes") {
  const GameConfig config = Config(4, 5);
  const auto star = Make(4, {{1, 0}, {2, 0}, {3, 0}});
  REQUIRE(IsNash(config, star).is_nash);
  const AuditReport r = AuditEquilibriumStructure(config, star);
  CHECK(r.AllApplicablePassed());
  CHECK(r.checks.size() == AuditCheckIds().size());
  for (const auto& c : r.checks) {
    CHECK(c.passed);
    if (c.applicable && c.id.find("girth") != std::string::npos) CHECK(c.vacuous);
  }
}

TEST_CASE("audit flags short cycles") {
  const AuditReport r = AuditEquilibriumStructure(Config(4, 5), DirectedCycle(4));
  const CheckRecord* girth = r.Find("girth_at_least_alpha_plus_2");
  REQUIRE(girth != nullptr);
  CHECK(girth->applicable);
  CHECK_FALSE(girth->passed);
  REQUIRE_FALSE(girth->witnesses.empty());
  CHECK(girth->witnesses[0].vertices.size() == 4);
  CHECK_FALSE(r.AllApplicablePassed());
  CHECK(r.Find("no_such_check") == nullptr);
}

TEST_CASE("audit gates follow alpha") {
  const AuditReport r = AuditEquilibriumStructure(Config(4, Rational(1, 2)), DirectedCycle(4));
  CHECK(r.Find("girth_at_least_alpha_plus_2")->applicable);
  CHECK_FALSE(r.Find("min_cycles_directed")->applicable);
  CHECK_FALSE(r.Find("single_nontree_purchase")->applicable);
  CHECK_FALSE(r.Find("two_degree_path_length")->applicable);
}

TEST_CASE("crucial deviation") {
  const GameConfig config = Config(5, 3);
  const StrategyProfile c5 = DirectedCycle(5);
  const auto tree = FindQualifyingTree(c5, 0, 2);
  REQUIRE(tree.has_value());
  const CrucialDeviation d = BuildCrucialDeviation(config, c5, 0, 2, *tree);
  CHECK(d.new_usage_within_ecc_b_plus_1);
  CHECK(std::find(d.new_strategy.begin(), d.new_strategy.end(), 2) != d.new_strategy.end());

  // Agent 0 buys two links that miss the tree rooted at 3.
  const StrategyProfile two = Make(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}});
  const ShortestPathTree t3 = BuildShortestPathTree(BuildGraph(two).graph(), 4);
  const CrucialDeviation d2 = BuildCrucialDeviation(config, two, 0, 4, t3);
  CHECK(d2.new_usage_within_ecc_b_plus_1);
  CHECK(d2.extra_removed.size() == 1);
  CHECK(d2.implied_bound == Rational(d2.ecc_b + 1) - config.alpha);

  const StrategyProfile leaf = Make(3, {{1, 0}, {1, 2}});
  const ShortestPathTree t = BuildShortestPathTree(BuildGraph(leaf).graph(), 2);
  try {
    BuildCrucialDeviation(Config(3, 3), leaf, 0, 2, t);
    FAIL("expected PreconditionUnmet");
  } catch (const NcgError& e) {
    CHECK(e.code() == ErrorCode::kPreconditionUnmet);
  }
  CHECK_THROWS_AS(BuildCrucialDeviation(Config(3, 3), leaf, 2, 2, t), NcgError);
}

TEST_CASE("crucial deviation never lengthens beyond ecc(b)+1") {
  std::mt19937_64 rng(21);
  int exercised = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const StrategyProfile p = testing::RandomProfile(n, 0.5, false, rng);
    if (!IsConnected(BuildGraph(p).graph())) continue;
    const int a = static_cast<int>(rng() % n);
    const int b = static_cast<int>(rng() % n);
    if (a == b) continue;
    const auto tree = FindQualifyingTree(p, a, b);
    if (!tree) continue;
    const auto d = BuildCrucialDeviation(Config(n, 2), p, a, b, *tree);
    CHECK(d.new_usage_within_ecc_b_plus_1);
    ++exercised;
  }
  CHECK(exercised > 500);
}

TEST_CASE("structural algorithms agree with oracles on random graphs") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 1500; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const auto edges = ncg_oracle::RandomConnectedGraph(n, 0.45, rng);
    const Graph g = MakeGraph(n, edges);
    const int og = ncg_oracle::Girth(n, edges);
    const auto girth = Girth(g);
    CHECK(girth.value_or(0) == og);

    std::set<std::set<std::pair<int, int>>> blocks;
    for (const auto& c : BiconnectedComponents(g)) {
      std::set<std::pair<int, int>> s;
      for (const Edge& e : c.edges) s.emplace(e.u, e.v);
      blocks.insert(s);
    }
    CHECK(blocks == ncg_oracle::CyclicBlocks(n, EdgesOf(g)));

    const OwnedGraph owned = BuildGraph(testing::RandomProfile(n, 0.5, false, rng));
    for (const Edge& e : owned.edges()) {
      const auto c = MinCycleThroughEdge(owned, e);
      if (c) CHECK(IsMinCycle(owned.graph(), c->vertices));
    }
  }
}

}  // namespace
}  // namespace ncg
