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

#include <random>

#include "doctest.h"
#include "ncg/errors.h"
#include "ncg/game.h"
#include "ncg/profile_io.h"
#include "test_util.h"

namespace ncg {
namespace {

using testing::Config;
using testing::Make;

TEST_CASE("rational parse and print") {
  CHECK(ParseRational("19/2") == Rational(19, 2));
  CHECK(ParseRational("4/2") == Rational(2));
  CHECK(ParseRational("-3") == Rational(-3));
  CHECK(ToString(Rational(19, 2)) == "19/2");
  CHECK(ToString(Rational(6, 3)) == "2");
  CHECK_THROWS_AS(ParseRational("1/0"), NcgError);
  CHECK_THROWS_AS(ParseRational("1/-2"), NcgError);
  CHECK_THROWS_AS(ParseRational("abc"), NcgError);
  CHECK_THROWS_AS(ParseRational("1/"), NcgError);
  CHECK_THROWS_AS(ParseRational("+1"), NcgError);
  CHECK_THROWS_AS(ParseRational(""), NcgError);
  CHECK(Ceil(Rational(7, 2)) == 4);
  CHECK(Ceil(Rational(4)) == 4);
  CHECK(Ceil(Rational(-7, 2)) == -3);
}

TEST_CASE("cost infinity") {
  const Cost inf = Cost::Infinite();
  CHECK(Cost(5) < inf);
  CHECK_FALSE(inf < inf);
  CHECK(inf == inf);
  CHECK((inf + Cost(1)).is_infinite());
  CHECK(Cost::FromHops(kInfiniteHops).is_infinite());
  CHECK(Cost(Rational(1, 2)) + Cost(2) == Cost(Rational(5, 2)));
  CHECK(inf.ToString() == "inf");
  CHECK(AddHops(3, kInfiniteHops) == kInfiniteHops);
}

TEST_CASE("config validation") {
  CHECK_NOTHROW(ValidateConfig(Config(3, 5)));
  CHECK_THROWS_AS(ValidateConfig(Config(0, 5)), NcgError);
  CHECK_THROWS_AS(ValidateConfig(Config(3, 0)), NcgError);
  CHECK_THROWS_AS(ValidateConfig(Config(3, -1)), NcgError);
}

TEST_CASE("profile mutation errors") {
  StrategyProfile p(3);
  CHECK_THROWS_AS(p.AddPurchase(0, 0), NcgError);
  CHECK_THROWS_AS(p.AddPurchase(0, 3), NcgError);
  p.AddPurchase(0, 1);
  CHECK_THROWS_AS(p.AddPurchase(0, 1), NcgError);
  CHECK_THROWS_AS(p.SetPurchases(1, {2, 2}), NcgError);
  CHECK_THROWS_AS(StrategyProfile::FromPurchases({{1}, {5}}), NcgError);
  p.SetPurchases(2, {1, 0});
  CHECK(p.purchases(2) == std::vector<int>{0, 1});
}

TEST_CASE("build graph") {
  auto g = BuildGraph(Make(2, {{0, 1}}));
  CHECK(g.graph().num_edges() == 1);
  CHECK(g.Owners(0, 1) == std::vector<int>{0});
  g = BuildGraph(Make(2, {{0, 1}, {1, 0}}));
  CHECK(g.graph().num_edges() == 1);
  CHECK(g.Owners(0, 1) == std::vector<int>{0, 1});
  CHECK(g.OwnerBitsOf(1, 0) == kOwnerBoth);
  g = BuildGraph(Make(3, {{0, 1}, {1, 2}}));
  CHECK(g.graph().num_edges() == 2);
  CHECK(g.Owners(0, 1) == std::vector<int>{0});
  CHECK(g.Owners(1, 2) == std::vector<int>{1});
  CHECK(g.Owners(0, 2).empty());
  CHECK(g.IsOwnedBy(1, 2, 1));
  CHECK_FALSE(g.IsOwnedBy(1, 2, 2));
}

TEST_CASE("distances and metrics") {
  const auto path = AllPairsDistances(BuildGraph(Make(3, {{0, 1}, {1, 2}})));
  CHECK(path.at(0, 2) == 2);
  const auto iso = AllPairsDistances(BuildGraph(StrategyProfile(2)));
  CHECK(iso.at(0, 1) == kInfiniteHops);
  const auto k4 = AllPairsDistances(testing::MakeGraph(4, testing::Complete(4)));
  for (int u = 0; u < 4; ++u) {
    for (int v = 0; v < 4; ++v) CHECK(k4.at(u, v) == (u == v ? 0 : 1));
  }

  const auto star = ComputeMetrics(AllPairsDistances(
      BuildGraph(Make(5, {{1, 0}, {2, 0}, {3, 0}, {4, 0}}))));
  CHECK(star.ecc[0] == 1);
  CHECK(star.radius == 1);
  CHECK(star.diameter == 2);
  CHECK(star.centers == std::vector<int>{0});

  const auto p3 = ComputeMetrics(path);
  CHECK(p3.radius == 1);
  CHECK(p3.diameter == 2);
  CHECK(p3.centers == std::vector<int>{1});

  const auto disc = ComputeMetrics(AllPairsDistances(BuildGraph(Make(3, {{0, 1}}))));
  CHECK(disc.radius == kInfiniteHops);
  CHECK(disc.diameter == kInfiniteHops);
}

TEST_CASE("agent and social cost") {
  const auto star = Make(3, {{0, 1}, {2, 1}});
  const auto a0 = AgentCost(Config(3, 5), star, 0);
  CHECK(a0.creation == Rational(5));
  CHECK(a0.usage == 2);
  CHECK(a0.total == Cost(7));
  const auto center = AgentCost(Config(3, 5), star, 1);
  CHECK(center.creation == Rational(0));
  CHECK(center.usage == 1);
  CHECK(center.total == Cost(1));
  CHECK(AgentCost(Config(3, 5), Make(3, {{0, 1}}), 2).total.is_infinite());

  CHECK(SocialCost(Config(5, 1), Make(5, {{1, 0}, {2, 0}, {3, 0}, {4, 0}})) == Cost(13));
  StrategyProfile clique(5);
  for (int u = 0; u < 5; ++u) {
    for (int v = u + 1; v < 5; ++v) clique.AddPurchase(u, v);
  }
  CHECK(SocialCost(Config(5, Rational(1, 4)), clique) == Cost(Rational(15, 2)));
  CHECK(SocialCost(Config(2, 1), Make(2, {{0, 1}, {1, 0}})) == Cost(4));
  CHECK(SocialCost(Config(3, 1), Make(3, {{0, 1}})).is_infinite());
  CHECK(MaxAgentCost(Config(3, 5), star) == Cost(7));
}

TEST_CASE("graph predicates") {
  CHECK(IsConnected(Graph(1)));
  CHECK(IsTree(Graph(1)));
  CHECK(IsTree(testing::MakeGraph(4, {{0, 1}, {1, 2}, {1, 3}})));
  CHECK_FALSE(IsTree(testing::MakeGraph(3, testing::Cycle(3))));
  CHECK_FALSE(IsTree(testing::MakeGraph(4, {{0, 1}, {2, 3}})));
  CHECK_FALSE(IsConnected(testing::MakeGraph(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("game-core properties over random profiles") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const double density = 0.15 + 0.7 * static_cast<double>(rng() % 100) / 100.0;
    const StrategyProfile p = testing::RandomProfile(n, density, true, rng);
    const GameConfig config = Config(n, Rational(1 + static_cast<int>(rng() % 7), 3));

    const OwnedGraph g = BuildGraph(p);
    CHECK(g.graph().edges() == BuildGraph(p).graph().edges());
    // Reverse insertion order yields the same graph.
    StrategyProfile reversed(n);
    auto list = p.PurchaseList();
    for (auto it = list.rbegin(); it != list.rend(); ++it) reversed.AddPurchase(it->first, it->second);
    CHECK(reversed == p);
    CHECK(BuildGraph(reversed).graph().edges() == g.graph().edges());

    const DistanceTable d = AllPairsDistances(g);
    const auto fw = ncg_oracle::FloydWarshall(ncg_oracle::AdjacencyFromBuys(testing::ToOracle(p)));
    for (int u = 0; u < n; ++u) {
      CHECK(d.at(u, u) == 0);
      for (int v = 0; v < n; ++v) {
        CHECK(d.at(u, v) == d.at(v, u));
        CHECK(d.at(u, v) == (fw[u][v] >= ncg_oracle::kInf ? kInfiniteHops : fw[u][v]));
      }
    }
    const Metrics m = ComputeMetrics(d);
    if (IsConnected(g.graph())) {
      CHECK(m.radius <= m.diameter);
      CHECK(m.diameter <= 2 * m.radius);
    }

    Cost sum(0);
    for (int v = 0; v < n; ++v) sum += AgentCost(config, p, v).total;
    CHECK(sum == SocialCost(config, p));

    if (n >= 2) {
      const int v = static_cast<int>(rng() % n);
      const auto before = AgentCost(config, p, v);
      for (int w = 0; w < n; ++w) {
        if (w == v || p.Buys(v, w) || g.graph().HasEdge(v, w)) continue;
        StrategyProfile q = p;
        q.AddPurchase(v, w);
        const auto after = AgentCost(config, q, v);
        CHECK(after.creation == before.creation + config.alpha);
        break;
      }
    }
  }
}

TEST_CASE("parse profile") {
  const auto parsed = ParseProfile("ncg v1\nn 3\nalpha 5\nbuy 0 1\nbuy 2 1\n");
  CHECK(parsed.config.n == 3);
  CHECK(parsed.config.alpha == Rational(5));
  CHECK(parsed.profile == Make(3, {{0, 1}, {2, 1}}));

  CHECK(ParseProfile("ncg v1\nn 2\nalpha 19/2\n").config.alpha == Rational(19, 2));
  CHECK(ParseProfile("ncg v1\nn 2\nalpha 1\nbuy 0 1\nbuy 1 0\n").profile.TotalPurchases() == 2);

  auto code_of = [](const char* text) {
    try {
      ParseProfile(text);
    } catch (const ParseError& e) {
      return e.code();
    }
    return ErrorCode::kInternal;
  };
  CHECK(code_of("ncg v1\nn 3\nalpha 5\nbuy 0 0\n") == ErrorCode::kBadVertexIndex);
  CHECK(code_of("ncg v1\nn 3\nalpha 5\nbuy 0 3\n") == ErrorCode::kBadVertexIndex);
  CHECK(code_of("ncg v1\nn 3\nalpha 5\nbuy 0 1\nbuy 0 1\n") == ErrorCode::kDuplicateBuy);
  CHECK(code_of("ncg v2\nn 3\nalpha 5\n") == ErrorCode::kBadHeader);
  CHECK(code_of("n 3\nalpha 5\n") == ErrorCode::kBadHeader);
  CHECK(code_of("ncg v1\nn 3\nalpha 5/0\n") == ErrorCode::kBadRational);
  CHECK(code_of("ncg v1\nn 3\nalpha 0\n") == ErrorCode::kBadRational);
  CHECK(code_of("ncg v1\nn 3\nalpha 5\nsell 0 1\n") == ErrorCode::kBadSyntax);

  try {
    ParseProfile("ncg v1\nn 3\nalpha 5\nbuy 0 1\nbuy 1 1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 5);
    CHECK(e.column() > 0);
  }
}

TEST_CASE("serialize round trip") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const StrategyProfile p = testing::RandomProfile(n, 0.5, true, rng);
    const GameConfig config = Config(n, Rational(1 + static_cast<int>(rng() % 40), 1 + static_cast<int>(rng() % 6)));
    const std::string text = SerializeProfile(config, p);
    const auto back = ParseProfile(text);
    CHECK(back.profile == p);
    CHECK(back.config.alpha == config.alpha);
    CHECK(SerializeProfile(back.config, back.profile) == text);
    CHECK(ParsePurchasesToken(n, PurchasesToken(p)) == p);
  }
  CHECK(PurchasesToken(StrategyProfile(3)) == "-");
  CHECK(PurchasesToken(Make(3, {{0, 1}, {2, 1}})) == "0>1 2>1");
  CHECK(StrategyToString({1, 3}) == "{1,3}");
}

}  // namespace
}  // namespace ncg
