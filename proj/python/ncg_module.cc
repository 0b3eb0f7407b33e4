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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "ncg/equilibrium.h"
#include "ncg/errors.h"
#include "ncg/game.h"
#include "ncg/optimum.h"
#include "ncg/profile_io.h"
#include "ncg/structure.h"

namespace py = pybind11;

namespace ncg {
namespace {

using Buys = std::vector<std::vector<int>>;
// (numerator, denominator), or None for an infinite cost.
using PyCost = std::optional<std::pair<std::int64_t, std::int64_t>>;

PyCost ToPy(const Cost& c) {
  if (c.is_infinite()) return std::nullopt;
  return std::make_pair(c.value().numerator(), c.value().denominator());
}

std::pair<std::int64_t, std::int64_t> ToPy(const Rational& r) {
  return {r.numerator(), r.denominator()};
}

GameConfig MakeConfig(int n, const std::string& alpha) {
  GameConfig c{n, ParseRational(alpha)};
  ValidateConfig(c);
  return c;
}

StrategyProfile MakeProfile(const GameConfig& c, const Buys& buys) {
  NCG_CHECK(static_cast<int>(buys.size()) == c.n, ErrorCode::kInvalidArgument,
            "need one purchase list per agent");
  return StrategyProfile::FromPurchases(buys);
}

Buys ToBuys(const StrategyProfile& p) {
  Buys b(p.num_agents());
  for (int u = 0; u < p.num_agents(); ++u) b[u] = p.purchases(u);
  return b;
}

py::dict WitnessDict(const DeviationWitness& w) {
  py::dict d;
  d["agent"] = w.agent;
  d["old_strategy"] = w.old_strategy;
  d["new_strategy"] = w.new_strategy;
  d["old_cost"] = ToPy(w.old_cost);
  d["new_cost"] = ToPy(w.new_cost);
  return d;
}

}  // namespace
}  // namespace ncg

PYBIND11_MODULE(_ncg, m) {
  using namespace ncg;
  m.doc() = "Max-distance network creation game core.";

  py::register_exception<NcgError>(m, "NcgError", PyExc_ValueError);

  m.def("agent_cost", [](int n, const std::string& alpha, const Buys& buys, int agent) {
    const GameConfig c = MakeConfig(n, alpha);
    return ToPy(AgentCost(c, MakeProfile(c, buys), agent).total);
  });
  m.def("social_cost", [](int n, const std::string& alpha, const Buys& buys) {
    const GameConfig c = MakeConfig(n, alpha);
    return ToPy(SocialCost(c, MakeProfile(c, buys)));
  });
  m.def("is_nash", [](int n, const std::string& alpha, const Buys& buys) {
    const GameConfig c = MakeConfig(n, alpha);
    const EquilibriumReport r = IsNash(c, MakeProfile(c, buys));
    py::object witness = py::none();
    if (r.witness) witness = WitnessDict(*r.witness);
    return py::make_tuple(r.is_nash, witness);
  });
  m.def("best_response", [](int n, const std::string& alpha, const Buys& buys, int agent) {
    const GameConfig c = MakeConfig(n, alpha);
    const BestResponse br = BestResponseExact(c, MakeProfile(c, buys), agent);
    return py::make_tuple(br.strategy, ToPy(br.cost));
  });
  m.def("enumerate_equilibria", [](int n, const std::string& alpha, int workers) {
    const EnumerationResult r = EnumerateEquilibria(MakeConfig(n, alpha), workers);
    std::vector<Buys> out;
    for (const auto& p : r.equilibria) out.push_back(ToBuys(p));
    return py::make_tuple(out, r.tree_count, r.nontree_count);
  }, py::arg("n"), py::arg("alpha"), py::arg("workers") = 1);
  m.def("optimum", [](int n, const std::string& alpha) {
    const OptimumResult r = OptimumAnalytic(MakeConfig(n, alpha));
    return py::make_tuple(ToPy(r.cost), r.shape, ToBuys(r.witness));
  });
  m.def("optimum_bruteforce", [](int n, const std::string& alpha) {
    return ToPy(OptimumBruteforce(MakeConfig(n, alpha)).cost);
  });
  m.def("price_of_anarchy", [](int n, const std::string& alpha, int workers) -> py::object {
    const PoAReport r = PriceOfAnarchy(MakeConfig(n, alpha), workers);
    if (!r.poa) return py::none();
    return py::cast(ToPy(*r.poa));
  }, py::arg("n"), py::arg("alpha"), py::arg("workers") = 1);
  m.def("audit", [](int n, const std::string& alpha, const Buys& buys) {
    const GameConfig c = MakeConfig(n, alpha);
    py::list out;
    for (const auto& check : AuditEquilibriumStructure(c, MakeProfile(c, buys)).checks) {
      py::dict d;
      d["id"] = check.id;
      d["applicable"] = check.applicable;
      d["vacuous"] = check.vacuous;
      d["passed"] = check.passed;
      std::vector<std::string> w;
      for (const auto& x : check.witnesses) w.push_back(x.Summary());
      d["witnesses"] = w;
      out.append(d);
    }
    return out;
  });
  m.def("dynamics", [](int n, const std::string& alpha, const Buys& buys,
                       const std::string& schedule, std::uint64_t seed, int budget) {
    const GameConfig c = MakeConfig(n, alpha);
    NCG_CHECK(schedule == "rr" || schedule == "rand", ErrorCode::kInvalidArgument,
              "schedule must be rr or rand");
    const DynamicsTrace t =
        BestResponseDynamics(c, MakeProfile(c, buys),
                             schedule == "rr" ? Schedule::kRoundRobin : Schedule::kUniformRandom,
                             seed, budget);
    return py::make_tuple(std::string(DynamicsOutcomeName(t.outcome)), ToBuys(t.final_profile),
                          static_cast<int>(t.steps.size()));
  });
  m.def("parse_profile", [](const std::string& text) {
    const ParsedProfile p = ParseProfile(text);
    return py::make_tuple(p.config.n, ToString(p.config.alpha), ToBuys(p.profile));
  });
  m.def("serialize_profile", [](int n, const std::string& alpha, const Buys& buys) {
    const GameConfig c = MakeConfig(n, alpha);
    return SerializeProfile(c, MakeProfile(c, buys));
  });
}
