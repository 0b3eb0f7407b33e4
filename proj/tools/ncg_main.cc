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

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "ncg/harness.h"

namespace {

struct Flags {
  int n = 0;
  std::string alpha;
  std::uint64_t seed = 0;
  int workers = 1;
  std::string in;
  std::string out;
  int agent = -1;
  std::string schedule = "rr";
  int budget = 1000;
  int iters = 100;
  std::string witness_text;
};

void AddCommon(CLI::App* sub, Flags& f) {
  sub->add_option("--n", f.n, "number of agents");
  sub->add_option("--alpha", f.alpha, "edge price, p or p/q");
  sub->add_option("--seed", f.seed, "64-bit seed");
  sub->add_option("--workers", f.workers, "worker threads");
  sub->add_option("--in", f.in, "input profile (ncg v1)");
  sub->add_option("--out", f.out, "output CSV; manifest goes to <out>.manifest.json");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ncg: max-distance network creation game toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ncg::kToolVersion);
  Flags f;

  const std::map<std::string, ncg::Mode> modes = {
      {"verify", ncg::Mode::kVerify},       {"best-response", ncg::Mode::kBestResponse},
      {"dynamics", ncg::Mode::kDynamics},   {"enumerate", ncg::Mode::kEnumerate},
      {"search", ncg::Mode::kSearch},       {"audit", ncg::Mode::kAudit},
      {"poa", ncg::Mode::kPoa},             {"optimum", ncg::Mode::kOptimum}};
  const std::map<std::string, std::string> help = {
      {"verify", "check whether a profile is a Nash equilibrium"},
      {"best-response", "exact best response of one agent"},
      {"dynamics", "best-response dynamics from a profile"},
      {"enumerate", "all equilibria for small n"},
      {"search", "randomized search for non-tree equilibria"},
      {"audit", "structural checks on equilibria"},
      {"poa", "price of anarchy by exhaustive enumeration"},
      {"optimum", "social optimum, analytic and brute force"}};

  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, mode] : modes) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    AddCommon(sub, f);
    subs[name] = sub;
  }
  subs["best-response"]->add_option("--agent", f.agent, "agent index")->required();
  subs["dynamics"]
      ->add_option("--schedule", f.schedule, "activation schedule")
      ->check(CLI::IsMember({"rr", "rand"}));
  subs["dynamics"]->add_option("--budget", f.budget, "activation budget");
  subs["search"]->add_option("--iters", f.iters, "search iterations");
  subs["audit"]->add_option("--witness-text", f.witness_text, "human-readable witnesses");

  CLI11_PARSE(app, argc, argv);

  ncg::ExperimentConfig config;
  CLI::App* chosen = nullptr;
  for (const auto& [name, sub] : subs) {
    if (sub->parsed()) {
      config.mode = modes.at(name);
      chosen = sub;
    }
  }
  if (chosen->count("--n")) config.n = f.n;
  if (chosen->count("--alpha")) config.alpha = f.alpha;
  if (chosen->count("--in")) config.input_path = f.in;
  if (chosen->count("--out")) config.output_path = f.out;
  if (config.mode == ncg::Mode::kBestResponse) config.agent = f.agent;
  if (config.mode == ncg::Mode::kAudit && !f.witness_text.empty()) {
    config.witness_text_path = f.witness_text;
  }
  config.seed = f.seed;
  config.workers = f.workers;
  config.budget = f.budget;
  config.iterations = f.iters;
  config.schedule =
      f.schedule == "rand" ? ncg::Schedule::kUniformRandom : ncg::Schedule::kRoundRobin;

  try {
    const ncg::RunOutput out = ncg::Run(config);
    if (!config.output_path) std::cout << out.csv;
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "ncg: " << e.what() << "\n";
    return ncg::ExitCodeFor(e);
  }
}
