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

#ifndef NCG_PROFILE_IO_H_
#define NCG_PROFILE_IO_H_

#include <string>
#include <string_view>

#include "ncg/game.h"

// Text format, version 1:
//
//   ncg v1
//   n <int>
//   alpha <p>/<q> | alpha <int>
//   buy <u> <v>        (zero or more; u purchases the link to v)
//
// `buy u v` together with `buy v u` encodes a double purchase. Blank lines and
// lines starting with '#' are ignored after the header line.

namespace ncg {

struct ParsedProfile {
  GameConfig config;
  StrategyProfile profile;
};

// Throws ParseError with codes kBadHeader, kBadVertexIndex, kDuplicateBuy,
// kBadRational or kBadSyntax.
ParsedProfile ParseProfile(std::string_view text);

// Canonical serialization: buys sorted by (buyer, target), alpha in lowest
// terms. ParseProfile(SerializeProfile(c, p)) reproduces (c, p).
std::string SerializeProfile(const GameConfig& config, const StrategyProfile& profile);

// Compact single-token form used in CSV cells: "0>1 2>1" (space separated
// buyer>target pairs), "-" for the empty profile.
std::string PurchasesToken(const StrategyProfile& profile);
StrategyProfile ParsePurchasesToken(int n, std::string_view token);

// Strategy set as "{1,3}".
std::string StrategyToString(const std::vector<int>& strategy);

}  // namespace ncg

#endif  // NCG_PROFILE_IO_H_
