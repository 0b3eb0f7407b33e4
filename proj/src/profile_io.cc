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

#include "ncg/profile_io.h"

#include <charconv>
#include <sstream>
#include <vector>

#include "ncg/errors.h"

namespace ncg {
namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

std::vector<Token> Tokenize(std::string_view line) {
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    const size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    tokens.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

bool ParseInt(std::string_view text, long long& out) {
  if (text.empty()) return false;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

ParsedProfile ParseProfile(std::string_view text) {
  std::vector<std::string_view> lines;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = end + 1;
  }

  // Header line must be first; the remaining content lines are numbered too.
  if (lines.empty()) throw ParseError(ErrorCode::kBadHeader, 1, 1, "empty input");
  {
    const auto tokens = Tokenize(lines[0]);
    if (tokens.size() != 2 || tokens[0].text != "ncg" || tokens[1].text != "v1") {
      throw ParseError(ErrorCode::kBadHeader, 1, 1, "expected 'ncg v1'");
    }
  }

  ParsedProfile result;
  bool have_n = false;
  bool have_alpha = false;
  std::vector<std::vector<int>> buys;

  for (size_t li = 1; li < lines.size(); ++li) {
    const int line_no = static_cast<int>(li) + 1;
    const auto tokens = Tokenize(lines[li]);
    if (tokens.empty() || tokens[0].text.front() == '#') continue;
    const std::string_view key = tokens[0].text;

    if (!have_n) {
      long long n = 0;
      if (key != "n" || tokens.size() != 2) {
        throw ParseError(ErrorCode::kBadHeader, line_no, tokens[0].column,
                         "expected 'n <int>'");
      }
      if (!ParseInt(tokens[1].text, n) || n < 1) {
        throw ParseError(ErrorCode::kBadHeader, line_no, tokens[1].column,
                         "agent count must be a positive integer");
      }
      result.config.n = static_cast<int>(n);
      buys.assign(n, {});
      have_n = true;
      continue;
    }
    if (!have_alpha) {
      if (key != "alpha" || tokens.size() != 2) {
        throw ParseError(ErrorCode::kBadHeader, line_no, tokens[0].column,
                         "expected 'alpha <p>/<q>'");
      }
      try {
        result.config.alpha = ParseRational(tokens[1].text);
      } catch (const NcgError& e) {
        throw ParseError(ErrorCode::kBadRational, line_no, tokens[1].column, e.what());
      }
      if (result.config.alpha <= 0) {
        throw ParseError(ErrorCode::kBadRational, line_no, tokens[1].column,
                         "alpha must be positive");
      }
      have_alpha = true;
      continue;
    }

    if (key != "buy") {
      throw ParseError(ErrorCode::kBadSyntax, line_no, tokens[0].column,
                       "unknown directive '" + std::string(key) + "'");
    }
    if (tokens.size() != 3) {
      throw ParseError(ErrorCode::kBadSyntax, line_no, tokens[0].column,
                       "expected 'buy <u> <v>'");
    }
    long long u = -1;
    long long v = -1;
    const int n = result.config.n;
    if (!ParseInt(tokens[1].text, u) || u < 0 || u >= n) {
      throw ParseError(ErrorCode::kBadVertexIndex, line_no, tokens[1].column,
                       "vertex index out of range");
    }
    if (!ParseInt(tokens[2].text, v) || v < 0 || v >= n) {
      throw ParseError(ErrorCode::kBadVertexIndex, line_no, tokens[2].column,
                       "vertex index out of range");
    }
    if (u == v) {
      throw ParseError(ErrorCode::kBadVertexIndex, line_no, tokens[2].column,
                       "self-loop purchase");
    }
    auto& s = buys[u];
    for (int existing : s) {
      if (existing == v) {
        throw ParseError(ErrorCode::kDuplicateBuy, line_no, tokens[0].column,
                         "duplicate 'buy " + std::to_string(u) + " " +
                             std::to_string(v) + "'");
      }
    }
    s.push_back(static_cast<int>(v));
  }

  if (!have_n || !have_alpha) {
    throw ParseError(ErrorCode::kBadHeader, static_cast<int>(lines.size()), 1,
                     "missing 'n' or 'alpha' line");
  }
  result.profile = StrategyProfile::FromPurchases(std::move(buys));
  return result;
}

std::string SerializeProfile(const GameConfig& config, const StrategyProfile& profile) {
  std::ostringstream out;
  out << "ncg v1\n"
      << "n " << config.n << "\n"
      << "alpha " << ToString(config.alpha) << "\n";
  for (const auto& [u, v] : profile.PurchaseList()) out << "buy " << u << " " << v << "\n";
  return out.str();
}

std::string PurchasesToken(const StrategyProfile& profile) {
  std::string out;
  for (const auto& [u, v] : profile.PurchaseList()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(u) + ">" + std::to_string(v);
  }
  return out.empty() ? "-" : out;
}

StrategyProfile ParsePurchasesToken(int n, std::string_view token) {
  StrategyProfile profile(n);
  if (token == "-") return profile;
  for (const Token& t : Tokenize(token)) {
    const auto gt = t.text.find('>');
    long long u = -1;
    long long v = -1;
    if (gt == std::string_view::npos || !ParseInt(t.text.substr(0, gt), u) ||
        !ParseInt(t.text.substr(gt + 1), v) || u < 0 || u >= n) {
      throw ParseError(ErrorCode::kBadSyntax, 1, t.column,
                       "malformed purchase '" + std::string(t.text) + "'");
    }
    profile.AddPurchase(static_cast<int>(u), static_cast<int>(v));
  }
  return profile;
}

std::string StrategyToString(const std::vector<int>& strategy) {
  std::string out = "{";
  for (size_t i = 0; i < strategy.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(strategy[i]);
  }
  return out + "}";
}

}  // namespace ncg
