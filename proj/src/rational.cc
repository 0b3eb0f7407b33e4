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

#include "ncg/rational.h"

#include <charconv>

#include "ncg/errors.h"

namespace ncg {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kSizeGuard: return "SizeGuard";
    case ErrorCode::kBadHeader: return "BadHeader";
    case ErrorCode::kBadVertexIndex: return "BadVertexIndex";
    case ErrorCode::kDuplicateBuy: return "DuplicateBuy";
    case ErrorCode::kBadRational: return "BadRational";
    case ErrorCode::kBadSyntax: return "BadSyntax";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kAssignmentAmbiguous: return "AssignmentAmbiguous";
    case ErrorCode::kPreconditionUnmet: return "PreconditionUnmet";
    case ErrorCode::kNotTree: return "NotTree";
    case ErrorCode::kNotEquilibrium: return "NotEquilibrium";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

std::string ToString(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string HopsToString(Hops h) {
  return h == kInfiniteHops ? "inf" : std::to_string(h);
}

std::string Cost::ToString() const {
  return infinite_ ? "inf" : ncg::ToString(value_);
}

namespace {

std::int64_t ParseInteger(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  if (text.empty() || text.front() == '+') {
    throw NcgError(ErrorCode::kBadRational,
                   "malformed rational '" + std::string(whole) + "'");
  }
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw NcgError(ErrorCode::kBadRational,
                   "malformed rational '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const auto slash = text.find('/');
  const std::int64_t num = ParseInteger(text.substr(0, slash), text);
  std::int64_t den = 1;
  if (slash != std::string_view::npos) {
    den = ParseInteger(text.substr(slash + 1), text);
    if (den <= 0) {
      throw NcgError(ErrorCode::kBadRational,
                     "denominator must be positive in '" + std::string(text) + "'");
    }
  }
  return Rational(num, den);
}

std::int64_t Ceil(const Rational& r) {
  const std::int64_t q = r.numerator() / r.denominator();
  const std::int64_t rem = r.numerator() % r.denominator();
  return rem > 0 ? q + 1 : q;
}

}  // namespace ncg
