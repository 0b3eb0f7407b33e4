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

#ifndef NCG_ERRORS_H_
#define NCG_ERRORS_H_

#include <stdexcept>
#include <string>

namespace ncg {

enum class ErrorCode {
  kInvalidArgument,
  kSizeGuard,
  kBadHeader,
  kBadVertexIndex,
  kDuplicateBuy,
  kBadRational,
  kBadSyntax,
  kDisconnected,
  kAssignmentAmbiguous,
  kPreconditionUnmet,
  kNotTree,
  kNotEquilibrium,
  kInternal,
};

const char* ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception type; the code
// lets callers (the CLI in particular) map failures to exit statuses.
class NcgError : public std::runtime_error {
 public:
  NcgError(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Thrown by the profile parser; carries the 1-based position of the problem.
class ParseError : public NcgError {
 public:
  ParseError(ErrorCode code, int line, int column, const std::string& message)
      : NcgError(code, "line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

#define NCG_CHECK(cond, code, msg)          \
  do {                                      \
    if (!(cond)) throw ::ncg::NcgError((code), (msg)); \
  } while (0)

}  // namespace ncg

#endif  // NCG_ERRORS_H_
