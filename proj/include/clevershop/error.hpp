// Copyright 2026 The Clevershop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CLEVERSHOP_ERROR_HPP
#define CLEVERSHOP_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace clevershop {

enum class ErrorCode {
  // instance validation
  BookUncovered,
  DuplicateOffer,
  NegativeValue,
  DanglingIndex,
  // evaluation
  OfferMissing,
  // solver preconditions
  NotFixedPrice,
  NotUnitPrice,
  DegreeTooHigh,
  // resource caps
  SearchSpaceTooLarge,
  TooManyBooks,
  TooManyShops,
  StateSpaceTooLarge,
  // generators
  EmptyInput,
  WeightSumMismatch,
  ItemCountMismatch,
  NotExactly3Occurrences,
  LiteralOccurrenceViolation,
  InfeasibleParameters,
  MalformedSource,
  // files
  ParseError,
  DeclaredCostMismatch,
};

std::string_view to_string(ErrorCode code);

// Resource errors map to CLI exit code 3, everything else to 2.
bool is_resource_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Line-numbered parse failure. `line` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason)
      : Error(ErrorCode::ParseError,
              line == 0 ? reason : "line " + std::to_string(line) + ": " + reason),
        line_(line),
        reason_(reason) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

}  // namespace clevershop

#endif  // CLEVERSHOP_ERROR_HPP
