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

#include "clevershop/error.hpp"

namespace clevershop {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::BookUncovered: return "BookUncovered";
    case ErrorCode::DuplicateOffer: return "DuplicateOffer";
    case ErrorCode::NegativeValue: return "NegativeValue";
    case ErrorCode::DanglingIndex: return "DanglingIndex";
    case ErrorCode::OfferMissing: return "OfferMissing";
    case ErrorCode::NotFixedPrice: return "NotFixedPrice";
    case ErrorCode::NotUnitPrice: return "NotUnitPrice";
    case ErrorCode::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::TooManyBooks: return "TooManyBooks";
    case ErrorCode::TooManyShops: return "TooManyShops";
    case ErrorCode::StateSpaceTooLarge: return "StateSpaceTooLarge";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::WeightSumMismatch: return "WeightSumMismatch";
    case ErrorCode::ItemCountMismatch: return "ItemCountMismatch";
    case ErrorCode::NotExactly3Occurrences: return "NotExactly3Occurrences";
    case ErrorCode::LiteralOccurrenceViolation: return "LiteralOccurrenceViolation";
    case ErrorCode::InfeasibleParameters: return "InfeasibleParameters";
    case ErrorCode::MalformedSource: return "MalformedSource";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DeclaredCostMismatch: return "DeclaredCostMismatch";
  }
  return "UnknownError";
}

bool is_resource_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::SearchSpaceTooLarge:
    case ErrorCode::TooManyBooks:
    case ErrorCode::TooManyShops:
    case ErrorCode::StateSpaceTooLarge:
      return true;
    default:
      return false;
  }
}

}  // namespace clevershop
