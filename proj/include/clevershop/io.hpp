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

// Text formats. All are line oriented: '#' starts a comment, blank lines
// are ignored, numbers are ASCII decimal and ids are 1-based.
//
// Instance:
//   CLEVERSHOP 1
//   BOOKS <n>
//   SHOPS <m>
//   SHOP <shop> <discount> <threshold>     one per shop
//   OFFER <book> <shop> <price>
//   BUDGET <K>                             optional
//
// Solution:
//   ASSIGN <book> <shop>                   one per book
//   COST <value>

#ifndef CLEVERSHOP_IO_HPP
#define CLEVERSHOP_IO_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clevershop/instance.hpp"
#include "clevershop/reductions.hpp"

namespace clevershop {

/// Parses and validates an instance. Throws ParseError (with the 1-based
/// line) for syntax problems and Error for invariant violations.
Instance parse_instance(std::string_view text);

/// Canonical text: fixed section order, entries sorted by id, single
/// spaces, trailing newline.
std::string serialize_instance(const Instance& instance);

// Canonical instance preceded by '#' lines describing the certificate.
std::string serialize_generated(const GeneratedInstance& generated);

struct SolutionFile {
  Assignment assignment;
  Money declared_cost = 0;
};

/// Requires one ASSIGN per book of the instance and a COST line.
SolutionFile parse_solution(std::string_view text, std::size_t book_count);
std::string serialize_solution(const SolveResult& result);

struct CheckReport {
  SolveResult evaluated;
  Money declared_cost = 0;
  std::optional<Money> budget;
  bool within_budget = true;  // true when no budget applies
};

/// Re-evaluates a solution file. Throws ParseError, OfferMissing or
/// DeclaredCostMismatch. `budget` overrides the instance budget.
CheckReport check_solution(const Instance& instance, std::string_view solution_text,
                           std::optional<Money> budget = std::nullopt);

// --- source-problem inputs ---------------------------------------------------

// "1,2,3" or "1 2 3".
std::vector<Money> parse_weight_list(std::string_view text);

// Edge list: optional "VERTICES <n>" line, then "<u> <v>" lines (1-based).
// Without a VERTICES line the vertex count is the largest id seen.
SimpleGraph parse_graph(std::string_view text);

// DIMACS CNF: "p cnf <vars> <clauses>", then clauses terminated by 0,
// exactly three literals each.
CnfFormula parse_cnf(std::string_view text);

// "ITEMS <n>", then blocks starting with "INSTANCE" holding "SET a b c" lines.
std::vector<X3CInstance> parse_x3c(std::string_view text);

}  // namespace clevershop

#endif  // CLEVERSHOP_IO_HPP
