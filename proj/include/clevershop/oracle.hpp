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

// Exhaustive ground-truth solvers. They enumerate every assignment (the
// Cartesian product of each book's offers) without any pruning.

#ifndef CLEVERSHOP_ORACLE_HPP
#define CLEVERSHOP_ORACLE_HPP

#include <cstdint>

#include "clevershop/instance.hpp"

namespace clevershop {

struct OracleOptions {
  std::uint64_t search_cap = 10'000'000;
};

// Number of assignments, saturated at UINT64_MAX.
std::uint64_t search_space_size(const Instance& instance);

/// Minimum total cost over all assignments. Among optimal assignments the
/// lexicographically smallest choice sequence (book 0 first, shops by
/// index) is returned. Throws SearchSpaceTooLarge above the cap.
SolveResult brute_force_min_cost(const Instance& instance, const OracleOptions& options = {});

/// Maximum total discount on a fixed-price instance, same tie-break.
/// Throws NotFixedPrice or SearchSpaceTooLarge.
SolveResult brute_force_max_discount(const Instance& instance,
                                     const OracleOptions& options = {});

}  // namespace clevershop

#endif  // CLEVERSHOP_ORACLE_HPP
