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

#ifndef CLEVERSHOP_APPROX_HPP
#define CLEVERSHOP_APPROX_HPP

#include <vector>

#include "clevershop/instance.hpp"

namespace clevershop {

struct GreedySolve {
  SolveResult result;
  std::vector<ShopIndex> claimed_shops;  // in processing order
};

/// Greedy for Max-Discount on fixed-price instances. Shops are visited by
/// decreasing discount (lower index first on ties); a shop whose still
/// available books reach its threshold takes all of them. Leftover books go
/// to their lowest-index shop. If every shop sells at most k books the
/// discount is at least 1/k of the optimum. Throws NotFixedPrice.
GreedySolve greedy_solve(const Instance& instance);
SolveResult greedy_max_discount(const Instance& instance);

}  // namespace clevershop

#endif  // CLEVERSHOP_APPROX_HPP
