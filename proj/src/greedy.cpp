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

#include <algorithm>
#include <numeric>
#include <string>

#include "clevershop/approx.hpp"
#include "clevershop/error.hpp"

namespace clevershop {

GreedySolve greedy_solve(const Instance& instance) {
  if (auto book = first_non_fixed_price_book(instance)) {
    throw Error(ErrorCode::NotFixedPrice, "b" + std::to_string(*book + 1));
  }
  const std::size_t n = instance.book_count();
  std::vector<ShopIndex> order(instance.shop_count());
  std::iota(order.begin(), order.end(), ShopIndex{0});
  std::stable_sort(order.begin(), order.end(), [&](ShopIndex a, ShopIndex b) {
    return instance.rule(a).discount > instance.rule(b).discount;
  });

  GreedySolve solve;
  Assignment assignment;
  assignment.choice.assign(n, 0);
  std::vector<bool> available(n, true);
  for (ShopIndex s : order) {
    Money value = 0;
    std::size_t count = 0;
    for (const Offer& o : instance.offers_of_shop(s)) {
      if (available[o.book]) {
        value += o.price;
        ++count;
      }
    }
    // a shop with nothing left to sell is skipped, even with a zero threshold
    if (count == 0 || value < instance.rule(s).threshold) continue;
    for (const Offer& o : instance.offers_of_shop(s)) {
      if (available[o.book]) {
        assignment.choice[o.book] = s;
        available[o.book] = false;
      }
    }
    solve.claimed_shops.push_back(s);
  }
  for (BookIndex b = 0; b < n; ++b) {
    if (available[b]) assignment.choice[b] = instance.offers_of_book(b).front().shop;
  }
  solve.result = evaluate_assignment(instance, assignment);
  return solve;
}

SolveResult greedy_max_discount(const Instance& instance) {
  return greedy_solve(instance).result;
}

}  // namespace clevershop
