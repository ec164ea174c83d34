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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clevershop/error.hpp"
#include "clevershop/exact.hpp"

namespace clevershop {

// best[j][B'] is the cheapest way to buy B' from shops 0..j. Shop j takes a
// subset B'' of B' it fully stocks and the rest comes from best[j-1]:
//   best[j][B'] = min over B'' of  cost_j(B'') + best[j-1][B' \ B''].
// Only B'' within the shop's stock are enumerated; anything else is
// infeasible. Pairs B'' <= B' are the 3^n ternary vectors.
SolveResult subset_dp_min_cost(const Instance& instance, const SubsetDpOptions& options) {
  const std::size_t n = instance.book_count();
  const std::size_t m = instance.shop_count();
  if (n > options.max_books || n >= 32) {
    throw Error(ErrorCode::TooManyBooks,
                std::to_string(n) + " books, cap " + std::to_string(options.max_books));
  }
  const std::uint32_t full = n == 0 ? 0u : static_cast<std::uint32_t>((1ull << n) - 1);
  const std::size_t subsets = std::size_t{1} << n;

  using Cost = std::optional<Money>;
  std::vector<Cost> prev(subsets);
  std::vector<Cost> cur(subsets);
  prev[0] = 0;  // before any shop only the empty set is purchasable
  std::vector<std::vector<std::uint32_t>> taken(m, std::vector<std::uint32_t>(subsets, 0));

  std::vector<Money> shop_cost(subsets);
  std::vector<Money> book_price(n);
  for (ShopIndex j = 0; j < m; ++j) {
    const DiscountRule& rule = instance.rule(j);
    std::uint32_t stock = 0;
    for (const Offer& o : instance.offers_of_shop(j)) {
      stock |= 1u << o.book;
      book_price[o.book] = o.price;
    }
    // cost_j over submasks of the stock in increasing order, peeling the
    // lowest book so spend[sub ^ low] is already known.
    std::vector<Money> spend(subsets, 0);
    for (std::uint32_t sub = 0;; sub = (sub - stock) & stock) {
      if (sub != 0) {
        const std::uint32_t low = sub & (~sub + 1);
        spend[sub] = book_price[__builtin_ctz(low)] + spend[sub ^ low];
      }
      shop_cost[sub] = spend[sub] - discount_earned(rule, spend[sub]);
      if (sub == stock) break;
    }

    std::vector<std::uint32_t>& choice = taken[j];
    for (std::uint32_t target = 0; target <= full; ++target) {
      Cost best;
      std::uint32_t best_sub = 0;
      const std::uint32_t avail = target & stock;
      for (std::uint32_t sub = avail;; sub = (sub - 1) & avail) {
        const Cost& rest = prev[target ^ sub];
        if (rest) {
          const Money total = shop_cost[sub] + *rest;
          if (!best || total < *best) {
            best = total;
            best_sub = sub;
          }
        }
        if (sub == 0) break;
      }
      cur[target] = best;
      choice[target] = best_sub;
      if (target == full) break;
    }
    prev.swap(cur);
  }

  Assignment assignment;
  assignment.choice.assign(n, 0);
  if (m == 0) {
    // only reachable with n == 0
    return evaluate_assignment(instance, assignment);
  }
  std::uint32_t remaining = full;
  for (std::size_t j = m; j-- > 0;) {
    const std::uint32_t sub = taken[j][remaining];
    for (std::size_t b = 0; b < n; ++b) {
      if (sub & (1u << b)) assignment.choice[b] = j;
    }
    remaining ^= sub;
  }
  return evaluate_assignment(instance, assignment);
}

}  // namespace clevershop
