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

#include "clevershop/oracle.hpp"

#include <limits>
#include <string>
#include <vector>

#include "clevershop/error.hpp"

namespace clevershop {

std::uint64_t search_space_size(const Instance& instance) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t total = 1;
  for (BookIndex b = 0; b < instance.book_count(); ++b) {
    const std::uint64_t k = instance.offers_of_book(b).size();
    if (total > kMax / k) return kMax;
    total *= k;
  }
  return total;
}

namespace {

enum class Objective { MinCost, MaxDiscount };

// Odometer over per-book offer positions, last book varying fastest, so the
// visiting order is lexicographic. Spends and discounts are updated
// incrementally; only strictly better assignments replace the incumbent.
SolveResult enumerate(const Instance& instance, const OracleOptions& options,
                      Objective objective) {
  const std::uint64_t size = search_space_size(instance);
  if (size > options.search_cap) {
    throw Error(ErrorCode::SearchSpaceTooLarge,
                std::to_string(size) + " assignments exceed cap " +
                    std::to_string(options.search_cap));
  }
  const std::size_t n = instance.book_count();
  std::vector<std::size_t> digit(n, 0);
  std::vector<Money> spend(instance.shop_count(), 0);
  Money gross = 0;
  for (BookIndex b = 0; b < n; ++b) {
    const Offer& o = instance.offers_of_book(b).front();
    spend[o.shop] += o.price;
    gross += o.price;
  }
  Money discount = 0;
  for (ShopIndex s = 0; s < instance.shop_count(); ++s) {
    discount += discount_earned(instance.rule(s), spend[s]);
  }

  auto add = [&](ShopIndex s, Money delta) {
    const DiscountRule& rule = instance.rule(s);
    discount -= discount_earned(rule, spend[s]);
    spend[s] += delta;
    discount += discount_earned(rule, spend[s]);
    gross += delta;
  };

  std::vector<std::size_t> best_digit = digit;
  Money best_score = 0;
  bool have_best = false;
  while (true) {
    const Money score = objective == Objective::MinCost ? gross - discount : -discount;
    if (!have_best || score < best_score) {
      best_score = score;
      best_digit = digit;
      have_best = true;
    }
    std::size_t b = n;
    while (b > 0) {
      --b;
      auto offers = instance.offers_of_book(b);
      const Offer& from = offers[digit[b]];
      digit[b] = digit[b] + 1 == offers.size() ? 0 : digit[b] + 1;
      const Offer& to = offers[digit[b]];
      if (from.shop != to.shop) {
        add(from.shop, -from.price);
        add(to.shop, to.price);
      }
      if (digit[b] != 0) break;
      if (b == 0) {
        b = n + 1;  // wrapped around: enumeration complete
        break;
      }
    }
    if (b == n + 1 || n == 0) break;
  }

  Assignment best;
  best.choice.resize(n);
  for (BookIndex b = 0; b < n; ++b) {
    best.choice[b] = instance.offers_of_book(b)[best_digit[b]].shop;
  }
  return evaluate_assignment(instance, best);
}

}  // namespace

SolveResult brute_force_min_cost(const Instance& instance, const OracleOptions& options) {
  return enumerate(instance, options, Objective::MinCost);
}

SolveResult brute_force_max_discount(const Instance& instance, const OracleOptions& options) {
  if (auto book = first_non_fixed_price_book(instance)) {
    throw Error(ErrorCode::NotFixedPrice, "b" + std::to_string(*book + 1));
  }
  return enumerate(instance, options, Objective::MaxDiscount);
}

}  // namespace clevershop
