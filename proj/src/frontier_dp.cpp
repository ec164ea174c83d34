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
#include <string>
#include <unordered_map>
#include <vector>

#include "clevershop/error.hpp"
#include "clevershop/exact.hpp"

namespace clevershop {

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<Money>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull;
    for (Money x : v) {
      h ^= static_cast<std::size_t>(x);
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

// Greedy book order keeping few shops open: repeatedly take the book that
// opens the fewest new shops net of the shops it closes.
std::vector<BookIndex> low_frontier_order(const Instance& instance) {
  const std::size_t n = instance.book_count();
  std::vector<std::size_t> remaining(instance.shop_count());
  for (ShopIndex s = 0; s < instance.shop_count(); ++s) {
    remaining[s] = instance.offers_of_shop(s).size();
  }
  std::vector<bool> opened(instance.shop_count(), false);
  std::vector<bool> done(n, false);
  std::vector<BookIndex> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    BookIndex pick = n;
    long best = 0;
    for (BookIndex b = 0; b < n; ++b) {
      if (done[b]) continue;
      long score = 0;
      for (const Offer& o : instance.offers_of_book(b)) {
        if (!opened[o.shop]) ++score;
        if (remaining[o.shop] == 1) --score;
      }
      if (pick == n || score < best) {
        pick = b;
        best = score;
      }
    }
    done[pick] = true;
    order.push_back(pick);
    for (const Offer& o : instance.offers_of_book(pick)) {
      opened[o.shop] = true;
      --remaining[o.shop];
    }
  }
  return order;
}

struct Layer {
  std::vector<std::vector<Money>> keys;
  std::vector<Money> value;
  std::vector<std::size_t> parent;
  std::vector<ShopIndex> shop;
};

}  // namespace

SolveResult frontier_dp_min_cost(const Instance& instance, const FrontierOptions& options) {
  const std::size_t n = instance.book_count();
  const std::size_t m = instance.shop_count();
  const std::vector<BookIndex> order = low_frontier_order(instance);

  // step at which each shop sees its last book
  std::vector<std::vector<ShopIndex>> closing(n);
  {
    std::vector<std::size_t> seen(m, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (const Offer& o : instance.offers_of_book(order[i])) {
        if (++seen[o.shop] == instance.offers_of_shop(o.shop).size()) {
          closing[i].push_back(o.shop);
        }
      }
    }
  }

  std::vector<Layer> layers(n + 1);
  layers[0].keys.push_back(std::vector<Money>(m, 0));
  layers[0].value.push_back(0);
  layers[0].parent.push_back(0);
  layers[0].shop.push_back(0);

  for (std::size_t i = 0; i < n; ++i) {
    const Layer& from = layers[i];
    Layer& to = layers[i + 1];
    std::unordered_map<std::vector<Money>, std::size_t, KeyHash> index;
    for (std::size_t st = 0; st < from.keys.size(); ++st) {
      for (const Offer& o : instance.offers_of_book(order[i])) {
        std::vector<Money> key = from.keys[st];
        const DiscountRule& rule = instance.rule(o.shop);
        key[o.shop] = std::min(key[o.shop] + o.price, rule.threshold);
        Money value = from.value[st] + o.price;
        for (ShopIndex s : closing[i]) {
          value -= discount_earned(instance.rule(s), key[s]);
          key[s] = 0;
        }
        auto [it, inserted] = index.try_emplace(std::move(key), to.value.size());
        if (inserted) {
          to.keys.push_back(it->first);
          to.value.push_back(value);
          to.parent.push_back(st);
          to.shop.push_back(o.shop);
          if (to.value.size() > options.max_states) {
            throw Error(ErrorCode::StateSpaceTooLarge,
                        "more than " + std::to_string(options.max_states) +
                            " frontier states at step " + std::to_string(i + 1));
          }
        } else if (value < to.value[it->second]) {
          to.value[it->second] = value;
          to.parent[it->second] = st;
          to.shop[it->second] = o.shop;
        }
      }
    }
  }

  // every shop with offers has closed, so the last layer holds one state
  Assignment assignment;
  assignment.choice.assign(n, 0);
  std::size_t state = 0;
  for (std::size_t i = n; i > 0; --i) {
    assignment.choice[order[i - 1]] = layers[i].shop[state];
    state = layers[i].parent[state];
  }
  return evaluate_assignment(instance, assignment);
}

SolveResult frontier_dp_max_discount(const Instance& instance, const FrontierOptions& options) {
  if (auto book = first_non_fixed_price_book(instance)) {
    throw Error(ErrorCode::NotFixedPrice, "b" + std::to_string(*book + 1));
  }
  return frontier_dp_min_cost(instance, options);
}

}  // namespace clevershop
