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
#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "clevershop/error.hpp"
#include "clevershop/exact.hpp"

namespace clevershop {

namespace {

struct SpendHash {
  std::size_t operator()(const std::vector<Money>& v) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (Money x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

// One layer of reachable spend vectors. Only reachable tuples are stored;
// each remembers which state and shop it came from.
struct Layer {
  std::vector<std::vector<Money>> spends;
  std::vector<std::size_t> parent;
  std::vector<ShopIndex> shop;
};

}  // namespace

PriceVectorDecision price_vector_dp(const Instance& instance, Money budget,
                                    const PriceVectorOptions& options) {
  const std::size_t n = instance.book_count();
  const std::size_t m = instance.shop_count();
  if (m > options.max_shops) {
    throw Error(ErrorCode::TooManyShops,
                std::to_string(m) + " shops, cap " + std::to_string(options.max_shops));
  }

  std::vector<Layer> layers(n + 1);
  layers[0].spends.push_back(std::vector<Money>(m, 0));
  layers[0].parent.push_back(0);
  layers[0].shop.push_back(0);
  std::size_t peak = 1;

  for (BookIndex b = 0; b < n; ++b) {
    const Layer& from = layers[b];
    Layer& to = layers[b + 1];
    std::unordered_map<std::vector<Money>, std::size_t, SpendHash> seen;
    for (std::size_t i = 0; i < from.spends.size(); ++i) {
      for (const Offer& o : instance.offers_of_book(b)) {
        std::vector<Money> next = from.spends[i];
        next[o.shop] += o.price;
        if (seen.contains(next)) continue;
        seen.emplace(next, to.spends.size());
        to.spends.push_back(std::move(next));
        to.parent.push_back(i);
        to.shop.push_back(o.shop);
        if (to.spends.size() > options.max_states) {
          throw Error(ErrorCode::StateSpaceTooLarge,
                      "more than " + std::to_string(options.max_states) +
                          " spend vectors after book " + std::to_string(b + 1));
        }
      }
    }
    peak = std::max(peak, to.spends.size());
  }

  // Acceptance: sum of spends minus discounts of shops at threshold.
  const Layer& last = layers[n];
  std::size_t best_state = 0;
  Money best_cost = 0;
  for (std::size_t i = 0; i < last.spends.size(); ++i) {
    Money cost = 0;
    for (ShopIndex s = 0; s < m; ++s) {
      cost += last.spends[i][s] - discount_earned(instance.rule(s), last.spends[i][s]);
    }
    if (i == 0 || cost < best_cost) {
      best_cost = cost;
      best_state = i;
    }
  }

  PriceVectorDecision decision;
  decision.peak_states = peak;
  decision.yes = best_cost <= budget;
  if (decision.yes) {
    Assignment assignment;
    assignment.choice.assign(n, 0);
    std::size_t state = best_state;
    for (std::size_t b = n; b > 0; --b) {
      assignment.choice[b - 1] = layers[b].shop[state];
      state = layers[b].parent[state];
    }
    decision.witness = evaluate_assignment(instance, assignment);
  }
  return decision;
}

}  // namespace clevershop
