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
#include <limits>
#include <random>
#include <string>
#include <vector>

#include "clevershop/error.hpp"
#include "clevershop/reductions.hpp"

namespace clevershop {

namespace {

// Uniform integer in [lo, hi] by rejection, so the stream is identical
// across standard library implementations.
Money uniform(std::mt19937_64& rng, Money lo, Money hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<Money>(x % span);
}

}  // namespace

Instance random_instance(const RandomInstanceParams& p) {
  if (p.books == 0 || p.shops == 0) {
    throw Error(ErrorCode::InfeasibleParameters, "need at least one book and one shop");
  }
  if (p.max_price < 1 || p.discounts.min_discount > p.discounts.max_discount ||
      p.discounts.min_threshold > p.discounts.max_threshold) {
    throw Error(ErrorCode::InfeasibleParameters, "empty price or discount range");
  }
  const std::size_t cap = p.shop_degree_cap.value_or(p.books);
  if (cap == 0 || p.books > cap * p.shops) {
    throw Error(ErrorCode::InfeasibleParameters,
                std::to_string(p.books) + " books cannot be covered by " +
                    std::to_string(p.shops) + " shops of degree <= " + std::to_string(cap));
  }

  std::mt19937_64 rng(p.seed);
  InstanceData data;
  data.book_count = p.books;
  data.budget = p.budget;
  for (std::size_t s = 0; s < p.shops; ++s) {
    const Money d = uniform(rng, p.discounts.min_discount, p.discounts.max_discount);
    const Money t = uniform(rng, p.discounts.min_threshold, p.discounts.max_threshold);
    data.shops.push_back({d, t});
  }

  std::vector<std::vector<bool>> sells(p.books, std::vector<bool>(p.shops, false));
  std::vector<std::size_t> degree(p.shops, 0);
  for (std::size_t b = 0; b < p.books; ++b) {
    std::vector<std::size_t> open;
    for (std::size_t s = 0; s < p.shops; ++s) {
      if (degree[s] < cap) open.push_back(s);
    }
    const std::size_t s = open[static_cast<std::size_t>(
        uniform(rng, 0, static_cast<Money>(open.size()) - 1))];
    sells[b][s] = true;
    ++degree[s];
  }
  const Money density = static_cast<Money>(p.offer_density * 1000.0);
  for (std::size_t b = 0; b < p.books; ++b) {
    for (std::size_t s = 0; s < p.shops; ++s) {
      const bool roll = uniform(rng, 0, 999) < density;
      if (!sells[b][s] && roll && degree[s] < cap) {
        sells[b][s] = true;
        ++degree[s];
      }
    }
  }

  for (std::size_t b = 0; b < p.books; ++b) {
    const Money book_price = p.unit_prices ? 1 : uniform(rng, 1, p.max_price);
    for (std::size_t s = 0; s < p.shops; ++s) {
      if (!sells[b][s]) continue;
      Money price = book_price;
      if (!p.unit_prices && !p.fixed_prices) price = uniform(rng, 1, p.max_price);
      data.offers.push_back({b, s, price});
    }
  }
  return validate_instance(std::move(data));
}

}  // namespace clevershop
