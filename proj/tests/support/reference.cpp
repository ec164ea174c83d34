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

#include "support/reference.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace clevershop::testing {

namespace {

Money offered_price(const Instance& instance, BookIndex b, ShopIndex s) {
  for (const Offer& o : instance.offers()) {
    if (o.book == b && o.shop == s) return o.price;
  }
  throw std::out_of_range("pair not offered");
}

std::vector<Money> spends(const Instance& instance, const std::vector<ShopIndex>& choice) {
  std::vector<Money> spend(instance.shop_count(), 0);
  for (BookIndex b = 0; b < choice.size(); ++b) spend[choice[b]] += offered_price(instance, b, choice[b]);
  return spend;
}

Money discounts(const Instance& instance, const std::vector<Money>& spend) {
  Money total = 0;
  for (ShopIndex s = 0; s < spend.size(); ++s) {
    if (spend[s] >= instance.rule(s).threshold) total += instance.rule(s).discount;
  }
  return total;
}

struct Search {
  const Instance& instance;
  std::vector<std::vector<std::pair<ShopIndex, Money>>> choices;
  std::vector<Money> spend;
  Money gross = 0;
  RefOptimum best{std::numeric_limits<Money>::max(), std::numeric_limits<Money>::min()};

  void run(BookIndex b) {
    if (b == choices.size()) {
      const Money d = discounts(instance, spend);
      best.min_cost = std::min(best.min_cost, gross - d);
      best.max_discount = std::max(best.max_discount, d);
      return;
    }
    for (auto [s, price] : choices[b]) {
      spend[s] += price;
      gross += price;
      run(b + 1);
      spend[s] -= price;
      gross -= price;
    }
  }
};

}  // namespace

Money ref_cost(const Instance& instance, const std::vector<ShopIndex>& choice) {
  const auto spend = spends(instance, choice);
  return std::accumulate(spend.begin(), spend.end(), Money{0}) - discounts(instance, spend);
}

Money ref_discount(const Instance& instance, const std::vector<ShopIndex>& choice) {
  return discounts(instance, spends(instance, choice));
}

RefOptimum ref_optimum(const Instance& instance) {
  Search search{instance, {}, std::vector<Money>(instance.shop_count(), 0)};
  search.choices.resize(instance.book_count());
  for (const Offer& o : instance.offers()) search.choices[o.book].emplace_back(o.shop, o.price);
  search.run(0);
  return search.best;
}

Money ref_matching_weight(std::size_t vertex_count, const std::vector<RefEdge>& edges) {
  if (vertex_count > 20) throw std::invalid_argument("graph too large");
  std::vector<std::vector<std::pair<std::size_t, Money>>> adj(vertex_count);
  for (auto [u, v, w] : edges) {
    adj[u].emplace_back(v, w);
    adj[v].emplace_back(u, w);
  }
  const std::uint32_t full = (1u << vertex_count) - 1;
  std::vector<std::optional<Money>> memo(std::size_t{1} << vertex_count);
  auto best = [&](auto&& self, std::uint32_t used) -> Money {
    if (used == full) return 0;
    if (memo[used]) return *memo[used];
    std::size_t v = 0;
    while (used & (1u << v)) ++v;
    Money result = self(self, used | (1u << v));  // v stays unmatched
    for (auto [u, w] : adj[v]) {
      if (!(used & (1u << u))) result = std::max(result, w + self(self, used | (1u << v) | (1u << u)));
    }
    memo[used] = result;
    return result;
  };
  return best(best, 0);
}

std::size_t ref_fstar_size(const Instance& instance, const StarDegreeBound& bound) {
  std::vector<Money> room = bound.shop_capacity;
  std::size_t best = 0;
  auto go = [&](auto&& self, BookIndex b, std::size_t taken) -> void {
    if (b == instance.book_count()) {
      best = std::max(best, taken);
      return;
    }
    self(self, b + 1, taken);
    if (bound.book_capacity[b] == 0) return;
    for (const Offer& o : instance.offers()) {
      if (o.book != b || room[o.shop] <= 0) continue;
      --room[o.shop];
      self(self, b + 1, taken + 1);
      ++room[o.shop];
    }
  };
  go(go, 0, 0);
  return best;
}

bool ref_partition(const std::vector<Money>& weights) {
  const Money total = std::accumulate(weights.begin(), weights.end(), Money{0});
  for (std::uint32_t mask = 0; mask < (1u << weights.size()); ++mask) {
    Money side = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (mask & (1u << i)) side += weights[i];
    }
    if (2 * side == total) return true;
  }
  return false;
}

bool ref_bin_packing(const std::vector<Money>& weights, std::size_t bins, Money capacity) {
  std::vector<std::size_t> bin(weights.size(), 0);
  while (true) {
    std::vector<Money> load(bins, 0);
    for (std::size_t i = 0; i < weights.size(); ++i) load[bin[i]] += weights[i];
    if (std::all_of(load.begin(), load.end(), [&](Money l) { return l <= capacity; })) return true;
    std::size_t i = 0;
    while (i < bin.size() && ++bin[i] == bins) bin[i++] = 0;
    if (i == bin.size()) return false;
  }
}

bool ref_perfect_code(const SimpleGraph& graph, std::size_t k) {
  const std::size_t n = graph.vertex_count;
  std::vector<std::vector<bool>> closed(n, std::vector<bool>(n, false));
  for (std::size_t u = 0; u < n; ++u) closed[u][u] = true;
  for (auto [u, v] : graph.edges) closed[u][v] = closed[v][u] = true;
  for (std::uint32_t code = 0; code < (1u << n); ++code) {
    if (static_cast<std::size_t>(__builtin_popcount(code)) != k) continue;
    bool perfect = true;
    for (std::size_t u = 0; u < n && perfect; ++u) {
      std::size_t hits = 0;
      for (std::size_t v = 0; v < n; ++v) hits += closed[u][v] && (code & (1u << v));
      perfect = hits == 1;
    }
    if (perfect) return true;
  }
  return false;
}

bool ref_exact_cover(const X3CInstance& instance) {
  const std::size_t sets = instance.sets.size();
  if (sets > 24) throw std::invalid_argument("too many sets");
  for (std::uint32_t pick = 0; pick < (1u << sets); ++pick) {
    std::vector<int> hits(instance.item_count, 0);
    for (std::size_t i = 0; i < sets; ++i) {
      if (pick & (1u << i)) {
        for (std::size_t x : instance.sets[i]) ++hits[x];
      }
    }
    if (std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; })) return true;
  }
  return false;
}

std::size_t ref_max_sat(const CnfFormula& formula) {
  std::size_t best = 0;
  for (std::uint32_t tau = 0; tau < (1u << formula.variable_count); ++tau) {
    std::size_t sat = 0;
    for (const auto& clause : formula.clauses) {
      sat += std::any_of(clause.begin(), clause.end(), [&](const Literal& l) {
        return static_cast<bool>(tau & (1u << l.variable)) == l.positive;
      });
    }
    best = std::max(best, sat);
  }
  return best;
}

SimpleGraph random_graph(Rng& rng, std::size_t vertices, double edge_probability) {
  SimpleGraph graph;
  graph.vertex_count = vertices;
  for (std::size_t u = 0; u < vertices; ++u) {
    for (std::size_t v = u + 1; v < vertices; ++v) {
      if (rng.chance(edge_probability)) graph.edges.emplace_back(u, v);
    }
  }
  return graph;
}

CnfFormula random_twice_cnf(Rng& rng, std::size_t variables) {
  if (variables % 3 != 0) throw std::invalid_argument("variables must be a multiple of 3");
  std::vector<Literal> occurrences;
  for (std::size_t v = 0; v < variables; ++v) {
    for (int copy = 0; copy < 2; ++copy) {
      occurrences.push_back({v, true});
      occurrences.push_back({v, false});
    }
  }
  std::shuffle(occurrences.begin(), occurrences.end(), rng.engine());
  CnfFormula formula;
  formula.variable_count = variables;
  for (std::size_t i = 0; i < occurrences.size(); i += 3) {
    formula.clauses.push_back({occurrences[i], occurrences[i + 1], occurrences[i + 2]});
  }
  return formula;
}

X3CInstance random_x3c(Rng& rng, std::size_t items, std::size_t sets) {
  X3CInstance instance;
  instance.item_count = items;
  for (std::size_t i = 0; i < sets; ++i) {
    std::vector<std::size_t> pool(items);
    std::iota(pool.begin(), pool.end(), 0);
    std::shuffle(pool.begin(), pool.end(), rng.engine());
    std::array<std::size_t, 3> set{pool[0], pool[1], pool[2]};
    std::sort(set.begin(), set.end());
    instance.sets.push_back(set);
  }
  return instance;
}

}  // namespace clevershop::testing
