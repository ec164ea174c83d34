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

#include "clevershop/reductions.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "clevershop/error.hpp"

namespace clevershop {

namespace {

std::string b_label(std::size_t i) { return "b" + std::to_string(i + 1); }
std::string s_label(std::size_t i) { return "s" + std::to_string(i + 1); }

GeneratedInstance finish(InstanceData data, std::string source, Money target_budget) {
  data.budget = target_budget;
  GeneratedInstance gen{validate_instance(std::move(data)), std::move(source), target_budget,
                        std::nullopt, std::nullopt, {}, {}};
  return gen;
}

std::size_t ceil_log2(std::size_t t) {
  std::size_t bits = 0;
  while ((std::size_t{1} << bits) < t) ++bits;
  return bits;
}

}  // namespace

GeneratedInstance from_partition(std::span<const Money> weights) {
  if (weights.empty()) throw Error(ErrorCode::EmptyInput, "partition weights");
  for (Money w : weights) {
    if (w < 1) throw Error(ErrorCode::MalformedSource, "partition weights must be positive");
  }
  const Money total = std::accumulate(weights.begin(), weights.end(), Money{0});
  if (total < 2) {
    throw Error(ErrorCode::InfeasibleParameters, "total weight below 2 gives a negative budget");
  }
  const Money half = (total + 1) / 2;

  InstanceData data;
  data.book_count = weights.size();
  data.shops = {DiscountRule{1, half}, DiscountRule{1, half}};
  for (std::size_t i = 0; i < weights.size(); ++i) {
    data.offers.push_back({i, 0, weights[i]});
    data.offers.push_back({i, 1, weights[i]});
  }
  GeneratedInstance gen = finish(std::move(data), "partition", total - 2);
  if (total % 2 != 0) {
    gen.expected_answer = false;
    gen.notes.push_back("odd total: both discounts would need more than the total");
  } else if (weights.size() <= kPartitionBruteForceItems) {
    gen.expected_answer = has_balanced_partition(weights);
  }
  for (std::size_t i = 0; i < weights.size(); ++i) {
    gen.witness_map.emplace_back("a" + std::to_string(i + 1), b_label(i));
  }
  gen.witness_map.emplace_back("side 1", "s1");
  gen.witness_map.emplace_back("side 2", "s2");
  return gen;
}

GeneratedInstance from_bin_packing(std::span<const Money> weights, std::size_t bins,
                                   Money capacity) {
  if (weights.empty() || bins == 0) throw Error(ErrorCode::EmptyInput, "bin packing input");
  const Money total = std::accumulate(weights.begin(), weights.end(), Money{0});
  if (total != static_cast<Money>(bins) * capacity) {
    throw Error(ErrorCode::WeightSumMismatch,
                "weights sum to " + std::to_string(total) + ", bins * capacity is " +
                    std::to_string(static_cast<Money>(bins) * capacity));
  }
  InstanceData data;
  data.book_count = weights.size();
  data.shops.assign(bins, DiscountRule{1, capacity});
  for (std::size_t i = 0; i < weights.size(); ++i) {
    for (std::size_t s = 0; s < bins; ++s) data.offers.push_back({i, s, weights[i]});
  }
  GeneratedInstance gen =
      finish(std::move(data), "binpacking", static_cast<Money>(bins) * (capacity - 1));
  std::uint64_t space = 1;
  for (std::size_t i = 0; i < weights.size() && space <= kBinPackingBruteForceCap; ++i) {
    space *= bins;
  }
  if (space <= kBinPackingBruteForceCap) {
    gen.expected_answer = bin_packing_feasible(weights, bins, capacity);
  }
  for (std::size_t i = 0; i < weights.size(); ++i) {
    gen.witness_map.emplace_back("item " + std::to_string(i + 1), b_label(i));
  }
  for (std::size_t s = 0; s < bins; ++s) {
    gen.witness_map.emplace_back("bin " + std::to_string(s + 1), s_label(s));
  }
  return gen;
}

GeneratedInstance from_perfect_code(const SimpleGraph& graph, std::size_t k) {
  const std::size_t n = graph.vertex_count;
  if (n == 0) throw Error(ErrorCode::EmptyInput, "perfect code graph");
  if (k > n) {
    throw Error(ErrorCode::InfeasibleParameters,
                "k = " + std::to_string(k) + " exceeds " + std::to_string(n) + " vertices");
  }
  std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
  for (auto [u, v] : graph.edges) {
    if (u >= n || v >= n || u == v) {
      throw Error(ErrorCode::MalformedSource,
                  "edge (" + std::to_string(u + 1) + ", " + std::to_string(v + 1) + ")");
    }
    adjacent[u][v] = adjacent[v][u] = true;
  }
  InstanceData data;
  data.book_count = n;
  for (std::size_t i = 0; i < n; ++i) {
    const auto degree = std::count(adjacent[i].begin(), adjacent[i].end(), true);
    data.shops.push_back(DiscountRule{1, static_cast<Money>(degree) + 1});
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || adjacent[i][j]) data.offers.push_back({j, i, 1});
    }
  }
  GeneratedInstance gen = finish(std::move(data), "perfectcode", static_cast<Money>(n - k));
  if (n <= kPerfectCodeBruteForceVertices) gen.expected_answer = has_perfect_code(graph, k);
  for (std::size_t i = 0; i < n; ++i) {
    gen.witness_map.emplace_back("u" + std::to_string(i + 1), b_label(i) + " " + s_label(i));
  }
  return gen;
}

GeneratedInstance x3c_or_composition(std::span<const X3CInstance> instances,
                                     const X3COptions& options) {
  if (instances.empty()) throw Error(ErrorCode::EmptyInput, "no X3C instances");
  const std::size_t items = instances.front().item_count;
  std::vector<bool> occurs(items, false);
  for (std::size_t h = 0; h < instances.size(); ++h) {
    const X3CInstance& x3c = instances[h];
    if (x3c.item_count != items) {
      throw Error(ErrorCode::ItemCountMismatch,
                  "instance " + std::to_string(h + 1) + " has " +
                      std::to_string(x3c.item_count) + " items, expected " +
                      std::to_string(items));
    }
    std::vector<std::size_t> count(items, 0);
    for (const auto& set : x3c.sets) {
      for (std::size_t x : set) {
        if (x >= items) {
          throw Error(ErrorCode::MalformedSource, "item " + std::to_string(x + 1) +
                                                      " out of range in instance " +
                                                      std::to_string(h + 1));
        }
      }
      if (set[0] == set[1] || set[0] == set[2] || set[1] == set[2]) {
        throw Error(ErrorCode::MalformedSource,
                    "repeated item in a set of instance " + std::to_string(h + 1));
      }
      for (std::size_t x : set) {
        ++count[x];
        occurs[x] = true;
      }
    }
    if (options.require_exactly_three) {
      for (std::size_t x = 0; x < items; ++x) {
        if (count[x] != 3) {
          throw Error(ErrorCode::NotExactly3Occurrences,
                      "item " + std::to_string(x + 1) + " occurs " + std::to_string(count[x]) +
                          " times in instance " + std::to_string(h + 1));
        }
      }
    }
  }
  for (std::size_t x = 0; x < items; ++x) {
    if (!occurs[x]) {
      throw Error(ErrorCode::MalformedSource,
                  "item " + std::to_string(x + 1) + " is in no set of any instance");
    }
  }

  const std::size_t t = instances.size();
  const std::size_t bits = ceil_log2(t);
  const std::size_t keys = 2 * bits;  // |J|, index bit * bits + (j - 1)
  const Money price = options.price_offset + 1;
  auto j_index = [&](std::size_t bit, std::size_t j) { return bit * bits + j; };
  auto x_book = [&](std::size_t item, std::size_t jj) { return items + item * keys + jj; };

  InstanceData data;
  data.book_count = items * (keys + 1);
  // selector shops first
  for (std::size_t jj = 0; jj < keys; ++jj) {
    data.shops.push_back({});
    for (std::size_t i = 0; i < items; ++i) data.offers.push_back({x_book(i, jj), jj, price});
  }
  std::vector<std::pair<std::string, std::string>> witness;
  for (std::size_t h = 0; h < t; ++h) {
    const std::size_t id = h + 1;
    std::vector<std::size_t> key;
    for (std::size_t j = 0; j < bits; ++j) key.push_back(j_index((id >> j) & 1u, j));
    for (std::size_t k = 0; k < instances[h].sets.size(); ++k) {
      const ShopIndex shop = data.shops.size();
      data.shops.push_back({});
      for (std::size_t i : instances[h].sets[k]) {
        data.offers.push_back({i, shop, price});
        for (std::size_t jj : key) data.offers.push_back({x_book(i, jj), shop, price});
      }
      witness.emplace_back("instance " + std::to_string(id) + " set " + std::to_string(k + 1),
                           s_label(shop));
    }
  }
  std::vector<Money> degree(data.shops.size(), 0);
  for (const Offer& o : data.offers) ++degree[o.shop];
  for (std::size_t s = 0; s < data.shops.size(); ++s) {
    data.shops[s] = DiscountRule{degree[s], degree[s] * price};
  }

  const Money n_prime = static_cast<Money>(data.book_count);
  GeneratedInstance gen = finish(std::move(data), "x3c", options.price_offset * n_prime);

  bool small = true;
  for (const X3CInstance& x3c : instances) small = small && x3c.sets.size() <= kX3CBruteForceSets;
  if (small) {
    bool any = false;
    for (const X3CInstance& x3c : instances) any = any || has_exact_cover(x3c);
    gen.expected_answer = any;
  }

  for (std::size_t i = 0; i < items; ++i) {
    gen.witness_map.emplace_back("item " + std::to_string(i + 1), b_label(i));
  }
  for (std::size_t jj = 0; jj < keys; ++jj) {
    const std::string j_name =
        "(" + std::to_string(jj / bits) + "," + std::to_string(jj % bits + 1) + ")";
    gen.witness_map.emplace_back("sigma" + j_name, s_label(jj));
    for (std::size_t i = 0; i < items; ++i) {
      gen.witness_map.emplace_back("x" + std::to_string(i + 1) + j_name, b_label(x_book(i, jj)));
    }
  }
  gen.witness_map.insert(gen.witness_map.end(), witness.begin(), witness.end());
  gen.notes.push_back("key bits: j = 1 is the least significant bit of the 1-based instance id");
  gen.notes.push_back("identifier (bit,j) -> selector shop index bit*L + j, L = " +
                      std::to_string(bits));
  return gen;
}

GeneratedInstance from_max3sat(const CnfFormula& formula) {
  const std::size_t n = formula.variable_count;
  const std::size_t m = formula.clauses.size();
  if (n == 0 || m == 0) {
    throw Error(ErrorCode::LiteralOccurrenceViolation, "empty formula (4n = 3m fails)");
  }
  std::vector<std::size_t> pos(n, 0);
  std::vector<std::size_t> neg(n, 0);
  for (const auto& clause : formula.clauses) {
    for (const Literal& lit : clause) {
      if (lit.variable >= n) {
        throw Error(ErrorCode::LiteralOccurrenceViolation,
                    "variable " + std::to_string(lit.variable + 1) + " out of range");
      }
      ++(lit.positive ? pos : neg)[lit.variable];
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (pos[v] != 2 || neg[v] != 2) {
      throw Error(ErrorCode::LiteralOccurrenceViolation,
                  "x" + std::to_string(v + 1) + " occurs " + std::to_string(pos[v]) +
                      " times positively and " + std::to_string(neg[v]) + " times negatively");
    }
  }

  const auto clause_shop = [](std::size_t i) { return i; };
  const auto true_shop = [m](std::size_t v) { return m + 2 * v; };
  const auto false_shop = [m](std::size_t v) { return m + 2 * v + 1; };
  InstanceData data;
  data.book_count = 3 * m + n;
  data.shops.assign(m, DiscountRule{1, 1});
  for (std::size_t v = 0; v < n; ++v) {
    data.shops.push_back(DiscountRule{2, 3});
    data.shops.push_back(DiscountRule{2, 3});
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      const Literal& lit = formula.clauses[i][j];
      const BookIndex book = 3 * i + j;
      data.offers.push_back({book, clause_shop(i), 1});
      data.offers.push_back(
          {book, lit.positive ? true_shop(lit.variable) : false_shop(lit.variable), 1});
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    data.offers.push_back({3 * m + v, true_shop(v), 1});
    data.offers.push_back({3 * m + v, false_shop(v), 1});
  }

  // Unit prices: cost = (3m + n) - discount. A 2n discount is always
  // available, so that bound is the target when k* is unknown.
  const Money books = static_cast<Money>(3 * m + n);
  std::optional<Money> best_discount;
  if (n <= kMaxSatBruteForceVariables) {
    best_discount = static_cast<Money>(2 * n + max_satisfied_clauses(formula));
  }
  GeneratedInstance gen = finish(std::move(data), "max3sat",
                                 books - best_discount.value_or(static_cast<Money>(2 * n)));
  gen.expected_max_discount = best_discount;
  if (best_discount) gen.expected_answer = true;

  for (std::size_t i = 0; i < m; ++i) {
    gen.witness_map.emplace_back("C" + std::to_string(i + 1), s_label(clause_shop(i)));
    for (std::size_t j = 0; j < 3; ++j) {
      gen.witness_map.emplace_back(
          "l" + std::to_string(i + 1) + "," + std::to_string(j + 1), b_label(3 * i + j));
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    const std::string x = std::to_string(v + 1);
    gen.witness_map.emplace_back("x" + x, b_label(3 * m + v));
    gen.witness_map.emplace_back("t" + x, s_label(true_shop(v)));
    gen.witness_map.emplace_back("f" + x, s_label(false_shop(v)));
  }
  gen.notes.push_back("shops=" + std::to_string(m + 2 * n) +
                      " books=" + std::to_string(3 * m + n));
  return gen;
}

}  // namespace clevershop
