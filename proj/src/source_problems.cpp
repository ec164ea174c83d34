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

// Small exhaustive solvers for the source problems of the generators.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "clevershop/reductions.hpp"

namespace clevershop {

namespace {

bool subset_reaches(std::span<const Money> weights, std::size_t i, Money remaining) {
  if (remaining == 0) return true;
  if (remaining < 0 || i == weights.size()) return false;
  return subset_reaches(weights, i + 1, remaining - weights[i]) ||
         subset_reaches(weights, i + 1, remaining);
}

bool pack(std::span<const Money> weights, std::size_t i, std::vector<Money>& load,
          Money capacity) {
  if (i == weights.size()) return true;
  for (std::size_t b = 0; b < load.size(); ++b) {
    if (load[b] + weights[i] <= capacity) {
      load[b] += weights[i];
      if (pack(weights, i + 1, load, capacity)) return true;
      load[b] -= weights[i];
    }
    if (load[b] == 0) break;  // empty bins are interchangeable
  }
  return false;
}

std::vector<std::uint32_t> closed_neighbourhoods(const SimpleGraph& graph) {
  if (graph.vertex_count > 31) throw std::invalid_argument("graph too large for brute force");
  std::vector<std::uint32_t> nb(graph.vertex_count);
  for (std::size_t u = 0; u < graph.vertex_count; ++u) nb[u] = 1u << u;
  for (auto [u, v] : graph.edges) {
    nb[u] |= 1u << v;
    nb[v] |= 1u << u;
  }
  return nb;
}

// Every vertex sees between `lo` and 1 chosen vertices in its closed
// neighbourhood, for some k-subset.
bool closed_neighbourhood_search(const SimpleGraph& graph, std::size_t k, int lo) {
  const auto nb = closed_neighbourhoods(graph);
  const std::size_t n = graph.vertex_count;
  if (k > n) return false;
  for (std::uint32_t set = 0; set < (1u << n); ++set) {
    if (static_cast<std::size_t>(std::popcount(set)) != k) continue;
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u) {
      const int hits = std::popcount(nb[u] & set);
      ok = hits >= lo && hits <= 1;
    }
    if (ok) return true;
  }
  return false;
}

bool cover(const X3CInstance& x3c, std::vector<bool>& covered, std::size_t left) {
  if (left == 0) return true;
  const std::size_t item = static_cast<std::size_t>(
      std::find(covered.begin(), covered.end(), false) - covered.begin());
  for (const auto& set : x3c.sets) {
    if (std::find(set.begin(), set.end(), item) == set.end()) continue;
    if (covered[set[0]] || covered[set[1]] || covered[set[2]]) continue;
    for (std::size_t x : set) covered[x] = true;
    if (cover(x3c, covered, left - 3)) return true;
    for (std::size_t x : set) covered[x] = false;
  }
  return false;
}

}  // namespace

bool has_balanced_partition(std::span<const Money> weights) {
  const Money total = std::accumulate(weights.begin(), weights.end(), Money{0});
  if (total % 2 != 0) return false;
  return subset_reaches(weights, 0, total / 2);
}

bool bin_packing_feasible(std::span<const Money> weights, std::size_t bins, Money capacity) {
  std::vector<Money> sorted(weights.begin(), weights.end());
  std::sort(sorted.rbegin(), sorted.rend());
  std::vector<Money> load(bins, 0);
  return pack(sorted, 0, load, capacity);
}

bool has_perfect_code(const SimpleGraph& graph, std::size_t k) {
  return closed_neighbourhood_search(graph, k, 1);
}

bool has_closed_neighbourhood_packing(const SimpleGraph& graph, std::size_t k) {
  return closed_neighbourhood_search(graph, k, 0);
}

bool has_exact_cover(const X3CInstance& instance) {
  if (instance.item_count % 3 != 0) return false;
  std::vector<bool> covered(instance.item_count, false);
  return cover(instance, covered, instance.item_count);
}

std::size_t max_satisfied_clauses(const CnfFormula& formula) {
  const std::size_t n = formula.variable_count;
  if (n > 30) throw std::invalid_argument("too many variables for a truth table");
  std::size_t best = 0;
  for (std::uint64_t tau = 0; tau < (std::uint64_t{1} << n); ++tau) {
    std::size_t sat = 0;
    for (const auto& clause : formula.clauses) {
      for (const Literal& lit : clause) {
        if ((((tau >> lit.variable) & 1u) != 0) == lit.positive) {
          ++sat;
          break;
        }
      }
    }
    best = std::max(best, sat);
  }
  return best;
}

}  // namespace clevershop
