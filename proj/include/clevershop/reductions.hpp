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

// Instance generators built from classical NP-hard source problems. Each
// generator returns the instance together with a certificate: the budget
// the construction targets and, when a small brute force on the source
// problem finishes, the expected yes/no answer.

#ifndef CLEVERSHOP_REDUCTIONS_HPP
#define CLEVERSHOP_REDUCTIONS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "clevershop/instance.hpp"

namespace clevershop {

struct GeneratedInstance {
  Instance instance;  // carries target_budget as its budget
  std::string source;
  Money target_budget = 0;
  std::optional<bool> expected_answer;
  // Max-3-SAT gadgets only: 2n + (max satisfiable clauses), when computed.
  std::optional<Money> expected_max_discount;
  // source object -> book/shop labels, e.g. {"u3", "b3 s3"}
  std::vector<std::pair<std::string, std::string>> witness_map;
  std::vector<std::string> notes;
};

// Simple undirected graph on vertices 0..vertex_count-1.
struct SimpleGraph {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

// Exact Cover by 3-Sets over items 0..item_count-1.
struct X3CInstance {
  std::size_t item_count = 0;
  std::vector<std::array<std::size_t, 3>> sets;
};

struct Literal {
  std::size_t variable = 0;  // 0-based
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
};

struct CnfFormula {
  std::size_t variable_count = 0;
  std::vector<std::array<Literal, 3>> clauses;
};

// --- source-problem brute forces -------------------------------------------

// Caps on the source brute forces; above them no expected answer is given.
inline constexpr std::size_t kPartitionBruteForceItems = 24;
inline constexpr std::uint64_t kBinPackingBruteForceCap = 10'000'000;
inline constexpr std::size_t kPerfectCodeBruteForceVertices = 20;
inline constexpr std::size_t kX3CBruteForceSets = 60;
inline constexpr std::size_t kMaxSatBruteForceVariables = 20;

bool has_balanced_partition(std::span<const Money> weights);
bool bin_packing_feasible(std::span<const Money> weights, std::size_t bins, Money capacity);
bool has_perfect_code(const SimpleGraph& graph, std::size_t k);
// k vertices whose closed neighbourhoods are pairwise disjoint.
bool has_closed_neighbourhood_packing(const SimpleGraph& graph, std::size_t k);
bool has_exact_cover(const X3CInstance& instance);
std::size_t max_satisfied_clauses(const CnfFormula& formula);

// --- generators --------------------------------------------------------------

/// Two shops with rule (1, ceil(T/2)); every weight is a book sold by both at
/// that price; budget T - 2. Throws EmptyInput, MalformedSource for a
/// non-positive weight and InfeasibleParameters when T < 2.
GeneratedInstance from_partition(std::span<const Money> weights);

/// `bins` identical shops with rule (1, capacity); book i sold everywhere at
/// weight i; budget bins * (capacity - 1). Throws WeightSumMismatch unless
/// the weights sum to bins * capacity.
GeneratedInstance from_bin_packing(std::span<const Money> weights, std::size_t bins,
                                   Money capacity);

/// Book b_j and shop s_i per vertex; s_i sells N[u_i] at unit price with
/// rule (1, deg(u_i) + 1); budget n - k.
GeneratedInstance from_perfect_code(const SimpleGraph& graph, std::size_t k);

struct X3COptions {
  Money price_offset = 42;  // every offer costs price_offset + 1
  // Require every item in exactly three sets of each component. When off,
  // every item must still occur in some set of some component.
  bool require_exactly_three = true;
};

/// Or-composition of X3C instances over a common item count. Selector shops
/// sigma_j, j in {0,1} x [L], L = ceil(log2 t), identifier books x^i_j, and
/// one shop per 3-set that also sells x^i_j for j in Key_h. Key_h holds
/// (bit, j) where bit is bit j-1 of h (least significant first, h 1-based).
/// Each shop has rule (deg, deg * (T + 1)); budget T * n(2L + 1).
/// Throws EmptyInput, ItemCountMismatch, NotExactly3Occurrences or
/// MalformedSource.
GeneratedInstance x3c_or_composition(std::span<const X3CInstance> instances,
                                     const X3COptions& options = {});

/// Max-3-SAT gadget (each literal occurs exactly twice). Books: one per
/// literal occurrence, then one per variable. Shops: clause shops C_1..C_m
/// with rule (1, 1), then t_k, f_k per variable with rule (2, 3). Unit prices.
/// Throws LiteralOccurrenceViolation.
GeneratedInstance from_max3sat(const CnfFormula& formula);

struct DiscountModel {
  Money min_discount = 1;
  Money max_discount = 5;
  Money min_threshold = 1;
  Money max_threshold = 15;
};

struct RandomInstanceParams {
  std::size_t books = 5;
  std::size_t shops = 3;
  Money max_price = 10;  // prices uniform in [1, max_price]
  std::optional<std::size_t> shop_degree_cap;
  bool unit_prices = false;
  bool fixed_prices = false;
  // probability of each extra (book, shop) offer beyond the first per book
  double offer_density = 0.4;
  DiscountModel discounts;
  std::optional<Money> budget;
  std::uint64_t seed = 0;
};

/// Deterministic in all parameters. Throws InfeasibleParameters.
Instance random_instance(const RandomInstanceParams& params);

}  // namespace clevershop

#endif  // CLEVERSHOP_REDUCTIONS_HPP
