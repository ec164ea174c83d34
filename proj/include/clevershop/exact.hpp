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

// Exact solvers:
//  - subset DP over (shop prefix, book subset), O(m 3^n);
//  - sparse reachability over per-shop spend vectors, O(n m W^m);
//  - maximum-weight matching reduction when every shop sells <= 2 books;
//  - f-star subgraph enumeration over shop subsets for unit prices;
//  - a frontier DP over capped spends of "open" shops, used to certify
//    optima of instances too large for exhaustive enumeration.

#ifndef CLEVERSHOP_EXACT_HPP
#define CLEVERSHOP_EXACT_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "clevershop/instance.hpp"
#include "clevershop/matching.hpp"

namespace clevershop {

struct SubsetDpOptions {
  std::size_t max_books = 20;
};

/// Throws TooManyBooks when n exceeds the cap.
SolveResult subset_dp_min_cost(const Instance& instance, const SubsetDpOptions& options = {});

struct PriceVectorOptions {
  std::size_t max_shops = 4;
  std::size_t max_states = 5'000'000;  // reachable states per layer
};

struct PriceVectorDecision {
  bool yes = false;
  // Cheapest reachable final state; present iff yes.
  std::optional<SolveResult> witness;
  std::size_t peak_states = 0;
};

/// Decides whether some assignment costs at most `budget`.
/// Throws TooManyShops or StateSpaceTooLarge.
PriceVectorDecision price_vector_dp(const Instance& instance, Money budget,
                                    const PriceVectorOptions& options = {});

// Auxiliary matching graph for degree-<=2 instances: vertices 0..n-1 are
// books, n..n+m-1 are shops. Edge tags carry the originating shop.
WeightedGraph build_discount_graph(const Instance& instance);

struct MatchingSolve {
  SolveResult result;
  WeightedGraph graph{0};
  std::vector<std::size_t> matching;  // indices into graph.edges()
  Money matching_weight = 0;
  // Discounts of zero-threshold shops, earned whatever is bought.
  Money free_discount = 0;
};

/// Exact solver when every shop sells at most two books. Throws DegreeTooHigh.
MatchingSolve matching2_solve(const Instance& instance);
SolveResult matching2_min_cost(const Instance& instance);

// Per-vertex capacities for the f-star subgraph: books first, then shops.
struct StarDegreeBound {
  std::vector<std::size_t> book_capacity;
  std::vector<Money> shop_capacity;
};

/// Maximum subgraph of the availability graph with deg(b) <= f(b) and
/// deg(s) <= f(s), computed by unit-capacity max flow. Returned as
/// (book, shop) pairs sorted by book.
std::vector<std::pair<BookIndex, ShopIndex>> max_fstar_subgraph(const Instance& instance,
                                                                const StarDegreeBound& bound);

struct FStarOptions {
  std::size_t max_shops = 20;
};

struct FStarSolve {
  SolveResult result;
  std::vector<ShopIndex> chosen_shops;  // the accepted S' of minimum |B| - d(S')
  std::vector<std::pair<BookIndex, ShopIndex>> star_edges;
};

/// Exact solver for unit-price instances. Throws NotUnitPrice or TooManyShops.
FStarSolve fstar_solve(const Instance& instance, const FStarOptions& options = {});
SolveResult fstar_unit_price_min_cost(const Instance& instance,
                                      const FStarOptions& options = {});

struct FrontierOptions {
  std::size_t max_states = 4'000'000;  // per layer
};

/// Exact minimum cost by dynamic programming over books in a low-frontier
/// order. A shop is open between its first and last processed book; the
/// state is the vector of open-shop spends capped at their thresholds, and
/// each state keeps the cheapest partial cost. Throws StateSpaceTooLarge.
SolveResult frontier_dp_min_cost(const Instance& instance, const FrontierOptions& options = {});

/// Maximum discount on a fixed-price instance, via frontier_dp_min_cost
/// (with fixed prices, cost = sum of prices - discount).
SolveResult frontier_dp_max_discount(const Instance& instance,
                                     const FrontierOptions& options = {});

}  // namespace clevershop

#endif  // CLEVERSHOP_EXACT_HPP
