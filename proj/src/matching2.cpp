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

#include <string>

#include "clevershop/error.hpp"
#include "clevershop/exact.hpp"

namespace clevershop {

// Edge weights measure the saving over buying at min_price:
//   {b, s}   if w(b,s) >= t_s:              d_s + p(b) - w(b,s)
//   {b1, b2} if w(b1,s) + w(b2,s) >= t_s:   d_s + p(b1) - w(b1,s) + p(b2) - w(b2,s)
// Zero-threshold shops pay out whatever is bought and get no edges.
WeightedGraph build_discount_graph(const Instance& instance) {
  const std::size_t n = instance.book_count();
  WeightedGraph graph(n + instance.shop_count());
  for (ShopIndex s = 0; s < instance.shop_count(); ++s) {
    const auto offers = instance.offers_of_shop(s);
    if (offers.size() > 2) {
      throw Error(ErrorCode::DegreeTooHigh,
                  "s" + std::to_string(s + 1) + " sells " + std::to_string(offers.size()) +
                      " books");
    }
    const DiscountRule& rule = instance.rule(s);
    if (rule.threshold == 0) continue;
    for (const Offer& o : offers) {
      if (o.price >= rule.threshold) {
        graph.add_edge(o.book, n + s, rule.discount + min_price(instance, o.book) - o.price, s);
      }
    }
    if (offers.size() == 2 && offers[0].price + offers[1].price >= rule.threshold) {
      const Money weight = rule.discount + min_price(instance, offers[0].book) -
                           offers[0].price + min_price(instance, offers[1].book) -
                           offers[1].price;
      graph.add_edge(offers[0].book, offers[1].book, weight, s);
    }
  }
  return graph;
}

MatchingSolve matching2_solve(const Instance& instance) {
  const std::size_t n = instance.book_count();
  MatchingSolve solve;
  solve.graph = build_discount_graph(instance);
  solve.matching = max_weight_matching(solve.graph);
  solve.matching_weight = matching_weight(solve.graph, solve.matching);
  for (const DiscountRule& rule : instance.rules()) {
    if (rule.threshold == 0) solve.free_discount += rule.discount;
  }

  Assignment assignment;
  assignment.choice.resize(n);
  std::vector<bool> placed(n, false);
  for (std::size_t k : solve.matching) {
    const WeightedEdge& e = solve.graph.edges()[k];
    const ShopIndex shop = *e.tag;
    for (std::size_t v : {e.u, e.v}) {
      if (v < n) {
        assignment.choice[v] = shop;
        placed[v] = true;
      }
    }
  }
  for (BookIndex b = 0; b < n; ++b) {
    if (!placed[b]) assignment.choice[b] = cheapest_shop(instance, b);
  }
  solve.result = evaluate_assignment(instance, assignment);
  return solve;
}

SolveResult matching2_min_cost(const Instance& instance) {
  return matching2_solve(instance).result;
}

}  // namespace clevershop
