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
#include <cstdint>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "clevershop/error.hpp"
#include "clevershop/exact.hpp"

namespace clevershop {

namespace {

// Dinic's max flow; plenty for the unit-capacity layered graphs used here.
class MaxFlow {
 public:
  explicit MaxFlow(std::size_t nodes) : adj_(nodes), level_(nodes), it_(nodes) {}

  std::size_t add_arc(std::size_t from, std::size_t to, std::int64_t cap) {
    adj_[from].push_back(arcs_.size());
    arcs_.push_back({to, cap});
    adj_[to].push_back(arcs_.size());
    arcs_.push_back({from, 0});
    return arcs_.size() - 2;
  }

  std::int64_t run(std::size_t source, std::size_t sink) {
    std::int64_t total = 0;
    while (bfs(source, sink)) {
      std::fill(it_.begin(), it_.end(), 0);
      while (std::int64_t pushed =
                 dfs(source, sink, std::numeric_limits<std::int64_t>::max())) {
        total += pushed;
      }
    }
    return total;
  }

  std::int64_t flow_on(std::size_t arc) const { return arcs_[arc ^ 1].cap; }

 private:
  struct Arc {
    std::size_t to;
    std::int64_t cap;
  };

  bool bfs(std::size_t source, std::size_t sink) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> q;
    level_[source] = 0;
    q.push(source);
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (std::size_t a : adj_[u]) {
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[u] + 1;
          q.push(arcs_[a].to);
        }
      }
    }
    return level_[sink] >= 0;
  }

  std::int64_t dfs(std::size_t u, std::size_t sink, std::int64_t limit) {
    if (u == sink) return limit;
    for (; it_[u] < adj_[u].size(); ++it_[u]) {
      const std::size_t a = adj_[u][it_[u]];
      const std::size_t v = arcs_[a].to;
      if (arcs_[a].cap <= 0 || level_[v] != level_[u] + 1) continue;
      if (std::int64_t got = dfs(v, sink, std::min(limit, arcs_[a].cap))) {
        arcs_[a].cap -= got;
        arcs_[a ^ 1].cap += got;
        return got;
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<int> level_;
  std::vector<std::size_t> it_;
};

}  // namespace

// source -> book (cap f(b)), book -> shop (cap 1 per offer),
// shop -> sink (cap f(s)). In a bipartite graph with deg(b) <= 1 every
// component is a star centred at a shop.
std::vector<std::pair<BookIndex, ShopIndex>> max_fstar_subgraph(const Instance& instance,
                                                                const StarDegreeBound& bound) {
  const std::size_t n = instance.book_count();
  const std::size_t m = instance.shop_count();
  const std::size_t source = n + m;
  const std::size_t sink = n + m + 1;
  MaxFlow flow(n + m + 2);
  for (BookIndex b = 0; b < n; ++b) {
    const std::size_t cap = b < bound.book_capacity.size() ? bound.book_capacity[b] : 1;
    if (cap > 0) flow.add_arc(source, b, static_cast<std::int64_t>(cap));
  }
  for (ShopIndex s = 0; s < m; ++s) {
    const Money cap = s < bound.shop_capacity.size() ? bound.shop_capacity[s] : 0;
    if (cap > 0) {
      flow.add_arc(n + s, sink, std::min<Money>(cap, static_cast<Money>(instance.offers().size())));
    }
  }
  std::vector<std::size_t> arc_of_offer;
  arc_of_offer.reserve(instance.offers().size());
  for (const Offer& o : instance.offers()) arc_of_offer.push_back(flow.add_arc(o.book, n + o.shop, 1));
  flow.run(source, sink);

  std::vector<std::pair<BookIndex, ShopIndex>> edges;
  for (std::size_t i = 0; i < instance.offers().size(); ++i) {
    if (flow.flow_on(arc_of_offer[i]) > 0) {
      edges.emplace_back(instance.offers()[i].book, instance.offers()[i].shop);
    }
  }
  return edges;
}

// S' is claimable iff the f_{S'}-star subgraph reaches t(S') = sum of t_s
// edges. The optimum is min |B| - d(S') over claimable S'. Masks are tried in
// increasing order and ties keep the earlier mask.
FStarSolve fstar_solve(const Instance& instance, const FStarOptions& options) {
  if (auto offer = first_non_unit_offer(instance)) {
    throw Error(ErrorCode::NotUnitPrice, "(b" + std::to_string(offer->book + 1) + ", s" +
                                             std::to_string(offer->shop + 1) + ")");
  }
  const std::size_t n = instance.book_count();
  const std::size_t m = instance.shop_count();
  if (m > options.max_shops || m >= 63) {
    throw Error(ErrorCode::TooManyShops,
                std::to_string(m) + " shops, cap " + std::to_string(options.max_shops));
  }

  StarDegreeBound bound;
  bound.book_capacity.assign(n, 1);
  bound.shop_capacity.assign(m, 0);

  std::optional<std::uint64_t> best_mask;
  Money best_cost = 0;
  std::vector<std::pair<BookIndex, ShopIndex>> best_edges;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    Money need = 0;
    Money gain = 0;
    for (ShopIndex s = 0; s < m; ++s) {
      const bool in = (mask >> s) & 1u;
      bound.shop_capacity[s] = in ? instance.rule(s).threshold : 0;
      if (in) {
        need += instance.rule(s).threshold;
        gain += instance.rule(s).discount;
      }
    }
    const Money cost = static_cast<Money>(n) - gain;
    if (need > static_cast<Money>(n)) continue;
    if (best_mask && cost >= best_cost) continue;
    auto edges = max_fstar_subgraph(instance, bound);
    if (static_cast<Money>(edges.size()) != need) continue;
    best_mask = mask;
    best_cost = cost;
    best_edges = std::move(edges);
  }

  // mask 0 always qualifies (empty subgraph, zero requirement)
  FStarSolve solve;
  for (ShopIndex s = 0; s < m; ++s) {
    if ((*best_mask >> s) & 1u) solve.chosen_shops.push_back(s);
  }
  Assignment assignment;
  assignment.choice.resize(n);
  std::vector<bool> placed(n, false);
  for (auto [b, s] : best_edges) {
    assignment.choice[b] = s;
    placed[b] = true;
  }
  for (BookIndex b = 0; b < n; ++b) {
    if (!placed[b]) assignment.choice[b] = instance.offers_of_book(b).front().shop;
  }
  solve.star_edges = std::move(best_edges);
  solve.result = evaluate_assignment(instance, assignment);
  return solve;
}

SolveResult fstar_unit_price_min_cost(const Instance& instance, const FStarOptions& options) {
  return fstar_solve(instance, options).result;
}

}  // namespace clevershop
