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

#ifndef CLEVERSHOP_MATCHING_HPP
#define CLEVERSHOP_MATCHING_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "clevershop/instance.hpp"

namespace clevershop {

struct WeightedEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  Money weight = 0;
  std::optional<ShopIndex> tag;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

// Undirected simple graph with integer edge weights. Adding an edge between
// an already connected pair keeps the heavier edge; on equal weights the
// lower tag wins (an untagged edge counts as lower than any tag).
class WeightedGraph {
 public:
  explicit WeightedGraph(std::size_t vertex_count) : vertex_count_(vertex_count) {}

  // Throws std::invalid_argument on self-loops or out-of-range vertices.
  void add_edge(std::size_t u, std::size_t v, Money weight,
                std::optional<ShopIndex> tag = std::nullopt);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::span<const WeightedEdge> edges() const noexcept { return edges_; }

 private:
  std::size_t vertex_count_;
  std::vector<WeightedEdge> edges_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index_;
};

/// Maximum-weight matching in a general graph (Edmonds' blossom algorithm
/// with integer dual variables, O(V^3)). Not necessarily perfect nor of
/// maximum cardinality; edges with negative weight are never used.
/// Returns indices into graph.edges(), in increasing order.
std::vector<std::size_t> max_weight_matching(const WeightedGraph& graph);

Money matching_weight(const WeightedGraph& graph, std::span<const std::size_t> matching);

}  // namespace clevershop

#endif  // CLEVERSHOP_MATCHING_HPP
