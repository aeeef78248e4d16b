// Copyright 2026 The Authors.
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

#ifndef SECLAB_CORE_BIPARTITE_HPP_
#define SECLAB_CORE_BIPARTITE_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "element_set.hpp"

namespace seclab {

// Bipartite graph with dense edge ids. Left nodes double as the ground set
// of a transversal matroid; edge ids double as the ground set of the
// bipartite matching problems.
class BipartiteGraph {
 public:
  struct Edge {
    std::size_t left;
    std::size_t right;
  };

  BipartiteGraph(std::size_t n_left, std::size_t n_right,
                 std::vector<Edge> edges);

  std::size_t n_left() const { return n_left_; }
  std::size_t n_right() const { return n_right_; }
  std::size_t edge_count() const { return edges_.size(); }
  const Edge& edge(std::size_t id) const { return edges_[id]; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Edge ids incident to a left node, increasing.
  const std::vector<std::size_t>& left_star(std::size_t l) const {
    return left_star_[l];
  }

  // Left endpoints of a set of edge ids, as a subset of [0, n_left).
  ElementSet left_endpoints(const ElementSet& edge_ids) const;

  // True when no two edges of the set share a left or a right node.
  bool is_matching(const ElementSet& edge_ids) const;

 private:
  std::size_t n_left_;
  std::size_t n_right_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> left_star_;
};

// Size of a maximum matching that may only use left nodes in
// restricted_left, by augmenting paths. Scratch state is per-call, so
// concurrent callers are fine.
std::size_t maximum_matching(const BipartiteGraph& graph,
                             const ElementSet& restricted_left);

}  // namespace seclab

#endif  // SECLAB_CORE_BIPARTITE_HPP_
