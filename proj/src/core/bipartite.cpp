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

#include "bipartite.hpp"

#include <set>
#include <string>

#include "common.hpp"

namespace seclab {

BipartiteGraph::BipartiteGraph(std::size_t n_left, std::size_t n_right,
                               std::vector<Edge> edges)
    : n_left_(n_left), n_right_(n_right), edges_(std::move(edges)) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  left_star_.resize(n_left_);
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    if (e.left >= n_left_ || e.right >= n_right_) {
      throw_error(ErrorCode::kInvalidArgument,
                  "edge (" + std::to_string(e.left) + "," +
                      std::to_string(e.right) + ") out of range");
    }
    if (!seen.insert({e.left, e.right}).second) {
      throw_error(ErrorCode::kInvalidArgument,
                  "duplicate edge (" + std::to_string(e.left) + "," +
                      std::to_string(e.right) + ")");
    }
    left_star_[e.left].push_back(id);
  }
}

ElementSet BipartiteGraph::left_endpoints(const ElementSet& edge_ids) const {
  ElementSet out(n_left_);
  edge_ids.for_each([&](std::size_t id) { out.insert(edges_[id].left); });
  return out;
}

bool BipartiteGraph::is_matching(const ElementSet& edge_ids) const {
  std::vector<bool> left_used(n_left_, false), right_used(n_right_, false);
  bool ok = true;
  edge_ids.for_each([&](std::size_t id) {
    const Edge& e = edges_[id];
    if (left_used[e.left] || right_used[e.right]) ok = false;
    left_used[e.left] = true;
    right_used[e.right] = true;
  });
  return ok;
}

namespace {

bool try_augment(const BipartiteGraph& g, std::size_t l,
                 std::vector<bool>& right_visited,
                 std::vector<std::size_t>& right_match) {
  for (std::size_t id : g.left_star(l)) {
    std::size_t r = g.edge(id).right;
    if (right_visited[r]) continue;
    right_visited[r] = true;
    if (right_match[r] == SIZE_MAX ||
        try_augment(g, right_match[r], right_visited, right_match)) {
      right_match[r] = l;
      return true;
    }
  }
  return false;
}

}  // namespace

std::size_t maximum_matching(const BipartiteGraph& graph,
                             const ElementSet& restricted_left) {
  std::vector<std::size_t> right_match(graph.n_right(), SIZE_MAX);
  std::size_t matched = 0;
  restricted_left.for_each([&](std::size_t l) {
    std::vector<bool> right_visited(graph.n_right(), false);
    if (try_augment(graph, l, right_visited, right_match)) ++matched;
  });
  return matched;
}

}  // namespace seclab
