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

#include "algorithms.hpp"

#include <memory>
#include <string>
#include <utility>

#include "common.hpp"

namespace seclab {

namespace {

void check_probability(double p) {
  if (!(p > 0.0) || !(p < 1.0)) {
    throw_error(ErrorCode::kInvalidArgument,
                "probability must lie strictly between 0 and 1");
  }
}

void check_permutation(const std::vector<std::size_t>& order, std::size_t n,
                       const char* what) {
  if (order.size() != n) {
    throw_error(ErrorCode::kInvalidArgument,
                std::string(what) + " must list all " + std::to_string(n) +
                    " indices");
  }
  std::vector<bool> seen(n, false);
  for (std::size_t e : order) {
    if (e >= n || seen[e]) {
      throw_error(ErrorCode::kInvalidArgument,
                  std::string(what) + " is not a permutation");
    }
    seen[e] = true;
  }
}

void check_oracle_matches(const ValuationOracle& oracle, std::size_t n) {
  if (oracle.ground_size() != n) {
    throw_error(ErrorCode::kInvalidArgument,
                "oracle ground size " + std::to_string(oracle.ground_size()) +
                    " does not match the system's " + std::to_string(n));
  }
}

ElementSet steps_to_set(std::size_t n, const std::vector<GreedyStep>& steps) {
  ElementSet s(n);
  for (const GreedyStep& step : steps) s.insert(step.element);
  return s;
}

}  // namespace

std::vector<GreedyStep> greedy_steps(
    std::size_t ground_size,
    const std::function<bool(const ElementSet& chosen, std::size_t e)>&
        feasible,
    const std::function<double(const ElementSet& chosen, std::size_t e)>&
        marginal,
    const ElementSet& candidates, TieBreak tie_break) {
  std::vector<GreedyStep> steps;
  ElementSet chosen(ground_size);
  ElementSet remaining = candidates;
  while (true) {
    bool found = false;
    std::size_t best_element = 0;
    double best_marginal = 0.0;
    remaining.for_each([&](std::size_t e) {
      if (!feasible(chosen, e)) return;
      const double gain = marginal(chosen, e);
      // Exact comparisons keep the tie-break total: under kSmallestIndex
      // the first maximum in ascending order wins, under kLargestIndex the
      // last one does.
      const bool better =
          !found || (tie_break == TieBreak::kSmallestIndex
                         ? gain > best_marginal
                         : gain >= best_marginal);
      if (better) {
        found = true;
        best_element = e;
        best_marginal = gain;
      }
    });
    if (!found) break;
    steps.push_back({best_element, best_marginal});
    chosen.insert(best_element);
    remaining.erase(best_element);
  }
  return steps;
}

ElementSet greedy(const IndependenceSystem& system,
                  const ValuationOracle& oracle, const ElementSet& candidates) {
  check_oracle_matches(oracle, system.ground_size());
  system.check_ground(candidates);
  const auto steps = greedy_steps(
      system.ground_size(),
      [&](const ElementSet& chosen, std::size_t e) {
        return system.is_independent(chosen.with(e));
      },
      [&](const ElementSet& chosen, std::size_t e) {
        return oracle.marginal(chosen, e);
      },
      candidates);
  return steps_to_set(system.ground_size(), steps);
}

ElementSet greedy_matching(const BipartiteGraph& graph,
                           const ValuationOracle& edge_oracle,
                           const ElementSet& edge_candidates) {
  check_oracle_matches(edge_oracle, graph.edge_count());
  const auto steps = greedy_steps(
      graph.edge_count(),
      [&](const ElementSet& chosen, std::size_t e) {
        return graph.is_matching(chosen.with(e));
      },
      [&](const ElementSet& chosen, std::size_t e) {
        return edge_oracle.marginal(chosen, e);
      },
      edge_candidates);
  return steps_to_set(graph.edge_count(), steps);
}

ElementSet prune_laminar(const ElementSet& n, const LaminarMatroid& matroid) {
  matroid.check_ground(n);
  ElementSet removed(n.universe_size());
  for (const CapacityConstraint& c : matroid.constraints()) {
    if (n.intersection_size(c.members) > c.capacity) removed |= n & c.members;
  }
  return n - removed;
}

ElementSet prune_intersection(const ElementSet& n,
                              const LaminarIntersection& intersection) {
  intersection.check_ground(n);
  ElementSet survivors = n;
  for (const LaminarMatroid& m : intersection.matroids()) {
    survivors &= prune_laminar(n, m);
  }
  return survivors;
}

ElementSet prune_transversal(const ElementSet& n_edges,
                             const BipartiteGraph& graph) {
  if (n_edges.universe_size() != graph.edge_count()) {
    throw_error(ErrorCode::kInvalidArgument,
                "edge set does not match the graph's edge count");
  }
  std::vector<std::size_t> left_count(graph.n_left(), 0);
  std::vector<std::size_t> right_count(graph.n_right(), 0);
  n_edges.for_each([&](std::size_t e) {
    ++left_count[graph.edge(e).left];
    ++right_count[graph.edge(e).right];
  });
  for (std::size_t l = 0; l < graph.n_left(); ++l) {
    if (left_count[l] > 1) {
      throw_error(ErrorCode::kContractViolation,
                  "pruning input holds two edges at left node " +
                      std::to_string(l));
    }
  }
  ElementSet kept(graph.edge_count());
  n_edges.for_each([&](std::size_t e) {
    if (right_count[graph.edge(e).right] == 1) kept.insert(e);
  });
  return kept;
}

Pruner default_pruner(const IndependenceSystem& system) {
  switch (system.kind()) {
    case SystemKind::kUniform: {
      auto laminar = std::make_shared<LaminarMatroid>(
          static_cast<const UniformMatroid&>(system).to_laminar());
      return [laminar](const ElementSet& n) {
        return prune_laminar(n, *laminar);
      };
    }
    case SystemKind::kPartition: {
      auto laminar = std::make_shared<LaminarMatroid>(
          static_cast<const PartitionMatroid&>(system).to_laminar());
      return [laminar](const ElementSet& n) {
        return prune_laminar(n, *laminar);
      };
    }
    case SystemKind::kLaminar: {
      auto laminar = std::make_shared<LaminarMatroid>(
          static_cast<const LaminarMatroid&>(system));
      return [laminar](const ElementSet& n) {
        return prune_laminar(n, *laminar);
      };
    }
    case SystemKind::kLaminarIntersection: {
      auto inter = std::make_shared<LaminarIntersection>(
          static_cast<const LaminarIntersection&>(system));
      return [inter](const ElementSet& n) {
        return prune_intersection(n, *inter);
      };
    }
    case SystemKind::kTransversal:
      break;
  }
  throw_error(ErrorCode::kUnsupported,
              "transversal systems prune edges, not elements; use the "
              "matching drivers");
}

RunTrace online_with_sample_size(const IndependenceSystem& system,
                                 const ValuationOracle& oracle,
                                 const std::vector<std::size_t>& order,
                                 std::size_t sample_size) {
  const std::size_t n = system.ground_size();
  check_oracle_matches(oracle, n);
  check_permutation(order, n, "arrival order");
  if (sample_size > n) {
    throw_error(ErrorCode::kInvalidArgument, "sample size exceeds ground size");
  }

  RunTrace trace;
  trace.h = ElementSet(n);
  trace.n = ElementSet(n);
  trace.s = ElementSet(n);
  trace.alg = ElementSet(n);
  trace.w.assign(n, 0.0);
  trace.g.assign(n, 0.0);
  trace.sample_size = sample_size;

  RestrictedOracle view(oracle);
  for (std::size_t i = 0; i < sample_size; ++i) {
    view.reveal(order[i]);
    trace.h.insert(order[i]);
  }

  const auto feasible = [&](const ElementSet& chosen, std::size_t e) {
    return system.is_independent(chosen.with(e));
  };
  const auto marginal = [&](const ElementSet& chosen, std::size_t e) {
    return view.marginal(chosen, e);
  };

  const auto sample_steps = greedy_steps(n, feasible, marginal, trace.h);
  trace.m = steps_to_set(n, sample_steps);
  for (const GreedyStep& step : sample_steps) {
    trace.w[step.element] = step.marginal;
    trace.greedy_order.push_back(step.element);
  }

  for (std::size_t i = sample_size; i < n; ++i) {
    const std::size_t e = order[i];
    view.reveal(e);
    const auto candidate_steps =
        greedy_steps(n, feasible, marginal, trace.h.with(e));
    if (steps_to_set(n, candidate_steps) == trace.m) continue;
    trace.n.insert(e);
    for (const GreedyStep& step : candidate_steps) {
      if (step.element == e) trace.w[e] = step.marginal;
    }
    if (system.is_independent(trace.alg.with(e))) trace.alg.insert(e);
  }

  if (system.kind() != SystemKind::kTransversal) {
    trace.s = default_pruner(system)(trace.n);
  }
  return trace;
}

RunTrace online(const IndependenceSystem& system, const ValuationOracle& oracle,
                const std::vector<std::size_t>& order, double p, Rng& rng) {
  check_probability(p);
  return online_with_sample_size(system, oracle, order,
                                 rng.binomial(system.ground_size(), p));
}

RunTrace simulate_with_coins(const IndependenceSystem& system,
                             const ValuationOracle& oracle,
                             const std::function<bool(std::size_t e)>& coin,
                             const Pruner& pruner, TieBreak tie_break) {
  const std::size_t n = system.ground_size();
  check_oracle_matches(oracle, n);

  RunTrace trace;
  trace.h = ElementSet(n);
  trace.m = ElementSet(n);
  trace.n = ElementSet(n);
  trace.alg = ElementSet(n);
  trace.w.assign(n, 0.0);
  trace.g.assign(n, 0.0);

  ElementSet remaining = ElementSet::full(n);
  while (true) {
    bool found = false;
    std::size_t best = 0;
    double best_marginal = 0.0;
    remaining.for_each([&](std::size_t e) {
      if (!system.is_independent(trace.m.with(e))) return;
      const double gain = oracle.marginal(trace.m, e);
      const bool better =
          !found || (tie_break == TieBreak::kSmallestIndex
                         ? gain > best_marginal
                         : gain >= best_marginal);
      if (better) {
        found = true;
        best = e;
        best_marginal = gain;
      }
    });
    if (!found) break;
    trace.w[best] = best_marginal;
    trace.g[best] = oracle.marginal(trace.n, best);
    trace.greedy_order.push_back(best);
    const bool head = coin(best);
    trace.coins.push_back(head ? 1 : 0);
    if (head) {
      trace.m.insert(best);
    } else {
      trace.n.insert(best);
    }
    remaining.erase(best);
  }
  trace.s = pruner(trace.n);
  return trace;
}

RunTrace simulate(const IndependenceSystem& system,
                  const ValuationOracle& oracle, double p, Rng& rng,
                  const Pruner& pruner) {
  check_probability(p);
  return simulate_with_coins(
      system, oracle, [&](std::size_t) { return rng.bernoulli(p); }, pruner);
}

RunTrace simulate_matching_with_coins(
    const BipartiteGraph& graph, const ValuationOracle& edge_oracle,
    const std::function<bool(std::size_t edge)>& coin, TieBreak tie_break) {
  const std::size_t n_edges = graph.edge_count();
  check_oracle_matches(edge_oracle, n_edges);

  RunTrace trace;
  trace.h = ElementSet(n_edges);
  trace.m = ElementSet(n_edges);
  trace.n = ElementSet(n_edges);
  trace.alg = ElementSet(n_edges);
  trace.w.assign(n_edges, 0.0);
  trace.g.assign(n_edges, 0.0);

  std::vector<bool> left_used(graph.n_left(), false);
  std::vector<bool> right_used(graph.n_right(), false);
  ElementSet remaining = ElementSet::full(n_edges);
  while (true) {
    bool found = false;
    std::size_t best = 0;
    double best_marginal = 0.0;
    remaining.for_each([&](std::size_t e) {
      if (left_used[graph.edge(e).left] || right_used[graph.edge(e).right]) {
        return;
      }
      const double gain = edge_oracle.marginal(trace.m, e);
      const bool better =
          !found || (tie_break == TieBreak::kSmallestIndex
                         ? gain > best_marginal
                         : gain >= best_marginal);
      if (better) {
        found = true;
        best = e;
        best_marginal = gain;
      }
    });
    if (!found) break;
    trace.w[best] = best_marginal;
    trace.g[best] = edge_oracle.marginal(trace.n, best);
    trace.greedy_order.push_back(best);
    const bool head = coin(best);
    trace.coins.push_back(head ? 1 : 0);
    const std::size_t l = graph.edge(best).left;
    if (head) {
      trace.m.insert(best);
      right_used[graph.edge(best).right] = true;
    } else {
      trace.n.insert(best);
    }
    // The selected edge's left node leaves the market on either outcome.
    left_used[l] = true;
    for (std::size_t star_edge : graph.left_star(l)) remaining.erase(star_edge);
  }
  trace.s = prune_transversal(trace.n, graph);
  return trace;
}

RunTrace simulate_matching(const BipartiteGraph& graph,
                           const ValuationOracle& edge_oracle, double p,
                           Rng& rng) {
  check_probability(p);
  return simulate_matching_with_coins(
      graph, edge_oracle, [&](std::size_t) { return rng.bernoulli(p); });
}

RunTrace online_matching_with_sample_size(
    const BipartiteGraph& graph, const ValuationOracle& edge_oracle,
    const std::vector<std::size_t>& left_order, std::size_t sample_size) {
  const std::size_t n_left = graph.n_left();
  const std::size_t n_edges = graph.edge_count();
  check_oracle_matches(edge_oracle, n_edges);
  check_permutation(left_order, n_left, "left arrival order");
  if (sample_size > n_left) {
    throw_error(ErrorCode::kInvalidArgument, "sample size exceeds left count");
  }

  RunTrace trace;
  trace.h = ElementSet(n_edges);
  trace.n = ElementSet(n_edges);
  trace.alg = ElementSet(n_edges);
  trace.w.assign(n_edges, 0.0);
  trace.g.assign(n_edges, 0.0);
  trace.sample_size = sample_size;

  RestrictedOracle view(edge_oracle);
  for (std::size_t i = 0; i < sample_size; ++i) {
    for (std::size_t e : graph.left_star(left_order[i])) {
      view.reveal(e);
      trace.h.insert(e);
    }
  }

  const auto feasible = [&](const ElementSet& chosen, std::size_t e) {
    return graph.is_matching(chosen.with(e));
  };
  const auto marginal = [&](const ElementSet& chosen, std::size_t e) {
    return view.marginal(chosen, e);
  };

  const auto sample_steps = greedy_steps(n_edges, feasible, marginal, trace.h);
  trace.m = steps_to_set(n_edges, sample_steps);
  for (const GreedyStep& step : sample_steps) {
    trace.w[step.element] = step.marginal;
    trace.greedy_order.push_back(step.element);
  }

  std::vector<bool> right_used(graph.n_right(), false);
  for (std::size_t i = sample_size; i < n_left; ++i) {
    const std::size_t l = left_order[i];
    ElementSet candidates = trace.h;
    for (std::size_t e : graph.left_star(l)) {
      view.reveal(e);
      candidates.insert(e);
    }
    const auto candidate_steps =
        greedy_steps(n_edges, feasible, marginal, candidates);
    // A matching holds at most one edge at l.
    for (const GreedyStep& step : candidate_steps) {
      if (graph.edge(step.element).left != l) continue;
      trace.n.insert(step.element);
      trace.w[step.element] = step.marginal;
      const std::size_t r = graph.edge(step.element).right;
      if (!right_used[r]) {
        right_used[r] = true;
        trace.alg.insert(step.element);
      }
      break;
    }
  }
  trace.s = prune_transversal(trace.n, graph);
  return trace;
}

RunTrace online_matching(const BipartiteGraph& graph,
                         const ValuationOracle& edge_oracle,
                         const std::vector<std::size_t>& left_order, double p,
                         Rng& rng) {
  check_probability(p);
  return online_matching_with_sample_size(graph, edge_oracle, left_order,
                                          rng.binomial(graph.n_left(), p));
}

}  // namespace seclab
