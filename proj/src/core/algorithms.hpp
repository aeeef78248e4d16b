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

#ifndef SECLAB_CORE_ALGORITHMS_HPP_
#define SECLAB_CORE_ALGORITHMS_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "bipartite.hpp"
#include "element_set.hpp"
#include "matroids.hpp"
#include "rng.hpp"
#include "valuations.hpp"

namespace seclab {

// Equal marginals are broken by element index. kSmallestIndex is the
// canonical rule everywhere; kLargestIndex exists only so the coupling
// verifier can inject a deliberately inconsistent rule as a negative
// control.
enum class TieBreak { kSmallestIndex, kLargestIndex };

struct GreedyStep {
  std::size_t element;
  double marginal;
};

// One algorithm run. Sets live over the run's ground set (elements, or
// edges for the matching variants):
//   h      sample observed up front (online runs; empty for simulate)
//   m      greedy solution on the sample / heads of the simulated greedy
//   n      candidates routed past the sample (tails side)
//   s      pruned n
//   alg    accepted online solution (empty for simulate: s is the output)
//   w[e]   marginal of e against m at its selection step, 0 if unselected
//   g[e]   marginal of e against n at its selection step (simulated runs)
//   greedy_order, coins
//          selection order of the simulated greedy and the coin outcome
//          per step (simulate runs; online runs record m's greedy order
//          and leave coins empty)
struct RunTrace {
  ElementSet h;
  ElementSet m;
  ElementSet n;
  ElementSet s;
  ElementSet alg;
  std::vector<double> w;
  std::vector<double> g;
  std::vector<std::size_t> greedy_order;
  std::vector<int> coins;
  std::size_t sample_size = 0;
};

// Marginal-greedy over an abstract feasibility predicate. Adds the feasible
// candidate of maximum marginal (ties to the smaller index under
// kSmallestIndex) while any feasible candidate remains, zero marginals
// included.
std::vector<GreedyStep> greedy_steps(
    std::size_t ground_size,
    const std::function<bool(const ElementSet& chosen, std::size_t e)>&
        feasible,
    const std::function<double(const ElementSet& chosen, std::size_t e)>&
        marginal,
    const ElementSet& candidates, TieBreak tie_break = TieBreak::kSmallestIndex);

ElementSet greedy(const IndependenceSystem& system,
                  const ValuationOracle& oracle, const ElementSet& candidates);

// Greedy under the matching constraint of the graph, over edge sets.
ElementSet greedy_matching(const BipartiteGraph& graph,
                           const ValuationOracle& edge_oracle,
                           const ElementSet& edge_candidates);

// Whole-constraint removal: drops N ∩ B for every constraint B whose
// capacity N exceeds, judged on the original N. The result is independent.
ElementSet prune_laminar(const ElementSet& n, const LaminarMatroid& matroid);

// Union of the member matroids' removals.
ElementSet prune_intersection(const ElementSet& n,
                              const LaminarIntersection& intersection);

// Keeps an edge iff it is the only n-edge at its right node. Requires
// pairwise distinct left nodes, which the matching drivers guarantee.
ElementSet prune_transversal(const ElementSet& n_edges,
                             const BipartiteGraph& graph);

using Pruner = std::function<ElementSet(const ElementSet& n)>;

// The pruning rule matching the system's kind. Uniform and partition
// systems prune through their laminar encodings; transversal systems have
// no element-level rule (their pruning lives in the matching drivers).
Pruner default_pruner(const IndependenceSystem& system);

// Sample-then-accept online run: observes the first sample_size arrivals,
// fixes m = greedy(sample), then routes each later arrival e into n when
// greedy(sample ∪ {e}) differs from m, accepting it into alg when alg stays
// independent. Valuation queries go through a seen-elements-only view.
RunTrace online_with_sample_size(const IndependenceSystem& system,
                                 const ValuationOracle& oracle,
                                 const std::vector<std::size_t>& order,
                                 std::size_t sample_size);

// Draws sample_size ~ Binomial(n, p) from rng, then runs the above.
RunTrace online(const IndependenceSystem& system, const ValuationOracle& oracle,
                const std::vector<std::size_t>& order, double p, Rng& rng);

// Simulated greedy: global greedy over all elements with marginals and
// feasibility against m only; each selected element is routed by coin(e) to
// m (true) or n (false) and leaves candidacy either way; s = pruner(n).
RunTrace simulate_with_coins(const IndependenceSystem& system,
                             const ValuationOracle& oracle,
                             const std::function<bool(std::size_t e)>& coin,
                             const Pruner& pruner,
                             TieBreak tie_break = TieBreak::kSmallestIndex);

RunTrace simulate(const IndependenceSystem& system,
                  const ValuationOracle& oracle, double p, Rng& rng,
                  const Pruner& pruner);

// Matching variant of the simulated greedy, over edges: feasibility is
// "m ∪ {e} is a matching"; a selected edge's whole left star leaves
// candidacy; s = prune_transversal(n).
RunTrace simulate_matching_with_coins(
    const BipartiteGraph& graph, const ValuationOracle& edge_oracle,
    const std::function<bool(std::size_t edge)>& coin,
    TieBreak tie_break = TieBreak::kSmallestIndex);

RunTrace simulate_matching(const BipartiteGraph& graph,
                           const ValuationOracle& edge_oracle, double p,
                           Rng& rng);

// Online matching over left-node arrivals (each reveals its full edge
// star). Samples sample_size left nodes, fixes m = greedy matching on their
// stars; for a later arrival ℓ, recomputes the greedy matching on the
// sampled stars plus ℓ's star and, when it contains an edge at ℓ, accepts
// that edge iff its right node is still free in alg.
RunTrace online_matching_with_sample_size(const BipartiteGraph& graph,
                                          const ValuationOracle& edge_oracle,
                                          const std::vector<std::size_t>& left_order,
                                          std::size_t sample_size);

RunTrace online_matching(const BipartiteGraph& graph,
                         const ValuationOracle& edge_oracle,
                         const std::vector<std::size_t>& left_order, double p,
                         Rng& rng);

}  // namespace seclab

#endif  // SECLAB_CORE_ALGORITHMS_HPP_
