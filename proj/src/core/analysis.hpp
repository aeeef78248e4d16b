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

#ifndef SECLAB_CORE_ANALYSIS_HPP_
#define SECLAB_CORE_ANALYSIS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "algorithms.hpp"
#include "bipartite.hpp"
#include "element_set.hpp"
#include "matroids.hpp"
#include "valuations.hpp"

namespace seclab {

struct OptResult {
  double value = 0.0;
  ElementSet witness;
};

// Exact maximum of f over independent sets by pruned enumeration. The
// witness is the lexicographically least maximizer (the enumeration visits
// sets in that order, so the first maximum wins).
OptResult brute_force_opt(const IndependenceSystem& system,
                          const ValuationOracle& oracle);

// Exact maximum of f over matchings, enumerated with occupancy pruning.
OptResult brute_force_opt_matching(const BipartiteGraph& graph,
                                   const ValuationOracle& edge_oracle);

struct CouplingOptions {
  // Tie-break used by the simulated-greedy side. Flipping it on an instance
  // with value ties is the negative control: the two sides then disagree
  // and the distance must move away from zero.
  TieBreak simulate_tie_break = TieBreak::kSmallestIndex;
};

struct CouplingReport {
  std::size_t n = 0;
  double p = 0.0;
  double tv_distance = 0.0;
  std::size_t online_support = 0;
  std::size_t simulate_support = 0;
  // Both sides are exact finite sums; kept for report symmetry.
  double truncated_mass = 0.0;
};

// Exact joint law of (sample, greedy set, candidate set) for the online run
// (all n! orders, binomially weighted sample sizes) versus the simulated
// greedy (all 2^n per-element coin vectors), compared in total variation.
CouplingReport verify_coupling(const IndependenceSystem& system,
                               const ValuationOracle& oracle, double p,
                               const CouplingOptions& options = {});

struct BoundReport {
  std::string name;
  // Inputs; only the fields the calculator takes are meaningful.
  double p = 0.0;
  double t = 0.0;
  std::size_t k = 0;
  double c = 0.0;
  // Intermediate constants of the bound chain; unused ones stay 0.
  double beta = 0.0;
  double theta = 0.0;
  double gamma = 0.0;
  double alpha = 0.0;
  double a = 0.0;
  // Lower bound on E[f(ALG)] / OPT, 0 when the chain degenerates.
  double guarantee = 0.0;
  // Headline competitive ratio the guarantee must beat at canonical inputs.
  double claimed_ratio = 0.0;
  std::string diagnostic;
};

// Submodular laminar guarantee:
//   [1/θ − (1−β)³ / (t((1−β)³ − 2β))] · [1 − 2β/(1−β)³] · (1−p)/2
// with β = 2e(1−p) and θ = 1 + (1−p)t/p. Headline ratio 211 at
// p = 0.9794, t = 10.1415.
BoundReport laminar_bound(double p, double t);

// k-fold laminar intersection guarantee at p = 1 − c/k:
//   (√γ − √a)² (1−p) / (k+1)
// with β = 2ec/k, γ = 1 − 2kβ/(1−β)³, a = (1−p)/p. At c = 0.02 the
// guarantee clears 0.009/(k(k+1)).
BoundReport intersection_bound(std::size_t k, double c);

// Matching guarantee: (1/θ − 1/(t p²)) · p² (1−p)/3 with α = p/(1−p) and
// θ = (t+α)/α. Headline ratio 95 at p = 0.9, t = 5.29.
BoundReport transversal_bound(double p, double t);

// Linear laminar guarantee: (1−p)(1 − (1−p)/(1 − (1−p)(1+p)²)). Headline
// ratio 9.6 at p = 0.842.
BoundReport linear_laminar_bound(double p);

enum class AlgorithmId {
  kOnline,
  kSimulate,
  kOnlineMatching,
  kSimulateMatching,
};

const char* algorithm_id_name(AlgorithmId id);

struct RatioSummary {
  double opt = 0.0;
  double mean = 0.0;
  double se = 0.0;
  double min = 0.0;
  double max = 0.0;
  std::size_t trials = 0;
};

// Mean f(result)/OPT over seeded trials with fresh uniform arrival orders.
// The result set is alg for online runs and the pruned s for simulated
// runs. Per-trial streams derive from (master_seed, trial index), so the
// summary is identical for every worker count.
RatioSummary empirical_ratio(const IndependenceSystem& system,
                             const ValuationOracle& oracle, AlgorithmId algo,
                             double p, std::size_t trials,
                             std::uint64_t master_seed,
                             std::size_t workers = 1);

RatioSummary empirical_ratio_matching(const BipartiteGraph& graph,
                                      const ValuationOracle& edge_oracle,
                                      AlgorithmId algo, double p,
                                      std::size_t trials,
                                      std::uint64_t master_seed,
                                      std::size_t workers = 1);

struct SurvivalEstimate {
  std::size_t element = 0;
  std::size_t hits = 0;
  std::size_t trials = 0;
  double rate = 0.0;
  double se = 0.0;
  double wilson_low = 0.0;
  double wilson_high = 0.0;
};

// Monte Carlo Pr[e ∈ s] under the simulated greedy with the system's
// pruner, for every element of the exact optimum. Requires a linear
// valuation on a laminar-family system (the survival theorem's setting).
std::vector<SurvivalEstimate> survival_probability(
    const IndependenceSystem& system, const ValuationOracle& oracle, double p,
    std::size_t trials, std::uint64_t master_seed, std::size_t workers = 1,
    double wilson_z = 3.0);

}  // namespace seclab

#endif  // SECLAB_CORE_ANALYSIS_HPP_
