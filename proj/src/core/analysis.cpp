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

#include "analysis.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>

#include "common.hpp"
#include "parallel.hpp"
#include "rng.hpp"

namespace seclab {

namespace {

void check_probability(double p) {
  if (!(p > 0.0) || !(p < 1.0)) {
    throw_error(ErrorCode::kInvalidArgument,
                "probability must lie strictly between 0 and 1");
  }
}

struct RatioAggregate {
  double mean = 0.0;
  double se = 0.0;
  double min = 0.0;
  double max = 0.0;
};

RatioAggregate aggregate_ratios(const std::vector<double>& ratios) {
  RatioAggregate agg;
  Kahan sum;
  agg.min = ratios.front();
  agg.max = ratios.front();
  for (double r : ratios) {
    sum.add(r);
    agg.min = std::min(agg.min, r);
    agg.max = std::max(agg.max, r);
  }
  const double n = static_cast<double>(ratios.size());
  agg.mean = sum.sum / n;
  if (ratios.size() > 1) {
    Kahan sq;
    for (double r : ratios) sq.add((r - agg.mean) * (r - agg.mean));
    agg.se = std::sqrt(sq.sum / (n - 1.0) / n);
  }
  return agg;
}

}  // namespace

OptResult brute_force_opt(const IndependenceSystem& system,
                          const ValuationOracle& oracle) {
  const std::size_t n = system.ground_size();
  if (oracle.ground_size() != n) {
    throw_error(ErrorCode::kInvalidArgument,
                "oracle ground size does not match the system");
  }
  if (n > limits::kMaxBruteForce) {
    throw_error(ErrorCode::kLimitExceeded,
                "exact optimum refused for ground size " + std::to_string(n) +
                    " > " + std::to_string(limits::kMaxBruteForce));
  }
  OptResult best;
  best.witness = ElementSet(n);
  best.value = oracle.eval(best.witness);
  // Enumeration order is lexicographic on sorted members, so keeping the
  // first strict improvement makes the witness the lex-least maximizer.
  for_each_independent_set(
      system,
      [&](const ElementSet& s) {
        const double value = oracle.eval(s);
        if (value > best.value) {
          best.value = value;
          best.witness = s;
        }
      },
      limits::kMaxBruteForce);
  return best;
}

namespace {

void enumerate_matchings(const BipartiteGraph& graph, std::size_t next_edge,
                         ElementSet& chosen, std::vector<bool>& left_used,
                         std::vector<bool>& right_used,
                         const std::function<void(const ElementSet&)>& fn) {
  fn(chosen);
  for (std::size_t e = next_edge; e < graph.edge_count(); ++e) {
    const auto& edge = graph.edge(e);
    if (left_used[edge.left] || right_used[edge.right]) continue;
    left_used[edge.left] = right_used[edge.right] = true;
    chosen.insert(e);
    enumerate_matchings(graph, e + 1, chosen, left_used, right_used, fn);
    chosen.erase(e);
    left_used[edge.left] = right_used[edge.right] = false;
  }
}

}  // namespace

OptResult brute_force_opt_matching(const BipartiteGraph& graph,
                                   const ValuationOracle& edge_oracle) {
  const std::size_t n_edges = graph.edge_count();
  if (edge_oracle.ground_size() != n_edges) {
    throw_error(ErrorCode::kInvalidArgument,
                "oracle ground size does not match the edge count");
  }
  if (n_edges > limits::kMaxMatchingBruteForce) {
    throw_error(ErrorCode::kLimitExceeded,
                "exact matching optimum refused for " +
                    std::to_string(n_edges) + " edges > " +
                    std::to_string(limits::kMaxMatchingBruteForce));
  }
  OptResult best;
  best.witness = ElementSet(n_edges);
  best.value = edge_oracle.eval(best.witness);
  ElementSet chosen(n_edges);
  std::vector<bool> left_used(graph.n_left(), false);
  std::vector<bool> right_used(graph.n_right(), false);
  enumerate_matchings(graph, 0, chosen, left_used, right_used,
                      [&](const ElementSet& s) {
                        const double value = edge_oracle.eval(s);
                        if (value > best.value) {
                          best.value = value;
                          best.witness = s;
                        }
                      });
  return best;
}

CouplingReport verify_coupling(const IndependenceSystem& system,
                               const ValuationOracle& oracle, double p,
                               const CouplingOptions& options) {
  check_probability(p);
  const std::size_t n = system.ground_size();
  if (oracle.ground_size() != n) {
    throw_error(ErrorCode::kInvalidArgument,
                "oracle ground size does not match the system");
  }
  if (n > limits::kMaxCoupling) {
    throw_error(ErrorCode::kLimitExceeded,
                "exact coupling refused for ground size " + std::to_string(n) +
                    " > " + std::to_string(limits::kMaxCoupling));
  }

  using TripleKey = std::array<std::uint64_t, 3>;
  std::map<TripleKey, Kahan> online_law;
  std::map<TripleKey, Kahan> simulate_law;

  // Binomial sample-size weights, exact in double at n ≤ 6.
  std::vector<double> size_weight(n + 1);
  for (std::size_t m = 0; m <= n; ++m) {
    double binom = 1.0;
    for (std::size_t i = 0; i < m; ++i) {
      binom = binom * static_cast<double>(n - i) / static_cast<double>(i + 1);
    }
    size_weight[m] = binom * std::pow(p, static_cast<double>(m)) *
                     std::pow(1.0 - p, static_cast<double>(n - m));
  }
  double inv_factorial = 1.0;
  for (std::size_t i = 2; i <= n; ++i) {
    inv_factorial /= static_cast<double>(i);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  do {
    for (std::size_t m = 0; m <= n; ++m) {
      const RunTrace trace = online_with_sample_size(system, oracle, order, m);
      const TripleKey key{trace.h.to_mask(), trace.m.to_mask(),
                          trace.n.to_mask()};
      online_law[key].add(size_weight[m] * inv_factorial);
    }
  } while (std::next_permutation(order.begin(), order.end()));

  const Pruner keep_nothing = [n](const ElementSet&) { return ElementSet(n); };
  for (std::uint64_t coins = 0; coins < (std::uint64_t{1} << n); ++coins) {
    const RunTrace trace = simulate_with_coins(
        system, oracle,
        [coins](std::size_t e) { return (coins >> e) & 1ULL; }, keep_nothing,
        options.simulate_tie_break);
    const std::size_t heads = static_cast<std::size_t>(std::popcount(coins));
    const double weight = std::pow(p, static_cast<double>(heads)) *
                          std::pow(1.0 - p, static_cast<double>(n - heads));
    const TripleKey key{coins, trace.m.to_mask(), trace.n.to_mask()};
    simulate_law[key].add(weight);
  }

  Kahan distance;
  auto it_a = online_law.begin();
  auto it_b = simulate_law.begin();
  while (it_a != online_law.end() || it_b != simulate_law.end()) {
    if (it_b == simulate_law.end() ||
        (it_a != online_law.end() && it_a->first < it_b->first)) {
      distance.add(it_a->second.sum);
      ++it_a;
    } else if (it_a == online_law.end() || it_b->first < it_a->first) {
      distance.add(it_b->second.sum);
      ++it_b;
    } else {
      distance.add(std::abs(it_a->second.sum - it_b->second.sum));
      ++it_a;
      ++it_b;
    }
  }

  CouplingReport report;
  report.n = n;
  report.p = p;
  report.tv_distance = 0.5 * distance.sum;
  report.online_support = online_law.size();
  report.simulate_support = simulate_law.size();
  report.truncated_mass = 0.0;
  return report;
}

BoundReport laminar_bound(double p, double t) {
  check_probability(p);
  if (!(t > 0.0)) {
    throw_error(ErrorCode::kInvalidArgument, "t must be positive");
  }
  BoundReport report;
  report.name = "laminar";
  report.p = p;
  report.t = t;
  report.claimed_ratio = 211.0;
  const long double lp = p;
  const long double lt = t;
  const long double beta = 2.0L * expl(1.0L) * (1.0L - lp);
  const long double theta = 1.0L + (1.0L - lp) * lt / lp;
  report.beta = static_cast<double>(beta);
  report.theta = static_cast<double>(theta);
  const long double cube = (1.0L - beta) * (1.0L - beta) * (1.0L - beta);
  if (beta >= 1.0L || cube <= 2.0L * beta) {
    report.diagnostic = "pruning-loss constants degenerate: need 2e(1-p) < 1 "
                        "and (1-beta)^3 > 2*beta";
    return report;
  }
  const long double first = 1.0L / theta - cube / (lt * (cube - 2.0L * beta));
  const long double second = 1.0L - 2.0L * beta / cube;
  const long double guarantee = first * second * (1.0L - lp) / 2.0L;
  if (first <= 0.0L || second <= 0.0L || guarantee <= 0.0L) {
    report.diagnostic = "bound chain is non-positive at these parameters";
    return report;
  }
  report.guarantee = static_cast<double>(guarantee);
  return report;
}

BoundReport intersection_bound(std::size_t k, double c) {
  if (k == 0) {
    throw_error(ErrorCode::kInvalidArgument, "k must be at least 1");
  }
  if (!(c > 0.0) || !(c < 0.04)) {
    throw_error(ErrorCode::kInvalidArgument,
                "c must lie strictly between 0 and 0.04");
  }
  BoundReport report;
  report.name = "intersection";
  report.k = k;
  report.c = c;
  report.claimed_ratio =
      1000.0 * static_cast<double>(k) * static_cast<double>(k + 1) / 9.0;
  const long double lk = static_cast<long double>(k);
  const long double lc = c;
  const long double lp = 1.0L - lc / lk;
  report.p = static_cast<double>(lp);
  const long double beta = 2.0L * expl(1.0L) * lc / lk;
  const long double cube = (1.0L - beta) * (1.0L - beta) * (1.0L - beta);
  const long double gamma = 1.0L - 2.0L * lk * beta / cube;
  const long double a = (1.0L - lp) / lp;
  report.beta = static_cast<double>(beta);
  report.gamma = static_cast<double>(gamma);
  report.a = static_cast<double>(a);
  if (gamma <= a) {
    report.diagnostic = "gamma does not exceed a; the sampling rate leaves "
                        "no room for the guarantee";
    return report;
  }
  const long double root_gap = sqrtl(gamma) - sqrtl(a);
  report.t = static_cast<double>(1.0L / (sqrtl(a) * root_gap));
  report.guarantee =
      static_cast<double>(root_gap * root_gap * (1.0L - lp) / (lk + 1.0L));
  return report;
}

BoundReport transversal_bound(double p, double t) {
  check_probability(p);
  if (!(t > 0.0)) {
    throw_error(ErrorCode::kInvalidArgument, "t must be positive");
  }
  BoundReport report;
  report.name = "transversal";
  report.p = p;
  report.t = t;
  report.claimed_ratio = 95.0;
  const long double lp = p;
  const long double lt = t;
  const long double alpha = lp / (1.0L - lp);
  const long double theta = (lt + alpha) / alpha;
  report.alpha = static_cast<double>(alpha);
  report.theta = static_cast<double>(theta);
  const long double bracket = 1.0L / theta - 1.0L / (lt * lp * lp);
  const long double guarantee = bracket * lp * lp * (1.0L - lp) / 3.0L;
  if (bracket <= 0.0L || guarantee <= 0.0L) {
    report.diagnostic = "bound chain is non-positive at these parameters";
    return report;
  }
  report.guarantee = static_cast<double>(guarantee);
  return report;
}

BoundReport linear_laminar_bound(double p) {
  check_probability(p);
  BoundReport report;
  report.name = "linear-laminar";
  report.p = p;
  report.claimed_ratio = 9.6;
  const long double lp = p;
  const long double series = (1.0L - lp) * (1.0L + lp) * (1.0L + lp);
  if (series >= 1.0L) {
    report.diagnostic =
        "survival series diverges: need (1-p)(1+p)^2 < 1";
    return report;
  }
  const long double inner = 1.0L - (1.0L - lp) / (1.0L - series);
  const long double guarantee = (1.0L - lp) * inner;
  if (inner <= 0.0L || guarantee <= 0.0L) {
    report.diagnostic = "bound chain is non-positive at these parameters";
    return report;
  }
  report.guarantee = static_cast<double>(guarantee);
  return report;
}

const char* algorithm_id_name(AlgorithmId id) {
  switch (id) {
    case AlgorithmId::kOnline:
      return "online";
    case AlgorithmId::kSimulate:
      return "simulate";
    case AlgorithmId::kOnlineMatching:
      return "online-sbvm";
    case AlgorithmId::kSimulateMatching:
      return "simulate-sbvm";
  }
  return "unknown";
}

namespace {

RatioSummary summarize_trials(double opt, std::size_t trials,
                              const std::vector<double>& ratios) {
  RatioSummary summary;
  summary.opt = opt;
  summary.trials = trials;
  const RatioAggregate agg = aggregate_ratios(ratios);
  summary.mean = agg.mean;
  summary.se = agg.se;
  summary.min = agg.min;
  summary.max = agg.max;
  return summary;
}

[[noreturn]] void rethrow_with_seed(const Error& err, std::size_t trial,
                                    std::uint64_t seed) {
  throw_error(err.code(), std::string(err.what()) + " (trial " +
                              std::to_string(trial) + ", seed " +
                              std::to_string(seed) + ")");
}

}  // namespace

RatioSummary empirical_ratio(const IndependenceSystem& system,
                             const ValuationOracle& oracle, AlgorithmId algo,
                             double p, std::size_t trials,
                             std::uint64_t master_seed, std::size_t workers) {
  check_probability(p);
  if (trials == 0) {
    throw_error(ErrorCode::kInvalidArgument, "need at least one trial");
  }
  if (algo != AlgorithmId::kOnline && algo != AlgorithmId::kSimulate) {
    throw_error(ErrorCode::kInvalidArgument,
                "matching algorithms need the matching ratio runner");
  }
  const OptResult opt = brute_force_opt(system, oracle);
  if (opt.value <= 0.0) {
    throw_error(ErrorCode::kDomain,
                "the exact optimum is 0; ratios are undefined");
  }
  const Pruner pruner =
      algo == AlgorithmId::kSimulate ? default_pruner(system) : Pruner();
  std::vector<double> ratios(trials);
  run_trials(trials, workers, [&](std::size_t trial) {
    const std::uint64_t seed = derive_seed(master_seed, trial);
    try {
      Rng rng(seed);
      double value = 0.0;
      if (algo == AlgorithmId::kOnline) {
        const auto order = rng.permutation(system.ground_size());
        value = oracle.eval(online(system, oracle, order, p, rng).alg);
      } else {
        value = oracle.eval(simulate(system, oracle, p, rng, pruner).s);
      }
      ratios[trial] = value / opt.value;
    } catch (const Error& err) {
      rethrow_with_seed(err, trial, seed);
    }
  });
  return summarize_trials(opt.value, trials, ratios);
}

RatioSummary empirical_ratio_matching(const BipartiteGraph& graph,
                                      const ValuationOracle& edge_oracle,
                                      AlgorithmId algo, double p,
                                      std::size_t trials,
                                      std::uint64_t master_seed,
                                      std::size_t workers) {
  check_probability(p);
  if (trials == 0) {
    throw_error(ErrorCode::kInvalidArgument, "need at least one trial");
  }
  if (algo != AlgorithmId::kOnlineMatching &&
      algo != AlgorithmId::kSimulateMatching) {
    throw_error(ErrorCode::kInvalidArgument,
                "element algorithms need the element ratio runner");
  }
  const OptResult opt = brute_force_opt_matching(graph, edge_oracle);
  if (opt.value <= 0.0) {
    throw_error(ErrorCode::kDomain,
                "the exact optimum is 0; ratios are undefined");
  }
  std::vector<double> ratios(trials);
  run_trials(trials, workers, [&](std::size_t trial) {
    const std::uint64_t seed = derive_seed(master_seed, trial);
    try {
      Rng rng(seed);
      double value = 0.0;
      if (algo == AlgorithmId::kOnlineMatching) {
        const auto order = rng.permutation(graph.n_left());
        value =
            edge_oracle.eval(online_matching(graph, edge_oracle, order, p, rng).alg);
      } else {
        value = edge_oracle.eval(simulate_matching(graph, edge_oracle, p, rng).s);
      }
      ratios[trial] = value / opt.value;
    } catch (const Error& err) {
      rethrow_with_seed(err, trial, seed);
    }
  });
  return summarize_trials(opt.value, trials, ratios);
}

std::vector<SurvivalEstimate> survival_probability(
    const IndependenceSystem& system, const ValuationOracle& oracle, double p,
    std::size_t trials, std::uint64_t master_seed, std::size_t workers,
    double wilson_z) {
  check_probability(p);
  if (trials == 0) {
    throw_error(ErrorCode::kInvalidArgument, "need at least one trial");
  }
  if (system.kind() != SystemKind::kUniform &&
      system.kind() != SystemKind::kPartition &&
      system.kind() != SystemKind::kLaminar) {
    throw_error(ErrorCode::kInvalidArgument,
                "survival estimation is defined on laminar-family matroids");
  }
  if (dynamic_cast<const LinearValuation*>(&oracle) == nullptr) {
    throw_error(ErrorCode::kInvalidArgument,
                "survival estimation needs a linear valuation");
  }
  const OptResult opt = brute_force_opt(system, oracle);
  const auto witness = opt.witness.elements();
  if (witness.empty()) {
    throw_error(ErrorCode::kDomain, "the exact optimum is empty");
  }
  const Pruner pruner = default_pruner(system);

  // Element ids fit the brute-force cap, so one word tracks a trial.
  std::vector<std::uint64_t> survived(trials, 0);
  run_trials(trials, workers, [&](std::size_t trial) {
    const std::uint64_t seed = derive_seed(master_seed, trial);
    try {
      Rng rng(seed);
      const RunTrace trace = simulate(system, oracle, p, rng, pruner);
      std::uint64_t mask = 0;
      for (std::size_t i = 0; i < witness.size(); ++i) {
        if (trace.s.contains(witness[i])) mask |= std::uint64_t{1} << i;
      }
      survived[trial] = mask;
    } catch (const Error& err) {
      rethrow_with_seed(err, trial, seed);
    }
  });

  std::vector<SurvivalEstimate> estimates;
  const double nt = static_cast<double>(trials);
  const double z2 = wilson_z * wilson_z;
  for (std::size_t i = 0; i < witness.size(); ++i) {
    SurvivalEstimate est;
    est.element = witness[i];
    est.trials = trials;
    for (std::size_t trial = 0; trial < trials; ++trial) {
      est.hits += (survived[trial] >> i) & 1ULL;
    }
    const double rate = static_cast<double>(est.hits) / nt;
    est.rate = rate;
    est.se = std::sqrt(rate * (1.0 - rate) / nt);
    const double denom = 1.0 + z2 / nt;
    const double center = (rate + z2 / (2.0 * nt)) / denom;
    const double half =
        wilson_z *
        std::sqrt(rate * (1.0 - rate) / nt + z2 / (4.0 * nt * nt)) / denom;
    est.wilson_low = std::max(0.0, center - half);
    est.wilson_high = std::min(1.0, center + half);
    estimates.push_back(est);
  }
  return estimates;
}

}  // namespace seclab
