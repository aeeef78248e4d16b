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

#ifndef SECLAB_CORE_STOCHASTIC_HPP_
#define SECLAB_CORE_STOCHASTIC_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "common.hpp"
#include "rng.hpp"

namespace seclab {

// Weight mapping for the coin process: weight_fn receives the outcomes of
// flips 1..t-1 and returns the weight of timestamp t. Schedules whose
// declared_decreasing flag is set promise non-increasing weights along any
// outcome path; spot_check_decreasing samples that promise.
class WeightSchedule {
 public:
  using WeightFn = std::function<double(const std::vector<int>& prefix)>;

  WeightSchedule(WeightFn weight_fn, bool declared_decreasing)
      : weight_fn_(std::move(weight_fn)),
        declared_decreasing_(declared_decreasing) {}

  double weight(const std::vector<int>& prefix) const;
  bool declared_decreasing() const { return declared_decreasing_; }

  static WeightSchedule constant(double value);
  // value * factor^(t-1) for timestamp t; decreasing when factor ≤ 1.
  static WeightSchedule geometric(double value, double factor);
  // weights[t-1] for timestamp t, 0 beyond the list. The zero tail is the
  // dummy extension that keeps the process running until enough heads.
  static WeightSchedule from_weights(std::vector<double> weights);

 private:
  WeightFn weight_fn_;
  bool declared_decreasing_;
};

struct DecreasingViolation {
  std::vector<int> prefix;
  double weight_before;
  double weight_after;
};

std::optional<DecreasingViolation> spot_check_decreasing(
    const WeightSchedule& schedule, Rng& rng, double p, std::size_t samples,
    std::size_t horizon);

struct TimedWeight {
  std::size_t timestamp;  // 1-based flip index
  double weight;
};

// One realized run of the coin process. Flips are Bernoulli(p): heads go to
// m, tails to n, and the run stops once m holds mu timestamps. s is n after
// cardinality pruning.
struct ProcessOutcome {
  std::vector<TimedWeight> m;
  std::vector<TimedWeight> n;
  std::vector<TimedWeight> s;
  std::vector<int> coins;

  double weight_m = 0.0;
  double weight_n = 0.0;
  double weight_s = 0.0;
};

ProcessOutcome run_simple_process(double p, std::size_t mu,
                                  const WeightSchedule& schedule, Rng& rng);

// S = N when |N| ≤ mu, empty otherwise.
std::vector<TimedWeight> prune_cardinality(const std::vector<TimedWeight>& n,
                                           std::size_t mu);

// Probability that the m-th head appears after the n-th tail in an i.i.d.
// Bernoulli(p) flip sequence. Closed form; exact integer binomials for
// m+n ≤ 60, log-space above, refusal above limits::kMaxGpClosed.
double g_p(std::size_t m, std::size_t n, double p);

// Same probability by walking every coin prefix of length m+n-1, where the
// comparison is always decided. Oracle for g_p; refuses m+n above
// limits::kMaxGpEnumerated.
double g_p_enumerated(std::size_t m, std::size_t n, double p);

// Closed upper bound (1-p)^n (1+p)^(n+m-2) on g_p.
double g_p_upper_bound(std::size_t m, std::size_t n, double p);

// Multiplicative slack bound on E[w(N)] - E[w(S)] relative to E[w(S)] under
// cardinality pruning: (1-p^2)/p^2 for mu = 1, else (mu+1-mu*beta) *
// beta^mu / (1-beta)^2 with beta = 2e(1-p). Returns +inf when beta ≥ 1 and
// mu ≥ 2; the bound is vacuous there.
double prop2_bound(std::size_t mu, double p);

struct ProcessEstimate {
  double mean_m = 0.0;
  double mean_n = 0.0;
  double se_m = 0.0;
  double se_n = 0.0;
  // mean_m / mean_n with a delta-method standard error (covariance included).
  double ratio = 0.0;
  double se_ratio = 0.0;
  std::size_t trials = 0;
};

// Monte Carlo check of the exact identity E[w(M)] = p/(1-p) * E[w(N)].
ProcessEstimate estimate_prop1(double p, std::size_t mu,
                               const WeightSchedule& schedule,
                               std::size_t trials, Rng& rng);

struct ExactProcessMoments {
  double e_weight_m = 0.0;
  double e_weight_n = 0.0;
  double e_weight_s = 0.0;
  // Probability mass of coin paths dropped below the floor.
  double truncated_mass = 0.0;
  std::size_t leaves = 0;
};

// Exact expectations by walking the coin tree until termination or until a
// path's probability drops below prob_floor (the process terminates almost
// surely, so the dropped mass is reported and tiny for sane floors).
ExactProcessMoments enumerate_process_exact(double p, std::size_t mu,
                                            const WeightSchedule& schedule,
                                            double prob_floor = 1e-12);

}  // namespace seclab

#endif  // SECLAB_CORE_STOCHASTIC_HPP_
