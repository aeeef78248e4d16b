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

#include "stochastic.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <utility>

namespace seclab {

namespace {

// The process terminates almost surely; this cap only guards grossly
// miscalibrated inputs (expected length is mu/p flips).
constexpr std::size_t kMaxProcessFlips = 100'000'000;

void check_probability(double p) {
  if (!(p > 0.0) || !(p < 1.0)) {
    throw_error(ErrorCode::kInvalidArgument,
                "head probability must lie strictly between 0 and 1");
  }
}

void check_mu(std::size_t mu) {
  if (mu == 0) {
    throw_error(ErrorCode::kInvalidArgument, "mu must be at least 1");
  }
}

}  // namespace

double WeightSchedule::weight(const std::vector<int>& prefix) const {
  const double w = weight_fn_(prefix);
  if (!std::isfinite(w) || w < 0.0) {
    throw_error(ErrorCode::kContractViolation,
                "weight schedule produced a negative or non-finite weight at "
                "timestamp " +
                    std::to_string(prefix.size() + 1));
  }
  return w;
}

WeightSchedule WeightSchedule::constant(double value) {
  return WeightSchedule([value](const std::vector<int>&) { return value; },
                        /*declared_decreasing=*/true);
}

WeightSchedule WeightSchedule::geometric(double value, double factor) {
  return WeightSchedule(
      [value, factor](const std::vector<int>& prefix) {
        return value * std::pow(factor, static_cast<double>(prefix.size()));
      },
      /*declared_decreasing=*/factor <= 1.0);
}

WeightSchedule WeightSchedule::from_weights(std::vector<double> weights) {
  bool decreasing = true;
  for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
    if (weights[i] < weights[i + 1]) decreasing = false;
  }
  return WeightSchedule(
      [weights = std::move(weights)](const std::vector<int>& prefix) {
        const std::size_t t = prefix.size();  // 0-based index of timestamp t+1
        return t < weights.size() ? weights[t] : 0.0;
      },
      decreasing);
}

std::optional<DecreasingViolation> spot_check_decreasing(
    const WeightSchedule& schedule, Rng& rng, double p, std::size_t samples,
    std::size_t horizon) {
  check_probability(p);
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<int> prefix;
    double previous = std::numeric_limits<double>::infinity();
    for (std::size_t t = 1; t <= horizon; ++t) {
      const double w = schedule.weight(prefix);
      if (w > previous + 1e-12) {
        return DecreasingViolation{prefix, previous, w};
      }
      previous = w;
      prefix.push_back(rng.bernoulli(p) ? 1 : 0);
    }
  }
  return std::nullopt;
}

ProcessOutcome run_simple_process(double p, std::size_t mu,
                                  const WeightSchedule& schedule, Rng& rng) {
  check_probability(p);
  check_mu(mu);
  ProcessOutcome out;
  while (out.m.size() < mu) {
    if (out.coins.size() >= kMaxProcessFlips) {
      throw_error(ErrorCode::kLimitExceeded,
                  "coin process exceeded " + std::to_string(kMaxProcessFlips) +
                      " flips without terminating");
    }
    const double w = schedule.weight(out.coins);
    const std::size_t t = out.coins.size() + 1;
    const bool head = rng.bernoulli(p);
    out.coins.push_back(head ? 1 : 0);
    if (head) {
      out.m.push_back({t, w});
      out.weight_m += w;
    } else {
      out.n.push_back({t, w});
      out.weight_n += w;
    }
  }
  out.s = prune_cardinality(out.n, mu);
  for (const TimedWeight& tw : out.s) out.weight_s += tw.weight;
  return out;
}

std::vector<TimedWeight> prune_cardinality(const std::vector<TimedWeight>& n,
                                           std::size_t mu) {
  if (n.size() <= mu) return n;
  return {};
}

double g_p(std::size_t m, std::size_t n, double p) {
  check_probability(p);
  if (m == 0 || n == 0) {
    throw_error(ErrorCode::kInvalidArgument, "g_p needs m ≥ 1 and n ≥ 1");
  }
  if (m + n > limits::kMaxGpClosed) {
    throw_error(ErrorCode::kLimitExceeded,
                "g_p refused for m+n = " + std::to_string(m + n) + " > " +
                    std::to_string(limits::kMaxGpClosed));
  }
  const long double lp = static_cast<long double>(p);
  long double sum = 0.0L;
  if (m + n <= 60) {
    // C(n-1+i, i) grows by the exact integer factor (n-1+i)/i per step.
    unsigned __int128 binom = 1;
    long double p_power = 1.0L;
    for (std::size_t i = 0; i < m; ++i) {
      if (i > 0) {
        binom = binom * (n - 1 + i) / i;
        p_power *= lp;
      }
      sum += static_cast<long double>(binom) * p_power;
    }
    sum *= powl(1.0L - lp, static_cast<long double>(n));
  } else {
    const long double log_p = logl(lp);
    const long double log_q = logl(1.0L - lp);
    const long double lg_n = lgammal(static_cast<long double>(n));
    for (std::size_t i = 0; i < m; ++i) {
      const long double log_term =
          static_cast<long double>(n) * log_q +
          static_cast<long double>(i) * log_p +
          lgammal(static_cast<long double>(n + i)) -
          lgammal(static_cast<long double>(i + 1)) - lg_n;
      sum += expl(log_term);
    }
  }
  if (sum < 0.0L) sum = 0.0L;
  if (sum > 1.0L) sum = 1.0L;
  return static_cast<double>(sum);
}

double g_p_enumerated(std::size_t m, std::size_t n, double p) {
  check_probability(p);
  if (m == 0 || n == 0) {
    throw_error(ErrorCode::kInvalidArgument, "g_p needs m ≥ 1 and n ≥ 1");
  }
  if (m + n > limits::kMaxGpEnumerated) {
    throw_error(ErrorCode::kLimitExceeded,
                "g_p enumeration refused for m+n = " + std::to_string(m + n) +
                    " > " + std::to_string(limits::kMaxGpEnumerated));
  }
  // Within m+n-1 flips either the m-th head or the n-th tail has appeared,
  // never both, so every prefix decides the comparison.
  const std::size_t length = m + n - 1;
  const long double lp = static_cast<long double>(p);
  long double total = 0.0L;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << length); ++mask) {
    std::size_t heads = 0;
    std::size_t tails = 0;
    bool tail_side_first = false;
    for (std::size_t i = 0; i < length; ++i) {
      if ((mask >> i) & 1ULL) {
        if (++heads == m) break;
      } else {
        if (++tails == n) {
          tail_side_first = true;
          break;
        }
      }
    }
    if (!tail_side_first) continue;
    // Probability of the full prefix; suffix outcomes marginalize out.
    const std::size_t mask_heads =
        static_cast<std::size_t>(std::popcount(mask));
    total += powl(lp, static_cast<long double>(mask_heads)) *
             powl(1.0L - lp, static_cast<long double>(length - mask_heads));
  }
  return static_cast<double>(total);
}

double g_p_upper_bound(std::size_t m, std::size_t n, double p) {
  check_probability(p);
  if (m == 0 || n == 0) {
    throw_error(ErrorCode::kInvalidArgument, "g_p needs m ≥ 1 and n ≥ 1");
  }
  const long double lp = static_cast<long double>(p);
  return static_cast<double>(
      powl(1.0L - lp, static_cast<long double>(n)) *
      powl(1.0L + lp, static_cast<long double>(n + m) - 2.0L));
}

double prop2_bound(std::size_t mu, double p) {
  check_probability(p);
  check_mu(mu);
  const long double lp = static_cast<long double>(p);
  if (mu == 1) {
    return static_cast<double>((1.0L - lp * lp) / (lp * lp));
  }
  const long double beta = 2.0L * expl(1.0L) * (1.0L - lp);
  if (beta >= 1.0L) return std::numeric_limits<double>::infinity();
  const long double lmu = static_cast<long double>(mu);
  return static_cast<double>((lmu + 1.0L - lmu * beta) * powl(beta, lmu) /
                             ((1.0L - beta) * (1.0L - beta)));
}

ProcessEstimate estimate_prop1(double p, std::size_t mu,
                               const WeightSchedule& schedule,
                               std::size_t trials, Rng& rng) {
  check_probability(p);
  check_mu(mu);
  if (trials == 0) {
    throw_error(ErrorCode::kInvalidArgument, "need at least one trial");
  }
  long double sum_m = 0.0L, sum_n = 0.0L;
  long double sum_mm = 0.0L, sum_nn = 0.0L, sum_mn = 0.0L;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const ProcessOutcome out = run_simple_process(p, mu, schedule, rng);
    const long double wm = out.weight_m;
    const long double wn = out.weight_n;
    sum_m += wm;
    sum_n += wn;
    sum_mm += wm * wm;
    sum_nn += wn * wn;
    sum_mn += wm * wn;
  }
  const long double t = static_cast<long double>(trials);
  const long double mean_m = sum_m / t;
  const long double mean_n = sum_n / t;
  ProcessEstimate est;
  est.trials = trials;
  est.mean_m = static_cast<double>(mean_m);
  est.mean_n = static_cast<double>(mean_n);
  if (trials > 1) {
    const long double var_m =
        std::max(0.0L, (sum_mm - t * mean_m * mean_m) / (t - 1.0L));
    const long double var_n =
        std::max(0.0L, (sum_nn - t * mean_n * mean_n) / (t - 1.0L));
    const long double cov = (sum_mn - t * mean_m * mean_n) / (t - 1.0L);
    est.se_m = static_cast<double>(sqrtl(var_m / t));
    est.se_n = static_cast<double>(sqrtl(var_n / t));
    if (mean_n > 0.0L) {
      const long double r = mean_m / mean_n;
      // Delta method for the ratio of correlated means.
      const long double rel_var = var_m / (mean_m * mean_m) +
                                  var_n / (mean_n * mean_n) -
                                  2.0L * cov / (mean_m * mean_n);
      est.ratio = static_cast<double>(r);
      est.se_ratio =
          static_cast<double>(r * sqrtl(std::max(0.0L, rel_var) / t));
    } else {
      est.ratio = std::numeric_limits<double>::infinity();
      est.se_ratio = std::numeric_limits<double>::infinity();
    }
  } else {
    est.ratio = mean_n > 0.0L ? static_cast<double>(mean_m / mean_n)
                              : std::numeric_limits<double>::infinity();
  }
  return est;
}

namespace {

struct ExactWalk {
  double p;
  std::size_t mu;
  const WeightSchedule* schedule;
  long double floor;
  long double e_m = 0.0L;
  long double e_n = 0.0L;
  long double e_s = 0.0L;
  long double truncated = 0.0L;
  std::size_t leaves = 0;
  std::vector<int> prefix;

  void visit(long double prob, std::size_t heads, std::size_t tails,
             long double w_m, long double w_n) {
    if (heads == mu) {
      e_m += prob * w_m;
      e_n += prob * w_n;
      if (tails <= mu) e_s += prob * w_n;
      ++leaves;
      return;
    }
    if (prob < floor) {
      truncated += prob;
      return;
    }
    const long double w = schedule->weight(prefix);
    prefix.push_back(1);
    visit(prob * p, heads + 1, tails, w_m + w, w_n);
    prefix.back() = 0;
    visit(prob * (1.0L - p), heads, tails + 1, w_m, w_n + w);
    prefix.pop_back();
  }
};

}  // namespace

ExactProcessMoments enumerate_process_exact(double p, std::size_t mu,
                                            const WeightSchedule& schedule,
                                            double prob_floor) {
  check_probability(p);
  check_mu(mu);
  if (!(prob_floor > 0.0)) {
    throw_error(ErrorCode::kInvalidArgument,
                "probability floor must be positive");
  }
  ExactWalk walk{p, mu, &schedule, static_cast<long double>(prob_floor)};
  walk.visit(1.0L, 0, 0, 0.0L, 0.0L);
  ExactProcessMoments out;
  out.e_weight_m = static_cast<double>(walk.e_m);
  out.e_weight_n = static_cast<double>(walk.e_n);
  out.e_weight_s = static_cast<double>(walk.e_s);
  out.truncated_mass = static_cast<double>(walk.truncated);
  out.leaves = walk.leaves;
  return out;
}

}  // namespace seclab
