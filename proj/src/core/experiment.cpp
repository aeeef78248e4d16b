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

#include "experiment.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <limits>
#include <ostream>

#include "algorithms.hpp"
#include "common.hpp"
#include "parallel.hpp"
#include "rng.hpp"

namespace seclab {

namespace {

bool is_matching_algo(AlgorithmId algo) {
  return algo == AlgorithmId::kOnlineMatching ||
         algo == AlgorithmId::kSimulateMatching;
}

[[noreturn]] void rethrow_with_seed(const Error& err, std::size_t trial,
                                    std::uint64_t seed) {
  throw_error(err.code(), std::string(err.what()) + " (trial " +
                              std::to_string(trial) + ", seed " +
                              std::to_string(seed) + ")");
}

}  // namespace

ExperimentResult run_experiment(const Instance& instance,
                                const ExperimentConfig& config) {
  if (!(config.p > 0.0) || !(config.p < 1.0)) {
    throw_error(ErrorCode::kInvalidArgument,
                "probability must lie strictly between 0 and 1");
  }
  if (config.trials == 0) {
    throw_error(ErrorCode::kInvalidArgument, "need at least one trial");
  }
  const bool matching = is_matching_algo(config.algo);
  if (matching && !instance.edge_valued()) {
    throw_error(ErrorCode::kInvalidArgument,
                "matching algorithms need an edge-valued transversal instance");
  }
  if (!matching && instance.edge_valued()) {
    throw_error(ErrorCode::kInvalidArgument,
                "edge-valued instances run the matching algorithms");
  }

  const double nan = std::numeric_limits<double>::quiet_NaN();
  double opt = nan;
  bool has_opt = false;
  if (config.compute_opt) {
    if (matching &&
        instance.graph->edge_count() <= limits::kMaxMatchingBruteForce) {
      opt = brute_force_opt_matching(*instance.graph, *instance.valuation).value;
      has_opt = true;
    } else if (!matching &&
               instance.ground_size() <= limits::kMaxBruteForce) {
      opt = brute_force_opt(*instance.system, *instance.valuation).value;
      has_opt = true;
    }
  }
  if (has_opt && opt <= 0.0) {
    throw_error(ErrorCode::kDomain,
                "the exact optimum is 0; ratios are undefined");
  }

  const Pruner pruner = config.algo == AlgorithmId::kSimulate
                            ? default_pruner(*instance.system)
                            : Pruner();

  std::vector<TrialRecord> records(config.trials);
  run_trials(config.trials, config.workers, [&](std::size_t trial) {
    const std::uint64_t seed = derive_seed(config.master_seed, trial);
    try {
      const auto started = std::chrono::steady_clock::now();
      Rng rng(seed);
      const ValuationOracle& oracle = *instance.valuation;
      RunTrace trace;
      double f_alg = 0.0;
      switch (config.algo) {
        case AlgorithmId::kOnline: {
          const auto order = rng.permutation(instance.ground_size());
          trace = online(*instance.system, oracle, order, config.p, rng);
          f_alg = oracle.eval(trace.alg);
          break;
        }
        case AlgorithmId::kSimulate: {
          trace = simulate(*instance.system, oracle, config.p, rng, pruner);
          f_alg = oracle.eval(trace.s);
          break;
        }
        case AlgorithmId::kOnlineMatching: {
          const auto order = rng.permutation(instance.graph->n_left());
          trace = online_matching(*instance.graph, oracle, order, config.p, rng);
          f_alg = oracle.eval(trace.alg);
          break;
        }
        case AlgorithmId::kSimulateMatching: {
          trace = simulate_matching(*instance.graph, oracle, config.p, rng);
          f_alg = oracle.eval(trace.s);
          break;
        }
      }
      TrialRecord& rec = records[trial];
      rec.trial = static_cast<std::int64_t>(trial);
      rec.seed = seed;
      rec.f_alg = f_alg;
      rec.f_s = oracle.eval(trace.s);
      rec.f_m = oracle.eval(trace.m);
      rec.opt = opt;
      rec.ratio = has_opt ? f_alg / opt : nan;
      if (config.timing) {
        rec.ms = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - started)
                     .count();
      }
    } catch (const Error& err) {
      rethrow_with_seed(err, trial, seed);
    }
  });

  ExperimentResult result;
  result.trials = std::move(records);
  result.has_opt = has_opt;

  Kahan sum_alg, sum_s, sum_m, sum_ratio, sum_ms;
  result.ratio_min = has_opt ? result.trials.front().ratio : nan;
  result.ratio_max = result.ratio_min;
  for (const TrialRecord& rec : result.trials) {
    sum_alg.add(rec.f_alg);
    sum_s.add(rec.f_s);
    sum_m.add(rec.f_m);
    sum_ms.add(rec.ms);
    if (has_opt) {
      sum_ratio.add(rec.ratio);
      result.ratio_min = std::min(result.ratio_min, rec.ratio);
      result.ratio_max = std::max(result.ratio_max, rec.ratio);
    }
  }
  const double count = static_cast<double>(config.trials);
  result.summary.trial = -1;
  result.summary.seed = config.master_seed;
  result.summary.f_alg = sum_alg.sum / count;
  result.summary.f_s = sum_s.sum / count;
  result.summary.f_m = sum_m.sum / count;
  result.summary.opt = opt;
  result.summary.ratio = has_opt ? sum_ratio.sum / count : nan;
  result.summary.ms = sum_ms.sum;
  if (has_opt && config.trials > 1) {
    Kahan sq;
    for (const TrialRecord& rec : result.trials) {
      const double d = rec.ratio - result.summary.ratio;
      sq.add(d * d);
    }
    result.ratio_se = std::sqrt(sq.sum / (count - 1.0) / count);
  }
  return result;
}

std::string format_double(double value) {
  char buffer[32];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, ptr);
}

namespace {

void write_csv_row(const TrialRecord& rec, bool has_opt, std::ostream& out) {
  out << rec.trial << ',' << rec.seed << ',' << format_double(rec.f_alg) << ','
      << format_double(rec.f_s) << ',' << format_double(rec.f_m) << ',';
  if (has_opt) out << format_double(rec.opt);
  out << ',';
  if (has_opt) out << format_double(rec.ratio);
  out << ',' << format_double(rec.ms) << '\n';
}

nlohmann::ordered_json record_to_json(const TrialRecord& rec, bool has_opt) {
  nlohmann::ordered_json row;
  row["trial"] = rec.trial;
  row["seed"] = rec.seed;
  row["f_alg"] = rec.f_alg;
  row["f_s"] = rec.f_s;
  row["f_m"] = rec.f_m;
  row["opt"] = has_opt ? nlohmann::ordered_json(rec.opt)
                       : nlohmann::ordered_json(nullptr);
  row["ratio"] = has_opt ? nlohmann::ordered_json(rec.ratio)
                         : nlohmann::ordered_json(nullptr);
  row["ms"] = rec.ms;
  return row;
}

}  // namespace

void write_csv(const ExperimentResult& result, std::ostream& out) {
  out << "trial,seed,f_alg,f_s,f_m,opt,ratio,ms\n";
  for (const TrialRecord& rec : result.trials) {
    write_csv_row(rec, result.has_opt, out);
  }
  write_csv_row(result.summary, result.has_opt, out);
}

void write_json_lines(const ExperimentResult& result, std::ostream& out) {
  for (const TrialRecord& rec : result.trials) {
    out << record_to_json(rec, result.has_opt).dump() << '\n';
  }
  nlohmann::ordered_json summary = record_to_json(result.summary, result.has_opt);
  if (result.has_opt) {
    summary["ratio_se"] = result.ratio_se;
    summary["ratio_min"] = result.ratio_min;
    summary["ratio_max"] = result.ratio_max;
  }
  out << summary.dump() << '\n';
}

}  // namespace seclab
