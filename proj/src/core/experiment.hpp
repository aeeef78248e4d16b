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

#ifndef SECLAB_CORE_EXPERIMENT_HPP_
#define SECLAB_CORE_EXPERIMENT_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "analysis.hpp"
#include "instance.hpp"

namespace seclab {

enum class OutputFormat { kCsv, kJsonLines };

struct ExperimentConfig {
  AlgorithmId algo = AlgorithmId::kOnline;
  double p = 0.5;
  std::size_t trials = 100;
  std::uint64_t master_seed = 0;
  std::size_t workers = 1;
  bool compute_opt = true;  // skipped automatically above the brute-force cap
  bool timing = false;      // ms columns stay 0 so output is byte-stable
};

// One emitted row. Simulated runs report the pruned solution as f_alg; the
// online runs report the accepted set. opt and ratio are NaN when no exact
// optimum is available.
struct TrialRecord {
  std::int64_t trial = 0;  // -1 marks the summary row
  std::uint64_t seed = 0;
  double f_alg = 0.0;
  double f_s = 0.0;
  double f_m = 0.0;
  double opt = 0.0;
  double ratio = 0.0;
  double ms = 0.0;
};

struct ExperimentResult {
  std::vector<TrialRecord> trials;
  TrialRecord summary;  // trial == -1; value columns hold means
  double ratio_se = 0.0;
  double ratio_min = 0.0;
  double ratio_max = 0.0;
  bool has_opt = false;
};

// Runs config.trials independent trials of the chosen algorithm on the
// instance. Trial k always uses derive_seed(master_seed, k), so results do
// not depend on the worker count.
ExperimentResult run_experiment(const Instance& instance,
                                const ExperimentConfig& config);

// Shortest decimal form that round-trips the value.
std::string format_double(double value);

// trial,seed,f_alg,f_s,f_m,opt,ratio,ms rows plus a trailing summary row
// (trial == -1). opt and ratio cells stay empty without an exact optimum.
void write_csv(const ExperimentResult& result, std::ostream& out);

// One JSON object per line with the same fields as the CSV columns; the
// summary line adds ratio_se, ratio_min and ratio_max.
void write_json_lines(const ExperimentResult& result, std::ostream& out);

}  // namespace seclab

#endif  // SECLAB_CORE_EXPERIMENT_HPP_
