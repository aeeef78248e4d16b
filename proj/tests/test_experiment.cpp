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

#include "core/experiment.hpp"

#include <cmath>
#include <functional>
#include <sstream>
#include <string>

#include "core/analysis.hpp"
#include "core/common.hpp"
#include "core/instance.hpp"
#include "core/rng.hpp"
#include "doctest.h"

using seclab::AlgorithmId;
using seclab::Error;
using seclab::ErrorCode;
using seclab::ExperimentConfig;
using seclab::ExperimentResult;
using seclab::Instance;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& err) {
    return err.code();
  }
  FAIL("expected an error");
  return ErrorCode::kInvalidArgument;  // unreachable, FAIL throws
}

Instance laminar_instance() {
  return seclab::parse_instance(R"({
    "kind": "laminar", "n": 5,
    "system": {"constraints": [
      {"members": [0, 1, 2, 3, 4], "capacity": 3},
      {"members": [0, 1], "capacity": 1}
    ]},
    "valuation": {"kind": "linear", "weights": [5, 4, 3, 2, 1]}
  })");
}

Instance matching_instance() {
  return seclab::parse_instance(R"({
    "kind": "transversal", "n": 3,
    "system": {"n_right": 2,
               "edges": [[0, 0], [1, 0], [1, 1], [2, 1]]},
    "valuation": {"kind": "linear", "weights": [4, 3, 5, 2]}
  })");
}

std::string csv_of(const ExperimentResult& result) {
  std::ostringstream out;
  seclab::write_csv(result, out);
  return out.str();
}

std::string jsonl_of(const ExperimentResult& result) {
  std::ostringstream out;
  seclab::write_json_lines(result, out);
  return out.str();
}

}  // namespace

TEST_CASE("run_experiment produces per-trial records and a summary") {
  const Instance inst = laminar_instance();
  ExperimentConfig config;
  config.algo = AlgorithmId::kOnline;
  config.trials = 32;
  config.master_seed = 42;
  const ExperimentResult result = seclab::run_experiment(inst, config);

  REQUIRE(result.trials.size() == 32);
  CHECK(result.has_opt);
  double sum_alg = 0.0;
  double sum_ratio = 0.0;
  for (std::size_t k = 0; k < result.trials.size(); ++k) {
    const auto& rec = result.trials[k];
    CHECK(rec.trial == static_cast<std::int64_t>(k));
    CHECK(rec.seed == seclab::derive_seed(42, k));
    CHECK(rec.f_alg >= 0.0);
    CHECK(rec.opt == doctest::Approx(10.0));  // 5 + 4 is blocked, 5 + 3 + 2
    CHECK(rec.ratio == doctest::Approx(rec.f_alg / rec.opt));
    CHECK(rec.ms == 0.0);
    CHECK(result.ratio_min <= rec.ratio);
    CHECK(rec.ratio <= result.ratio_max);
    sum_alg += rec.f_alg;
    sum_ratio += rec.ratio;
  }
  CHECK(result.summary.trial == -1);
  CHECK(result.summary.seed == 42);
  CHECK(result.summary.f_alg == doctest::Approx(sum_alg / 32.0));
  CHECK(result.summary.ratio == doctest::Approx(sum_ratio / 32.0));
  CHECK(result.summary.ms == 0.0);
  CHECK(result.ratio_se >= 0.0);
}

TEST_CASE("simulated runs report the pruned survivors as the algorithm value") {
  const Instance inst = laminar_instance();
  ExperimentConfig config;
  config.algo = AlgorithmId::kSimulate;
  config.trials = 64;
  config.master_seed = 7;
  const ExperimentResult result = seclab::run_experiment(inst, config);
  for (const auto& rec : result.trials) {
    CHECK(rec.f_alg == rec.f_s);
  }
}

TEST_CASE("matching algorithms run on edge-valued instances") {
  const Instance inst = matching_instance();
  for (const AlgorithmId algo :
       {AlgorithmId::kOnlineMatching, AlgorithmId::kSimulateMatching}) {
    CAPTURE(static_cast<int>(algo));
    ExperimentConfig config;
    config.algo = algo;
    config.trials = 48;
    config.master_seed = 11;
    const ExperimentResult result = seclab::run_experiment(inst, config);
    CHECK(result.has_opt);
    CHECK(result.summary.opt == doctest::Approx(9.0));  // (0,0) + (1,1)
    for (const auto& rec : result.trials) {
      if (algo == AlgorithmId::kSimulateMatching) {
        CHECK(rec.f_alg == rec.f_s);
      }
      CHECK(rec.f_alg <= rec.opt + 1e-12);
    }
  }
}

TEST_CASE("experiment output does not depend on the worker count") {
  const Instance inst = laminar_instance();
  ExperimentConfig config;
  config.algo = AlgorithmId::kOnline;
  config.trials = 17;
  config.master_seed = 5;
  config.workers = 1;
  const ExperimentResult base = seclab::run_experiment(inst, config);
  const std::string base_csv = csv_of(base);
  const std::string base_jsonl = jsonl_of(base);
  for (const std::size_t workers : {std::size_t{2}, std::size_t{3},
                                    std::size_t{8}}) {
    CAPTURE(workers);
    config.workers = workers;
    const ExperimentResult run = seclab::run_experiment(inst, config);
    CHECK(csv_of(run) == base_csv);
    CHECK(jsonl_of(run) == base_jsonl);
  }
}

TEST_CASE("csv output carries the frozen column order") {
  const Instance inst = laminar_instance();
  ExperimentConfig config;
  config.trials = 2;
  config.master_seed = 1;
  const std::string csv = csv_of(seclab::run_experiment(inst, config));
  CHECK(csv.rfind("trial,seed,f_alg,f_s,f_m,opt,ratio,ms\n", 0) == 0);
  // Header, two trials, one summary row.
  std::size_t lines = 0;
  for (char c : csv) lines += (c == '\n');
  CHECK(lines == 4);
  const std::size_t summary_at = csv.rfind("\n-1,");
  REQUIRE(summary_at != std::string::npos);
  CHECK(csv.find("-1,1,", summary_at) != std::string::npos);
}

TEST_CASE("disabling the optimum empties the ratio columns") {
  const Instance inst = laminar_instance();
  ExperimentConfig config;
  config.trials = 3;
  config.compute_opt = false;
  const ExperimentResult result = seclab::run_experiment(inst, config);
  CHECK_FALSE(result.has_opt);
  for (const auto& rec : result.trials) {
    CHECK(std::isnan(rec.opt));
    CHECK(std::isnan(rec.ratio));
  }
  const std::string csv = csv_of(result);
  // Empty opt and ratio cells; ms stays 0 without timing.
  CHECK(csv.find(",,,0\n") != std::string::npos);
  const std::string jsonl = jsonl_of(result);
  CHECK(jsonl.find("\"opt\":null,\"ratio\":null") != std::string::npos);
  CHECK(jsonl.find("ratio_se") == std::string::npos);
}

TEST_CASE("json lines summary carries the spread statistics") {
  const Instance inst = laminar_instance();
  ExperimentConfig config;
  config.trials = 8;
  config.master_seed = 3;
  const ExperimentResult result = seclab::run_experiment(inst, config);
  const std::string jsonl = jsonl_of(result);
  std::size_t lines = 0;
  for (char c : jsonl) lines += (c == '\n');
  CHECK(lines == 9);
  const std::size_t last_line = jsonl.rfind("{\"trial\":-1");
  REQUIRE(last_line != std::string::npos);
  CHECK(jsonl.find("\"ratio_se\":", last_line) != std::string::npos);
  CHECK(jsonl.find("\"ratio_min\":", last_line) != std::string::npos);
  CHECK(jsonl.find("\"ratio_max\":", last_line) != std::string::npos);
}

TEST_CASE("timing fills the ms column when asked") {
  const Instance inst = laminar_instance();
  ExperimentConfig config;
  config.trials = 50;
  config.timing = true;
  const ExperimentResult result = seclab::run_experiment(inst, config);
  for (const auto& rec : result.trials) CHECK(rec.ms >= 0.0);
  CHECK(result.summary.ms > 0.0);
}

TEST_CASE("run_experiment validates its configuration") {
  const Instance inst = laminar_instance();
  const Instance edges = matching_instance();

  ExperimentConfig config;
  config.p = 0.0;
  CHECK(code_of([&] { seclab::run_experiment(inst, config); }) ==
        ErrorCode::kInvalidArgument);
  config.p = 1.0;
  CHECK(code_of([&] { seclab::run_experiment(inst, config); }) ==
        ErrorCode::kInvalidArgument);

  config = ExperimentConfig{};
  config.trials = 0;
  CHECK(code_of([&] { seclab::run_experiment(inst, config); }) ==
        ErrorCode::kInvalidArgument);

  config = ExperimentConfig{};
  config.algo = AlgorithmId::kOnlineMatching;
  CHECK(code_of([&] { seclab::run_experiment(inst, config); }) ==
        ErrorCode::kInvalidArgument);

  config = ExperimentConfig{};
  config.algo = AlgorithmId::kOnline;
  CHECK(code_of([&] { seclab::run_experiment(edges, config); }) ==
        ErrorCode::kInvalidArgument);
}

TEST_CASE("run_experiment refuses a zero optimum") {
  const Instance zero = seclab::parse_instance(R"({
    "kind": "uniform", "n": 3, "system": {"capacity": 1},
    "valuation": {"kind": "linear", "weights": [0, 0, 0]}
  })");
  ExperimentConfig config;
  config.trials = 4;
  CHECK(code_of([&] { seclab::run_experiment(zero, config); }) ==
        ErrorCode::kDomain);
}

TEST_CASE("format_double emits the shortest round-trip form") {
  CHECK(seclab::format_double(0.25) == "0.25");
  CHECK(seclab::format_double(2.0) == "2");
  CHECK(seclab::format_double(0.1) == "0.1");
  CHECK(seclab::format_double(1.0 / 3.0) == "0.3333333333333333");
}
