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

// secretary-lab: command-line harness for the secretary-algorithm library.
// Talks to the library exclusively through its C interface.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "secretarylab/secretarylab.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

using Json = nlohmann::ordered_json;

// Shortest decimal form that round-trips; empty for NaN (unset fields).
std::string num(double value) {
  if (std::isnan(value)) return "";
  return Json(value).dump();
}

int fail() {
  std::cerr << "error: " << seclab_last_error() << "\n";
  return kExitDomain;
}

struct StringDeleter {
  void operator()(char* s) const { seclab_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct InstanceDeleter {
  void operator()(seclab_instance* h) const { seclab_instance_free(h); }
};
using OwnedInstance = std::unique_ptr<seclab_instance, InstanceDeleter>;

bool read_file(const std::string& path, std::string* out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  *out = buffer.str();
  return true;
}

std::size_t default_workers() {
  const char* env = std::getenv("SECRETARY_LAB_WORKERS");
  if (env == nullptr) return 1;
  const long value = std::strtol(env, nullptr, 10);
  return value > 0 ? static_cast<std::size_t>(value) : 1;
}

OwnedInstance load(const std::string& path) {
  seclab_instance* raw = nullptr;
  if (seclab_instance_load(path.c_str(), &raw) != SECLAB_OK) {
    return nullptr;
  }
  return OwnedInstance(raw);
}

// "auto" picks the family matching the instance shape.
bool resolve_algorithm(const seclab_instance* instance, bool simulated,
                       std::string* algo) {
  if (*algo != "auto") return true;
  char* info_raw = nullptr;
  if (seclab_instance_info(instance, &info_raw) != SECLAB_OK) return false;
  OwnedString info_text(info_raw);
  const Json info = Json::parse(info_text.get());
  const bool edge_valued = info.at("edge_valued").get<bool>();
  if (edge_valued) {
    *algo = simulated ? "simulate-sbvm" : "online-sbvm";
  } else {
    *algo = simulated ? "simulate" : "online";
  }
  return true;
}

bool write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return true;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) return false;
  out << text;
  return static_cast<bool>(out);
}

std::string csv_quote(const std::string& text) {
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

void print_bound_row(const char* name, const seclab_bound_report& report,
                     const std::string& diagnostic, std::ostream& out) {
  out << name << ',' << num(report.p) << ',' << num(report.t) << ','
      << num(report.k) << ',' << num(report.c) << ',' << num(report.beta)
      << ',' << num(report.theta) << ',' << num(report.gamma) << ','
      << num(report.alpha) << ',' << num(report.a) << ','
      << num(report.guarantee) << ',' << num(report.claimed_ratio) << ','
      << csv_quote(diagnostic) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "secretary-lab: simulated-greedy experiments for matroid secretary "
      "problems"};
  app.require_subcommand(1);
  app.set_version_flag("--version", seclab_version());

  // validate -------------------------------------------------------------
  auto* cmd_validate =
      app.add_subcommand("validate", "Check an instance file's structure");
  std::string validate_path;
  cmd_validate->add_option("instance", validate_path, "Instance JSON file")
      ->required();

  // generate -------------------------------------------------------------
  auto* cmd_generate =
      app.add_subcommand("generate", "Generate a random instance");
  std::string gen_kind;
  std::size_t gen_n = 8;
  std::uint64_t gen_seed = 0;
  std::string gen_valuation = "coverage";
  std::size_t gen_capacity = 2;
  std::size_t gen_blocks = 3;
  std::size_t gen_depth = 2;
  std::size_t gen_k = 2;
  std::size_t gen_n_right = 4;
  double gen_density = 0.5;
  std::string gen_output;
  cmd_generate
      ->add_option("--kind", gen_kind,
                   "uniform | partition | laminar | transversal | "
                   "laminar_intersection")
      ->required();
  cmd_generate->add_option("--n", gen_n, "Ground-set size (left side for "
                                         "transversal)");
  cmd_generate->add_option("--seed", gen_seed, "Generator seed");
  cmd_generate->add_option(
      "--valuation", gen_valuation,
      "linear | coverage (transversal also: lifted-linear | lifted-coverage)");
  cmd_generate->add_option("--capacity", gen_capacity, "Uniform capacity");
  cmd_generate->add_option("--blocks", gen_blocks, "Partition block count");
  cmd_generate->add_option("--depth", gen_depth, "Laminar nesting depth");
  cmd_generate->add_option("--k", gen_k, "Intersection arity");
  cmd_generate->add_option("--n-right", gen_n_right,
                           "Right-side size (transversal)");
  cmd_generate->add_option("--density", gen_density,
                           "Edge probability (transversal)");
  cmd_generate->add_option("-o,--output", gen_output,
                           "Write to file instead of stdout");

  // simulate ---------------------------------------------------------------
  auto* cmd_simulate = app.add_subcommand(
      "simulate", "Run seeded trials and emit one record per trial");
  std::string sim_path;
  std::string sim_algo = "auto";
  double sim_p = 0.5;
  std::uint64_t sim_trials = 100;
  std::uint64_t sim_seed = 0;
  std::size_t sim_workers = default_workers();
  std::string sim_format = "csv";
  bool sim_no_opt = false;
  bool sim_timing = false;
  std::string sim_output;
  cmd_simulate->add_option("instance", sim_path, "Instance JSON file")
      ->required();
  cmd_simulate->add_option(
      "--algo", sim_algo,
      "online | simulate | online-sbvm | simulate-sbvm | auto");
  cmd_simulate->add_option("--p", sim_p, "Sampling probability in (0,1)");
  cmd_simulate->add_option("--trials", sim_trials, "Number of trials");
  cmd_simulate->add_option("--seed", sim_seed, "Master seed");
  cmd_simulate->add_option("--workers", sim_workers,
                           "Worker threads (default "
                           "$SECRETARY_LAB_WORKERS or 1)");
  cmd_simulate
      ->add_option("--format", sim_format, "csv | jsonl")
      ->check(CLI::IsMember({"csv", "jsonl"}));
  cmd_simulate->add_flag("--no-opt", sim_no_opt,
                         "Skip the exact-optimum computation");
  cmd_simulate->add_flag("--timing", sim_timing,
                         "Fill the ms column (breaks byte determinism)");
  cmd_simulate->add_option("-o,--output", sim_output,
                           "Write to file instead of stdout");

  // ratio ------------------------------------------------------------------
  auto* cmd_ratio = app.add_subcommand(
      "ratio", "Summarize f(result)/OPT over seeded trials");
  std::string ratio_path;
  std::string ratio_algo = "auto";
  double ratio_p = 0.5;
  std::uint64_t ratio_trials = 1000;
  std::uint64_t ratio_seed = 0;
  std::size_t ratio_workers = default_workers();
  bool ratio_survival = false;
  double ratio_z = 3.0;
  cmd_ratio->add_option("instance", ratio_path, "Instance JSON file")
      ->required();
  cmd_ratio->add_option(
      "--algo", ratio_algo,
      "online | simulate | online-sbvm | simulate-sbvm | auto");
  cmd_ratio->add_option("--p", ratio_p, "Sampling probability in (0,1)");
  cmd_ratio->add_option("--trials", ratio_trials, "Number of trials");
  cmd_ratio->add_option("--seed", ratio_seed, "Master seed");
  cmd_ratio->add_option("--workers", ratio_workers,
                        "Worker threads (default $SECRETARY_LAB_WORKERS or 1)");
  cmd_ratio->add_flag(
      "--survival", ratio_survival,
      "Per-element Pr[e in S] for the optimum of a linear instance");
  cmd_ratio->add_option("--z", ratio_z, "Wilson interval z (with --survival)");

  // bounds -----------------------------------------------------------------
  auto* cmd_bounds = app.add_subcommand(
      "bounds", "Evaluate the competitive-ratio bound calculators");
  std::string bounds_which = "all";
  double bounds_p = -1.0;
  double bounds_t = -1.0;
  std::size_t bounds_k = 2;
  double bounds_c = 0.02;
  cmd_bounds
      ->add_option("--which", bounds_which,
                   "laminar | transversal | linear-laminar | intersection | "
                   "all")
      ->check(CLI::IsMember(
          {"laminar", "transversal", "linear-laminar", "intersection", "all"}));
  cmd_bounds->add_option("--p", bounds_p,
                         "Sampling probability (default: canonical input)");
  cmd_bounds->add_option("--t", bounds_t,
                         "Threshold parameter (default: canonical input)");
  cmd_bounds->add_option("--k", bounds_k, "Intersection arity");
  cmd_bounds->add_option("--c", bounds_c, "Intersection c with p = 1 - c/k");

  // coupling ---------------------------------------------------------------
  auto* cmd_coupling = app.add_subcommand(
      "coupling",
      "Exactly compare the online and simulated-greedy (H, M, N) laws");
  std::string coupling_path;
  double coupling_p = 0.5;
  bool coupling_negative = false;
  double coupling_max_tv = -1.0;
  cmd_coupling->add_option("instance", coupling_path, "Instance JSON file")
      ->required();
  cmd_coupling->add_option("--p", coupling_p, "Sampling probability in (0,1)");
  cmd_coupling->add_flag(
      "--negative-control", coupling_negative,
      "Flip the simulated side to largest-index tie-breaking");
  cmd_coupling->add_option(
      "--max-tv", coupling_max_tv,
      "Exit 1 when the total-variation distance exceeds this");

  // gp ---------------------------------------------------------------------
  auto* cmd_gp = app.add_subcommand(
      "gp", "Probability that the m-th head appears after the n-th tail");
  std::uint64_t gp_m = 1;
  std::uint64_t gp_n = 1;
  double gp_p = 0.5;
  cmd_gp->add_option("--m", gp_m, "Head count")->required();
  cmd_gp->add_option("--n", gp_n, "Tail count")->required();
  cmd_gp->add_option("--p", gp_p, "Head probability in (0,1)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (*cmd_validate) {
    std::string text;
    if (!read_file(validate_path, &text)) {
      std::cerr << "error: cannot open " << validate_path << "\n";
      return kExitDomain;
    }
    char* report_raw = nullptr;
    if (seclab_validate_text(text.c_str(), &report_raw) != SECLAB_OK) {
      return fail();
    }
    OwnedString report_text(report_raw);
    const Json report = Json::parse(report_text.get());
    for (const Json& check : report.at("checks")) {
      if (check.at("pass").get<bool>()) {
        std::cout << "ok " << check.at("check").get<std::string>();
        const std::string detail = check.at("detail").get<std::string>();
        if (!detail.empty()) std::cout << " (" << detail << ")";
        std::cout << "\n";
      } else {
        std::cout << "FAIL " << check.at("check").get<std::string>() << ": "
                  << check.at("detail").get<std::string>() << "\n";
      }
    }
    const bool pass = report.at("pass").get<bool>();
    std::cout << (pass ? "pass" : "fail") << "\n";
    return pass ? kExitOk : kExitDomain;
  }

  if (*cmd_generate) {
    Json request;
    request["kind"] = gen_kind;
    request["n"] = gen_n;
    request["seed"] = gen_seed;
    request["valuation"] = gen_valuation;
    request["capacity"] = gen_capacity;
    request["blocks"] = gen_blocks;
    request["depth"] = gen_depth;
    request["k"] = gen_k;
    request["n_right"] = gen_n_right;
    request["density"] = gen_density;
    seclab_instance* raw = nullptr;
    if (seclab_instance_generate(request.dump().c_str(), &raw) != SECLAB_OK) {
      return fail();
    }
    OwnedInstance instance(raw);
    if (!gen_output.empty()) {
      if (seclab_instance_save(instance.get(), gen_output.c_str()) !=
          SECLAB_OK) {
        return fail();
      }
      return kExitOk;
    }
    char* text_raw = nullptr;
    if (seclab_instance_serialize(instance.get(), &text_raw) != SECLAB_OK) {
      return fail();
    }
    OwnedString text(text_raw);
    std::cout << text.get();
    return kExitOk;
  }

  if (*cmd_simulate) {
    OwnedInstance instance = load(sim_path);
    if (!instance) return fail();
    if (!resolve_algorithm(instance.get(), /*simulated=*/true, &sim_algo)) {
      return fail();
    }
    seclab_experiment_config config{};
    config.algorithm = sim_algo.c_str();
    config.p = sim_p;
    config.trials = sim_trials;
    config.master_seed = sim_seed;
    config.workers = static_cast<uint32_t>(sim_workers);
    config.json_lines = sim_format == "jsonl" ? 1 : 0;
    config.compute_opt = sim_no_opt ? 0 : 1;
    config.timing = sim_timing ? 1 : 0;
    char* text_raw = nullptr;
    if (seclab_run_experiment(instance.get(), &config, &text_raw) !=
        SECLAB_OK) {
      return fail();
    }
    OwnedString text(text_raw);
    if (!write_output(text.get(), sim_output)) {
      std::cerr << "error: cannot write " << sim_output << "\n";
      return kExitDomain;
    }
    return kExitOk;
  }

  if (*cmd_ratio) {
    OwnedInstance instance = load(ratio_path);
    if (!instance) return fail();
    if (ratio_survival) {
      char* rows_raw = nullptr;
      if (seclab_survival(instance.get(), ratio_p, ratio_trials, ratio_seed,
                          static_cast<uint32_t>(ratio_workers), ratio_z,
                          &rows_raw) != SECLAB_OK) {
        return fail();
      }
      OwnedString rows_text(rows_raw);
      const Json rows = Json::parse(rows_text.get());
      std::cout << "element,hits,trials,rate,se,wilson_low,wilson_high\n";
      for (const Json& row : rows) {
        std::cout << row.at("element").get<std::uint64_t>() << ','
                  << row.at("hits").get<std::uint64_t>() << ','
                  << row.at("trials").get<std::uint64_t>() << ','
                  << num(row.at("rate").get<double>()) << ','
                  << num(row.at("se").get<double>()) << ','
                  << num(row.at("wilson_low").get<double>()) << ','
                  << num(row.at("wilson_high").get<double>()) << '\n';
      }
      return kExitOk;
    }
    if (!resolve_algorithm(instance.get(), /*simulated=*/false, &ratio_algo)) {
      return fail();
    }
    seclab_ratio_summary summary{};
    if (seclab_empirical_ratio(instance.get(), ratio_algo.c_str(), ratio_p,
                               ratio_trials, ratio_seed,
                               static_cast<uint32_t>(ratio_workers),
                               &summary) != SECLAB_OK) {
      return fail();
    }
    std::cout << "algo,opt,mean,se,min,max,trials\n"
              << ratio_algo << ',' << num(summary.opt) << ','
              << num(summary.mean) << ',' << num(summary.se) << ','
              << num(summary.min) << ',' << num(summary.max) << ','
              << summary.trials << '\n';
    return kExitOk;
  }

  if (*cmd_bounds) {
    std::cout << "name,p,t,k,c,beta,theta,gamma,alpha,a,guarantee,"
                 "claimed_ratio,diagnostic\n";
    const bool all = bounds_which == "all";
    seclab_bound_report report{};
    char* diag_raw = nullptr;
    if (all || bounds_which == "laminar") {
      const double p = bounds_p >= 0.0 ? bounds_p : 0.9794;
      const double t = bounds_t >= 0.0 ? bounds_t : 10.1415;
      if (seclab_laminar_bound(p, t, &report, &diag_raw) != SECLAB_OK) {
        return fail();
      }
      OwnedString diag(diag_raw);
      print_bound_row("laminar", report, diag.get(), std::cout);
    }
    if (all || bounds_which == "transversal") {
      const double p = bounds_p >= 0.0 ? bounds_p : 0.9;
      const double t = bounds_t >= 0.0 ? bounds_t : 5.29;
      if (seclab_transversal_bound(p, t, &report, &diag_raw) != SECLAB_OK) {
        return fail();
      }
      OwnedString diag(diag_raw);
      print_bound_row("transversal", report, diag.get(), std::cout);
    }
    if (all || bounds_which == "linear-laminar") {
      const double p = bounds_p >= 0.0 ? bounds_p : 0.842;
      if (seclab_linear_laminar_bound(p, &report, &diag_raw) != SECLAB_OK) {
        return fail();
      }
      OwnedString diag(diag_raw);
      print_bound_row("linear-laminar", report, diag.get(), std::cout);
    }
    if (all || bounds_which == "intersection") {
      if (seclab_intersection_bound(bounds_k, bounds_c, &report, &diag_raw) !=
          SECLAB_OK) {
        return fail();
      }
      OwnedString diag(diag_raw);
      print_bound_row("intersection", report, diag.get(), std::cout);
    }
    return kExitOk;
  }

  if (*cmd_coupling) {
    OwnedInstance instance = load(coupling_path);
    if (!instance) return fail();
    seclab_coupling_report report{};
    if (seclab_verify_coupling(instance.get(), coupling_p,
                               coupling_negative ? 1 : 0,
                               &report) != SECLAB_OK) {
      return fail();
    }
    std::cout << "n,p,tv_distance,online_support,simulate_support,"
                 "truncated_mass\n"
              << report.n << ',' << num(report.p) << ','
              << num(report.tv_distance) << ',' << report.online_support << ','
              << report.simulate_support << ',' << num(report.truncated_mass)
              << '\n';
    if (coupling_max_tv >= 0.0 && report.tv_distance > coupling_max_tv) {
      std::cerr << "error: total-variation distance " << num(report.tv_distance)
                << " exceeds " << num(coupling_max_tv) << "\n";
      return kExitDomain;
    }
    return kExitOk;
  }

  if (*cmd_gp) {
    double closed = 0.0;
    if (seclab_gp(gp_m, gp_n, gp_p, &closed) != SECLAB_OK) return fail();
    double bound = 0.0;
    if (seclab_gp_upper_bound(gp_m, gp_n, gp_p, &bound) != SECLAB_OK) {
      return fail();
    }
    double enumerated = 0.0;
    std::string enumerated_text;
    const seclab_status enum_status =
        seclab_gp_enumerated(gp_m, gp_n, gp_p, &enumerated);
    if (enum_status == SECLAB_OK) {
      enumerated_text = num(enumerated);
    } else if (enum_status != SECLAB_LIMIT_EXCEEDED) {
      return fail();
    }
    std::cout << "m,n,p,gp_closed,gp_enum,gp_bound\n"
              << gp_m << ',' << gp_n << ',' << num(gp_p) << ',' << num(closed)
              << ',' << enumerated_text << ',' << num(bound) << '\n';
    return kExitOk;
  }

  std::cerr << "error: no subcommand\n";
  return kExitUsage;
}
