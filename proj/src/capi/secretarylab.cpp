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

#include "secretarylab/secretarylab.h"

#include <cstdlib>
#include <cstring>
#include <limits>
#include <sstream>
#include <string>
#include <utility>

#include "core/analysis.hpp"
#include "core/common.hpp"
#include "core/experiment.hpp"
#include "core/instance.hpp"
#include "core/stochastic.hpp"

namespace {

using seclab::Error;
using seclab::ErrorCode;

thread_local std::string g_last_error;

seclab_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return SECLAB_INVALID_ARGUMENT;
    case ErrorCode::kLimitExceeded:
      return SECLAB_LIMIT_EXCEEDED;
    case ErrorCode::kContractViolation:
      return SECLAB_CONTRACT_VIOLATION;
    case ErrorCode::kUnsupported:
      return SECLAB_UNSUPPORTED;
    case ErrorCode::kParse:
      return SECLAB_PARSE;
    case ErrorCode::kIo:
      return SECLAB_IO;
    case ErrorCode::kDomain:
      return SECLAB_DOMAIN;
  }
  return SECLAB_CONTRACT_VIOLATION;
}

// Runs fn, translating exceptions into statuses and the thread-local
// message. fn returns SECLAB_OK or sets its own failure.
template <typename Fn>
seclab_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& err) {
    g_last_error = err.what();
    return to_status(err.code());
  } catch (const std::exception& err) {
    g_last_error = err.what();
    return SECLAB_CONTRACT_VIOLATION;
  } catch (...) {
    g_last_error = "unknown failure";
    return SECLAB_CONTRACT_VIOLATION;
  }
}

seclab_status fail(seclab_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

char* dup_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) return nullptr;
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

seclab_status emit_string(const std::string& text, char** out) {
  *out = dup_string(text);
  if (*out == nullptr) return fail(SECLAB_IO, "out of memory");
  return SECLAB_OK;
}

bool parse_algorithm(const char* name, seclab::AlgorithmId* out) {
  if (name == nullptr) return false;
  const std::string id(name);
  if (id == "online") {
    *out = seclab::AlgorithmId::kOnline;
  } else if (id == "simulate") {
    *out = seclab::AlgorithmId::kSimulate;
  } else if (id == "online-sbvm") {
    *out = seclab::AlgorithmId::kOnlineMatching;
  } else if (id == "simulate-sbvm") {
    *out = seclab::AlgorithmId::kSimulateMatching;
  } else {
    return false;
  }
  return true;
}

void fill_bound_report(const seclab::BoundReport& report,
                       seclab_bound_report* out) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  out->p = report.p;
  out->t = report.t;
  out->k = report.k == 0 ? nan : static_cast<double>(report.k);
  out->c = report.c;
  out->beta = report.beta;
  out->theta = report.theta;
  out->gamma = report.gamma;
  out->alpha = report.alpha;
  out->a = report.a;
  out->guarantee = report.guarantee;
  out->claimed_ratio = report.claimed_ratio;
}

seclab_status finish_bound(const seclab::BoundReport& report,
                           seclab_bound_report* out, char** diagnostic) {
  if (out == nullptr) return fail(SECLAB_INVALID_ARGUMENT, "out is null");
  fill_bound_report(report, out);
  if (diagnostic != nullptr) return emit_string(report.diagnostic, diagnostic);
  return SECLAB_OK;
}

}  // namespace

struct seclab_instance {
  seclab::Instance value;
};

extern "C" {

const char* seclab_last_error(void) { return g_last_error.c_str(); }

const char* seclab_version(void) { return "0.1.0"; }

void seclab_string_free(char* text) { std::free(text); }

seclab_status seclab_instance_parse(const char* json_text,
                                    seclab_instance** out) {
  if (json_text == nullptr || out == nullptr) {
    return fail(SECLAB_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    *out = new seclab_instance{seclab::parse_instance(json_text)};
    return SECLAB_OK;
  });
}

seclab_status seclab_instance_load(const char* path, seclab_instance** out) {
  if (path == nullptr || out == nullptr) {
    return fail(SECLAB_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    *out = new seclab_instance{seclab::load_instance(path)};
    return SECLAB_OK;
  });
}

seclab_status seclab_instance_generate(const char* request_json,
                                       seclab_instance** out) {
  if (request_json == nullptr || out == nullptr) {
    return fail(SECLAB_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    nlohmann::ordered_json request;
    try {
      request = nlohmann::ordered_json::parse(request_json);
    } catch (const nlohmann::ordered_json::parse_error& err) {
      seclab::throw_error(ErrorCode::kParse,
                          std::string("bad generator request: ") + err.what());
    }
    if (!request.is_object() || !request.contains("kind")) {
      seclab::throw_error(ErrorCode::kInvalidArgument,
                          "generator request needs a \"kind\"");
    }
    seclab::GeneratorRequest req;
    req.kind = request.at("kind").get<std::string>();
    if (request.contains("n")) req.n = request.at("n").get<std::size_t>();
    if (request.contains("seed")) {
      req.seed = request.at("seed").get<std::uint64_t>();
    }
    if (request.contains("valuation")) {
      req.valuation = request.at("valuation").get<std::string>();
    }
    if (request.contains("capacity")) {
      req.capacity = request.at("capacity").get<std::size_t>();
    }
    if (request.contains("blocks")) {
      req.blocks = request.at("blocks").get<std::size_t>();
    }
    if (request.contains("depth")) {
      req.depth = request.at("depth").get<std::size_t>();
    }
    if (request.contains("k")) req.k = request.at("k").get<std::size_t>();
    if (request.contains("n_right")) {
      req.n_right = request.at("n_right").get<std::size_t>();
    }
    if (request.contains("density")) {
      req.density = request.at("density").get<double>();
    }
    *out = new seclab_instance{seclab::generate_instance(req)};
    return SECLAB_OK;
  });
}

seclab_status seclab_instance_serialize(const seclab_instance* h,
                                        char** out_json) {
  if (h == nullptr || out_json == nullptr) {
    return fail(SECLAB_INVALID_ARGUMENT, "null argument");
  }
  return guarded(
      [&] { return emit_string(seclab::serialize_instance(h->value), out_json); });
}

seclab_status seclab_instance_save(const seclab_instance* h,
                                   const char* path) {
  if (h == nullptr || path == nullptr) {
    return fail(SECLAB_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    seclab::save_instance(h->value, path);
    return SECLAB_OK;
  });
}

seclab_status seclab_instance_info(const seclab_instance* h,
                                   char** out_json) {
  if (h == nullptr || out_json == nullptr) {
    return fail(SECLAB_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    nlohmann::ordered_json info;
    info["name"] = h->value.name;
    info["kind"] = seclab::system_kind_name(h->value.kind());
    info["n"] = h->value.ground_size();
    info["edge_valued"] = h->value.edge_valued();
    if (h->value.graph != nullptr) {
      info["edges"] = h->value.graph->edge_count();
    }
    return emit_string(info.dump(), out_json);
  });
}

void seclab_instance_free(seclab_instance* h) { delete h; }

seclab_status seclab_validate_text(const char* json_text,
                                   char** out_report_json) {
  if (json_text == nullptr || out_report_json == nullptr) {
    return fail(SECLAB_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    const seclab::ValidationReport report =
        seclab::validate_instance_text(json_text);
    nlohmann::ordered_json out;
    out["pass"] = report.all_pass();
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const seclab::ValidationEntry& entry : report.entries) {
      nlohmann::ordered_json row;
      row["check"] = entry.check;
      row["pass"] = entry.pass;
      row["detail"] = entry.detail;
      checks.push_back(std::move(row));
    }
    out["checks"] = std::move(checks);
    return emit_string(out.dump(), out_report_json);
  });
}

seclab_status seclab_run_experiment(const seclab_instance* h,
                                    const seclab_experiment_config* config,
                                    char** out_text) {
  if (h == nullptr || config == nullptr || out_text == nullptr) {
    return fail(SECLAB_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    seclab::ExperimentConfig cfg;
    if (!parse_algorithm(config->algorithm, &cfg.algo)) {
      seclab::throw_error(ErrorCode::kInvalidArgument,
                          "unknown algorithm id");
    }
    cfg.p = config->p;
    cfg.trials = config->trials;
    cfg.master_seed = config->master_seed;
    cfg.workers = config->workers == 0 ? 1 : config->workers;
    cfg.compute_opt = config->compute_opt != 0;
    cfg.timing = config->timing != 0;
    const seclab::ExperimentResult result =
        seclab::run_experiment(h->value, cfg);
    std::ostringstream out;
    if (config->json_lines != 0) {
      seclab::write_json_lines(result, out);
    } else {
      seclab::write_csv(result, out);
    }
    return emit_string(out.str(), out_text);
  });
}

seclab_status seclab_empirical_ratio(const seclab_instance* h,
                                     const char* algorithm, double p,
                                     uint64_t trials, uint64_t master_seed,
                                     uint32_t workers,
                                     seclab_ratio_summary* out) {
  if (h == nullptr || out == nullptr) {
    return fail(SECLAB_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    seclab::AlgorithmId algo;
    if (!parse_algorithm(algorithm, &algo)) {
      seclab::throw_error(ErrorCode::kInvalidArgument,
                          "unknown algorithm id");
    }
    const std::size_t worker_count = workers == 0 ? 1 : workers;
    seclab::RatioSummary summary;
    if (algo == seclab::AlgorithmId::kOnlineMatching ||
        algo == seclab::AlgorithmId::kSimulateMatching) {
      if (!h->value.edge_valued()) {
        seclab::throw_error(
            ErrorCode::kInvalidArgument,
            "matching algorithms need an edge-valued transversal instance");
      }
      summary = seclab::empirical_ratio_matching(
          *h->value.graph, *h->value.valuation, algo, p, trials, master_seed,
          worker_count);
    } else {
      if (h->value.edge_valued()) {
        seclab::throw_error(ErrorCode::kInvalidArgument,
                            "edge-valued instances run the matching algorithms");
      }
      summary =
          seclab::empirical_ratio(*h->value.system, *h->value.valuation, algo,
                                  p, trials, master_seed, worker_count);
    }
    out->opt = summary.opt;
    out->mean = summary.mean;
    out->se = summary.se;
    out->min = summary.min;
    out->max = summary.max;
    out->trials = summary.trials;
    return SECLAB_OK;
  });
}

seclab_status seclab_survival(const seclab_instance* h, double p,
                              uint64_t trials, uint64_t master_seed,
                              uint32_t workers, double wilson_z,
                              char** out_json) {
  if (h == nullptr || out_json == nullptr) {
    return fail(SECLAB_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    const auto estimates = seclab::survival_probability(
        *h->value.system, *h->value.valuation, p, trials, master_seed,
        workers == 0 ? 1 : workers, wilson_z);
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const seclab::SurvivalEstimate& est : estimates) {
      nlohmann::ordered_json row;
      row["element"] = est.element;
      row["hits"] = est.hits;
      row["trials"] = est.trials;
      row["rate"] = est.rate;
      row["se"] = est.se;
      row["wilson_low"] = est.wilson_low;
      row["wilson_high"] = est.wilson_high;
      out.push_back(std::move(row));
    }
    return emit_string(out.dump(), out_json);
  });
}

seclab_status seclab_laminar_bound(double p, double t,
                                   seclab_bound_report* out,
                                   char** diagnostic) {
  return guarded(
      [&] { return finish_bound(seclab::laminar_bound(p, t), out, diagnostic); });
}

seclab_status seclab_intersection_bound(uint64_t k, double c,
                                        seclab_bound_report* out,
                                        char** diagnostic) {
  return guarded([&] {
    return finish_bound(seclab::intersection_bound(k, c), out, diagnostic);
  });
}

seclab_status seclab_transversal_bound(double p, double t,
                                       seclab_bound_report* out,
                                       char** diagnostic) {
  return guarded([&] {
    return finish_bound(seclab::transversal_bound(p, t), out, diagnostic);
  });
}

seclab_status seclab_linear_laminar_bound(double p, seclab_bound_report* out,
                                          char** diagnostic) {
  return guarded([&] {
    return finish_bound(seclab::linear_laminar_bound(p), out, diagnostic);
  });
}

seclab_status seclab_verify_coupling(const seclab_instance* h, double p,
                                     int inconsistent_tie_break,
                                     seclab_coupling_report* out) {
  if (h == nullptr || out == nullptr) {
    return fail(SECLAB_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    if (h->value.edge_valued()) {
      seclab::throw_error(ErrorCode::kUnsupported,
                          "the distribution check compares the element "
                          "drivers; transversal instances are edge-valued");
    }
    seclab::CouplingOptions options;
    if (inconsistent_tie_break != 0) {
      options.simulate_tie_break = seclab::TieBreak::kLargestIndex;
    }
    const seclab::CouplingReport report =
        seclab::verify_coupling(*h->value.system, *h->value.valuation, p,
                                options);
    out->n = report.n;
    out->p = report.p;
    out->tv_distance = report.tv_distance;
    out->online_support = report.online_support;
    out->simulate_support = report.simulate_support;
    out->truncated_mass = report.truncated_mass;
    return SECLAB_OK;
  });
}

seclab_status seclab_gp(uint64_t m, uint64_t n, double p, double* out) {
  if (out == nullptr) return fail(SECLAB_INVALID_ARGUMENT, "out is null");
  return guarded([&] {
    *out = seclab::g_p(m, n, p);
    return SECLAB_OK;
  });
}

seclab_status seclab_gp_enumerated(uint64_t m, uint64_t n, double p,
                                   double* out) {
  if (out == nullptr) return fail(SECLAB_INVALID_ARGUMENT, "out is null");
  return guarded([&] {
    *out = seclab::g_p_enumerated(m, n, p);
    return SECLAB_OK;
  });
}

seclab_status seclab_gp_upper_bound(uint64_t m, uint64_t n, double p,
                                    double* out) {
  if (out == nullptr) return fail(SECLAB_INVALID_ARGUMENT, "out is null");
  return guarded([&] {
    *out = seclab::g_p_upper_bound(m, n, p);
    return SECLAB_OK;
  });
}

seclab_status seclab_prop2_bound(uint64_t mu, double p, double* out) {
  if (out == nullptr) return fail(SECLAB_INVALID_ARGUMENT, "out is null");
  return guarded([&] {
    *out = seclab::prop2_bound(mu, p);
    return SECLAB_OK;
  });
}

}  // extern "C"
