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

#include "instance.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>
#include <utility>

#include "analysis.hpp"
#include "common.hpp"
#include "rng.hpp"

namespace seclab {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void fail_parse(const std::string& message) {
  throw_error(ErrorCode::kParse, message);
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text,
                                                std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& err) {
    // err.byte is one past the offending character.
    const auto [line, column] =
        line_column(text, err.byte > 0 ? err.byte - 1 : 0);
    fail_parse("instance parse error at line " + std::to_string(line) +
               ", column " + std::to_string(column) + ": " + err.what());
  }
}

const Json& require_key(const Json& obj, const char* key,
                        const std::string& context) {
  if (!obj.is_object() || !obj.contains(key)) {
    fail_parse(context + " is missing required key \"" + key + "\"");
  }
  return obj.at(key);
}

std::size_t require_count(const Json& value, const std::string& context) {
  if (!value.is_number_unsigned()) {
    fail_parse(context + " must be a non-negative integer");
  }
  return value.get<std::size_t>();
}

double require_number(const Json& value, const std::string& context) {
  if (!value.is_number()) {
    fail_parse(context + " must be a number");
  }
  return value.get<double>();
}

std::string require_string(const Json& value, const std::string& context) {
  if (!value.is_string()) {
    fail_parse(context + " must be a string");
  }
  return value.get<std::string>();
}

const Json& require_array(const Json& value, const std::string& context) {
  if (!value.is_array()) {
    fail_parse(context + " must be an array");
  }
  return value;
}

struct RawConstraint {
  std::vector<std::size_t> members;
  std::size_t capacity = 0;
};

struct RawInstance {
  std::string name;
  std::string kind;
  std::size_t n = 0;
  std::size_t capacity = 0;                          // uniform
  std::vector<RawConstraint> blocks;                 // partition
  std::vector<RawConstraint> constraints;            // laminar
  std::vector<std::vector<RawConstraint>> matroids;  // intersection
  std::size_t n_right = 0;                           // transversal
  std::vector<BipartiteGraph::Edge> edges;           // transversal
  Json valuation;
  Json metadata;
};

std::vector<RawConstraint> parse_constraint_list(const Json& array,
                                                 const std::string& context) {
  std::vector<RawConstraint> out;
  for (std::size_t i = 0; i < array.size(); ++i) {
    const std::string item = context + "[" + std::to_string(i) + "]";
    const Json& entry = array.at(i);
    RawConstraint c;
    for (const Json& member :
         require_array(require_key(entry, "members", item), item + ".members")) {
      c.members.push_back(require_count(member, item + ".members entry"));
    }
    c.capacity = require_count(require_key(entry, "capacity", item),
                               item + ".capacity");
    out.push_back(std::move(c));
  }
  return out;
}

RawInstance parse_raw(const std::string& text) {
  const Json j = parse_json(text);
  if (!j.is_object()) fail_parse("instance must be a JSON object");

  RawInstance raw;
  if (j.contains("name")) raw.name = require_string(j.at("name"), "name");
  raw.kind = require_string(require_key(j, "kind", "instance"), "kind");
  raw.n = require_count(require_key(j, "n", "instance"), "n");
  const Json& system = require_key(j, "system", "instance");

  if (raw.kind == "uniform") {
    raw.capacity = require_count(require_key(system, "capacity", "system"),
                                 "system.capacity");
  } else if (raw.kind == "partition") {
    raw.blocks = parse_constraint_list(
        require_array(require_key(system, "blocks", "system"), "system.blocks"),
        "system.blocks");
  } else if (raw.kind == "laminar") {
    raw.constraints = parse_constraint_list(
        require_array(require_key(system, "constraints", "system"),
                      "system.constraints"),
        "system.constraints");
  } else if (raw.kind == "laminar_intersection") {
    const Json& matroids =
        require_array(require_key(system, "matroids", "system"),
                      "system.matroids");
    for (std::size_t i = 0; i < matroids.size(); ++i) {
      const std::string item = "system.matroids[" + std::to_string(i) + "]";
      raw.matroids.push_back(parse_constraint_list(
          require_array(require_key(matroids.at(i), "constraints", item),
                        item + ".constraints"),
          item + ".constraints"));
    }
  } else if (raw.kind == "transversal") {
    raw.n_right = require_count(require_key(system, "n_right", "system"),
                                "system.n_right");
    const Json& edges =
        require_array(require_key(system, "edges", "system"), "system.edges");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string item = "system.edges[" + std::to_string(i) + "]";
      const Json& pair = require_array(edges.at(i), item);
      if (pair.size() != 2) fail_parse(item + " must be a [left, right] pair");
      raw.edges.push_back({require_count(pair.at(0), item + " left"),
                           require_count(pair.at(1), item + " right")});
    }
  } else {
    fail_parse("unknown instance kind \"" + raw.kind + "\"");
  }

  raw.valuation = require_key(j, "valuation", "instance");
  if (!raw.valuation.is_object()) fail_parse("valuation must be an object");
  if (j.contains("metadata")) raw.metadata = j.at("metadata");
  return raw;
}

ElementSet to_set(const std::vector<std::size_t>& members, std::size_t n,
                  const std::string& context) {
  ElementSet s(n);
  for (std::size_t e : members) {
    if (e >= n) {
      fail_parse(context + " references element " + std::to_string(e) +
                 " outside the ground set of size " + std::to_string(n));
    }
    if (s.contains(e)) {
      fail_parse(context + " lists element " + std::to_string(e) + " twice");
    }
    s.insert(e);
  }
  return s;
}

std::vector<CapacityConstraint> to_constraints(
    const std::vector<RawConstraint>& raw, std::size_t n,
    const std::string& context) {
  std::vector<CapacityConstraint> out;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    out.push_back({to_set(raw[i].members, n,
                          context + "[" + std::to_string(i) + "].members"),
                   raw[i].capacity});
  }
  return out;
}

std::shared_ptr<const ValuationOracle> build_valuation(
    const Json& v, std::size_t ground,
    const std::shared_ptr<const BipartiteGraph>& graph) {
  const std::string kind =
      require_string(require_key(v, "kind", "valuation"), "valuation.kind");
  if (kind == "linear") {
    std::vector<double> weights;
    for (const Json& w : require_array(require_key(v, "weights", "valuation"),
                                       "valuation.weights")) {
      weights.push_back(require_number(w, "valuation.weights entry"));
    }
    if (weights.size() != ground) {
      fail_parse("valuation.weights has " + std::to_string(weights.size()) +
                 " entries for a ground set of size " + std::to_string(ground));
    }
    return std::make_shared<LinearValuation>(std::move(weights));
  }
  if (kind == "coverage") {
    std::vector<double> item_weights;
    for (const Json& w :
         require_array(require_key(v, "item_weights", "valuation"),
                       "valuation.item_weights")) {
      item_weights.push_back(require_number(w, "valuation.item_weights entry"));
    }
    std::vector<std::vector<std::size_t>> covers;
    for (const Json& cover : require_array(
             require_key(v, "covers", "valuation"), "valuation.covers")) {
      std::vector<std::size_t> items;
      for (const Json& item : require_array(cover, "valuation.covers entry")) {
        items.push_back(require_count(item, "valuation.covers item"));
      }
      covers.push_back(std::move(items));
    }
    if (covers.size() != ground) {
      fail_parse("valuation.covers has " + std::to_string(covers.size()) +
                 " entries for a ground set of size " + std::to_string(ground));
    }
    return std::make_shared<CoverageValuation>(std::move(item_weights),
                                               std::move(covers));
  }
  if (kind == "edge_lifted") {
    if (graph == nullptr) {
      fail_parse("edge_lifted valuations need a transversal instance");
    }
    auto base = build_valuation(require_key(v, "base", "valuation"),
                                graph->n_left(), nullptr);
    return std::make_shared<EdgeLiftedValuation>(std::move(base), graph);
  }
  fail_parse("unknown valuation kind \"" + kind + "\"");
}

Instance build_instance(const RawInstance& raw) {
  Instance instance;
  instance.name = raw.name;
  instance.metadata = raw.metadata;

  std::size_t valuation_ground = raw.n;
  if (raw.kind == "uniform") {
    instance.system = std::make_shared<UniformMatroid>(raw.n, raw.capacity);
  } else if (raw.kind == "partition") {
    instance.system = std::make_shared<PartitionMatroid>(
        raw.n, to_constraints(raw.blocks, raw.n, "system.blocks"));
  } else if (raw.kind == "laminar") {
    instance.system = std::make_shared<LaminarMatroid>(
        raw.n, to_constraints(raw.constraints, raw.n, "system.constraints"));
  } else if (raw.kind == "laminar_intersection") {
    std::vector<LaminarMatroid> matroids;
    for (std::size_t i = 0; i < raw.matroids.size(); ++i) {
      matroids.emplace_back(
          raw.n, to_constraints(raw.matroids[i], raw.n,
                                "system.matroids[" + std::to_string(i) +
                                    "].constraints"));
    }
    instance.system =
        std::make_shared<LaminarIntersection>(std::move(matroids));
  } else if (raw.kind == "transversal") {
    instance.graph =
        std::make_shared<BipartiteGraph>(raw.n, raw.n_right, raw.edges);
    instance.system = std::make_shared<TransversalMatroid>(*instance.graph);
    // Transversal valuations always live on the edges; the matching
    // drivers consume edge oracles.
    valuation_ground = instance.graph->edge_count();
  }
  instance.valuation =
      build_valuation(raw.valuation, valuation_ground, instance.graph);
  return instance;
}

bool lex_less_members(const std::vector<std::size_t>& a,
                      const std::vector<std::size_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Json constraints_to_json(const std::vector<CapacityConstraint>& constraints) {
  std::vector<std::pair<std::vector<std::size_t>, std::size_t>> rows;
  for (const CapacityConstraint& c : constraints) {
    rows.emplace_back(c.members.elements(), c.capacity);
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    return lex_less_members(a.first, b.first);
  });
  Json out = Json::array();
  for (const auto& [members, capacity] : rows) {
    Json entry;
    entry["members"] = members;
    entry["capacity"] = capacity;
    out.push_back(std::move(entry));
  }
  return out;
}

// edge_order, when set, remaps ground-indexed arrays so that output slot i
// describes original element edge_order[i]. Used when the edge list is
// emitted in sorted order: per-edge values must follow the same permutation.
Json valuation_to_json(const ValuationOracle& oracle,
                       const std::vector<std::size_t>* edge_order = nullptr) {
  Json out;
  if (const auto* linear = dynamic_cast<const LinearValuation*>(&oracle)) {
    out["kind"] = "linear";
    const std::vector<double>& raw = linear->weights();
    Json weights = Json::array();
    for (std::size_t i = 0; i < raw.size(); ++i) {
      weights.push_back(edge_order ? raw[(*edge_order)[i]] : raw[i]);
    }
    out["weights"] = std::move(weights);
    return out;
  }
  if (const auto* coverage = dynamic_cast<const CoverageValuation*>(&oracle)) {
    out["kind"] = "coverage";
    Json item_weights = Json::array();
    for (double w : coverage->item_weights()) item_weights.push_back(w);
    out["item_weights"] = std::move(item_weights);
    const auto& raw_covers = coverage->covers();
    Json covers = Json::array();
    for (std::size_t i = 0; i < raw_covers.size(); ++i) {
      std::vector<std::size_t> sorted =
          edge_order ? raw_covers[(*edge_order)[i]] : raw_covers[i];
      std::sort(sorted.begin(), sorted.end());
      covers.push_back(sorted);
    }
    out["covers"] = std::move(covers);
    return out;
  }
  if (const auto* lifted = dynamic_cast<const EdgeLiftedValuation*>(&oracle)) {
    // The base oracle lives on left nodes, which keep their ids.
    out["kind"] = "edge_lifted";
    out["base"] = valuation_to_json(lifted->base());
    return out;
  }
  throw_error(ErrorCode::kUnsupported,
              "valuation type has no serialization: " + oracle.describe());
}

}  // namespace

Instance parse_instance(const std::string& text) {
  return build_instance(parse_raw(text));
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw_error(ErrorCode::kIo, "cannot open instance file " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_instance(buffer.str());
  } catch (const Error& err) {
    throw_error(err.code(), path + ": " + err.what());
  }
}

std::string serialize_instance(const Instance& instance) {
  Json j;
  if (!instance.name.empty()) j["name"] = instance.name;
  j["kind"] = system_kind_name(instance.kind());

  Json system;
  std::vector<std::size_t> edge_order;
  switch (instance.kind()) {
    case SystemKind::kUniform: {
      const auto& m = static_cast<const UniformMatroid&>(*instance.system);
      j["n"] = m.ground_size();
      system["capacity"] = m.capacity();
      break;
    }
    case SystemKind::kPartition: {
      const auto& m = static_cast<const PartitionMatroid&>(*instance.system);
      j["n"] = m.ground_size();
      system["blocks"] = constraints_to_json(m.blocks());
      break;
    }
    case SystemKind::kLaminar: {
      const auto& m = static_cast<const LaminarMatroid&>(*instance.system);
      j["n"] = m.ground_size();
      system["constraints"] = constraints_to_json(m.constraints());
      break;
    }
    case SystemKind::kLaminarIntersection: {
      const auto& m =
          static_cast<const LaminarIntersection&>(*instance.system);
      j["n"] = m.ground_size();
      Json matroids = Json::array();
      for (const LaminarMatroid& member : m.matroids()) {
        Json entry;
        entry["constraints"] = constraints_to_json(member.constraints());
        matroids.push_back(std::move(entry));
      }
      system["matroids"] = std::move(matroids);
      break;
    }
    case SystemKind::kTransversal: {
      const BipartiteGraph& graph = *instance.graph;
      j["n"] = graph.n_left();
      system["n_right"] = graph.n_right();
      edge_order.resize(graph.edge_count());
      std::iota(edge_order.begin(), edge_order.end(), std::size_t{0});
      std::stable_sort(edge_order.begin(), edge_order.end(),
                       [&graph](std::size_t a, std::size_t b) {
                         const auto& ea = graph.edge(a);
                         const auto& eb = graph.edge(b);
                         return std::tie(ea.left, ea.right) <
                                std::tie(eb.left, eb.right);
                       });
      Json edge_array = Json::array();
      for (std::size_t e : edge_order) {
        edge_array.push_back(
            Json::array({graph.edge(e).left, graph.edge(e).right}));
      }
      system["edges"] = std::move(edge_array);
      break;
    }
  }
  j["system"] = std::move(system);
  j["valuation"] = valuation_to_json(
      *instance.valuation, edge_order.empty() ? nullptr : &edge_order);
  if (!instance.metadata.is_null() && !instance.metadata.empty()) {
    j["metadata"] = instance.metadata;
  }
  return j.dump(2) + "\n";
}

void save_instance(const Instance& instance, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw_error(ErrorCode::kIo, "cannot write instance file " + path);
  }
  out << serialize_instance(instance);
  if (!out) {
    throw_error(ErrorCode::kIo, "failed while writing " + path);
  }
}

namespace {

void check_laminar_family(const std::vector<RawConstraint>& raw, std::size_t n,
                          const std::string& label,
                          std::vector<ValidationEntry>& entries) {
  ValidationEntry entry{label, false, ""};
  try {
    const auto constraints = to_constraints(raw, n, label);
    if (auto violation = validate_laminar(constraints)) {
      entry.detail = violation->message;
    } else {
      entry.pass = true;
    }
  } catch (const Error& err) {
    entry.detail = err.what();
  }
  entries.push_back(std::move(entry));
}

}  // namespace

ValidationReport validate_instance_text(const std::string& text) {
  const RawInstance raw = parse_raw(text);
  ValidationReport report;

  if (raw.kind == "laminar") {
    check_laminar_family(raw.constraints, raw.n, "laminar-family",
                         report.entries);
  } else if (raw.kind == "laminar_intersection") {
    if (raw.matroids.empty()) {
      report.entries.push_back(
          {"laminar-family", false, "intersection lists no matroids"});
    }
    for (std::size_t i = 0; i < raw.matroids.size(); ++i) {
      check_laminar_family(raw.matroids[i], raw.n,
                           "laminar-family[" + std::to_string(i) + "]",
                           report.entries);
    }
  } else if (raw.kind == "partition") {
    ValidationEntry entry{"partition-blocks", false, ""};
    try {
      PartitionMatroid probe(raw.n,
                             to_constraints(raw.blocks, raw.n, "system.blocks"));
      entry.pass = true;
    } catch (const Error& err) {
      entry.detail = err.what();
    }
    report.entries.push_back(std::move(entry));
  } else if (raw.kind == "transversal") {
    ValidationEntry entry{"graph", false, ""};
    try {
      BipartiteGraph probe(raw.n, raw.n_right, raw.edges);
      entry.pass = true;
    } catch (const Error& err) {
      entry.detail = err.what();
    }
    report.entries.push_back(std::move(entry));
  }

  Instance instance;
  {
    ValidationEntry entry{"construct", false, ""};
    try {
      instance = build_instance(raw);
      entry.pass = true;
    } catch (const Error& err) {
      entry.detail = err.what();
      report.entries.push_back(std::move(entry));
      return report;  // nothing further is checkable
    }
    report.entries.push_back(std::move(entry));
  }

  {
    ValidationEntry entry{"submodularity", true, ""};
    const std::size_t ground = instance.valuation->ground_size();
    if (ground <= limits::kMaxValidator) {
      if (auto counterexample = verify_monotone_submodular(*instance.valuation)) {
        entry.pass = false;
        entry.detail = counterexample->message;
      } else {
        entry.detail = "exhaustive check passed";
      }
    } else {
      entry.detail =
          "skipped (ground size above the exhaustive validator cap)";
    }
    report.entries.push_back(std::move(entry));
  }

  if (!instance.metadata.is_null() && instance.metadata.contains("expected_opt")) {
    ValidationEntry entry{"expected-opt", false, ""};
    try {
      const double expected = instance.metadata.at("expected_opt").get<double>();
      const double actual =
          instance.edge_valued()
              ? brute_force_opt_matching(*instance.graph, *instance.valuation)
                    .value
              : brute_force_opt(*instance.system, *instance.valuation).value;
      if (std::abs(expected - actual) <= 1e-9) {
        entry.pass = true;
        entry.detail = "recomputed optimum matches";
      } else {
        entry.detail = "committed optimum " + std::to_string(expected) +
                       " but recomputed " + std::to_string(actual);
      }
    } catch (const Error& err) {
      entry.detail = err.what();
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

namespace {

double money(Rng& rng) {
  // Two-decimal weights in [0.50, 2.00): compact in JSON, exact in double.
  return static_cast<double>(50 + rng.below(150)) / 100.0;
}

std::vector<double> random_weights(Rng& rng, std::size_t n) {
  std::vector<double> weights(n);
  for (double& w : weights) w = money(rng);
  return weights;
}

std::shared_ptr<const CoverageValuation> random_coverage(Rng& rng,
                                                         std::size_t n) {
  const std::size_t items = n + rng.below(n + 1);
  std::vector<double> item_weights(items);
  for (double& w : item_weights) w = money(rng);
  std::vector<std::vector<std::size_t>> covers(n);
  for (auto& cover : covers) {
    std::set<std::size_t> picked;
    const std::size_t want = 1 + rng.below(3);
    while (picked.size() < want) picked.insert(rng.below(items));
    cover.assign(picked.begin(), picked.end());
  }
  return std::make_shared<CoverageValuation>(std::move(item_weights),
                                             std::move(covers));
}

// Recursive contiguous split; emits a constraint for [lo, hi) when its
// capacity can still bind, keeping capacities strictly above everything
// emitted beneath it. Returns the largest capacity emitted in the subtree.
std::size_t grow_laminar(Rng& rng, std::size_t lo, std::size_t hi,
                         std::size_t depth, std::size_t n,
                         std::vector<CapacityConstraint>& out) {
  const std::size_t size = hi - lo;
  std::size_t below_cap = 0;
  if (depth > 0 && size >= 4) {
    const std::size_t parts = std::min<std::size_t>(2 + rng.below(2), size / 2);
    std::size_t start = lo;
    for (std::size_t part = 0; part < parts; ++part) {
      const std::size_t remaining_parts = parts - part - 1;
      const std::size_t max_take = (hi - start) - 2 * remaining_parts;
      const std::size_t take =
          remaining_parts == 0 ? (hi - start)
                               : 2 + rng.below(std::max<std::size_t>(
                                         1, max_take - 1));
      below_cap = std::max(
          below_cap, grow_laminar(rng, start, start + take, depth - 1, n, out));
      start += take;
    }
  }
  const std::size_t capacity = below_cap + 1 + rng.below(2);
  if (capacity < size) {
    ElementSet members(n);
    for (std::size_t e = lo; e < hi; ++e) members.insert(e);
    out.push_back({members, capacity});
    return capacity;
  }
  return below_cap;
}

std::vector<CapacityConstraint> random_laminar_family(Rng& rng, std::size_t n,
                                                      std::size_t depth) {
  std::vector<CapacityConstraint> constraints;
  grow_laminar(rng, 0, n, depth, n, constraints);
  if (constraints.empty()) {
    // Degenerate split: fall back to one binding root constraint.
    constraints.push_back({ElementSet::full(n), std::max<std::size_t>(1, n / 2)});
  }
  return constraints;
}

}  // namespace

Instance generate_instance(const GeneratorRequest& request) {
  if (request.n == 0 || request.n > limits::kMaxGroundSize) {
    throw_error(ErrorCode::kInvalidArgument,
                "ground size " + std::to_string(request.n) + " out of range");
  }
  Rng rng(derive_seed(request.seed, 0x67656e65ULL));

  Instance instance;
  Json generator;
  generator["kind"] = request.kind;
  generator["n"] = request.n;
  generator["seed"] = request.seed;
  generator["valuation"] = request.valuation;

  const bool lifted = request.valuation.rfind("lifted-", 0) == 0;
  if (request.kind == "transversal") {
    if (request.n_right == 0) {
      throw_error(ErrorCode::kInvalidArgument,
                  "transversal instances need n_right >= 1");
    }
    if (!(request.density > 0.0 && request.density <= 1.0)) {
      throw_error(ErrorCode::kInvalidArgument,
                  "edge density must lie in (0, 1]");
    }
    generator["n_right"] = request.n_right;
    generator["density"] = request.density;
    std::vector<BipartiteGraph::Edge> edges;
    for (std::size_t l = 0; l < request.n; ++l) {
      const std::size_t before = edges.size();
      for (std::size_t r = 0; r < request.n_right; ++r) {
        if (rng.next_double() < request.density) edges.push_back({l, r});
      }
      if (edges.size() == before) {
        edges.push_back({l, rng.below(request.n_right)});
      }
    }
    instance.graph = std::make_shared<BipartiteGraph>(
        request.n, request.n_right, edges);
    instance.system = std::make_shared<TransversalMatroid>(*instance.graph);
    const std::size_t edge_count = instance.graph->edge_count();
    if (request.valuation == "linear") {
      instance.valuation =
          std::make_shared<LinearValuation>(random_weights(rng, edge_count));
    } else if (request.valuation == "coverage") {
      instance.valuation = random_coverage(rng, edge_count);
    } else if (request.valuation == "lifted-linear") {
      instance.valuation = std::make_shared<EdgeLiftedValuation>(
          std::make_shared<LinearValuation>(random_weights(rng, request.n)),
          instance.graph);
    } else if (request.valuation == "lifted-coverage") {
      instance.valuation = std::make_shared<EdgeLiftedValuation>(
          random_coverage(rng, request.n), instance.graph);
    } else {
      throw_error(ErrorCode::kInvalidArgument,
                  "unknown valuation \"" + request.valuation + "\"");
    }
  } else {
    if (lifted) {
      throw_error(ErrorCode::kInvalidArgument,
                  "lifted valuations only fit transversal instances");
    }
    if (request.kind == "uniform") {
      if (request.capacity == 0) {
        throw_error(ErrorCode::kInvalidArgument,
                    "uniform instances need capacity >= 1");
      }
      generator["capacity"] = request.capacity;
      instance.system =
          std::make_shared<UniformMatroid>(request.n, request.capacity);
    } else if (request.kind == "partition") {
      const std::size_t blocks =
          std::max<std::size_t>(1, std::min(request.blocks, request.n));
      generator["blocks"] = blocks;
      std::vector<CapacityConstraint> block_list;
      std::size_t start = 0;
      for (std::size_t b = 0; b < blocks; ++b) {
        const std::size_t remaining_blocks = blocks - b - 1;
        const std::size_t max_take = (request.n - start) - remaining_blocks;
        const std::size_t take =
            remaining_blocks == 0
                ? (request.n - start)
                : 1 + rng.below(std::max<std::size_t>(1, max_take));
        ElementSet members(request.n);
        for (std::size_t e = start; e < start + take; ++e) members.insert(e);
        block_list.push_back(
            {members, 1 + rng.below(std::max<std::size_t>(1, take))});
        start += take;
      }
      instance.system =
          std::make_shared<PartitionMatroid>(request.n, std::move(block_list));
    } else if (request.kind == "laminar") {
      generator["depth"] = request.depth;
      instance.system = std::make_shared<LaminarMatroid>(
          request.n, random_laminar_family(rng, request.n, request.depth));
    } else if (request.kind == "laminar_intersection") {
      if (request.k == 0) {
        throw_error(ErrorCode::kInvalidArgument,
                    "intersections need k >= 1 matroids");
      }
      generator["k"] = request.k;
      generator["depth"] = request.depth;
      std::vector<LaminarMatroid> matroids;
      for (std::size_t i = 0; i < request.k; ++i) {
        matroids.emplace_back(
            request.n, random_laminar_family(rng, request.n, request.depth));
      }
      instance.system =
          std::make_shared<LaminarIntersection>(std::move(matroids));
    } else {
      throw_error(ErrorCode::kInvalidArgument,
                  "unknown instance kind \"" + request.kind + "\"");
    }
    if (request.valuation == "linear") {
      instance.valuation =
          std::make_shared<LinearValuation>(random_weights(rng, request.n));
    } else if (request.valuation == "coverage") {
      instance.valuation = random_coverage(rng, request.n);
    } else {
      throw_error(ErrorCode::kInvalidArgument,
                  "unknown valuation \"" + request.valuation + "\"");
    }
  }

  instance.name = request.kind + "-n" + std::to_string(request.n) + "-s" +
                  std::to_string(request.seed);
  instance.metadata = Json::object();
  instance.metadata["generator"] = std::move(generator);

  if (instance.edge_valued()) {
    if (instance.graph->edge_count() <= limits::kMaxMatchingBruteForce) {
      instance.metadata["expected_opt"] =
          brute_force_opt_matching(*instance.graph, *instance.valuation).value;
    }
  } else if (instance.ground_size() <= limits::kMaxBruteForce) {
    instance.metadata["expected_opt"] =
        brute_force_opt(*instance.system, *instance.valuation).value;
  }
  return instance;
}

}  // namespace seclab
