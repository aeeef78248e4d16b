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

#include "core/instance.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

#include "core/common.hpp"
#include "core/element_set.hpp"
#include "core/valuations.hpp"
#include "doctest.h"

using seclab::ElementSet;
using seclab::Error;
using seclab::ErrorCode;
using seclab::GeneratorRequest;
using seclab::Instance;
using seclab::SystemKind;
using seclab::ValidationReport;

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

void expect_parse_error(const std::string& text, const std::string& needle) {
  try {
    seclab::parse_instance(text);
    FAIL_CHECK("no error for: " << text);
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::kParse);
    const std::string what = err.what();
    CAPTURE(what);
    CHECK(what.find(needle) != std::string::npos);
  }
}

}  // namespace

TEST_CASE("parse builds a uniform instance") {
  const Instance inst = seclab::parse_instance(R"({
    "kind": "uniform",
    "n": 3,
    "system": {"capacity": 2},
    "valuation": {"kind": "linear", "weights": [3, 2, 1]}
  })");
  CHECK(inst.kind() == SystemKind::kUniform);
  CHECK(inst.ground_size() == 3);
  CHECK(inst.name.empty());
  CHECK(inst.graph == nullptr);
  CHECK_FALSE(inst.edge_valued());
  CHECK(inst.system->is_independent(ElementSet(3, {0, 1})));
  CHECK_FALSE(inst.system->is_independent(ElementSet(3, {0, 1, 2})));
  CHECK(inst.valuation->eval(ElementSet(3, {0})) == doctest::Approx(3.0));
  CHECK(inst.metadata.is_null());
}

TEST_CASE("parse builds a partition instance") {
  const Instance inst = seclab::parse_instance(R"({
    "kind": "partition",
    "n": 3,
    "system": {"blocks": [
      {"members": [0, 1], "capacity": 1},
      {"members": [2], "capacity": 1}
    ]},
    "valuation": {"kind": "linear", "weights": [1, 1, 1]}
  })");
  CHECK(inst.kind() == SystemKind::kPartition);
  CHECK(inst.system->is_independent(ElementSet(3, {0, 2})));
  CHECK_FALSE(inst.system->is_independent(ElementSet(3, {0, 1})));
}

TEST_CASE("parse builds a laminar instance") {
  const Instance inst = seclab::parse_instance(R"({
    "kind": "laminar",
    "n": 4,
    "system": {"constraints": [
      {"members": [0, 1, 2, 3], "capacity": 2},
      {"members": [0, 1], "capacity": 1}
    ]},
    "valuation": {"kind": "linear", "weights": [4, 3, 2, 1]}
  })");
  CHECK(inst.kind() == SystemKind::kLaminar);
  CHECK(inst.system->is_independent(ElementSet(4, {0, 2})));
  CHECK_FALSE(inst.system->is_independent(ElementSet(4, {0, 1})));
  CHECK_FALSE(inst.system->is_independent(ElementSet(4, {0, 2, 3})));
}

TEST_CASE("parse builds a laminar intersection instance") {
  const Instance inst = seclab::parse_instance(R"({
    "kind": "laminar_intersection",
    "n": 3,
    "system": {"matroids": [
      {"constraints": [{"members": [0, 1], "capacity": 1}]},
      {"constraints": [{"members": [1, 2], "capacity": 1}]}
    ]},
    "valuation": {"kind": "linear", "weights": [1, 2, 3]}
  })");
  CHECK(inst.kind() == SystemKind::kLaminarIntersection);
  CHECK(inst.system->is_independent(ElementSet(3, {0, 2})));
  CHECK_FALSE(inst.system->is_independent(ElementSet(3, {0, 1})));
  CHECK_FALSE(inst.system->is_independent(ElementSet(3, {1, 2})));
}

TEST_CASE("parse builds a transversal instance with edge weights") {
  const Instance inst = seclab::parse_instance(R"({
    "kind": "transversal",
    "n": 2,
    "system": {"n_right": 2, "edges": [[0, 0], [0, 1], [1, 1]]},
    "valuation": {"kind": "linear", "weights": [5, 1, 4]}
  })");
  CHECK(inst.kind() == SystemKind::kTransversal);
  REQUIRE(inst.graph != nullptr);
  CHECK(inst.graph->n_left() == 2);
  CHECK(inst.graph->n_right() == 2);
  CHECK(inst.graph->edge_count() == 3);
  CHECK(inst.edge_valued());
  // The matroid lives on left nodes; the valuation lives on the edges.
  CHECK(inst.system->ground_size() == 2);
  CHECK(inst.system->is_independent(ElementSet(2, {0, 1})));
  CHECK(inst.valuation->ground_size() == 3);
  CHECK(inst.valuation->eval(ElementSet(3, {0})) == doctest::Approx(5.0));
}

TEST_CASE("parse keeps name and metadata verbatim") {
  const Instance inst = seclab::parse_instance(R"({
    "name": "toy",
    "kind": "uniform",
    "n": 2,
    "system": {"capacity": 1},
    "valuation": {"kind": "linear", "weights": [2, 1]},
    "metadata": {"expected_opt": 2.0, "note": "hand built"}
  })");
  CHECK(inst.name == "toy");
  REQUIRE_FALSE(inst.metadata.is_null());
  CHECK(inst.metadata.at("expected_opt").get<double>() == doctest::Approx(2.0));
  CHECK(inst.metadata.at("note").get<std::string>() == "hand built");
  const std::string out = seclab::serialize_instance(inst);
  CHECK(out.find("\"name\": \"toy\"") != std::string::npos);
  CHECK(out.find("\"note\": \"hand built\"") != std::string::npos);
}

TEST_CASE("parse reports malformed json with line and column") {
  expect_parse_error("{", "instance parse error at line 1, column");
  expect_parse_error("{\n  \"kind\": }", "line 2, column");
}

TEST_CASE("parse rejects structural schema violations") {
  expect_parse_error("[]", "instance must be a JSON object");
  expect_parse_error("{}", "instance is missing required key \"kind\"");
  expect_parse_error(R"({"kind": "uniform"})",
                     "instance is missing required key \"n\"");
  expect_parse_error(R"({"kind": "uniform", "n": 2})",
                     "instance is missing required key \"system\"");
  expect_parse_error(R"({"kind": "uniform", "n": 2, "system": {}})",
                     "system is missing required key \"capacity\"");
  expect_parse_error(
      R"({"kind": "uniform", "n": 2, "system": {"capacity": 1}})",
      "instance is missing required key \"valuation\"");
  expect_parse_error(
      R"({"kind": "uniform", "n": -3, "system": {"capacity": 1},
          "valuation": {"kind": "linear", "weights": []}})",
      "n must be a non-negative integer");
  expect_parse_error(
      R"({"kind": "uniform", "n": 2.5, "system": {"capacity": 1},
          "valuation": {"kind": "linear", "weights": []}})",
      "n must be a non-negative integer");
  expect_parse_error(
      R"({"kind": "mystery", "n": 2, "system": {},
          "valuation": {"kind": "linear", "weights": [1, 1]}})",
      "unknown instance kind \"mystery\"");
  expect_parse_error(
      R"({"kind": "uniform", "n": 2, "system": {"capacity": 1},
          "valuation": 5})",
      "valuation must be an object");
}

TEST_CASE("parse rejects bad constraint and edge entries") {
  expect_parse_error(
      R"({"kind": "laminar", "n": 3,
          "system": {"constraints": [{"members": [7], "capacity": 1}]},
          "valuation": {"kind": "linear", "weights": [1, 1, 1]}})",
      "references element 7 outside the ground set of size 3");
  expect_parse_error(
      R"({"kind": "laminar", "n": 3,
          "system": {"constraints": [{"members": [1, 1], "capacity": 1}]},
          "valuation": {"kind": "linear", "weights": [1, 1, 1]}})",
      "lists element 1 twice");
  expect_parse_error(
      R"({"kind": "partition", "n": 2,
          "system": {"blocks": [{"members": [0, 1]}]},
          "valuation": {"kind": "linear", "weights": [1, 1]}})",
      "system.blocks[0] is missing required key \"capacity\"");
  expect_parse_error(
      R"({"kind": "transversal", "n": 2,
          "system": {"n_right": 2, "edges": [[0, 1, 2]]},
          "valuation": {"kind": "linear", "weights": [1]}})",
      "system.edges[0] must be a [left, right] pair");
}

TEST_CASE("parse rejects bad valuations") {
  expect_parse_error(
      R"({"kind": "uniform", "n": 3, "system": {"capacity": 1},
          "valuation": {"kind": "linear", "weights": [1, 2]}})",
      "valuation.weights has 2 entries for a ground set of size 3");
  expect_parse_error(
      R"({"kind": "uniform", "n": 2, "system": {"capacity": 1},
          "valuation": {"kind": "coverage", "item_weights": [1],
                        "covers": [[0]]}})",
      "valuation.covers has 1 entries for a ground set of size 2");
  expect_parse_error(
      R"({"kind": "uniform", "n": 2, "system": {"capacity": 1},
          "valuation": {"kind": "mystery"}})",
      "unknown valuation kind \"mystery\"");
  expect_parse_error(
      R"({"kind": "uniform", "n": 2, "system": {"capacity": 1},
          "valuation": {"kind": "edge_lifted",
                        "base": {"kind": "linear", "weights": [1, 1]}}})",
      "edge_lifted valuations need a transversal instance");
}

TEST_CASE("parse propagates constructor failures with their own codes") {
  // Crossing laminar constraints fail in the matroid constructor, not the
  // JSON layer.
  CHECK(code_of([] {
          seclab::parse_instance(R"({
            "kind": "laminar", "n": 4,
            "system": {"constraints": [
              {"members": [0, 1, 2], "capacity": 2},
              {"members": [2, 3], "capacity": 1}
            ]},
            "valuation": {"kind": "linear", "weights": [1, 1, 1, 1]}
          })");
        }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] {
          seclab::parse_instance(R"({
            "kind": "transversal", "n": 2,
            "system": {"n_right": 2, "edges": [[0, 5]]},
            "valuation": {"kind": "linear", "weights": [1]}
          })");
        }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("serialize emits a canonical constraint order") {
  const Instance inst = seclab::parse_instance(R"({
    "kind": "laminar",
    "n": 4,
    "system": {"constraints": [
      {"members": [2, 0, 1, 3], "capacity": 2},
      {"members": [1, 0], "capacity": 1}
    ]},
    "valuation": {"kind": "linear", "weights": [1, 1, 1, 1]}
  })");
  const std::string out = seclab::serialize_instance(inst);
  const std::size_t small = out.find("[\n          0,\n          1\n        ]");
  const std::size_t big = out.find(
      "[\n          0,\n          1,\n          2,\n          3\n        ]");
  // Members are sorted ascending and constraints by (size, lexicographic).
  REQUIRE(small != std::string::npos);
  REQUIRE(big != std::string::npos);
  CHECK(small < big);
}

TEST_CASE("serialize then parse is a byte fixed point for every kind") {
  const std::vector<std::string> texts = {
      R"({"kind": "uniform", "n": 3, "system": {"capacity": 2},
          "valuation": {"kind": "linear", "weights": [3, 2, 1]}})",
      R"({"kind": "partition", "n": 3,
          "system": {"blocks": [{"members": [1, 0], "capacity": 1},
                                {"members": [2], "capacity": 1}]},
          "valuation": {"kind": "coverage", "item_weights": [1.5, 2.5],
                        "covers": [[1, 0], [0], [1]]}})",
      R"({"kind": "laminar", "n": 4,
          "system": {"constraints": [{"members": [3, 2, 1, 0], "capacity": 2},
                                     {"members": [1, 0], "capacity": 1}]},
          "valuation": {"kind": "linear", "weights": [4, 3, 2, 1]}})",
      R"({"kind": "laminar_intersection", "n": 3,
          "system": {"matroids": [
            {"constraints": [{"members": [0, 1], "capacity": 1}]},
            {"constraints": [{"members": [1, 2], "capacity": 1}]}
          ]},
          "valuation": {"kind": "linear", "weights": [1, 2, 3]}})",
      R"({"name": "pair", "kind": "transversal", "n": 2,
          "system": {"n_right": 2, "edges": [[1, 1], [0, 1], [0, 0]]},
          "valuation": {"kind": "linear", "weights": [7, 2, 5]},
          "metadata": {"expected_opt": 9.0}})",
  };
  for (const std::string& text : texts) {
    CAPTURE(text);
    const std::string once =
        seclab::serialize_instance(seclab::parse_instance(text));
    const std::string twice =
        seclab::serialize_instance(seclab::parse_instance(once));
    CHECK(once == twice);
  }
}

TEST_CASE("serialize keeps edge weights attached to their edges") {
  // Edges arrive unsorted; the canonical form sorts them, so the weight
  // array must be permuted alongside or values silently swap edges.
  const Instance first = seclab::parse_instance(R"({
    "kind": "transversal", "n": 2,
    "system": {"n_right": 2, "edges": [[1, 1], [0, 1], [0, 0]]},
    "valuation": {"kind": "linear", "weights": [7, 2, 5]}
  })");
  const Instance second =
      seclab::parse_instance(seclab::serialize_instance(first));

  const auto weight_of = [](const Instance& inst, std::size_t left,
                            std::size_t right) {
    for (std::size_t e = 0; e < inst.graph->edge_count(); ++e) {
      if (inst.graph->edge(e).left == left &&
          inst.graph->edge(e).right == right) {
        return inst.valuation->eval(
            ElementSet(inst.graph->edge_count(), {e}));
      }
    }
    FAIL("edge not found");
    return 0.0;
  };
  CHECK(weight_of(first, 1, 1) == doctest::Approx(7.0));
  CHECK(weight_of(second, 1, 1) == doctest::Approx(7.0));
  CHECK(weight_of(second, 0, 1) == doctest::Approx(2.0));
  CHECK(weight_of(second, 0, 0) == doctest::Approx(5.0));
}

TEST_CASE("serialize keeps edge covers attached to their edges") {
  const Instance first = seclab::parse_instance(R"({
    "kind": "transversal", "n": 2,
    "system": {"n_right": 2, "edges": [[1, 0], [0, 0]]},
    "valuation": {"kind": "coverage", "item_weights": [10, 1],
                  "covers": [[0], [1]]}
  })");
  const Instance second =
      seclab::parse_instance(seclab::serialize_instance(first));
  // Edge (1,0) covers the weight-10 item in both copies.
  for (const Instance* inst : {&first, &second}) {
    bool found = false;
    for (std::size_t e = 0; e < inst->graph->edge_count(); ++e) {
      if (inst->graph->edge(e).left == 1) {
        found = true;
        CHECK(inst->valuation->eval(ElementSet(2, {e})) ==
              doctest::Approx(10.0));
      }
    }
    CHECK(found);
  }
}

TEST_CASE("save and load round-trip through a file") {
  const Instance inst = seclab::parse_instance(R"({
    "name": "disk",
    "kind": "uniform", "n": 3, "system": {"capacity": 1},
    "valuation": {"kind": "linear", "weights": [3, 2, 1]}
  })");
  const std::string path = "instance_io_roundtrip.json";
  seclab::save_instance(inst, path);
  const Instance back = seclab::load_instance(path);
  CHECK(seclab::serialize_instance(back) == seclab::serialize_instance(inst));
  std::remove(path.c_str());
}

TEST_CASE("load reports io and parse failures with the path") {
  try {
    seclab::load_instance("no_such_directory/missing.json");
    FAIL("expected an error");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::kIo);
    CHECK(std::string(err.what()).find("no_such_directory/missing.json") !=
          std::string::npos);
  }

  const std::string path = "instance_io_garbage.json";
  {
    std::ofstream out(path, std::ios::binary);
    out << "{ not json";
  }
  try {
    seclab::load_instance(path);
    FAIL("expected an error");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::kParse);
    const std::string what = err.what();
    CHECK(what.find(path) != std::string::npos);
    CHECK(what.find("instance parse error") != std::string::npos);
  }
  std::remove(path.c_str());
}

TEST_CASE("validate passes a sound instance and checks the committed opt") {
  const ValidationReport report = seclab::validate_instance_text(R"({
    "kind": "uniform", "n": 3, "system": {"capacity": 2},
    "valuation": {"kind": "linear", "weights": [3, 2, 1]},
    "metadata": {"expected_opt": 5.0}
  })");
  REQUIRE(report.entries.size() == 3);
  CHECK(report.entries[0].check == "construct");
  CHECK(report.entries[0].pass);
  CHECK(report.entries[1].check == "submodularity");
  CHECK(report.entries[1].pass);
  CHECK(report.entries[1].detail == "exhaustive check passed");
  CHECK(report.entries[2].check == "expected-opt");
  CHECK(report.entries[2].pass);
  CHECK(report.entries[2].detail == "recomputed optimum matches");
  CHECK(report.all_pass());
}

TEST_CASE("validate reports laminar family defects before construction") {
  const ValidationReport crossing = seclab::validate_instance_text(R"({
    "kind": "laminar", "n": 4,
    "system": {"constraints": [
      {"members": [0, 1, 2], "capacity": 2},
      {"members": [2, 3], "capacity": 1}
    ]},
    "valuation": {"kind": "linear", "weights": [1, 1, 1, 1]}
  })");
  REQUIRE(crossing.entries.size() == 2);
  CHECK(crossing.entries[0].check == "laminar-family");
  CHECK_FALSE(crossing.entries[0].pass);
  CHECK(crossing.entries[0].detail.find("cross") != std::string::npos);
  CHECK(crossing.entries[1].check == "construct");
  CHECK_FALSE(crossing.entries[1].pass);
  CHECK_FALSE(crossing.all_pass());

  const ValidationReport chain = seclab::validate_instance_text(R"({
    "kind": "laminar", "n": 4,
    "system": {"constraints": [
      {"members": [0, 1], "capacity": 1},
      {"members": [0, 1, 2], "capacity": 1}
    ]},
    "valuation": {"kind": "linear", "weights": [1, 1, 1, 1]}
  })");
  CHECK_FALSE(chain.all_pass());
  CHECK(chain.entries[0].detail.find("without a larger capacity") !=
        std::string::npos);
}

TEST_CASE("validate reports each member family of an intersection") {
  const ValidationReport report = seclab::validate_instance_text(R"({
    "kind": "laminar_intersection", "n": 4,
    "system": {"matroids": [
      {"constraints": [{"members": [0, 1], "capacity": 1}]},
      {"constraints": [{"members": [0, 1, 2], "capacity": 2},
                       {"members": [2, 3], "capacity": 1}]}
    ]},
    "valuation": {"kind": "linear", "weights": [1, 1, 1, 1]}
  })");
  REQUIRE(report.entries.size() >= 2);
  CHECK(report.entries[0].check == "laminar-family[0]");
  CHECK(report.entries[0].pass);
  CHECK(report.entries[1].check == "laminar-family[1]");
  CHECK_FALSE(report.entries[1].pass);
  CHECK_FALSE(report.all_pass());

  const ValidationReport empty = seclab::validate_instance_text(R"({
    "kind": "laminar_intersection", "n": 2,
    "system": {"matroids": []},
    "valuation": {"kind": "linear", "weights": [1, 1]}
  })");
  REQUIRE_FALSE(empty.entries.empty());
  CHECK(empty.entries[0].check == "laminar-family");
  CHECK(empty.entries[0].detail == "intersection lists no matroids");
  CHECK_FALSE(empty.all_pass());
}

TEST_CASE("validate catches a non submodular coverage valuation") {
  // A negative item weight makes marginal gain grow on a superset.
  const ValidationReport report = seclab::validate_instance_text(R"({
    "kind": "uniform", "n": 2, "system": {"capacity": 1},
    "valuation": {"kind": "coverage", "item_weights": [1, -1, 2],
                  "covers": [[0, 1], [1, 2]]}
  })");
  REQUIRE(report.entries.size() == 2);
  CHECK(report.entries[0].check == "construct");
  CHECK(report.entries[0].pass);
  CHECK(report.entries[1].check == "submodularity");
  CHECK_FALSE(report.entries[1].pass);
  CHECK(report.entries[1].detail.find("diminishing returns") !=
        std::string::npos);
  CHECK_FALSE(report.all_pass());
}

TEST_CASE("validate flags a stale committed optimum") {
  const ValidationReport report = seclab::validate_instance_text(R"({
    "kind": "uniform", "n": 3, "system": {"capacity": 2},
    "valuation": {"kind": "linear", "weights": [3, 2, 1]},
    "metadata": {"expected_opt": 4.75}
  })");
  REQUIRE(report.entries.size() == 3);
  CHECK(report.entries[2].check == "expected-opt");
  CHECK_FALSE(report.entries[2].pass);
  CHECK(report.entries[2].detail.find("committed optimum") !=
        std::string::npos);
  CHECK(report.entries[2].detail.find("but recomputed") != std::string::npos);
  CHECK_FALSE(report.all_pass());
}

TEST_CASE("validate skips the exhaustive check above the cap") {
  std::string weights = "[1";
  for (int i = 1; i < 13; ++i) weights += ", 1";
  weights += "]";
  const ValidationReport report = seclab::validate_instance_text(
      R"({"kind": "uniform", "n": 13, "system": {"capacity": 2},
          "valuation": {"kind": "linear", "weights": )" +
      weights + "}}");
  REQUIRE(report.entries.size() == 2);
  CHECK(report.entries[1].check == "submodularity");
  CHECK(report.entries[1].pass);
  CHECK(report.entries[1].detail ==
        "skipped (ground size above the exhaustive validator cap)");
  CHECK(report.all_pass());
}

TEST_CASE("validate checks transversal graphs") {
  const ValidationReport good = seclab::validate_instance_text(R"({
    "kind": "transversal", "n": 2,
    "system": {"n_right": 2, "edges": [[0, 0], [1, 1]]},
    "valuation": {"kind": "linear", "weights": [1, 2]}
  })");
  REQUIRE_FALSE(good.entries.empty());
  CHECK(good.entries[0].check == "graph");
  CHECK(good.entries[0].pass);
  CHECK(good.all_pass());

  const ValidationReport bad = seclab::validate_instance_text(R"({
    "kind": "transversal", "n": 2,
    "system": {"n_right": 2, "edges": [[0, 9]]},
    "valuation": {"kind": "linear", "weights": [1]}
  })");
  CHECK(bad.entries[0].check == "graph");
  CHECK_FALSE(bad.entries[0].pass);
  CHECK(bad.entries[0].detail.find("out of range") != std::string::npos);
  CHECK_FALSE(bad.all_pass());
}

TEST_CASE("generator output is deterministic and self-validating") {
  for (const std::string kind :
       {"uniform", "partition", "laminar", "laminar_intersection"}) {
    for (const std::string valuation : {"linear", "coverage"}) {
      CAPTURE(kind);
      CAPTURE(valuation);
      GeneratorRequest request;
      request.kind = kind;
      request.valuation = valuation;
      request.n = 9;
      request.seed = 3;
      const std::string a =
          seclab::serialize_instance(seclab::generate_instance(request));
      const std::string b =
          seclab::serialize_instance(seclab::generate_instance(request));
      CHECK(a == b);
      const ValidationReport report = seclab::validate_instance_text(a);
      for (const auto& entry : report.entries) {
        CAPTURE(entry.check);
        CAPTURE(entry.detail);
        CHECK(entry.pass);
      }
      const Instance inst = seclab::generate_instance(request);
      CHECK(inst.name == kind + "-n9-s3");
      REQUIRE(inst.metadata.contains("generator"));
      CHECK(inst.metadata.at("generator").at("kind") == kind);
      CHECK(inst.metadata.at("generator").at("seed").get<std::uint64_t>() ==
            3);
      // n = 9 sits inside the brute-force cap, so the exact optimum ships.
      CHECK(inst.metadata.contains("expected_opt"));
    }
  }
}

TEST_CASE("generator builds transversal instances for every valuation") {
  for (const std::string valuation :
       {"linear", "coverage", "lifted-linear", "lifted-coverage"}) {
    CAPTURE(valuation);
    GeneratorRequest request;
    request.kind = "transversal";
    request.valuation = valuation;
    request.n = 5;
    request.n_right = 4;
    request.density = 0.6;
    request.seed = 7;
    const Instance inst = seclab::generate_instance(request);
    CHECK(inst.edge_valued());
    const std::string a = seclab::serialize_instance(inst);
    const std::string b =
        seclab::serialize_instance(seclab::generate_instance(request));
    CHECK(a == b);
    const ValidationReport report = seclab::validate_instance_text(a);
    for (const auto& entry : report.entries) {
      CAPTURE(entry.check);
      CAPTURE(entry.detail);
      CHECK(entry.pass);
    }
    if (valuation.rfind("lifted-", 0) == 0) {
      CHECK(inst.valuation->describe().rfind("edge lift", 0) == 0);
    }
  }
}

TEST_CASE("generator rejects out-of-range requests") {
  const auto as_code = [](GeneratorRequest request) {
    return code_of([request] { seclab::generate_instance(request); });
  };
  GeneratorRequest request;

  request.n = 0;
  CHECK(as_code(request) == ErrorCode::kInvalidArgument);
  request.n = 1025;
  CHECK(as_code(request) == ErrorCode::kInvalidArgument);

  request = GeneratorRequest{};
  request.kind = "mystery";
  CHECK(as_code(request) == ErrorCode::kInvalidArgument);

  request = GeneratorRequest{};
  request.kind = "laminar";
  request.valuation = "mystery";
  CHECK(as_code(request) == ErrorCode::kInvalidArgument);

  request = GeneratorRequest{};
  request.kind = "laminar";
  request.valuation = "lifted-linear";
  CHECK(as_code(request) == ErrorCode::kInvalidArgument);

  request = GeneratorRequest{};
  request.kind = "uniform";
  request.capacity = 0;
  CHECK(as_code(request) == ErrorCode::kInvalidArgument);

  request = GeneratorRequest{};
  request.kind = "laminar_intersection";
  request.k = 0;
  CHECK(as_code(request) == ErrorCode::kInvalidArgument);

  request = GeneratorRequest{};
  request.kind = "transversal";
  request.n_right = 0;
  CHECK(as_code(request) == ErrorCode::kInvalidArgument);

  request = GeneratorRequest{};
  request.kind = "transversal";
  request.density = 0.0;
  CHECK(as_code(request) == ErrorCode::kInvalidArgument);

  request = GeneratorRequest{};
  request.kind = "transversal";
  request.density = 1.5;
  CHECK(as_code(request) == ErrorCode::kInvalidArgument);
}
