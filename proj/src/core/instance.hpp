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

#ifndef SECLAB_CORE_INSTANCE_HPP_
#define SECLAB_CORE_INSTANCE_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "bipartite.hpp"
#include "matroids.hpp"
#include "valuations.hpp"

namespace seclab {

// A problem instance: an independence system plus a valuation oracle,
// loadable from and storable to canonical JSON. Transversal instances also
// carry their bipartite graph, and their valuation may live on edges (the
// matching drivers) or on left nodes (plain matroid runs).
struct Instance {
  std::string name;
  std::shared_ptr<const IndependenceSystem> system;
  std::shared_ptr<const ValuationOracle> valuation;
  std::shared_ptr<const BipartiteGraph> graph;  // transversal kind only
  nlohmann::ordered_json metadata;              // round-tripped verbatim

  SystemKind kind() const { return system->kind(); }
  std::size_t ground_size() const { return system->ground_size(); }
  // True when the valuation lives on the edges of a transversal instance.
  bool edge_valued() const {
    return graph != nullptr &&
           valuation->ground_size() == graph->edge_count();
  }
};

// Parses instance JSON. Malformed text raises a parse error naming line and
// column; structurally invalid content raises configuration errors.
Instance parse_instance(const std::string& text);

Instance load_instance(const std::string& path);

// Canonical serialization: fixed key order, members sorted ascending,
// constraints sorted by (size, lexicographic members), edges by (left,
// right), two-space indent, trailing newline. serialize ∘ parse is the
// byte identity on its own output.
std::string serialize_instance(const Instance& instance);

void save_instance(const Instance& instance, const std::string& path);

struct ValidationEntry {
  std::string check;
  bool pass = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationEntry> entries;
  bool all_pass() const {
    for (const ValidationEntry& e : entries) {
      if (!e.pass) return false;
    }
    return true;
  }
};

// Structural checks on instance text without trusting constructors:
// laminar-family validity, graph sanity, valuation well-formedness, the
// exhaustive submodularity validator at small n, and agreement with the
// committed expected_opt when present and within brute-force reach.
ValidationReport validate_instance_text(const std::string& text);

struct GeneratorRequest {
  std::string kind;  // uniform|partition|laminar|transversal|laminar_intersection
  std::size_t n = 8;            // ground size (left nodes for transversal)
  std::uint64_t seed = 0;
  std::string valuation = "coverage";  // linear|coverage|lifted-linear|lifted-coverage
  std::size_t capacity = 2;     // uniform
  std::size_t blocks = 3;       // partition
  std::size_t depth = 2;        // laminar recursion depth
  std::size_t k = 2;            // intersection arity
  std::size_t n_right = 4;      // transversal right side
  double density = 0.5;         // transversal edge probability
};

// Deterministic in the request: identical requests serialize to identical
// bytes. Emitted instances pass validate_instance_text, and metadata
// records the request plus the exact optimum when within brute-force caps.
Instance generate_instance(const GeneratorRequest& request);

}  // namespace seclab

#endif  // SECLAB_CORE_INSTANCE_HPP_
