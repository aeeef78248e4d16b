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

#ifndef SECLAB_CORE_MATROIDS_HPP_
#define SECLAB_CORE_MATROIDS_HPP_

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bipartite.hpp"
#include "element_set.hpp"

namespace seclab {

enum class SystemKind {
  kUniform,
  kPartition,
  kLaminar,
  kTransversal,
  kLaminarIntersection,
};

const char* system_kind_name(SystemKind kind);

// Polymorphic independence tester. All implementations are immutable after
// construction and safe for concurrent queries.
class IndependenceSystem {
 public:
  virtual ~IndependenceSystem() = default;

  virtual SystemKind kind() const = 0;
  virtual std::size_t ground_size() const = 0;
  virtual bool is_independent(const ElementSet& s) const = 0;

  // Guards against sets drawn from a different ground set.
  void check_ground(const ElementSet& s) const;
};

// One capacity constraint of a laminar family: at most `capacity` members
// of `members` may be selected.
struct CapacityConstraint {
  ElementSet members;
  std::size_t capacity;
};

struct LaminarViolation {
  std::string message;
  // Indices of the offending constraints (one or two).
  std::vector<std::size_t> constraints;
};

// Checks pairwise laminarity, distinctness, and strict capacity growth
// along chains. Returns the first violation found, or nullopt when the
// family is valid. Advisory: LaminarMatroid evaluates redundant chains
// correctly either way, but generators and instance files must pass.
std::optional<LaminarViolation> validate_laminar(
    const std::vector<CapacityConstraint>& constraints);

// Independence defined by |T ∩ B| <= capacity(B) over a laminar family of
// constraint sets. The ground set itself is an implicit, untested root:
// only listed constraints bound a set.
class LaminarMatroid : public IndependenceSystem {
 public:
  LaminarMatroid(std::size_t n, std::vector<CapacityConstraint> constraints);

  SystemKind kind() const override { return SystemKind::kLaminar; }
  std::size_t ground_size() const override { return n_; }
  bool is_independent(const ElementSet& s) const override;

  const std::vector<CapacityConstraint>& constraints() const {
    return constraints_;
  }

 private:
  std::size_t n_;
  std::vector<CapacityConstraint> constraints_;
};

// At most k elements in total. Named constructor semantics: behaves exactly
// like its laminar encoding {U : k}.
class UniformMatroid : public IndependenceSystem {
 public:
  UniformMatroid(std::size_t n, std::size_t k) : n_(n), k_(k) {}

  SystemKind kind() const override { return SystemKind::kUniform; }
  std::size_t ground_size() const override { return n_; }
  bool is_independent(const ElementSet& s) const override {
    check_ground(s);
    return s.size() <= k_;
  }

  std::size_t capacity() const { return k_; }
  LaminarMatroid to_laminar() const;

 private:
  std::size_t n_;
  std::size_t k_;
};

// Disjoint covering blocks with per-block capacities.
class PartitionMatroid : public IndependenceSystem {
 public:
  PartitionMatroid(std::size_t n, std::vector<CapacityConstraint> blocks);

  SystemKind kind() const override { return SystemKind::kPartition; }
  std::size_t ground_size() const override { return n_; }
  bool is_independent(const ElementSet& s) const override;

  const std::vector<CapacityConstraint>& blocks() const { return blocks_; }
  LaminarMatroid to_laminar() const;

 private:
  std::size_t n_;
  std::vector<CapacityConstraint> blocks_;
};

// Left nodes of a bipartite graph; independent iff saturable by a matching.
class TransversalMatroid : public IndependenceSystem {
 public:
  explicit TransversalMatroid(BipartiteGraph graph) : graph_(std::move(graph)) {}

  SystemKind kind() const override { return SystemKind::kTransversal; }
  std::size_t ground_size() const override { return graph_.n_left(); }
  bool is_independent(const ElementSet& s) const override {
    check_ground(s);
    return maximum_matching(graph_, s) == s.size();
  }

  const BipartiteGraph& graph() const { return graph_; }

 private:
  BipartiteGraph graph_;
};

// Intersection of k laminar matroids over one ground set. Not a matroid in
// general: rank() refuses it.
class LaminarIntersection : public IndependenceSystem {
 public:
  explicit LaminarIntersection(std::vector<LaminarMatroid> matroids);

  SystemKind kind() const override { return SystemKind::kLaminarIntersection; }
  std::size_t ground_size() const override { return matroids_[0].ground_size(); }
  bool is_independent(const ElementSet& s) const override;

  std::size_t arity() const { return matroids_.size(); }
  const std::vector<LaminarMatroid>& matroids() const { return matroids_; }

 private:
  std::vector<LaminarMatroid> matroids_;
};

// Size of a maximum independent set by cardinality greedy, which is exact
// for matroids. Refuses intersections.
std::size_t rank(const IndependenceSystem& system);

// Visits every independent set exactly once, in lexicographic order of the
// sorted member sequence, never extending a dependent set. Refuses ground
// sets above max_n (default limits::kMaxEnumeration).
void for_each_independent_set(const IndependenceSystem& system,
                              const std::function<void(const ElementSet&)>& fn,
                              std::size_t max_n = limits::kMaxEnumeration);

std::vector<ElementSet> enumerate_independent_sets(
    const IndependenceSystem& system,
    std::size_t max_n = limits::kMaxEnumeration);

}  // namespace seclab

#endif  // SECLAB_CORE_MATROIDS_HPP_
