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

#include "matroids.hpp"

#include <algorithm>
#include <string>

#include "common.hpp"

namespace seclab {

const char* system_kind_name(SystemKind kind) {
  switch (kind) {
    case SystemKind::kUniform:
      return "uniform";
    case SystemKind::kPartition:
      return "partition";
    case SystemKind::kLaminar:
      return "laminar";
    case SystemKind::kTransversal:
      return "transversal";
    case SystemKind::kLaminarIntersection:
      return "laminar_intersection";
  }
  return "unknown";
}

void IndependenceSystem::check_ground(const ElementSet& s) const {
  if (s.universe_size() != ground_size()) {
    throw_error(ErrorCode::kInvalidArgument,
                "set universe " + std::to_string(s.universe_size()) +
                    " does not match ground size " +
                    std::to_string(ground_size()));
  }
}

std::optional<LaminarViolation> validate_laminar(
    const std::vector<CapacityConstraint>& constraints) {
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    for (std::size_t j = i + 1; j < constraints.size(); ++j) {
      const ElementSet& a = constraints[i].members;
      const ElementSet& b = constraints[j].members;
      if (a == b) {
        return LaminarViolation{"constraints " + std::to_string(i) + " and " +
                                    std::to_string(j) + " are duplicates",
                                {i, j}};
      }
      if (!a.intersects(b)) continue;
      if (a.is_subset_of(b)) {
        // Nesting is fine, but an outer capacity at or above the inner one
        // never binds, and a chain with equal capacities hides dead sets.
        if (constraints[j].capacity <= constraints[i].capacity) {
          return LaminarViolation{
              "constraint " + std::to_string(j) +
                  " contains constraint " + std::to_string(i) +
                  " without a larger capacity",
              {i, j}};
        }
        continue;
      }
      if (b.is_subset_of(a)) {
        if (constraints[i].capacity <= constraints[j].capacity) {
          return LaminarViolation{
              "constraint " + std::to_string(i) +
                  " contains constraint " + std::to_string(j) +
                  " without a larger capacity",
              {i, j}};
        }
        continue;
      }
      return LaminarViolation{"constraints " + std::to_string(i) + " and " +
                                  std::to_string(j) + " cross",
                              {i, j}};
    }
  }
  return std::nullopt;
}

LaminarMatroid::LaminarMatroid(std::size_t n,
                               std::vector<CapacityConstraint> constraints)
    : n_(n), constraints_(std::move(constraints)) {
  if (n == 0 || n > limits::kMaxGroundSize) {
    throw_error(ErrorCode::kInvalidArgument,
                "ground size " + std::to_string(n) + " out of range");
  }
  for (std::size_t i = 0; i < constraints_.size(); ++i) {
    if (constraints_[i].members.universe_size() != n) {
      throw_error(ErrorCode::kInvalidArgument,
                  "constraint " + std::to_string(i) +
                      " is not over the declared ground set");
    }
  }
  if (auto violation = validate_laminar(constraints_)) {
    throw_error(ErrorCode::kInvalidArgument,
                "laminar family invalid: " + violation->message);
  }
}

bool LaminarMatroid::is_independent(const ElementSet& s) const {
  check_ground(s);
  for (const CapacityConstraint& c : constraints_) {
    if (s.intersection_size(c.members) > c.capacity) return false;
  }
  return true;
}

LaminarMatroid UniformMatroid::to_laminar() const {
  std::vector<CapacityConstraint> constraints;
  if (k_ < n_) constraints.push_back({ElementSet::full(n_), k_});
  return LaminarMatroid(n_, std::move(constraints));
}

PartitionMatroid::PartitionMatroid(std::size_t n,
                                   std::vector<CapacityConstraint> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  if (n == 0 || n > limits::kMaxGroundSize) {
    throw_error(ErrorCode::kInvalidArgument,
                "ground size " + std::to_string(n) + " out of range");
  }
  ElementSet covered(n);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const CapacityConstraint& b = blocks_[i];
    if (b.members.universe_size() != n) {
      throw_error(ErrorCode::kInvalidArgument,
                  "block " + std::to_string(i) +
                      " is not over the declared ground set");
    }
    if (b.members.empty()) {
      throw_error(ErrorCode::kInvalidArgument,
                  "block " + std::to_string(i) + " is empty");
    }
    if (covered.intersects(b.members)) {
      throw_error(ErrorCode::kInvalidArgument,
                  "block " + std::to_string(i) + " overlaps an earlier block");
    }
    covered |= b.members;
  }
  if (covered.size() != n) {
    throw_error(ErrorCode::kInvalidArgument,
                "blocks do not cover the ground set");
  }
}

bool PartitionMatroid::is_independent(const ElementSet& s) const {
  check_ground(s);
  for (const CapacityConstraint& b : blocks_) {
    if (s.intersection_size(b.members) > b.capacity) return false;
  }
  return true;
}

LaminarMatroid PartitionMatroid::to_laminar() const {
  std::vector<CapacityConstraint> constraints;
  for (const CapacityConstraint& b : blocks_) {
    if (b.capacity < b.members.size()) constraints.push_back(b);
  }
  return LaminarMatroid(n_, std::move(constraints));
}

LaminarIntersection::LaminarIntersection(std::vector<LaminarMatroid> matroids)
    : matroids_(std::move(matroids)) {
  if (matroids_.empty()) {
    throw_error(ErrorCode::kInvalidArgument,
                "intersection needs at least one matroid");
  }
  for (const LaminarMatroid& m : matroids_) {
    if (m.ground_size() != matroids_[0].ground_size()) {
      throw_error(ErrorCode::kInvalidArgument,
                  "intersection members disagree on the ground set");
    }
  }
}

bool LaminarIntersection::is_independent(const ElementSet& s) const {
  check_ground(s);
  for (const LaminarMatroid& m : matroids_) {
    if (!m.is_independent(s)) return false;
  }
  return true;
}

std::size_t rank(const IndependenceSystem& system) {
  if (system.kind() == SystemKind::kLaminarIntersection) {
    throw_error(ErrorCode::kUnsupported,
                "rank is only defined for matroids, not intersections");
  }
  // Cardinality greedy: for a matroid, adding any element that keeps the
  // set independent reaches a maximum independent set.
  ElementSet t(system.ground_size());
  for (std::size_t e = 0; e < system.ground_size(); ++e) {
    ElementSet candidate = t.with(e);
    if (system.is_independent(candidate)) t = candidate;
  }
  return t.size();
}

namespace {

void enumerate_from(const IndependenceSystem& system, const ElementSet& base,
                    std::size_t next,
                    const std::function<void(const ElementSet&)>& fn) {
  fn(base);
  for (std::size_t e = next; e < system.ground_size(); ++e) {
    ElementSet candidate = base.with(e);
    // Downward closure: no independent superset extends a dependent set.
    if (!system.is_independent(candidate)) continue;
    enumerate_from(system, candidate, e + 1, fn);
  }
}

}  // namespace

void for_each_independent_set(const IndependenceSystem& system,
                              const std::function<void(const ElementSet&)>& fn,
                              std::size_t max_n) {
  if (system.ground_size() > max_n) {
    throw_error(ErrorCode::kLimitExceeded,
                "independent-set enumeration refused for ground size " +
                    std::to_string(system.ground_size()) + " > " +
                    std::to_string(max_n));
  }
  enumerate_from(system, ElementSet(system.ground_size()), 0, fn);
}

std::vector<ElementSet> enumerate_independent_sets(
    const IndependenceSystem& system, std::size_t max_n) {
  std::vector<ElementSet> out;
  for_each_independent_set(
      system, [&out](const ElementSet& s) { out.push_back(s); }, max_n);
  return out;
}

}  // namespace seclab
