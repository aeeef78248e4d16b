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

#include "core/matroids.hpp"

#include <vector>

#include "core/bipartite.hpp"
#include "core/common.hpp"
#include "core/element_set.hpp"
#include "doctest.h"

using seclab::BipartiteGraph;
using seclab::CapacityConstraint;
using seclab::ElementSet;
using seclab::Error;
using seclab::LaminarIntersection;
using seclab::LaminarMatroid;
using seclab::PartitionMatroid;
using seclab::SystemKind;
using seclab::TransversalMatroid;
using seclab::UniformMatroid;
using seclab::validate_laminar;

namespace {

CapacityConstraint constraint(std::size_t n,
                              std::initializer_list<std::size_t> members,
                              std::size_t capacity) {
  return {ElementSet(n, members), capacity};
}

}  // namespace

TEST_CASE("validate_laminar accepts nested and disjoint families") {
  const std::vector<CapacityConstraint> family = {
      constraint(8, {0, 1}, 1),
      constraint(8, {0, 1, 2, 3}, 2),
      constraint(8, {4, 5}, 1),
      constraint(8, {0, 1, 2, 3, 4, 5, 6, 7}, 4),
  };
  CHECK_FALSE(validate_laminar(family).has_value());
}

TEST_CASE("validate_laminar flags a crossing pair") {
  const std::vector<CapacityConstraint> family = {
      constraint(6, {0, 1, 2}, 2),
      constraint(6, {2, 3}, 1),
  };
  const auto violation = validate_laminar(family);
  REQUIRE(violation.has_value());
  CHECK(violation->constraints.size() == 2);
}

TEST_CASE("validate_laminar flags a duplicate set") {
  const std::vector<CapacityConstraint> family = {
      constraint(4, {1, 2}, 1),
      constraint(4, {1, 2}, 2),
  };
  CHECK(validate_laminar(family).has_value());
}

TEST_CASE("validate_laminar requires strictly growing capacities on chains") {
  const std::vector<CapacityConstraint> equal = {
      constraint(6, {0, 1}, 2),
      constraint(6, {0, 1, 2}, 2),
  };
  CHECK(validate_laminar(equal).has_value());
  const std::vector<CapacityConstraint> shrinking = {
      constraint(6, {0, 1}, 3),
      constraint(6, {0, 1, 2}, 2),
  };
  CHECK(validate_laminar(shrinking).has_value());
  const std::vector<CapacityConstraint> growing = {
      constraint(6, {0, 1}, 1),
      constraint(6, {0, 1, 2}, 2),
  };
  CHECK_FALSE(validate_laminar(growing).has_value());
}

TEST_CASE("laminar independence counts members per constraint") {
  const LaminarMatroid m(4, {constraint(4, {0, 1}, 1),
                             constraint(4, {0, 1, 2, 3}, 2)});
  CHECK(m.is_independent(ElementSet(4)));
  CHECK(m.is_independent(ElementSet(4, {0, 2})));
  CHECK_FALSE(m.is_independent(ElementSet(4, {0, 1})));
  CHECK_FALSE(m.is_independent(ElementSet(4, {0, 2, 3})));
  CHECK(m.is_independent(ElementSet(4, {2})));
}

TEST_CASE("laminar constructor rejects an invalid family") {
  CHECK_THROWS_AS(
      LaminarMatroid(6, {constraint(6, {0, 1, 2}, 2), constraint(6, {2, 3}, 1)}),
      Error);
}

TEST_CASE("uniform matroid caps the cardinality") {
  const UniformMatroid m(5, 2);
  CHECK(m.is_independent(ElementSet(5, {1, 4})));
  CHECK_FALSE(m.is_independent(ElementSet(5, {0, 1, 2})));
  CHECK(m.kind() == SystemKind::kUniform);
  CHECK(seclab::rank(m) == 2);
}

TEST_CASE("uniform to_laminar binds only below the ground size") {
  const LaminarMatroid bound = UniformMatroid(5, 2).to_laminar();
  CHECK(bound.constraints().size() == 1);
  CHECK(bound.constraints()[0].capacity == 2);
  CHECK(bound.constraints()[0].members.size() == 5);
  const LaminarMatroid free = UniformMatroid(4, 4).to_laminar();
  CHECK(free.constraints().empty());
}

TEST_CASE("partition matroid needs disjoint covering blocks") {
  const PartitionMatroid m(5, {constraint(5, {0, 1, 2}, 2),
                               constraint(5, {3, 4}, 1)});
  CHECK(m.is_independent(ElementSet(5, {0, 1, 3})));
  CHECK_FALSE(m.is_independent(ElementSet(5, {3, 4})));
  CHECK_THROWS_AS(PartitionMatroid(5, {constraint(5, {0, 1}, 1)}), Error);
  CHECK_THROWS_AS(PartitionMatroid(5, {constraint(5, {0, 1, 2}, 1),
                                       constraint(5, {2, 3, 4}, 1)}),
                  Error);
}

TEST_CASE("partition to_laminar keeps only binding blocks") {
  const PartitionMatroid m(5, {constraint(5, {0, 1, 2}, 2),
                               constraint(5, {3, 4}, 2)});
  const LaminarMatroid laminar = m.to_laminar();
  REQUIRE(laminar.constraints().size() == 1);
  CHECK(laminar.constraints()[0].members == ElementSet(5, {0, 1, 2}));
}

TEST_CASE("transversal independence means a saturating matching exists") {
  // Left nodes 0 and 1 both depend on right node 0 alone.
  const BipartiteGraph g(3, 2, {{0, 0}, {1, 0}, {2, 1}});
  const TransversalMatroid m(g);
  CHECK(m.is_independent(ElementSet(3, {0, 2})));
  CHECK(m.is_independent(ElementSet(3, {1, 2})));
  CHECK_FALSE(m.is_independent(ElementSet(3, {0, 1})));
  CHECK_FALSE(m.is_independent(ElementSet(3, {0, 1, 2})));
  CHECK(seclab::rank(m) == 2);
}

TEST_CASE("laminar intersection requires independence in every member") {
  LaminarMatroid first(4, {constraint(4, {0, 1}, 1)});
  LaminarMatroid second(4, {constraint(4, {1, 2}, 1)});
  const LaminarIntersection both({first, second});
  CHECK(both.arity() == 2);
  CHECK(both.is_independent(ElementSet(4, {0, 2})));
  CHECK_FALSE(both.is_independent(ElementSet(4, {0, 1})));
  CHECK_FALSE(both.is_independent(ElementSet(4, {1, 2})));
  CHECK(both.is_independent(ElementSet(4, {0, 2, 3})));
  CHECK_THROWS_AS(seclab::rank(both), Error);
}

TEST_CASE("independent set enumeration is complete and downward closed") {
  const UniformMatroid m(4, 2);
  const auto sets = seclab::enumerate_independent_sets(m);
  // 1 empty + 4 singletons + 6 pairs.
  CHECK(sets.size() == 11);
  for (const ElementSet& s : sets) CHECK(m.is_independent(s));
}

TEST_CASE("enumeration visits sets in sequence-lexicographic order") {
  const UniformMatroid m(3, 2);
  const auto sets = seclab::enumerate_independent_sets(m);
  REQUIRE(sets.size() == 7);
  CHECK(sets[0] == ElementSet(3));
  CHECK(sets[1] == ElementSet(3, {0}));
  CHECK(sets[2] == ElementSet(3, {0, 1}));
  CHECK(sets[3] == ElementSet(3, {0, 2}));
  CHECK(sets[4] == ElementSet(3, {1}));
  CHECK(sets[5] == ElementSet(3, {1, 2}));
  CHECK(sets[6] == ElementSet(3, {2}));
}

TEST_CASE("enumeration refuses oversized ground sets") {
  const UniformMatroid m(seclab::limits::kMaxEnumeration + 1, 2);
  CHECK_THROWS_AS(seclab::enumerate_independent_sets(m), Error);
}
