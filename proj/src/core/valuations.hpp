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

#ifndef SECLAB_CORE_VALUATIONS_HPP_
#define SECLAB_CORE_VALUATIONS_HPP_

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bipartite.hpp"
#include "element_set.hpp"

namespace seclab {

// Non-negative monotone submodular set function. Implementations normalize
// so that eval(∅) = 0; guarantees downstream depend on that shift.
class ValuationOracle {
 public:
  virtual ~ValuationOracle() = default;

  virtual std::size_t ground_size() const = 0;
  virtual std::string describe() const = 0;

  double eval(const ElementSet& s) const;

  // f(s ∪ {e}) − f(s); zero when e is already in s.
  double marginal(const ElementSet& s, std::size_t e) const;

 protected:
  virtual double eval_raw(const ElementSet& s) const = 0;

  // Derived constructors call this last, once eval_raw is well defined.
  void normalize() { offset_ = eval_raw(ElementSet(ground_size())); }

 private:
  double offset_ = 0.0;
};

class LinearValuation : public ValuationOracle {
 public:
  explicit LinearValuation(std::vector<double> weights);

  std::size_t ground_size() const override { return weights_.size(); }
  std::string describe() const override;

  const std::vector<double>& weights() const { return weights_; }

 protected:
  double eval_raw(const ElementSet& s) const override;

 private:
  std::vector<double> weights_;
};

// f(S) = total weight of the items covered by S. Submodular by construction.
class CoverageValuation : public ValuationOracle {
 public:
  // covers[e] lists item indices into item_weights.
  CoverageValuation(std::vector<double> item_weights,
                    std::vector<std::vector<std::size_t>> covers);

  std::size_t ground_size() const override { return covers_.size(); }
  std::string describe() const override;

  const std::vector<double>& item_weights() const { return item_weights_; }
  const std::vector<std::vector<std::size_t>>& covers() const {
    return covers_;
  }

 protected:
  double eval_raw(const ElementSet& s) const override;

 private:
  std::vector<double> item_weights_;
  std::vector<std::vector<std::size_t>> covers_;
};

// Lifts a valuation on left nodes to edge sets: f(E′) = base(left(E′)).
// Ground set is the edge list of the graph.
class EdgeLiftedValuation : public ValuationOracle {
 public:
  EdgeLiftedValuation(std::shared_ptr<const ValuationOracle> base,
                      std::shared_ptr<const BipartiteGraph> graph);

  std::size_t ground_size() const override { return graph_->edge_count(); }
  std::string describe() const override;

  const ValuationOracle& base() const { return *base_; }
  const BipartiteGraph& graph() const { return *graph_; }

 protected:
  double eval_raw(const ElementSet& s) const override;

 private:
  std::shared_ptr<const ValuationOracle> base_;
  std::shared_ptr<const BipartiteGraph> graph_;
};

EdgeLiftedValuation lift_to_edges(std::shared_ptr<const ValuationOracle> base,
                                  std::shared_ptr<const BipartiteGraph> graph);

struct SubmodularityCounterexample {
  std::string message;
  ElementSet s;
  ElementSet t;
  std::optional<std::size_t> element;
  double lhs;
  double rhs;
};

// Exhaustive monotonicity and diminishing-returns check over all subsets,
// with absolute tolerance 1e-9. Refuses n above max_n.
std::optional<SubmodularityCounterexample> verify_monotone_submodular(
    const ValuationOracle& oracle, std::size_t max_n = limits::kMaxValidator);

// Single-run view that forbids evaluating sets containing unseen elements.
// Online drivers route every oracle query through one of these so that no
// decision can depend on elements that have not arrived.
class RestrictedOracle {
 public:
  explicit RestrictedOracle(const ValuationOracle& oracle)
      : oracle_(oracle), seen_(oracle.ground_size()) {}

  void reveal(std::size_t e) { seen_.insert(e); }
  const ElementSet& seen() const { return seen_; }

  double eval(const ElementSet& s) const;
  double marginal(const ElementSet& s, std::size_t e) const;

 private:
  const ValuationOracle& oracle_;
  ElementSet seen_;
};

}  // namespace seclab

#endif  // SECLAB_CORE_VALUATIONS_HPP_
