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

#include "valuations.hpp"

#include <cmath>
#include <utility>

#include "common.hpp"

namespace seclab {

namespace {
constexpr double kValueTolerance = 1e-9;
}  // namespace

double ValuationOracle::eval(const ElementSet& s) const {
  if (s.universe_size() != ground_size()) {
    throw_error(ErrorCode::kInvalidArgument,
                "set universe " + std::to_string(s.universe_size()) +
                    " does not match oracle ground size " +
                    std::to_string(ground_size()));
  }
  return eval_raw(s) - offset_;
}

double ValuationOracle::marginal(const ElementSet& s, std::size_t e) const {
  if (e >= ground_size()) {
    throw_error(ErrorCode::kInvalidArgument,
                "element " + std::to_string(e) + " outside ground set");
  }
  if (s.contains(e)) return 0.0;
  return eval(s.with(e)) - eval(s);
}

LinearValuation::LinearValuation(std::vector<double> weights)
    : weights_(std::move(weights)) {
  // Only structural checks live here; monotonicity (non-negative weights)
  // is semantic and reported by verify_monotone_submodular instead, so the
  // validator can show a counterexample rather than refuse construction.
  for (std::size_t e = 0; e < weights_.size(); ++e) {
    if (!std::isfinite(weights_[e])) {
      throw_error(ErrorCode::kInvalidArgument,
                  "weight of element " + std::to_string(e) +
                      " must be finite");
    }
  }
  normalize();
}

std::string LinearValuation::describe() const {
  return "linear over " + std::to_string(weights_.size()) + " elements";
}

double LinearValuation::eval_raw(const ElementSet& s) const {
  double total = 0.0;
  s.for_each([&](std::size_t e) { total += weights_[e]; });
  return total;
}

CoverageValuation::CoverageValuation(
    std::vector<double> item_weights,
    std::vector<std::vector<std::size_t>> covers)
    : item_weights_(std::move(item_weights)), covers_(std::move(covers)) {
  // Structural checks only; negative item weights surface as monotonicity
  // counterexamples in verify_monotone_submodular.
  for (std::size_t i = 0; i < item_weights_.size(); ++i) {
    if (!std::isfinite(item_weights_[i])) {
      throw_error(ErrorCode::kInvalidArgument,
                  "weight of item " + std::to_string(i) + " must be finite");
    }
  }
  for (std::size_t e = 0; e < covers_.size(); ++e) {
    for (std::size_t item : covers_[e]) {
      if (item >= item_weights_.size()) {
        throw_error(ErrorCode::kInvalidArgument,
                    "element " + std::to_string(e) + " covers unknown item " +
                        std::to_string(item));
      }
    }
  }
  normalize();
}

std::string CoverageValuation::describe() const {
  return "coverage of " + std::to_string(item_weights_.size()) +
         " items by " + std::to_string(covers_.size()) + " elements";
}

double CoverageValuation::eval_raw(const ElementSet& s) const {
  std::vector<bool> covered(item_weights_.size(), false);
  s.for_each([&](std::size_t e) {
    for (std::size_t item : covers_[e]) covered[item] = true;
  });
  double total = 0.0;
  for (std::size_t i = 0; i < covered.size(); ++i) {
    if (covered[i]) total += item_weights_[i];
  }
  return total;
}

EdgeLiftedValuation::EdgeLiftedValuation(
    std::shared_ptr<const ValuationOracle> base,
    std::shared_ptr<const BipartiteGraph> graph)
    : base_(std::move(base)), graph_(std::move(graph)) {
  if (base_ == nullptr || graph_ == nullptr) {
    throw_error(ErrorCode::kInvalidArgument, "edge lift needs base and graph");
  }
  if (base_->ground_size() != graph_->n_left()) {
    throw_error(ErrorCode::kInvalidArgument,
                "base oracle covers " + std::to_string(base_->ground_size()) +
                    " elements but the graph has " +
                    std::to_string(graph_->n_left()) + " left nodes");
  }
  normalize();
}

std::string EdgeLiftedValuation::describe() const {
  return "edge lift of (" + base_->describe() + ")";
}

double EdgeLiftedValuation::eval_raw(const ElementSet& s) const {
  return base_->eval(graph_->left_endpoints(s));
}

EdgeLiftedValuation lift_to_edges(std::shared_ptr<const ValuationOracle> base,
                                  std::shared_ptr<const BipartiteGraph> graph) {
  return EdgeLiftedValuation(std::move(base), std::move(graph));
}

std::optional<SubmodularityCounterexample> verify_monotone_submodular(
    const ValuationOracle& oracle, std::size_t max_n) {
  const std::size_t n = oracle.ground_size();
  if (n > max_n) {
    throw_error(ErrorCode::kLimitExceeded,
                "submodularity check refused for ground size " +
                    std::to_string(n) + " > " + std::to_string(max_n));
  }
  const std::size_t count = std::size_t{1} << n;
  std::vector<double> value(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    value[mask] = oracle.eval(ElementSet::from_mask(n, mask));
  }

  if (std::abs(value[0]) > kValueTolerance) {
    return SubmodularityCounterexample{
        "value at the empty set is not 0", ElementSet(n), ElementSet(n),
        std::nullopt, value[0],           0.0};
  }
  // Monotonicity via single-element extensions; chains compose.
  for (std::size_t mask = 0; mask < count; ++mask) {
    for (std::size_t e = 0; e < n; ++e) {
      if (mask & (std::size_t{1} << e)) continue;
      const std::size_t bigger = mask | (std::size_t{1} << e);
      if (value[bigger] < value[mask] - kValueTolerance) {
        return SubmodularityCounterexample{
            "monotonicity fails: adding an element lowers the value",
            ElementSet::from_mask(n, mask),
            ElementSet::from_mask(n, bigger),
            e,
            value[bigger],
            value[mask]};
      }
    }
  }
  // Diminishing returns: f_S(e) ≥ f_T(e) for S ⊆ T, e ∉ T. Enumerates each
  // (S, T) pair by choosing T and a sub-mask S, 3^n pairs in total.
  for (std::size_t t_mask = 0; t_mask < count; ++t_mask) {
    std::size_t s_mask = t_mask;
    while (true) {
      for (std::size_t e = 0; e < n; ++e) {
        if (t_mask & (std::size_t{1} << e)) continue;
        const double gain_s =
            value[s_mask | (std::size_t{1} << e)] - value[s_mask];
        const double gain_t =
            value[t_mask | (std::size_t{1} << e)] - value[t_mask];
        if (gain_s < gain_t - kValueTolerance) {
          return SubmodularityCounterexample{
              "diminishing returns fail: marginal grows on the superset",
              ElementSet::from_mask(n, s_mask),
              ElementSet::from_mask(n, t_mask),
              e,
              gain_s,
              gain_t};
        }
      }
      if (s_mask == 0) break;
      s_mask = (s_mask - 1) & t_mask;
    }
  }
  return std::nullopt;
}

double RestrictedOracle::eval(const ElementSet& s) const {
  if (!s.is_subset_of(seen_)) {
    throw_error(ErrorCode::kContractViolation,
                "online query touches an element that has not arrived");
  }
  return oracle_.eval(s);
}

double RestrictedOracle::marginal(const ElementSet& s, std::size_t e) const {
  if (!s.is_subset_of(seen_) || !seen_.contains(e)) {
    throw_error(ErrorCode::kContractViolation,
                "online query touches an element that has not arrived");
  }
  return oracle_.marginal(s, e);
}

}  // namespace seclab
