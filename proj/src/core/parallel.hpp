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

#ifndef SECLAB_CORE_PARALLEL_HPP_
#define SECLAB_CORE_PARALLEL_HPP_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace seclab {

// Compensated summation; keeps reductions stable regardless of order.
struct Kahan {
  double sum = 0.0;
  double comp = 0.0;

  void add(double x) {
    const double y = x - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

// Runs fn(trial) for every trial index, split into contiguous chunks across
// workers. fn must only write trial-indexed slots; the caller aggregates
// afterwards in index order so results do not depend on the worker count.
inline void run_trials(std::size_t trials, std::size_t workers,
                       const std::function<void(std::size_t trial)>& fn) {
  workers = std::max<std::size_t>(1, std::min(workers, trials));
  if (workers == 1) {
    for (std::size_t trial = 0; trial < trials; ++trial) fn(trial);
    return;
  }
  std::vector<std::exception_ptr> failures(workers);
  std::vector<std::thread> threads;
  const std::size_t chunk = (trials + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(trials, begin + chunk);
    threads.emplace_back([&, w, begin, end] {
      try {
        for (std::size_t trial = begin; trial < end; ++trial) fn(trial);
      } catch (...) {
        failures[w] = std::current_exception();
      }
    });
  }
  for (std::thread& t : threads) t.join();
  for (const std::exception_ptr& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
}

}  // namespace seclab

#endif  // SECLAB_CORE_PARALLEL_HPP_
