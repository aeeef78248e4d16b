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

#ifndef SECLAB_CORE_RNG_HPP_
#define SECLAB_CORE_RNG_HPP_

#include <cassert>
#include <cstdint>
#include <random>
#include <vector>

namespace seclab {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Per-trial stream seed derived from (master seed, trial index). Documented
// so that ports can reproduce the trial partitioning.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t trial) {
  return splitmix64(master ^ splitmix64(trial + 0x9E3779B97F4A7C15ULL));
}

// Seeded random source with hand-rolled distributions. The standard
// distribution classes are implementation-defined, so every draw here is
// spelled out against the raw mt19937_64 stream to keep identical seeds
// producing identical sequences on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return next_double() < p; }

  // Uniform in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    assert(bound > 0);
    std::uint64_t threshold = (~bound + 1) % bound;  // 2^64 mod bound
    for (;;) {
      std::uint64_t r = engine_();
      if (r >= threshold) return r % bound;
    }
  }

  // Sum of n Bernoulli(p) draws; n is desk-scale so no clever sampling.
  std::size_t binomial(std::size_t n, double p) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (bernoulli(p)) ++c;
    return c;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  std::vector<std::size_t> permutation(std::size_t n) {
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    shuffle(perm);
    return perm;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace seclab

#endif  // SECLAB_CORE_RNG_HPP_
