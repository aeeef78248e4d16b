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

#ifndef SECLAB_CORE_COMMON_HPP_
#define SECLAB_CORE_COMMON_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seclab {

enum class ErrorCode {
  kInvalidArgument = 1,  // bad parameter or configuration mismatch
  kLimitExceeded = 2,    // exact computation refused above a desk-scale cap
  kContractViolation = 3,  // an internal contract was broken at runtime
  kUnsupported = 4,        // operation undefined for this system kind
  kParse = 5,              // malformed instance or config text
  kIo = 6,                 // file access failure
  kDomain = 7,             // undefined result (e.g. ratio against OPT = 0)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void throw_error(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

// Desk-scale caps for exact computations. Everything that enumerates an
// exponential object refuses inputs above these sizes.
namespace limits {
inline constexpr std::size_t kMaxGroundSize = 1024;    // any instance
inline constexpr std::size_t kMaxBruteForce = 20;      // independent-set OPT
inline constexpr std::size_t kMaxMatchingBruteForce = 18;  // matching OPT, |E|
inline constexpr std::size_t kMaxCoupling = 6;         // exact coupling, n
inline constexpr std::size_t kMaxValidator = 12;       // submodularity check, n
inline constexpr std::size_t kMaxEnumeration = 20;     // independent-set stream
inline constexpr std::size_t kMaxGpClosed = 128;       // g_p closed form, m+n
inline constexpr std::size_t kMaxGpEnumerated = 16;    // g_p enumeration, m+n
}  // namespace limits

}  // namespace seclab

#endif  // SECLAB_CORE_COMMON_HPP_
