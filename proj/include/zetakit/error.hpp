// Copyright 2026 The zetakit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ZETAKIT_ERROR_HPP
#define ZETAKIT_ERROR_HPP

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace zetakit {

/// Malformed input: bad shapes, broken preconditions, unparsable files.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numeric degeneracy: a pole of a zeta expression, a vanishing
/// denominator, a failed deflation or interpolation residual check.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw InputError(what);
}

/// Upper bound on group orders and derived sizes. ZETAKIT_SIZE_CAP
/// overrides the default of 4096.
inline std::size_t size_cap() {
  if (const char* env = std::getenv("ZETAKIT_SIZE_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 4096;
}

}  // namespace zetakit

#endif  // ZETAKIT_ERROR_HPP
