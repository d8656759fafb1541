// Copyright 2026 The qmentropy Authors
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

#ifndef QME_COMMON_HPP_
#define QME_COMMON_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qme {

using PointId = std::size_t;

// Thrown for invalid inputs: malformed specs, domain violations, parse
// failures. Solvers never throw on valid inputs.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Generated grid coordinates are rounded to multiples of this quantum so that
// differences and pairwise sums of coordinates are exact in double precision.
// Exact arithmetic keeps the triangle inequality (and every count inequality
// derived from it) free of rounding artifacts.
inline constexpr int kLatticeBits = 40;

double snap_to_lattice(double v);

// Shortest round-trip decimal form of a double ("0.5", "0.1", "1e-07").
std::string format_real(double v);

}  // namespace qme

#endif  // QME_COMMON_HPP_
