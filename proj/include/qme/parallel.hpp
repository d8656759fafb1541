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

#ifndef QME_PARALLEL_HPP_
#define QME_PARALLEL_HPP_

#include <cstddef>
#include <functional>

namespace qme {

// Upper bound on worker threads used by parallel fills. Zero selects the
// hardware concurrency. Results never depend on this value.
void set_max_threads(unsigned threads);
unsigned max_threads();

// Runs body(i) for i in [0, count). Each index is visited exactly once; bodies
// must write to disjoint outputs.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace qme

#endif  // QME_PARALLEL_HPP_
