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

#ifndef QME_TOOLS_CLI_HPP_
#define QME_TOOLS_CLI_HPP_

#include <ostream>

namespace qme::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitParseError = 3;

// Entry point shared by the qme binary and the test suites. Human-readable
// summaries go to out, log lines and error messages to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qme::app

#endif  // QME_TOOLS_CLI_HPP_
