// Copyright 2026 The cnarg Authors.
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

#ifndef CNARG_TOOLS_CLI_H_
#define CNARG_TOOLS_CLI_H_

#include <ostream>

namespace cnarg::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // validation or metric failure
inline constexpr int kExitUsage = 2;    // usage or I/O

// The whole command line. `out` gets the primary report, `err` diagnostics.
int Run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace cnarg::cli

#endif  // CNARG_TOOLS_CLI_H_
