// Copyright 2026 The biphoton-sim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BIPHOTON_TOOLS_CLI_HPP
#define BIPHOTON_TOOLS_CLI_HPP

namespace biphoton::cli {

// Exit codes of the sim binary.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCompute = 3;
inline constexpr int kExitIo = 4;

// Documented default seed; every random draw in a run derives from it.
inline constexpr unsigned long long kDefaultSeed = 271828ull;

/// Parses and runs one invocation. Returns the process exit code and never
/// throws; errors are printed to stderr.
int run(int argc, const char* const* argv);

}  // namespace biphoton::cli

#endif  // BIPHOTON_TOOLS_CLI_HPP
