// Copyright 2026 The detscore Authors.
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

#ifndef DETSCORE_CLI_H_
#define DETSCORE_CLI_H_

#include <ostream>

namespace detscore {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitIo = 2;

// Entry point for the `detscore` binary: subcommands analyze,
// tfidf-baseline, and dump-normalized.
int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace detscore

#endif  // DETSCORE_CLI_H_
