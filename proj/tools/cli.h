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

// The `mdms` command line: gen, solve, sweep, verify, ingest.
//
// Exit codes: 0 success, 2 unreadable or malformed input (and bad flags),
// 3 invalid parameters, 4 instance too large for exact enumeration (or for
// the dense similarity in ingest), 5 a guarantee violated in verify.

#ifndef MDMS_TOOLS_CLI_H_
#define MDMS_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace mdms {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitParameter = 3;
inline constexpr int kExitSizeGuard = 4;
inline constexpr int kExitViolation = 5;

inline constexpr char kCsvHeader[] =
    "algorithm,k,seed,f,g,div,oracle_calls,wall_time_ms,threshold";

// `args` excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace mdms

#endif  // MDMS_TOOLS_CLI_H_
