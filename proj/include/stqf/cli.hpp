// Copyright 2026 The stqf Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STQF_CLI_HPP_
#define STQF_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace stqf::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;    // malformed input, shape mismatch, bad flags
inline constexpr int kPrecondition = 2;  // well-formed input outside an operation's domain
inline constexpr int kCheckFailed = 3;   // `check` found a disagreement

// Runs one subcommand. `args` excludes the program name; "-" as an input path
// reads `in`. Results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace stqf::cli

#endif  // STQF_CLI_HPP_
