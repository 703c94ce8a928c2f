// Copyright 2026 The taures Authors.
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


#ifndef TAURES_CLI_HPP
#define TAURES_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "taures/errors.hpp"

namespace taures {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitParse = 2,
  kExitValidation = 3,
  kExitConvergence = 4,
  kExitPrecision = 5,
};

int exit_code(ErrorKind kind);

/// Runs "<command> <manifest-path> [flags]" or "examples <name> [flags]";
/// `args` excludes the program name. Results go to `out`, diagnostics of the
/// form "error[kind] <source>:<line>:<col>: <message>" to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace taures

#endif  // TAURES_CLI_HPP
