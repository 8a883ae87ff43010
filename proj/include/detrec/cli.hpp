// Copyright 2026 The detrec Authors.
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

#ifndef DETREC_CLI_HPP
#define DETREC_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace detrec {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitUsage = 2,
  kExitTooLarge = 3,
};

/// Runs the tool on args (without the program name). env_max_n is the value
/// of DETREC_MAX_N or null; it lowers every size cap but never raises one.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const char* env_max_n);

}  // namespace detrec

#endif  // DETREC_CLI_HPP
