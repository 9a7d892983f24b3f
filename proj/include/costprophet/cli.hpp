// Copyright 2026 The Cost Prophet Authors.
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

#ifndef COSTPROPHET_CLI_HPP
#define COSTPROPHET_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace costprophet::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kNumerical = 3,
  kUnsupported = 4,
};

/// Runs one command line (without the program name). Tables go to `out`,
/// diagnostics and human-readable summaries to `err`. Output named by
/// --out is written to that file instead of `out`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace costprophet::cli

#endif  // COSTPROPHET_CLI_HPP
