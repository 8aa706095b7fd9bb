// Copyright 2026 The rkinterp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rkinterp::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  /// The algorithm ran but failed (no majority, detected failure, bound violated).
  kFailure = 1,
  /// Bad flags, unreadable or malformed input, unusable field.
  kUsage = 2,
};

/// Entry point behind main(). `args` excludes the program name. Reports go
/// to `out` unless --out is given; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rkinterp::cli
