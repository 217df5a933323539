// Copyright 2026 The agcss Authors
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

#ifndef AGCSS_CLI_H
#define AGCSS_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace agcss::cli {

/// Process exit codes.
enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailure = 1,
    kParameterError = 2,
    kCapacityError = 3,
};

/// Runs one command line (args[0] is the program name). Output goes to
/// `out` unless --out redirects it; diagnostics go to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace agcss::cli

#endif  // AGCSS_CLI_H
