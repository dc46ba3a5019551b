// Copyright 2026 The Islands Authors
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

// The `islands` command line, callable in-process for tests.
#ifndef ISLANDS_CLI_H_
#define ISLANDS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace islands {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitNoWorld = 10,
  kExitNotUnique = 11,
  kExitBudget = 12,
  kExitViolation = 13,
};

// `args` excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace islands

#endif  // ISLANDS_CLI_H_
