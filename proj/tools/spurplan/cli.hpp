// Copyright 2026 The spurplan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. run() never calls exit(), so it can be driven from
// tests with string streams.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spurplan::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitDomain = 1,  // valid request with no answer, e.g. no spur-free region
  kExitUsage = 2,   // bad flags or unreadable input
};

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spurplan::cli
