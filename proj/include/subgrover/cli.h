// Copyright 2026 The Subgrover Authors
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

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace subgrover::cli {

enum ExitCode : int {
    kOk = 0,
    kBadInput = 1,
    kValidationFailed = 2,
    kNumericalIntegrity = 3,
    kVerifyFailed = 4,
    kNotCertain = 5,
};

/// Entry point for the `subgrover` tool. `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Parses "6,8,10", "4-12" or a mix such as "2,4-6". Throws ArgumentError on
/// malformed input; an empty string yields an empty list.
std::vector<int> parse_int_list(const std::string &text);

}  // namespace subgrover::cli
