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

#include <cstdint>
#include <string>
#include <vector>

namespace subgrover {

struct VerifyConfig {
    int max_n = 10;
    // Test hook forwarded to the stage-1 phase; any nonzero value should make
    // the certainty properties fail.
    double phase_error = 0.0;
    std::uint64_t seed = 1;
    int sets_per_cell = 3;
};

struct PropertyResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Runs the built-in property suite: norm preservation, unitarity, dense-path
/// equivalence, oracle equivalence on the invariant subspace, stage-1
/// certainty, end-to-end certainty, closed-form outlets, the query formula and
/// baseline self-consistency.
std::vector<PropertyResult> run_property_suite(const VerifyConfig &config);

}  // namespace subgrover
