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

#include <random>
#include <vector>

#include <Eigen/Dense>

#include "subgrover/statevector.h"

namespace subgrover::testing {

inline StateVector from_eigen(const Eigen::VectorXcd &v) {
    int n = 0;
    while ((Eigen::Index{1} << n) < v.size()) {
        ++n;
    }
    return StateVector(n, std::vector<Complex>(v.data(), v.data() + v.size()));
}

inline double max_diff(const StateVector &a, const Eigen::VectorXcd &b) {
    return (to_eigen(a.amplitudes()) - b).cwiseAbs().maxCoeff();
}

inline double max_diff(const StateVector &a, const StateVector &b) {
    return (to_eigen(a.amplitudes()) - to_eigen(b.amplitudes())).cwiseAbs().maxCoeff();
}

}  // namespace subgrover::testing
