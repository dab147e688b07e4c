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

#include "subgrover/oracle.h"
#include "subgrover/register.h"
#include "subgrover/statevector.h"

namespace subgrover {

/// One subgrouped Grover stage acting on the low `width` qubits:
///   G_k = -(I + (e^{i phi} - 1)|s_k><s_k|)(I + (e^{i phi} - 1)|tau_k><tau_k|)
/// On the algorithm's invariant subspace the tau_k reflection coincides with
/// the diagonal oracle phase, which is what apply_stage uses.
struct StageOperator {
    int k = 0;
    int width = 0;
    double phi = 0.0;
    Suboracle oracle;
    SubspaceVector s_k;
    SubspaceVector tau_k;
};

/// Matched phase that makes one stage-1 iteration exact when M of the 2^n0
/// uniform states are marked:
///   phi = 2 asin(sqrt(2^n0 / (4M)))
/// Throws DomainError when 2^n0 > 4M.
double phase_angle(int marked_count, int n0);

/// Phase for stages after the first: pi for two-qubit extensions (M marked
/// among 4M), pi/2 for a one-qubit tail (M marked among 2M).
double extension_phase(int extension_width);

/// (1/sqrt(M)) sum_j |prefix_k(tau_j)> on prefix_width(k) qubits. Colliding
/// prefixes raise NormalizationError unless `allow_collisions`, in which case
/// the distinct prefixes are superposed.
SubspaceVector tau_state(const MarkedSet &marked, const SubgroupLayout &layout, int k,
                         bool allow_collisions = false);

/// Reference superposition for stage k. Uniform on n0 qubits for k = 1;
/// otherwise uniform over every extension x of each stage-(k-1) prefix.
SubspaceVector s_state(const MarkedSet &marked, const SubgroupLayout &layout, int k,
                       bool allow_collisions = false);

struct StageOptions {
    bool allow_collisions = false;
    // Added to the matched phase; used only to demonstrate that the matched
    // value is required.
    double phase_offset = 0.0;
};

StageOperator make_stage_operator(const MarkedSet &marked, const SubgroupLayout &layout, int k,
                                  const StageOptions &options = {});

/// Oracle phase (one query charged to op.oracle), then the reference phase,
/// then the overall -1.
StateVector apply_stage(StateVector state, StageOperator &op);

DenseOperatorSpec dense_spec(const StageOperator &op, OracleForm form);

}  // namespace subgrover
