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

#include "subgrover/grover.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include <fmt/format.h>

#include "subgrover/errors.h"

namespace subgrover {

namespace {

std::vector<Bits> distinct_prefixes(const MarkedSet &marked, const SubgroupLayout &layout, int k,
                                    bool allow_collisions, const char *what) {
    std::set<Bits> prefixes;
    for (Bits item : marked.items) {
        prefixes.insert(stage_prefix(item, layout, k));
    }
    if (prefixes.size() != marked.items.size() && !allow_collisions) {
        throw NormalizationError(fmt::format(
            "{} at stage {}: {} items share only {} distinct prefixes", what, k,
            marked.items.size(), prefixes.size()));
    }
    if (prefixes.empty()) {
        throw ArgumentError("empty marked set");
    }
    return {prefixes.begin(), prefixes.end()};
}

}  // namespace

double phase_angle(int marked_count, int n0) {
    if (marked_count < 1 || n0 < 0 || n0 > 62) {
        throw ArgumentError(fmt::format("phase_angle(M={}, n0={})", marked_count, n0));
    }
    const double ratio = std::ldexp(1.0, n0) / (4.0 * marked_count);
    if (ratio > 1.0) {
        throw DomainError(fmt::format("2^{} > 4M = {}: no matched phase", n0, 4 * marked_count));
    }
    return 2.0 * std::asin(std::sqrt(ratio));
}

double extension_phase(int extension_width) {
    switch (extension_width) {
    case 2:
        return std::numbers::pi;
    case 1:
        return std::numbers::pi / 2.0;
    default:
        throw ArgumentError(fmt::format("no extension stage of width {}", extension_width));
    }
}

SubspaceVector tau_state(const MarkedSet &marked, const SubgroupLayout &layout, int k,
                         bool allow_collisions) {
    const int width = layout.prefix_width(k);
    const auto prefixes = distinct_prefixes(marked, layout, k, allow_collisions, "tau_state");
    SubspaceVector out = SubspaceVector::zero(width);
    const double amp = 1.0 / std::sqrt(static_cast<double>(prefixes.size()));
    for (Bits p : prefixes) {
        out[p] = amp;
    }
    return out;
}

SubspaceVector s_state(const MarkedSet &marked, const SubgroupLayout &layout, int k,
                       bool allow_collisions) {
    const int width = layout.prefix_width(k);
    if (k == 1) {
        return uniform_subspace(width);
    }
    const int below = layout.prefix_width(k - 1);
    const int ext = width - below;
    const auto prefixes = distinct_prefixes(marked, layout, k - 1, allow_collisions, "s_state");
    SubspaceVector out = SubspaceVector::zero(width);
    const std::size_t count = prefixes.size() << ext;
    const double amp = 1.0 / std::sqrt(static_cast<double>(count));
    for (Bits p : prefixes) {
        for (Bits x = 0; x < (Bits{1} << ext); ++x) {
            out[(x << below) | p] = amp;
        }
    }
    return out;
}

StageOperator make_stage_operator(const MarkedSet &marked, const SubgroupLayout &layout, int k,
                                  const StageOptions &options) {
    StageOperator op;
    op.k = k;
    op.width = layout.prefix_width(k);
    const int ext = layout.stage_ranges[static_cast<std::size_t>(k - 1)].width;
    op.phi = (k == 1 ? phase_angle(marked.size(), layout.n0) : extension_phase(ext)) +
             options.phase_offset;
    op.oracle = synthesize(marked, layout, k, options.allow_collisions);
    op.s_k = s_state(marked, layout, k, options.allow_collisions);
    op.tau_k = tau_state(marked, layout, k, options.allow_collisions);
    return op;
}

StateVector apply_stage(StateVector state, StageOperator &op) {
    if (op.width > state.qubits()) {
        throw DimensionError(
            fmt::format("stage width {} exceeds register width {}", op.width, state.qubits()));
    }
    state = apply_oracle_phase(std::move(state), op.oracle, op.phi);
    state = apply_rank1_phase(std::move(state), op.s_k, op.phi);
    for (Complex &a : state.amplitudes()) {
        a = -a;
    }
    return state;
}

DenseOperatorSpec dense_spec(const StageOperator &op, OracleForm form) {
    DenseOperatorSpec spec;
    spec.m = op.width;
    spec.phi = op.phi;
    spec.reference = op.s_k;
    spec.form = form;
    if (form == OracleForm::kDiagonal) {
        spec.accept = op.oracle.acceptance_table();
    } else {
        spec.marked = op.tau_k;
    }
    return spec;
}

}  // namespace subgrover
