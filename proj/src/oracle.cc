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

#include "subgrover/oracle.h"

#include <algorithm>
#include <set>

#include <fmt/format.h>

#include "subgrover/errors.h"

namespace subgrover {

Suboracle::Suboracle(int k, int width, std::vector<Bits> prefixes)
    : k_(k), width_(width), prefixes_(std::move(prefixes)) {
    if (width < 0 || width > 62) {
        throw ArgumentError(fmt::format("oracle width {} out of range", width));
    }
    std::sort(prefixes_.begin(), prefixes_.end());
    prefixes_.erase(std::unique(prefixes_.begin(), prefixes_.end()), prefixes_.end());
    for (Bits p : prefixes_) {
        if (p >> width != 0) {
            throw ArgumentError(fmt::format("accepted value {} does not fit in {} bits", p, width));
        }
    }
}

bool Suboracle::accepts(Bits y) const {
    const Bits low = y & ((Bits{1} << width_) - 1);
    return std::binary_search(prefixes_.begin(), prefixes_.end(), low);
}

bool Suboracle::query(Bits y) {
    ++query_count_;
    return accepts(y);
}

std::vector<std::uint8_t> Suboracle::acceptance_table() const {
    std::vector<std::uint8_t> table(std::size_t{1} << width_);
    for (Bits p : prefixes_) {
        table[p] = 1;
    }
    return table;
}

BasisPredicate Suboracle::predicate() const {
    return [prefixes = prefixes_, mask = (Bits{1} << width_) - 1](std::uint64_t y) {
        return std::binary_search(prefixes.begin(), prefixes.end(), y & mask);
    };
}

Suboracle synthesize(const MarkedSet &marked, const SubgroupLayout &layout, int k,
                     bool allow_collisions) {
    const int width = layout.prefix_width(k);
    if (!allow_collisions) {
        const ValidationReport report = validate(marked, layout);
        if (!report.ok) {
            throw ValidationError(fmt::format("cannot synthesize f_{}: {}", k,
                                              fmt::join(report.messages, "; ")));
        }
    }
    std::vector<Bits> prefixes;
    prefixes.reserve(marked.items.size());
    for (Bits item : marked.items) {
        prefixes.push_back(stage_prefix(item, layout, k));
    }
    return Suboracle(k, width, std::move(prefixes));
}

Suboracle full_oracle(const MarkedSet &marked) { return Suboracle(0, marked.n, marked.items); }

StateVector apply_oracle_phase(StateVector state, Suboracle &oracle, double phi) {
    if (oracle.width() > state.qubits()) {
        throw DimensionError(fmt::format("oracle reads {} bits of a {}-qubit register",
                                         oracle.width(), state.qubits()));
    }
    oracle.charge();
    return apply_diagonal_phase(std::move(state), oracle.acceptance_table(), phi);
}

bool factorizability_check(const MarkedSet &marked, std::span<const StageRange> groups) {
    std::set<Bits> items(marked.items.begin(), marked.items.end());
    if (items.empty()) {
        return false;
    }
    long double product = 1.0L;
    for (const StageRange &g : groups) {
        const Bits mask = ((Bits{1} << g.width) - 1) << g.low_bit;
        std::set<Bits> projection;
        for (Bits item : items) {
            projection.insert(item & mask);
        }
        product *= static_cast<long double>(projection.size());
    }
    // Items always lie inside the product of their projections, so equality
    // of cardinalities is equality of sets.
    return product == static_cast<long double>(items.size());
}

bool factorizability_check(const MarkedSet &marked, const SubgroupLayout &layout) {
    return factorizability_check(marked, layout.stage_ranges);
}

}  // namespace subgrover
