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
#include <string_view>
#include <utility>
#include <vector>

namespace subgrover {

using Bits = std::uint64_t;

/// A contiguous run of qubits processed by one stage. Qubit 0 is the least
/// significant bit of a basis index.
struct StageRange {
    int low_bit = 0;
    int width = 0;

    bool operator==(const StageRange &) const = default;
};

/// Partition of an n-qubit register into a first subgroup of n0 qubits,
/// `eta` two-qubit subgroups and an optional one-qubit tail.
///
/// Stage 1 occupies the low n0 bits; each later stage sits directly above the
/// previous one, so the data processed up to stage k is always a low-bit mask.
struct SubgroupLayout {
    int n = 0;
    int n0 = 0;
    int eta = 0;
    int tail_width = 0;
    std::vector<StageRange> stage_ranges;

    int stage_count() const { return static_cast<int>(stage_ranges.size()); }

    /// Bits read by the stage-k oracle: n0 plus the widths of stages 2..k.
    int prefix_width(int k) const;

    bool has_tail() const { return tail_width != 0; }

    bool operator==(const SubgroupLayout &) const = default;
};

/// The M marked n-bit strings. Invariants (distinctness, 4M <= 2^n) are not
/// enforced on construction so that invalid sets can be represented and
/// reported; see validate().
struct MarkedSet {
    int n = 0;
    std::vector<Bits> items;

    int size() const { return static_cast<int>(items.size()); }
};

struct ValidationReport {
    bool ok = false;
    std::vector<std::pair<int, int>> collisions;
    std::vector<std::string> messages;
};

/// Maps each new qubit position to the original qubit it is taken from:
/// bit i of a permuted value is bit `source[i]` of the original value.
struct QubitPermutation {
    std::vector<int> source;

    static QubitPermutation identity(int n);
    bool is_identity() const;
    Bits apply(Bits value) const;
    Bits unapply(Bits value) const;
    QubitPermutation inverse() const;

    bool operator==(const QubitPermutation &) const = default;
};

/// floor(log2(v)) for v >= 1.
int floor_log2(std::uint64_t v);

SubgroupLayout make_layout(int n, int marked_count);

/// Layout with an explicitly chosen first-subgroup width. Used for oracle
/// factorizability checks over arbitrary groupings.
SubgroupLayout make_layout_with_first_width(int n, int n0);

/// The low prefix_width(k) bits of `item`.
Bits stage_prefix(Bits item, const SubgroupLayout &layout, int k);

ValidationReport validate(const MarkedSet &marked, const SubgroupLayout &layout);

/// Finds a qubit permutation that moves a separating set of n0 qubits into the
/// stage-1 slot. Candidate subsets are tried in lexicographic order; the rest
/// of the qubits keep their relative order above the slot.
QubitPermutation find_distinct_permutation(const MarkedSet &marked, int n, int marked_count);

MarkedSet permute(const MarkedSet &marked, const QubitPermutation &perm);

/// Parses "0b10110" (MSB left), a bare n-character 0/1 string, or a decimal
/// integer. The value must fit in n bits.
Bits parse_bitstring(std::string_view text, int n);

/// "0b" followed by exactly n binary digits, MSB left.
std::string format_bitstring(Bits value, int n);

}  // namespace subgrover
