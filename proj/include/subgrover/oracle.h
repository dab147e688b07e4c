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
#include <span>
#include <vector>

#include "subgrover/register.h"
#include "subgrover/statevector.h"

namespace subgrover {

/// The stage-k oracle f_k: accepts y iff the low `width` bits of y equal the
/// stage-k prefix of some marked item. k = 0 denotes the global oracle that
/// reads all n bits.
class Suboracle {
  public:
    Suboracle() = default;
    Suboracle(int k, int width, std::vector<Bits> prefixes);

    int k() const { return k_; }
    int width() const { return width_; }

    /// Sorted, duplicate-free.
    std::span<const Bits> prefix_set() const { return prefixes_; }

    /// Pure evaluation; does not touch the query ledger.
    bool accepts(Bits y) const;

    /// Metered evaluation: one query per call.
    bool query(Bits y);

    /// Attributes `count` queries to this oracle, e.g. once per phase
    /// operator application.
    void charge(std::uint64_t count = 1) { query_count_ += count; }

    std::uint64_t query_count() const { return query_count_; }

    /// 2^width flags, flag y set iff accepts(y).
    std::vector<std::uint8_t> acceptance_table() const;

    BasisPredicate predicate() const;

  private:
    int k_ = 0;
    int width_ = 0;
    std::vector<Bits> prefixes_;
    std::uint64_t query_count_ = 0;
};

/// Builds f_k from the marked set. Without `allow_collisions` the marked set
/// must pass validate() against `layout`.
Suboracle synthesize(const MarkedSet &marked, const SubgroupLayout &layout, int k,
                     bool allow_collisions = false);

Suboracle full_oracle(const MarkedSet &marked);

/// Applies e^{i phi f(y)} across the register and charges one query.
StateVector apply_oracle_phase(StateVector state, Suboracle &oracle, double phi);

/// True iff the marked set equals the Cartesian product of its projections
/// onto the given bit groups.
bool factorizability_check(const MarkedSet &marked, std::span<const StageRange> groups);
bool factorizability_check(const MarkedSet &marked, const SubgroupLayout &layout);

}  // namespace subgrover
