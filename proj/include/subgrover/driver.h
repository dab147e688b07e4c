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
#include <optional>
#include <string>
#include <vector>

#include "subgrover/errors.h"
#include "subgrover/grover.h"
#include "subgrover/register.h"
#include "subgrover/statevector.h"

namespace subgrover {

// What to do when the stage-1 parts of the marked items collide.
enum class PrefixPolicy {
    kReject,
    kPermute,
    kUnsafe,
};

struct PlanOptions {
    PrefixPolicy policy = PrefixPolicy::kReject;
    // Reject odd n - n0 instead of adding a one-qubit tail stage.
    bool strict_parity = false;
    // Test hook: added to the stage-1 phase.
    double phase_error = 0.0;
};

/// Thrown by plan() when validation fails under PrefixPolicy::kReject.
class PlanRejected : public ValidationError {
  public:
    PlanRejected(const std::string &what, ValidationReport report)
        : ValidationError(what), report_(std::move(report)) {}
    const ValidationReport &report() const { return report_; }

  private:
    ValidationReport report_;
};

/// A validated search problem. `marked` is expressed in the qubit order the
/// stages run in, i.e. after `permutation` has been applied to `original`.
struct Plan {
    SubgroupLayout layout;
    MarkedSet original;
    MarkedSet marked;
    QubitPermutation permutation;
    ValidationReport validation;
    PlanOptions options;
    double phi1 = 0.0;
    int stage_count = 0;
    int predicted_queries = 0;

    int n() const { return layout.n; }
    bool unsafe() const { return options.policy == PrefixPolicy::kUnsafe; }
};

Plan plan(int n, const MarkedSet &marked, const PlanOptions &options = {});

struct StageRecord {
    int k = 0;
    int width = 0;
    double fidelity_to_closed_form = 0.0;
    double off_support = 0.0;
    // Overlap of the incoming state with |uniform> (x) |s_k> before the stage.
    double reference_fidelity = 0.0;
    std::uint64_t queries_so_far = 0;
};

struct RunOptions {
    // Hard-zero amplitudes outside each stage's oracle support and renormalize.
    bool project = false;
    bool keep_state = false;
};

struct RunReport {
    int n = 0;
    int marked_count = 0;
    int stage_count = 0;
    std::vector<StageRecord> per_stage;
    double final_success = 0.0;
    std::uint64_t queries_used = 0;
    double wall_time = 0.0;
    // Final state in the caller's original qubit order, when requested.
    std::optional<StateVector> final_state;
};

/// Drift beyond this in the squared norm aborts a run.
inline constexpr double kNormDriftTolerance = 1e-9;

/// Success threshold used for exit codes and sweep status.
inline constexpr double kCertaintyTolerance = 1e-9;

RunReport run(const Plan &plan, const RunOptions &options = {});

/// |uniform on the unprocessed qubits> (x) |tau^(k)>, in the run frame.
StateVector closed_form_outlet(const Plan &plan, int k);

/// (1/sqrt(M)) sum_j |tau_j> over the distinct items.
StateVector marked_superposition(const MarkedSet &marked);

struct BaselineReport {
    int n = 0;
    std::uint64_t N = 0;
    int M = 0;
    double theta = 0.0;
    int iterations = 0;
    double success = 0.0;
    double closed_form_success = 0.0;
    std::uint64_t queries_used = 0;
};

/// Standard multi-target Grover with round(pi/(4 theta) - 1/2) iterations.
BaselineReport run_baseline(int n, const MarkedSet &marked);

struct ComparisonSummary {
    int n = 0;
    int M = 0;
    std::uint64_t subgrouped_queries = 0;
    double subgrouped_success = 0.0;
    std::uint64_t baseline_queries = 0;
    double baseline_success = 0.0;
    double query_ratio = 0.0;
};

ComparisonSummary compare(const RunReport &run, const BaselineReport &baseline);

inline constexpr int kRejectionCap = 1000;

/// Draws M distinct n-bit items with a 64-bit seeded generator, redrawing the
/// whole set until its stage-1 parts are distinct. Gives up after
/// kRejectionCap draws.
std::optional<MarkedSet> random_marked_set(int n, int marked_count, std::uint64_t seed);

/// M distinct n-bit items with no prefix requirement.
MarkedSet random_distinct_items(int n, int marked_count, std::uint64_t seed);

/// Deterministic per-cell seed.
std::uint64_t cell_seed(std::uint64_t base, int n, int marked_count, int trial = 0);

struct SweepConfig {
    std::vector<int> n_values;
    std::vector<int> m_values;
    std::uint64_t seed = 0;
    int trials = 1;
    PlanOptions options;
};

struct SweepRow {
    int n = 0;
    int M = 0;
    int n0 = 0;
    int stages = 0;
    std::uint64_t queries = 0;
    double success = 0.0;
    int baseline_queries = 0;
    double baseline_success = 0.0;
    std::string status;
    std::uint64_t seed = 0;
};

/// One row per (n, M), ordered by n then M as given.
std::vector<SweepRow> sweep(const SweepConfig &config);

}  // namespace subgrover
