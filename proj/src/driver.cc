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

#include "subgrover/driver.h"

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include <fmt/format.h>

#include "subgrover/oracle.h"

namespace subgrover {

Plan plan(int n, const MarkedSet &marked, const PlanOptions &options) {
    if (marked.n != n) {
        throw ArgumentError(fmt::format("marked set is {}-bit, register is {}-bit", marked.n, n));
    }
    Plan p;
    p.options = options;
    p.layout = make_layout(n, marked.size());
    if (options.strict_parity && p.layout.has_tail()) {
        throw ParityError(fmt::format(
            "n - n0 = {} is odd; strict parity forbids the one-qubit tail stage", n - p.layout.n0));
    }
    p.original = marked;
    p.marked = marked;
    p.permutation = QubitPermutation::identity(n);
    p.validation = validate(marked, p.layout);

    if (!p.validation.ok) {
        switch (options.policy) {
        case PrefixPolicy::kReject: {
            std::string pairs;
            for (const auto &[a, b] : p.validation.collisions) {
                pairs += fmt::format(" ({},{})", a, b);
            }
            throw PlanRejected(fmt::format("marked set failed validation: {};{}",
                                           fmt::join(p.validation.messages, "; "),
                                           pairs.empty() ? "" : " collisions" + pairs),
                               p.validation);
        }
        case PrefixPolicy::kPermute:
            p.permutation = find_distinct_permutation(marked, n, marked.size());
            p.marked = permute(marked, p.permutation);
            p.validation = validate(p.marked, p.layout);
            if (!p.validation.ok) {
                throw PlanRejected("permuted marked set still fails validation", p.validation);
            }
            break;
        case PrefixPolicy::kUnsafe:
            break;
        }
    }

    p.phi1 = phase_angle(marked.size(), p.layout.n0) + options.phase_error;
    p.stage_count = p.layout.stage_count();
    p.predicted_queries = p.stage_count;
    return p;
}

StateVector marked_superposition(const MarkedSet &marked) {
    const std::set<Bits> items(marked.items.begin(), marked.items.end());
    StateVector tau = StateVector::zero(marked.n);
    const double amp = 1.0 / std::sqrt(static_cast<double>(items.size()));
    for (Bits item : items) {
        tau[item] = amp;
    }
    return tau;
}

StateVector closed_form_outlet(const Plan &plan, int k) {
    if (k < 1 || k > plan.stage_count) {
        throw RangeError(fmt::format("stage {} outside [1, {}]", k, plan.stage_count));
    }
    return embed_uniform_high(plan.n(), tau_state(plan.marked, plan.layout, k, plan.unsafe()));
}

RunReport run(const Plan &plan, const RunOptions &options) {
    if (!plan.validation.ok && !plan.unsafe()) {
        throw ValidationError("plan failed validation and unsafe mode is off");
    }
    const auto start = std::chrono::steady_clock::now();
    const int n = plan.n();

    RunReport report;
    report.n = n;
    report.marked_count = plan.marked.size();
    report.stage_count = plan.stage_count;

    StateVector state = uniform_state(n);
    std::uint64_t queries = 0;
    for (int k = 1; k <= plan.stage_count; ++k) {
        StageOptions stage_options;
        stage_options.allow_collisions = plan.unsafe();
        stage_options.phase_offset = k == 1 ? plan.options.phase_error : 0.0;
        StageOperator op = make_stage_operator(plan.marked, plan.layout, k, stage_options);

        StageRecord record;
        record.k = k;
        record.width = op.width;
        record.reference_fidelity = fidelity(embed_uniform_high(n, op.s_k), state);

        state = apply_stage(std::move(state), op);
        queries += op.oracle.query_count();

        const double drift = std::abs(state.norm_squared() - 1.0);
        if (drift > kNormDriftTolerance) {
            throw NumericalIntegrityError(
                fmt::format("norm drifted by {:.3e} after stage {}", drift, k));
        }
        const BasisPredicate support = op.oracle.predicate();
        record.off_support = off_support_mass(state, support, op.width);
        if (options.project) {
            state = project_onto_support(std::move(state), support, op.width);
        }
        record.fidelity_to_closed_form =
            fidelity(embed_uniform_high(n, op.tau_k), state);
        record.queries_so_far = queries;
        report.per_stage.push_back(record);
    }

    report.final_success = fidelity(marked_superposition(plan.marked), state);
    report.queries_used = queries;
    if (options.keep_state) {
        if (plan.permutation.is_identity()) {
            report.final_state = std::move(state);
        } else {
            StateVector original = StateVector::zero(n);
            for (std::size_t i = 0; i < state.dimension(); ++i) {
                original[plan.permutation.unapply(i)] = state[i];
            }
            report.final_state = std::move(original);
        }
    }
    report.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

BaselineReport run_baseline(int n, const MarkedSet &marked) {
    if (marked.n != n) {
        throw ArgumentError(fmt::format("marked set is {}-bit, register is {}-bit", marked.n, n));
    }
    const std::set<Bits> items(marked.items.begin(), marked.items.end());
    if (items.empty()) {
        throw ArgumentError("empty marked set");
    }
    BaselineReport report;
    report.n = n;
    report.N = std::uint64_t{1} << n;
    report.M = static_cast<int>(items.size());
    report.theta = std::asin(std::sqrt(static_cast<double>(report.M) / static_cast<double>(report.N)));
    report.iterations = static_cast<int>(
        std::max(0L, std::lround(std::numbers::pi / (4.0 * report.theta) - 0.5)));

    Suboracle oracle = full_oracle(marked);
    const SubspaceVector reference = uniform_subspace(n);
    StateVector state = uniform_state(n);
    for (int i = 0; i < report.iterations; ++i) {
        state = apply_oracle_phase(std::move(state), oracle, std::numbers::pi);
        state = apply_rank1_phase(std::move(state), reference, std::numbers::pi);
        for (Complex &a : state.amplitudes()) {
            a = -a;
        }
    }
    for (Bits item : items) {
        report.success += std::norm(state[item]);
    }
    report.closed_form_success = std::pow(std::sin((2 * report.iterations + 1) * report.theta), 2);
    report.queries_used = oracle.query_count();
    if (std::abs(report.success - report.closed_form_success) > kCertaintyTolerance) {
        throw NumericalIntegrityError(
            fmt::format("baseline success {:.12f} disagrees with closed form {:.12f}",
                        report.success, report.closed_form_success));
    }
    return report;
}

ComparisonSummary compare(const RunReport &run, const BaselineReport &baseline) {
    if (run.n != baseline.n || run.marked_count != baseline.M) {
        throw ArgumentError(fmt::format("comparing (n={}, M={}) with baseline (n={}, M={})",
                                        run.n, run.marked_count, baseline.n, baseline.M));
    }
    ComparisonSummary s;
    s.n = run.n;
    s.M = run.marked_count;
    s.subgrouped_queries = run.queries_used;
    s.subgrouped_success = run.final_success;
    s.baseline_queries = baseline.queries_used;
    s.baseline_success = baseline.success;
    s.query_ratio = run.queries_used == 0
                        ? 0.0
                        : static_cast<double>(baseline.queries_used) /
                              static_cast<double>(run.queries_used);
    return s;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Top n bits of a 64-bit draw: exactly uniform on [0, 2^n).
Bits draw_item(std::mt19937_64 &rng, int n) { return rng() >> (64 - n); }

MarkedSet draw_distinct(std::mt19937_64 &rng, int n, int marked_count) {
    MarkedSet marked{n, {}};
    std::set<Bits> seen;
    while (marked.size() < marked_count) {
        const Bits item = draw_item(rng, n);
        if (seen.insert(item).second) {
            marked.items.push_back(item);
        }
    }
    return marked;
}

void check_draw_args(int n, int marked_count) {
    if (n < 2 || n > 62 || marked_count < 1 ||
        static_cast<std::uint64_t>(marked_count) > (std::uint64_t{1} << n)) {
        throw ArgumentError(fmt::format("cannot draw {} distinct {}-bit items", marked_count, n));
    }
}

}  // namespace

std::uint64_t cell_seed(std::uint64_t base, int n, int marked_count, int trial) {
    std::uint64_t h = splitmix64(base);
    h = splitmix64(h ^ static_cast<std::uint64_t>(n));
    h = splitmix64(h ^ static_cast<std::uint64_t>(marked_count));
    return splitmix64(h ^ static_cast<std::uint64_t>(trial));
}

MarkedSet random_distinct_items(int n, int marked_count, std::uint64_t seed) {
    check_draw_args(n, marked_count);
    std::mt19937_64 rng(seed);
    return draw_distinct(rng, n, marked_count);
}

std::optional<MarkedSet> random_marked_set(int n, int marked_count, std::uint64_t seed) {
    check_draw_args(n, marked_count);
    const SubgroupLayout layout = make_layout(n, marked_count);
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < kRejectionCap; ++attempt) {
        MarkedSet marked = draw_distinct(rng, n, marked_count);
        if (validate(marked, layout).ok) {
            return marked;
        }
    }
    return std::nullopt;
}

namespace {

SweepRow sweep_cell(const SweepConfig &config, int n, int marked_count) {
    SweepRow row;
    row.n = n;
    row.M = marked_count;
    row.seed = cell_seed(config.seed, n, marked_count);
    if (n < 2 || n > 62 || 4 * static_cast<std::uint64_t>(marked_count) > (std::uint64_t{1} << n)) {
        row.status = "infeasible";
        return row;
    }
    const SubgroupLayout layout = make_layout(n, marked_count);
    row.n0 = layout.n0;
    row.stages = layout.stage_count();
    if (config.options.strict_parity && layout.has_tail()) {
        row.status = "parity-rejected";
        return row;
    }

    bool permuted = false;
    std::vector<MarkedSet> sets;
    for (int t = 0; t < std::max(1, config.trials); ++t) {
        const std::uint64_t seed = t == 0 ? row.seed : cell_seed(config.seed, n, marked_count, t);
        std::optional<MarkedSet> marked = random_marked_set(n, marked_count, seed);
        if (!marked) {
            if (config.options.policy != PrefixPolicy::kReject) {
                marked = random_distinct_items(n, marked_count, seed);
                permuted = config.options.policy == PrefixPolicy::kPermute;
            } else {
                row.status = "needs-permutation";
                return row;
            }
        }
        sets.push_back(std::move(*marked));
    }

    row.success = 1.0;
    for (const MarkedSet &marked : sets) {
        Plan p;
        try {
            p = plan(n, marked, config.options);
        } catch (const NotFoundError &) {
            row.status = "needs-permutation";
            return row;
        }
        const RunReport report = run(p);
        row.queries = std::max(row.queries, report.queries_used);
        row.success = std::min(row.success, report.final_success);
    }
    const BaselineReport baseline = run_baseline(n, sets.front());
    row.baseline_queries = static_cast<int>(baseline.queries_used);
    row.baseline_success = baseline.success;

    if (row.success < 1.0 - kCertaintyTolerance) {
        row.status = "failed";
    } else if (permuted) {
        row.status = "permuted";
    } else if (layout.has_tail()) {
        row.status = "tail";
    } else {
        row.status = "ok";
    }
    return row;
}

}  // namespace

std::vector<SweepRow> sweep(const SweepConfig &config) {
    if (config.n_values.empty() || config.m_values.empty()) {
        throw ArgumentError("sweep ranges must be nonempty");
    }
    std::vector<SweepRow> rows;
    for (int n : config.n_values) {
        for (int m : config.m_values) {
            rows.push_back(sweep_cell(config, n, m));
        }
    }
    return rows;
}

}  // namespace subgrover
