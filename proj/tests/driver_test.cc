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

#include <cmath>
#include <numbers>

#include "gtest/gtest.h"

#include "reference.h"
#include "subgrover/errors.h"
#include "test_util.h"

using namespace subgrover;
using subgrover::testing::max_diff;

TEST(driver, plan_examples) {
    const Plan patel = plan(10, {10, {0b1011001101}});
    EXPECT_EQ(patel.layout.n0, 2);
    EXPECT_EQ(patel.stage_count, 5);
    EXPECT_DOUBLE_EQ(patel.phi1, std::numbers::pi);
    EXPECT_EQ(patel.predicted_queries, 5);

    const auto three = random_marked_set(9, 3, 7);
    ASSERT_TRUE(three.has_value());
    const Plan p9 = plan(9, *three);
    EXPECT_EQ(p9.layout.n0, 3);
    EXPECT_EQ(p9.stage_count, 4);
    EXPECT_NEAR(p9.phi1, 1.910633, 1e-6);
    EXPECT_EQ(p9.predicted_queries, (9 - 3 + 2) / 2);

    try {
        plan(5, {5, {0b00101, 0b11101}});
        FAIL() << "expected rejection";
    } catch (const PlanRejected &e) {
        ASSERT_EQ(e.report().collisions.size(), 1u);
        EXPECT_EQ(e.report().collisions[0], std::make_pair(0, 1));
    }
}

TEST(driver, plan_options) {
    PlanOptions strict;
    strict.strict_parity = true;
    EXPECT_THROW(plan(4, {4, {1, 6}}, strict), ParityError);
    EXPECT_NO_THROW(plan(4, {4, {1, 6}}));

    PlanOptions permute;
    permute.policy = PrefixPolicy::kPermute;
    const Plan p = plan(5, {5, {0b00101, 0b11101}}, permute);
    EXPECT_FALSE(p.permutation.is_identity());
    EXPECT_TRUE(p.validation.ok);
    EXPECT_THROW(plan(5, {5, {0, 1, 2, 4, 8, 16}}, permute), NotFoundError);
    EXPECT_THROW(plan(6, {5, {1}}), ArgumentError);
}

TEST(driver, patel_reduction) {
    for (int n = 2; n <= 20; n += 2) {
        const Plan p = plan(n, {n, {1}});
        EXPECT_EQ(p.layout.n0, 2);
        EXPECT_DOUBLE_EQ(p.phi1, std::numbers::pi);
        EXPECT_EQ(p.stage_count, n / 2);
    }
}

TEST(driver, run_matches_dense_reference) {
    const std::vector<std::uint64_t> items = {0b10110, 0b01001};
    RunOptions options;
    options.keep_state = true;
    const RunReport r = run(plan(5, {5, items}), options);
    EXPECT_EQ(r.queries_used, 2u);
    EXPECT_NEAR(r.final_success, 1.0, 1e-9);
    ASSERT_TRUE(r.final_state.has_value());
    EXPECT_LE(max_diff(*r.final_state, reference::run_dense(items, 5)), 1e-12);
    for (const StageRecord &s : r.per_stage) {
        EXPECT_GE(s.fidelity_to_closed_form, 1.0 - 1e-9);
        EXPECT_LE(s.off_support, 1e-12);
        EXPECT_GE(s.reference_fidelity, 1.0 - 1e-12);
    }
}

TEST(driver, run_patel_case) {
    const RunReport r = run(plan(10, {10, {0b1011001101}}));
    EXPECT_EQ(r.queries_used, 5u);
    EXPECT_NEAR(r.final_success, 1.0, 1e-9);
}

TEST(driver, run_tail_case_matches_dense_reference) {
    const std::vector<std::uint64_t> items = {0b0001, 0b0110};
    RunOptions options;
    options.keep_state = true;
    const RunReport r = run(plan(4, {4, items}), options);
    EXPECT_EQ(r.queries_used, 2u);
    EXPECT_NEAR(r.final_success, 1.0, 1e-9);
    EXPECT_LE(max_diff(*r.final_state, reference::run_dense(items, 4)), 1e-12);
}

TEST(driver, unsafe_collision_run) {
    PlanOptions unsafe;
    unsafe.policy = PrefixPolicy::kUnsafe;
    const RunReport r = run(plan(5, {5, {0b00101, 0b11101}}, unsafe));
    // Independently computed with a numpy model of the same stages: 25/64.
    EXPECT_NEAR(r.final_success, 0.390625, 1e-12);
    EXPECT_LT(r.final_success, 0.999);
    EXPECT_EQ(r.queries_used, 2u);
}

TEST(driver, permuted_run_reports_original_qubit_order) {
    PlanOptions permute;
    permute.policy = PrefixPolicy::kPermute;
    RunOptions options;
    options.keep_state = true;
    const RunReport r = run(plan(5, {5, {0b00101, 0b11101}}, permute), options);
    EXPECT_NEAR(r.final_success, 1.0, 1e-9);
    EXPECT_NEAR(std::norm((*r.final_state)[0b00101]), 0.5, 1e-9);
    EXPECT_NEAR(std::norm((*r.final_state)[0b11101]), 0.5, 1e-9);
}

TEST(driver, projection_mode_is_a_no_op_on_valid_runs) {
    RunOptions project;
    project.project = true;
    const auto marked = random_marked_set(10, 5, 99);
    ASSERT_TRUE(marked.has_value());
    const Plan p = plan(10, *marked);
    EXPECT_NEAR(run(p, project).final_success, 1.0, 1e-9);
}

TEST(driver, closed_form_outlet_examples) {
    const Plan p = plan(5, {5, {0b10110, 0b01001}});
    const StateVector last = closed_form_outlet(p, p.stage_count);
    EXPECT_LE(max_diff(last, reference::superposition(5, {0b10110, 0b01001})), 1e-15);
    const StateVector first = closed_form_outlet(p, 1);
    const Eigen::VectorXcd expected =
        Eigen::kroneckerProduct(reference::uniform(2), reference::superposition(3, {0b110, 0b001})).eval();
    EXPECT_LE(max_diff(first, expected), 1e-15);
    for (int k = 1; k <= p.stage_count; ++k) {
        EXPECT_NEAR(closed_form_outlet(p, k).norm_squared(), 1.0, 1e-12);
    }
    EXPECT_THROW(closed_form_outlet(p, 0), RangeError);
    EXPECT_THROW(closed_form_outlet(p, 3), RangeError);
}

TEST(driver, end_to_end_certainty_sample) {
    for (int n = 4; n <= 12; ++n) {
        for (int m = 1; m <= 16 && 4 * m <= (1 << n); ++m) {
            for (int s = 0; s < 3; ++s) {
                const auto marked = random_marked_set(n, m, cell_seed(77, n, m, s));
                ASSERT_TRUE(marked.has_value());
                const Plan p = plan(n, *marked);
                const RunReport r = run(p);
                EXPECT_NEAR(r.final_success, 1.0, 1e-9) << "n=" << n << " M=" << m;
                EXPECT_EQ(r.queries_used, static_cast<std::uint64_t>(p.stage_count));
                const int rest = n - p.layout.n0;
                if (rest % 2 == 0) {
                    EXPECT_EQ(r.queries_used, static_cast<std::uint64_t>((rest + 2) / 2));
                }
            }
        }
    }
}

TEST(driver, baseline_examples) {
    const BaselineReport big = run_baseline(10, {10, {123}});
    EXPECT_EQ(big.iterations, 25);
    EXPECT_EQ(big.queries_used, 25u);
    EXPECT_NEAR(big.success, std::pow(std::sin(51.0 * std::asin(1.0 / 32.0)), 2), 1e-9);
    EXPECT_NEAR(big.success, 0.99946, 1e-4);

    const BaselineReport small = run_baseline(5, {5, {0b10110, 0b01001}});
    EXPECT_EQ(small.iterations, 3);
    EXPECT_NEAR(small.success, std::pow(std::sin(7.0 * std::asin(0.25)), 2), 1e-9);
    EXPECT_NEAR(small.success, 0.9613189697265625, 1e-12);

    const BaselineReport four = run_baseline(2, {2, {2}});
    EXPECT_EQ(four.iterations, 1);
    EXPECT_NEAR(four.success, 1.0, 1e-12);
}

TEST(driver, compare_examples) {
    const RunReport r10 = run(plan(10, {10, {123}}));
    const ComparisonSummary c10 = compare(r10, run_baseline(10, {10, {123}}));
    EXPECT_EQ(c10.subgrouped_queries, 5u);
    EXPECT_EQ(c10.baseline_queries, 25u);
    EXPECT_NEAR(c10.subgrouped_success, 1.0, 1e-9);
    EXPECT_NEAR(c10.baseline_success, 0.99946, 1e-4);
    EXPECT_DOUBLE_EQ(c10.query_ratio, 5.0);

    const MarkedSet two{5, {0b10110, 0b01001}};
    const ComparisonSummary c5 = compare(run(plan(5, two)), run_baseline(5, two));
    EXPECT_EQ(c5.subgrouped_queries, 2u);
    EXPECT_EQ(c5.baseline_queries, 3u);
    EXPECT_NEAR(c5.baseline_success, 0.9613189697265625, 1e-12);
    EXPECT_GE(c5.query_ratio, 0.0);

    EXPECT_THROW(compare(r10, run_baseline(5, two)), ArgumentError);
}

TEST(driver, random_marked_sets_are_seeded_and_valid) {
    const auto a = random_marked_set(10, 7, 42);
    const auto b = random_marked_set(10, 7, 42);
    ASSERT_TRUE(a && b);
    EXPECT_EQ(a->items, b->items);
    EXPECT_TRUE(validate(*a, make_layout(10, 7)).ok);
    const auto c = random_marked_set(10, 7, 43);
    EXPECT_NE(a->items, c->items);
    EXPECT_NE(cell_seed(1, 4, 2), cell_seed(1, 2, 4));
}

TEST(driver, sweep_examples) {
    SweepConfig patel;
    patel.n_values = {6, 8, 10};
    patel.m_values = {1};
    patel.seed = 5;
    const auto rows = sweep(patel);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0].queries, 3u);
    EXPECT_EQ(rows[1].queries, 4u);
    EXPECT_EQ(rows[2].queries, 5u);

    SweepConfig mixed;
    mixed.n_values = {10};
    mixed.m_values = {1, 2, 4};
    const auto cells = sweep(mixed);
    ASSERT_EQ(cells.size(), 3u);
    EXPECT_EQ(cells[0].queries, 5u);
    EXPECT_EQ(cells[1].queries, 5u);
    EXPECT_EQ(cells[1].status, "tail");
    EXPECT_EQ(cells[2].queries, 4u);
    EXPECT_EQ(cells[2].n0, 4);
    for (const SweepRow &row : cells) {
        EXPECT_NEAR(row.success, 1.0, 1e-9);
    }

    SweepConfig strict;
    strict.n_values = {10};
    strict.m_values = {2, 300};
    strict.options.strict_parity = true;
    const auto rejected = sweep(strict);
    EXPECT_EQ(rejected[0].status, "parity-rejected");
    EXPECT_EQ(rejected[1].status, "infeasible");

    EXPECT_THROW(sweep(SweepConfig{}), ArgumentError);
}
