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

#include <random>
#include <set>

#include "gtest/gtest.h"

#include "subgrover/driver.h"
#include "subgrover/errors.h"

using namespace subgrover;

TEST(oracle, synthesize_examples) {
    const MarkedSet marked{5, {0b10110, 0b01001}};
    const auto layout = make_layout(5, 2);

    const Suboracle f1 = synthesize(marked, layout, 1);
    EXPECT_EQ(f1.k(), 1);
    EXPECT_EQ(f1.width(), 3);
    EXPECT_EQ(std::vector<Bits>(f1.prefix_set().begin(), f1.prefix_set().end()),
              (std::vector<Bits>{0b001, 0b110}));
    EXPECT_TRUE(f1.accepts(0b110));
    EXPECT_FALSE(f1.accepts(0b000));
    EXPECT_TRUE(f1.accepts(0b11110));  // reads the low 3 bits only

    const Suboracle f2 = synthesize(marked, layout, 2);
    EXPECT_EQ(f2.width(), 5);
    EXPECT_TRUE(f2.accepts(0b10110));
    EXPECT_FALSE(f2.accepts(0b00110));

    const Suboracle single = synthesize({4, {0b1011}}, make_layout(4, 1), 1);
    EXPECT_EQ(std::vector<Bits>(single.prefix_set().begin(), single.prefix_set().end()),
              (std::vector<Bits>{0b11}));
}

TEST(oracle, synthesize_requires_validation) {
    const MarkedSet colliding{5, {0b00101, 0b11101}};
    const auto layout = make_layout(5, 2);
    EXPECT_THROW(synthesize(colliding, layout, 1), ValidationError);
    const Suboracle unsafe = synthesize(colliding, layout, 1, true);
    EXPECT_EQ(unsafe.prefix_set().size(), 1u);
}

TEST(oracle, full_oracle_and_query_ledger) {
    Suboracle f = full_oracle({5, {0b10110, 0b01001}});
    EXPECT_EQ(f.width(), 5);
    EXPECT_TRUE(f.accepts(0b10110));
    EXPECT_TRUE(f.accepts(0b01001));
    EXPECT_FALSE(f.accepts(0b11111));
    EXPECT_EQ(f.query_count(), 0u);

    Suboracle zero = full_oracle({3, {0}});
    for (Bits y = 0; y < 8; ++y) {
        EXPECT_EQ(zero.accepts(y), y == 0);
    }

    zero.query(0);
    zero.query(1);
    zero.query(2);
    EXPECT_EQ(zero.query_count(), 3u);

    StateVector s = uniform_state(3);
    s = apply_oracle_phase(std::move(s), zero, 1.0);
    EXPECT_EQ(zero.query_count(), 4u);
}

TEST(oracle, factorizability_examples) {
    for (Bits item = 0; item < 64; ++item) {
        EXPECT_TRUE(factorizability_check({6, {item}}, make_layout(6, 1)));
    }
    const std::vector<StageRange> pairs = {{0, 2}, {2, 2}};
    EXPECT_FALSE(factorizability_check({4, {0b0000, 0b1111}}, pairs));

    // Independent oracle: enumerate the product set by brute force.
    const MarkedSet product{4, {0b0001, 0b0010, 0b1101, 0b1110}};
    std::set<Bits> brute;
    for (Bits hi : {0b00u, 0b11u}) {
        for (Bits lo : {0b01u, 0b10u}) {
            brute.insert((hi << 2) | lo);
        }
    }
    EXPECT_EQ(brute, std::set<Bits>(product.items.begin(), product.items.end()));
    EXPECT_TRUE(factorizability_check(product, pairs));
    EXPECT_TRUE(factorizability_check(product, make_layout_with_first_width(4, 2)));
}

TEST(oracle, prefix_nesting_and_exactness) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 9);
        const int m = 1 + static_cast<int>(rng() % 16);
        if (4 * m > (1 << n)) {
            continue;
        }
        const auto layout = make_layout(n, m);
        const auto valid = random_marked_set(n, m, rng());
        ASSERT_TRUE(valid.has_value());
        for (int k = 1; k <= layout.stage_count(); ++k) {
            const Suboracle fk = synthesize(*valid, layout, k);
            int accepted = 0;
            for (Bits y = 0; y < (Bits{1} << fk.width()); ++y) {
                // Brute force: scan the marked set directly.
                bool direct = false;
                for (Bits t : valid->items) {
                    direct = direct || (t & ((Bits{1} << fk.width()) - 1)) == y;
                }
                EXPECT_EQ(fk.accepts(y), direct);
                accepted += fk.accepts(y) ? 1 : 0;
                if (k > 1 && fk.accepts(y)) {
                    const Suboracle prev = synthesize(*valid, layout, k - 1);
                    EXPECT_TRUE(prev.accepts(y));
                }
            }
            EXPECT_EQ(accepted, m);
        }
    }
}

TEST(oracle, collisions_reduce_accepted_count) {
    const MarkedSet colliding{6, {0b000101, 0b111101, 0b010011}};
    const auto layout = make_layout(6, 3);
    const Suboracle f1 = synthesize(colliding, layout, 1, true);
    int accepted = 0;
    for (Bits y = 0; y < 8; ++y) {
        accepted += f1.accepts(y) ? 1 : 0;
    }
    EXPECT_LT(accepted, 3);
}

TEST(oracle, constructor_rejects_wide_values) {
    EXPECT_THROW(Suboracle(1, 2, {4}), ArgumentError);
}
