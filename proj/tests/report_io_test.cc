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

#include "subgrover/report_io.h"

#include <sstream>

#include "gtest/gtest.h"

using namespace subgrover;

TEST(report_io, validation_json) {
    const ValidationReport r = validate({5, {0b00101, 0b11101}}, make_layout(5, 2));
    const auto j = to_json(r);
    EXPECT_EQ(j["ok"], false);
    EXPECT_EQ(j["collisions"], (nlohmann::json{{0, 1}}));
    EXPECT_TRUE(j["messages"].is_array());
}

TEST(report_io, suboracle_json) {
    const MarkedSet marked{5, {0b10110, 0b01001}};
    const Suboracle f1 = synthesize(marked, make_layout(5, 2), 1, false);
    EXPECT_EQ(to_json(f1), (nlohmann::json{{"k", 1}, {"width", 3}, {"accepted", {"0b001", "0b110"}}}));
}

TEST(report_io, plan_json_fields) {
    const Plan p = plan(10, {10, {0b1011001101}}, {});
    const auto without = to_json(p, false);
    EXPECT_FALSE(without.contains("oracles"));
    for (const char *key : {"n", "M", "n0", "eta", "tail_width", "stage_ranges", "phi1",
                            "stage_count", "predicted_queries", "permutation", "marked",
                            "validation"}) {
        EXPECT_TRUE(without.contains(key)) << key;
    }
    EXPECT_EQ(without["stage_count"], 5);
    EXPECT_EQ(without["marked"][0], "0b1011001101");
    const auto with = to_json(p, true);
    ASSERT_EQ(with["oracles"].size(), 5u);
    EXPECT_EQ(with["oracles"][4]["width"], 10);
}

TEST(report_io, run_json_omits_wall_time_by_default) {
    const RunReport r = run(plan(5, {5, {0b10110, 0b01001}}, {}));
    EXPECT_FALSE(to_json(r, false).contains("wall_time"));
    EXPECT_TRUE(to_json(r, true).contains("wall_time"));
    EXPECT_EQ(to_json(r, false)["per_stage"][1]["queries_so_far"], 2);
}

TEST(report_io, csv_headers) {
    std::ostringstream sweep_csv;
    write_csv(sweep_csv, std::vector<SweepRow>{});
    EXPECT_EQ(sweep_csv.str(),
              "n,M,n0,stages,queries,success,baseline_queries,baseline_success,status,seed\n");

    std::ostringstream baseline_csv;
    write_csv(baseline_csv, run_baseline(5, {5, {3}}));
    EXPECT_TRUE(baseline_csv.str().starts_with("N,M,theta,iterations,success,queries_used\n32,1,"));
}

TEST(report_io, plan_text) {
    std::ostringstream out;
    write_text(out, plan(10, {10, {0b1011001101}}, {}), true);
    EXPECT_NE(out.str().find("n0=2, stages=5, phi=3.141593, queries=5"), std::string::npos);
    EXPECT_NE(out.str().find("f_1 width=2 accepted={0b01}"), std::string::npos) << out.str();
}
