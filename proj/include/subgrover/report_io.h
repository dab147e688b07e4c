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

#include <ostream>
#include <vector>

#include <nlohmann/json.hpp>

#include "subgrover/driver.h"
#include "subgrover/oracle.h"

namespace subgrover {

// JSON field names follow the report type definitions and are considered
// stable. CSV column orders are fixed.

nlohmann::json to_json(const ValidationReport &report);
nlohmann::json to_json(const Suboracle &oracle);
nlohmann::json to_json(const Plan &plan, bool emit_oracles);
nlohmann::json to_json(const RunReport &report, bool include_wall_time);
nlohmann::json to_json(const BaselineReport &report);
nlohmann::json to_json(const ComparisonSummary &summary);
nlohmann::json to_json(const std::vector<SweepRow> &rows);

/// Synthesized f_1..f_K for a plan, in the run frame.
std::vector<Suboracle> plan_oracles(const Plan &plan);

void write_text(std::ostream &out, const Plan &plan, bool emit_oracles);
void write_text(std::ostream &out, const RunReport &report, bool include_wall_time);
void write_text(std::ostream &out, const BaselineReport &report);
void write_text(std::ostream &out, const ComparisonSummary &summary);
void write_text(std::ostream &out, const std::vector<SweepRow> &rows);

/// k,width,fidelity_to_closed_form,off_support,queries_so_far
void write_csv(std::ostream &out, const RunReport &report);
/// N,M,theta,iterations,success,queries_used
void write_csv(std::ostream &out, const BaselineReport &report);
/// n,M,subgrouped_queries,subgrouped_success,baseline_queries,baseline_success,query_ratio
void write_csv(std::ostream &out, const ComparisonSummary &summary);
/// n,M,n0,stages,queries,success,baseline_queries,baseline_success,status,seed
void write_csv(std::ostream &out, const std::vector<SweepRow> &rows);
/// n,M,n0,eta,tail_width,stages,phi1,predicted_queries,valid
void write_csv(std::ostream &out, const Plan &plan);

}  // namespace subgrover
