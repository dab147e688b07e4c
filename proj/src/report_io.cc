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

#include <fmt/format.h>
#include <fmt/ostream.h>

namespace subgrover {

using nlohmann::json;

json to_json(const ValidationReport &report) {
    json collisions = json::array();
    for (const auto &[a, b] : report.collisions) {
        collisions.push_back({a, b});
    }
    return {{"ok", report.ok}, {"collisions", collisions}, {"messages", report.messages}};
}

json to_json(const Suboracle &oracle) {
    json accepted = json::array();
    for (Bits p : oracle.prefix_set()) {
        accepted.push_back(format_bitstring(p, oracle.width()));
    }
    return {{"k", oracle.k()}, {"width", oracle.width()}, {"accepted", accepted}};
}

std::vector<Suboracle> plan_oracles(const Plan &plan) {
    std::vector<Suboracle> out;
    for (int k = 1; k <= plan.stage_count; ++k) {
        out.push_back(synthesize(plan.marked, plan.layout, k, plan.unsafe()));
    }
    return out;
}

json to_json(const Plan &plan, bool emit_oracles) {
    json ranges = json::array();
    for (const StageRange &r : plan.layout.stage_ranges) {
        ranges.push_back({{"low_bit", r.low_bit}, {"width", r.width}});
    }
    json marked = json::array();
    for (Bits item : plan.original.items) {
        marked.push_back(format_bitstring(item, plan.n()));
    }
    json j = {
        {"n", plan.n()},
        {"M", plan.marked.size()},
        {"n0", plan.layout.n0},
        {"eta", plan.layout.eta},
        {"tail_width", plan.layout.tail_width},
        {"stage_ranges", ranges},
        {"phi1", plan.phi1},
        {"stage_count", plan.stage_count},
        {"predicted_queries", plan.predicted_queries},
        {"permutation", plan.permutation.source},
        {"marked", marked},
        {"validation", to_json(plan.validation)},
    };
    if (emit_oracles) {
        json oracles = json::array();
        for (const Suboracle &o : plan_oracles(plan)) {
            oracles.push_back(to_json(o));
        }
        j["oracles"] = oracles;
    }
    return j;
}

json to_json(const RunReport &report, bool include_wall_time) {
    json stages = json::array();
    for (const StageRecord &s : report.per_stage) {
        stages.push_back({
            {"k", s.k},
            {"width", s.width},
            {"fidelity_to_closed_form", s.fidelity_to_closed_form},
            {"off_support", s.off_support},
            {"reference_fidelity", s.reference_fidelity},
            {"queries_so_far", s.queries_so_far},
        });
    }
    json j = {
        {"n", report.n},
        {"M", report.marked_count},
        {"stage_count", report.stage_count},
        {"per_stage", stages},
        {"final_success", report.final_success},
        {"queries_used", report.queries_used},
    };
    if (include_wall_time) {
        j["wall_time"] = report.wall_time;
    }
    return j;
}

json to_json(const BaselineReport &report) {
    return {
        {"N", report.N},
        {"M", report.M},
        {"theta", report.theta},
        {"iterations", report.iterations},
        {"success", report.success},
        {"closed_form_success", report.closed_form_success},
        {"queries_used", report.queries_used},
    };
}

json to_json(const ComparisonSummary &summary) {
    return {
        {"n", summary.n},
        {"M", summary.M},
        {"subgrouped", {{"queries", summary.subgrouped_queries}, {"success", summary.subgrouped_success}}},
        {"baseline", {{"queries", summary.baseline_queries}, {"success", summary.baseline_success}}},
        {"query_ratio", summary.query_ratio},
    };
}

json to_json(const std::vector<SweepRow> &rows) {
    json out = json::array();
    for (const SweepRow &r : rows) {
        out.push_back({
            {"n", r.n},
            {"M", r.M},
            {"n0", r.n0},
            {"stages", r.stages},
            {"queries", r.queries},
            {"success", r.success},
            {"baseline_queries", r.baseline_queries},
            {"baseline_success", r.baseline_success},
            {"status", r.status},
            {"seed", r.seed},
        });
    }
    return out;
}

void write_text(std::ostream &out, const Plan &plan, bool emit_oracles) {
    fmt::print(out, "n={}, M={}\n", plan.n(), plan.marked.size());
    fmt::print(out, "n0={}, eta={}, tail={}\n", plan.layout.n0, plan.layout.eta,
               plan.layout.tail_width);
    fmt::print(out, "n0={}, stages={}, phi={:.6f}, queries={}\n", plan.layout.n0,
               plan.stage_count, plan.phi1, plan.predicted_queries);
    if (!plan.permutation.is_identity()) {
        fmt::print(out, "permutation: {}\n", fmt::join(plan.permutation.source, " "));
    }
    for (std::size_t i = 0; i < plan.layout.stage_ranges.size(); ++i) {
        const StageRange &r = plan.layout.stage_ranges[i];
        fmt::print(out, "  stage {}: bits [{}, {})\n", i + 1, r.low_bit, r.low_bit + r.width);
    }
    if (!plan.validation.ok) {
        fmt::print(out, "validation: FAILED (unsafe)\n");
        for (const auto &[a, b] : plan.validation.collisions) {
            fmt::print(out, "  collision ({},{})\n", a, b);
        }
    }
    if (emit_oracles) {
        for (const Suboracle &o : plan_oracles(plan)) {
            std::vector<std::string> accepted;
            for (Bits p : o.prefix_set()) {
                accepted.push_back(format_bitstring(p, o.width()));
            }
            fmt::print(out, "  f_{} width={} accepted={{{}}}\n", o.k(), o.width(),
                       fmt::join(accepted, ", "));
        }
    }
}

void write_text(std::ostream &out, const RunReport &report, bool include_wall_time) {
    fmt::print(out, "n={}, M={}, stages={}\n", report.n, report.marked_count, report.stage_count);
    for (const StageRecord &s : report.per_stage) {
        fmt::print(out, "  stage {} (width {}): fidelity={:.12f} off_support={:.3e} queries={}\n",
                   s.k, s.width, s.fidelity_to_closed_form, s.off_support, s.queries_so_far);
    }
    fmt::print(out, "final_success={:.12f}\n", report.final_success);
    fmt::print(out, "queries_used={}\n", report.queries_used);
    if (include_wall_time) {
        fmt::print(out, "wall_time={:.6f}s\n", report.wall_time);
    }
}

void write_text(std::ostream &out, const BaselineReport &report) {
    fmt::print(out, "N={}, M={}, theta={:.6f}\n", report.N, report.M, report.theta);
    fmt::print(out, "iterations={}, success={:.12f} (closed form {:.12f}), queries={}\n",
               report.iterations, report.success, report.closed_form_success,
               report.queries_used);
}

void write_text(std::ostream &out, const ComparisonSummary &summary) {
    fmt::print(out, "n={}, M={}\n", summary.n, summary.M);
    fmt::print(out, "  subgrouped: {} queries @ {:.6f}\n", summary.subgrouped_queries,
               summary.subgrouped_success);
    fmt::print(out, "  baseline:   {} queries @ {:.6f}\n", summary.baseline_queries,
               summary.baseline_success);
    fmt::print(out, "  ratio:      {:.6f}\n", summary.query_ratio);
}

void write_text(std::ostream &out, const std::vector<SweepRow> &rows) {
    fmt::print(out, "{:>3} {:>3} {:>3} {:>6} {:>7} {:>14} {:>9} {:>14}  {}\n", "n", "M", "n0",
               "stages", "queries", "success", "baseline", "base_success", "status");
    for (const SweepRow &r : rows) {
        fmt::print(out, "{:>3} {:>3} {:>3} {:>6} {:>7} {:>14.12f} {:>9} {:>14.12f}  {}\n", r.n, r.M,
                   r.n0, r.stages, r.queries, r.success, r.baseline_queries, r.baseline_success,
                   r.status);
    }
}

void write_csv(std::ostream &out, const RunReport &report) {
    fmt::print(out, "k,width,fidelity_to_closed_form,off_support,queries_so_far\n");
    for (const StageRecord &s : report.per_stage) {
        fmt::print(out, "{},{},{:.15f},{:.6e},{}\n", s.k, s.width, s.fidelity_to_closed_form,
                   s.off_support, s.queries_so_far);
    }
}

void write_csv(std::ostream &out, const BaselineReport &report) {
    fmt::print(out, "N,M,theta,iterations,success,queries_used\n");
    fmt::print(out, "{},{},{:.15f},{},{:.15f},{}\n", report.N, report.M, report.theta,
               report.iterations, report.success, report.queries_used);
}

void write_csv(std::ostream &out, const ComparisonSummary &summary) {
    fmt::print(out,
               "n,M,subgrouped_queries,subgrouped_success,baseline_queries,baseline_success,"
               "query_ratio\n");
    fmt::print(out, "{},{},{},{:.15f},{},{:.15f},{:.6f}\n", summary.n, summary.M,
               summary.subgrouped_queries, summary.subgrouped_success, summary.baseline_queries,
               summary.baseline_success, summary.query_ratio);
}

void write_csv(std::ostream &out, const std::vector<SweepRow> &rows) {
    fmt::print(out, "n,M,n0,stages,queries,success,baseline_queries,baseline_success,status,seed\n");
    for (const SweepRow &r : rows) {
        fmt::print(out, "{},{},{},{},{},{:.15f},{},{:.15f},{},{}\n", r.n, r.M, r.n0, r.stages,
                   r.queries, r.success, r.baseline_queries, r.baseline_success, r.status, r.seed);
    }
}

void write_csv(std::ostream &out, const Plan &plan) {
    fmt::print(out, "n,M,n0,eta,tail_width,stages,phi1,predicted_queries,valid\n");
    fmt::print(out, "{},{},{},{},{},{},{:.6f},{},{}\n", plan.n(), plan.marked.size(),
               plan.layout.n0, plan.layout.eta, plan.layout.tail_width, plan.stage_count,
               plan.phi1, plan.predicted_queries, plan.validation.ok ? 1 : 0);
}

}  // namespace subgrover
