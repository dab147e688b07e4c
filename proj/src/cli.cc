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

#include "subgrover/cli.h"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <nlohmann/json.hpp>

#include "subgrover/driver.h"
#include "subgrover/errors.h"
#include "subgrover/report_io.h"
#include "subgrover/verify.h"

namespace subgrover::cli {

namespace {

using nlohmann::json;

struct Config {
    std::optional<int> n;
    std::vector<std::string> marked;
    std::optional<int> random_marked;
    std::uint64_t seed = 0;
    std::string mode;
    std::string output = "text";
    bool dump_state = false;
    bool emit_oracles = false;
    bool timing = false;
    bool project = false;
    // sweep
    std::string n_values;
    std::string m_values;
    int trials = 1;
    // verify
    int max_n = 10;
    double inject_phase_error = 0.0;
    // baseline
    bool compare = false;
};

std::vector<std::string> split_commas(const std::string &text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) {
            out.push_back(item);
        }
    }
    return out;
}

std::string list_or_string(const json &v) {
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_number_integer()) {
        return std::to_string(v.get<long long>());
    }
    std::vector<std::string> parts;
    for (const json &e : v) {
        parts.push_back(e.is_string() ? e.get<std::string>() : std::to_string(e.get<long long>()));
    }
    return fmt::format("{}", fmt::join(parts, ","));
}

void load_config_file(const std::string &path, Config &cfg) {
    std::ifstream in(path);
    if (!in) {
        throw ArgumentError(fmt::format("cannot open config file '{}'", path));
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception &e) {
        throw ArgumentError(fmt::format("config file '{}': {}", path, e.what()));
    }
    try {
        if (j.contains("n")) cfg.n = j["n"].get<int>();
        if (j.contains("marked")) {
            const json &m = j["marked"];
            if (m.is_string() && m.get<std::string>() == "random") {
                cfg.random_marked = j.value("M", 0);
            } else if (m.is_array()) {
                cfg.marked.clear();
                for (const json &e : m) {
                    cfg.marked.push_back(e.is_string() ? e.get<std::string>()
                                                       : std::to_string(e.get<long long>()));
                }
            } else {
                cfg.marked = split_commas(list_or_string(m));
            }
        }
        if (j.contains("random_marked")) cfg.random_marked = j["random_marked"].get<int>();
        if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("mode")) cfg.mode = j["mode"].get<std::string>();
        if (j.contains("output")) cfg.output = j["output"].get<std::string>();
        if (j.contains("dump_state")) cfg.dump_state = j["dump_state"].get<bool>();
        if (j.contains("emit_oracles")) cfg.emit_oracles = j["emit_oracles"].get<bool>();
        if (j.contains("n_values")) cfg.n_values = list_or_string(j["n_values"]);
        if (j.contains("m_values")) cfg.m_values = list_or_string(j["m_values"]);
        if (j.contains("trials")) cfg.trials = j["trials"].get<int>();
        if (j.contains("max_n")) cfg.max_n = j["max_n"].get<int>();
    } catch (const json::exception &e) {
        throw ArgumentError(fmt::format("config file '{}': {}", path, e.what()));
    }
}

PlanOptions plan_options(const Config &cfg) {
    PlanOptions options;
    if (cfg.mode.empty()) {
        return options;
    }
    if (cfg.mode == "strict") {
        options.strict_parity = true;
    } else if (cfg.mode == "permute") {
        options.policy = PrefixPolicy::kPermute;
    } else if (cfg.mode == "unsafe") {
        options.policy = PrefixPolicy::kUnsafe;
    } else {
        throw ArgumentError(fmt::format("unknown mode '{}'", cfg.mode));
    }
    return options;
}

int require_n(const Config &cfg) {
    if (!cfg.n) {
        throw ArgumentError("-n is required");
    }
    return *cfg.n;
}

// Returns nullopt when a random draw cannot satisfy the prefix requirement.
std::optional<MarkedSet> resolve_marked(const Config &cfg, const PlanOptions &options) {
    const int n = require_n(cfg);
    if (cfg.random_marked && !cfg.marked.empty()) {
        throw ArgumentError("--marked and --random-marked are mutually exclusive");
    }
    if (cfg.random_marked) {
        auto marked = random_marked_set(n, *cfg.random_marked, cfg.seed);
        if (!marked && options.policy != PrefixPolicy::kReject) {
            marked = random_distinct_items(n, *cfg.random_marked, cfg.seed);
        }
        return marked;
    }
    if (cfg.marked.empty()) {
        throw ArgumentError("one of --marked or --random-marked is required");
    }
    MarkedSet marked{n, {}};
    for (const std::string &s : cfg.marked) {
        marked.items.push_back(parse_bitstring(s, n));
    }
    return marked;
}

void check_output(const Config &cfg) {
    if (cfg.output != "text" && cfg.output != "json" && cfg.output != "csv") {
        throw ArgumentError(fmt::format("unknown output format '{}'", cfg.output));
    }
}

int report_rejection(const Config &cfg, const PlanRejected &e, std::ostream &out,
                     std::ostream &err) {
    if (cfg.output == "json") {
        out << json{{"error", "validation"}, {"validation", to_json(e.report())}}.dump(2) << "\n";
    } else {
        fmt::print(out, "validation failed\n");
        for (const auto &[a, b] : e.report().collisions) {
            fmt::print(out, "collision ({},{})\n", a, b);
        }
        for (const std::string &m : e.report().messages) {
            fmt::print(out, "  {}\n", m);
        }
    }
    fmt::print(err, "error: {}\n", e.what());
    return kValidationFailed;
}

// Builds the plan, mapping plan-level failures to exit codes. Returns nullopt
// after reporting when the command should stop.
std::optional<Plan> make_plan(const Config &cfg, std::ostream &out, std::ostream &err, int &code) {
    const PlanOptions options = plan_options(cfg);
    const auto marked = resolve_marked(cfg, options);
    if (!marked) {
        fmt::print(err, "error: no valid marked set within {} draws (needs-permutation)\n",
                   kRejectionCap);
        code = kValidationFailed;
        return std::nullopt;
    }
    try {
        return plan(require_n(cfg), *marked, options);
    } catch (const PlanRejected &e) {
        code = report_rejection(cfg, e, out, err);
    } catch (const NotFoundError &e) {
        fmt::print(err, "error: {}\n", e.what());
        code = kValidationFailed;
    } catch (const ParityError &e) {
        fmt::print(err, "error: {}\n", e.what());
        code = kValidationFailed;
    }
    return std::nullopt;
}

int cmd_plan(const Config &cfg, std::ostream &out, std::ostream &err) {
    int code = kOk;
    const auto p = make_plan(cfg, out, err, code);
    if (!p) {
        return code;
    }
    if (cfg.output == "json") {
        out << to_json(*p, cfg.emit_oracles).dump(2) << "\n";
    } else if (cfg.output == "csv") {
        write_csv(out, *p);
    } else {
        write_text(out, *p, cfg.emit_oracles);
    }
    return kOk;
}

int cmd_run(const Config &cfg, std::ostream &out, std::ostream &err) {
    int code = kOk;
    const auto p = make_plan(cfg, out, err, code);
    if (!p) {
        return code;
    }
    RunOptions options;
    options.keep_state = cfg.dump_state;
    options.project = cfg.project;
    const RunReport report = run(*p, options);
    if (cfg.output == "json") {
        out << to_json(report, cfg.timing).dump(2) << "\n";
    } else if (cfg.output == "csv") {
        write_csv(out, report);
    } else {
        write_text(out, report, cfg.timing);
    }
    if (report.final_state) {
        dump_state(out, *report.final_state);
    }
    return report.final_success >= 1.0 - kCertaintyTolerance ? kOk : kNotCertain;
}

int cmd_baseline(const Config &cfg, std::ostream &out, std::ostream &err) {
    const PlanOptions options = plan_options(cfg);
    const auto marked = resolve_marked(cfg, options);
    if (!marked) {
        fmt::print(err, "error: no valid marked set within {} draws\n", kRejectionCap);
        return kValidationFailed;
    }
    const BaselineReport baseline = run_baseline(require_n(cfg), *marked);
    if (!cfg.compare) {
        if (cfg.output == "json") {
            out << to_json(baseline).dump(2) << "\n";
        } else if (cfg.output == "csv") {
            write_csv(out, baseline);
        } else {
            write_text(out, baseline);
        }
        return kOk;
    }
    int code = kOk;
    const auto p = make_plan(cfg, out, err, code);
    if (!p) {
        return code;
    }
    const ComparisonSummary summary = compare(run(*p), baseline);
    if (cfg.output == "json") {
        out << to_json(summary).dump(2) << "\n";
    } else if (cfg.output == "csv") {
        write_csv(out, summary);
    } else {
        write_text(out, summary);
    }
    return kOk;
}

int cmd_sweep(const Config &cfg, std::ostream &out) {
    SweepConfig sc;
    sc.n_values = parse_int_list(cfg.n_values);
    sc.m_values = parse_int_list(cfg.m_values);
    if (sc.n_values.empty() || sc.m_values.empty()) {
        throw ArgumentError("sweep needs nonempty --n-values and --m-values");
    }
    sc.seed = cfg.seed;
    sc.trials = cfg.trials;
    sc.options = plan_options(cfg);
    const auto rows = sweep(sc);
    if (cfg.output == "json") {
        out << to_json(rows).dump(2) << "\n";
    } else if (cfg.output == "csv") {
        write_csv(out, rows);
    } else {
        write_text(out, rows);
    }
    return kOk;
}

int cmd_verify(const Config &cfg, std::ostream &out, std::ostream &err) {
    VerifyConfig vc;
    vc.max_n = cfg.max_n;
    vc.phase_error = cfg.inject_phase_error;
    vc.seed = cfg.seed == 0 ? 1 : cfg.seed;
    const auto results = run_property_suite(vc);
    const PropertyResult *first_failure = nullptr;
    for (const PropertyResult &r : results) {
        fmt::print(out, "{:<4}  {:<22} {}\n", r.passed ? "PASS" : "FAIL", r.name, r.detail);
        if (!r.passed && first_failure == nullptr) {
            first_failure = &r;
        }
    }
    if (first_failure != nullptr) {
        fmt::print(err, "first failing property: {}\n", first_failure->name);
        return kVerifyFailed;
    }
    return kOk;
}

}  // namespace

std::vector<int> parse_int_list(const std::string &text) {
    std::vector<int> out;
    for (const std::string &part : split_commas(text)) {
        const auto dash = part.find('-', 1);
        try {
            std::size_t used = 0;
            if (dash == std::string::npos) {
                out.push_back(std::stoi(part, &used));
                if (used != part.size()) {
                    throw ArgumentError("");
                }
            } else {
                const std::string lo_text = part.substr(0, dash);
                const std::string hi_text = part.substr(dash + 1);
                const int lo = std::stoi(lo_text, &used);
                if (used != lo_text.size()) {
                    throw ArgumentError("");
                }
                const int hi = std::stoi(hi_text, &used);
                if (used != hi_text.size() || hi < lo) {
                    throw ArgumentError("");
                }
                for (int v = lo; v <= hi; ++v) {
                    out.push_back(v);
                }
            }
        } catch (const std::logic_error &) {
            throw ArgumentError(fmt::format("malformed integer list item '{}'", part));
        }
    }
    return out;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Subgrouped multi-object quantum search simulator", "subgrover"};
    app.require_subcommand(1);

    Config cfg;
    std::string config_path;
    int n = 0;
    std::vector<std::string> marked;
    int random_marked = 0;
    std::uint64_t seed = 0;
    std::string mode;
    std::string output;
    std::string n_values;
    std::string m_values;
    int trials = 1;
    int max_n = 10;
    double inject = 0.0;

    auto *opt_config = app.add_option("--config", config_path, "JSON config file; flags override it");
    auto *opt_n = app.add_option("-n", n, "Qubit count");
    auto *opt_marked = app.add_option("--marked", marked, "Comma-separated marked bitstrings")
                           ->delimiter(',');
    auto *opt_random = app.add_option("--random-marked", random_marked, "Draw M random marked items");
    auto *opt_seed = app.add_option("--seed", seed, "64-bit seed");
    auto *opt_mode = app.add_option("--mode", mode, "strict|permute|unsafe");
    auto *opt_output = app.add_option("-o,--output", output, "text|json|csv");
    auto *opt_dump = app.add_flag("--dump-state", "Print the final state amplitudes");
    auto *opt_emit = app.add_flag("--emit-oracles", "Include synthesized oracles");
    auto *opt_timing = app.add_flag("--timing", "Include wall time in run reports");
    auto *opt_project = app.add_flag("--project", "Zero off-support amplitudes after each stage");

    auto *plan_cmd = app.add_subcommand("plan", "Show the layout, phase and oracles");
    auto *run_cmd = app.add_subcommand("run", "Run the subgrouped search");
    auto *baseline_cmd = app.add_subcommand("baseline", "Run standard multi-target Grover");
    auto *opt_compare = baseline_cmd->add_flag("--compare", "Also run the subgrouped search");
    auto *sweep_cmd = app.add_subcommand("sweep", "Tabulate queries and success over (n, M)");
    auto *opt_nv = sweep_cmd->add_option("--n-values", n_values, "e.g. 6,8,10 or 4-12");
    auto *opt_mv = sweep_cmd->add_option("--m-values", m_values, "e.g. 1,2,4 or 1-16");
    auto *opt_trials = sweep_cmd->add_option("--trials", trials, "Random sets per cell");
    auto *verify_cmd = app.add_subcommand("verify", "Run the property suite");
    auto *opt_max_n = verify_cmd->add_option("--max-n", max_n, "Largest register checked");
    auto *opt_inject = verify_cmd->add_option("--inject-phase-error", inject,
                                              "Perturb the stage-1 phase (radians)");
    for (CLI::App *sub : {plan_cmd, run_cmd, baseline_cmd, sweep_cmd, verify_cmd}) {
        sub->fallthrough();
    }

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back("subgrover");
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const std::string &a : argv_storage) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        if (opt_config->count() > 0) {
            load_config_file(config_path, cfg);
        }
        if (opt_n->count() > 0) cfg.n = n;
        if (opt_marked->count() > 0) cfg.marked = marked;
        if (opt_random->count() > 0) cfg.random_marked = random_marked;
        if (opt_seed->count() > 0) cfg.seed = seed;
        if (opt_mode->count() > 0) cfg.mode = mode;
        if (opt_output->count() > 0) cfg.output = output;
        if (opt_dump->count() > 0) cfg.dump_state = true;
        if (opt_emit->count() > 0) cfg.emit_oracles = true;
        if (opt_timing->count() > 0) cfg.timing = true;
        if (opt_project->count() > 0) cfg.project = true;
        if (opt_nv->count() > 0) cfg.n_values = n_values;
        if (opt_mv->count() > 0) cfg.m_values = m_values;
        if (opt_trials->count() > 0) cfg.trials = trials;
        if (opt_max_n->count() > 0) cfg.max_n = max_n;
        if (opt_inject->count() > 0) cfg.inject_phase_error = inject;
        if (opt_compare->count() > 0) cfg.compare = true;
        check_output(cfg);
        plan_options(cfg);

        if (plan_cmd->parsed()) return cmd_plan(cfg, out, err);
        if (run_cmd->parsed()) return cmd_run(cfg, out, err);
        if (baseline_cmd->parsed()) return cmd_baseline(cfg, out, err);
        if (sweep_cmd->parsed()) return cmd_sweep(cfg, out);
        return cmd_verify(cfg, out, err);
    } catch (const NumericalIntegrityError &e) {
        fmt::print(err, "error: {}\n", e.what());
        return kNumericalIntegrity;
    } catch (const ValidationError &e) {
        fmt::print(err, "error: {}\n", e.what());
        return kValidationFailed;
    } catch (const std::exception &e) {
        fmt::print(err, "error: {}\n", e.what());
        return kBadInput;
    }
}

}  // namespace subgrover::cli
