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

#include "subgrover/verify.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <random>

#include <fmt/format.h>

#include "subgrover/driver.h"
#include "subgrover/grover.h"
#include "subgrover/oracle.h"
#include "subgrover/statevector.h"

namespace subgrover {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kDenseTol = 1e-10;
constexpr double kSuccessTol = 1e-9;
constexpr double kOffSupportTol = 1e-12;
constexpr int kDenseWidthLimit = 8;
constexpr int kMaxMarked = 16;

StateVector random_state(int n, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss;
    std::vector<Complex> amps(std::size_t{1} << n);
    double norm = 0.0;
    for (Complex &a : amps) {
        a = Complex(gauss(rng), gauss(rng));
        norm += std::norm(a);
    }
    for (Complex &a : amps) {
        a /= std::sqrt(norm);
    }
    return StateVector(n, std::move(amps));
}

double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

// Every (n, M) cell with 4M <= 2^n and M <= 16, n in [2, max_n].
std::vector<std::pair<int, int>> cells(int max_n) {
    std::vector<std::pair<int, int>> out;
    for (int n = 2; n <= max_n; ++n) {
        for (int m = 1; m <= kMaxMarked && 4 * m <= (1 << n); ++m) {
            out.emplace_back(n, m);
        }
    }
    return out;
}

struct Tracker {
    PropertyResult result;
    explicit Tracker(std::string name) { result.name = std::move(name); result.passed = true; }
    void fail(std::string detail) {
        if (result.passed) {
            result.passed = false;
            result.detail = std::move(detail);
        }
    }
};

// Stage operators for a handful of small valid plans whose widths fit the
// dense path.
std::vector<StageOperator> small_operators(int max_n, std::uint64_t seed) {
    std::vector<StageOperator> ops;
    const int limit = std::min(max_n, kDenseWidthLimit);
    for (const auto &[n, m] : cells(limit)) {
        if (m > 5 && m != 8) {
            continue;
        }
        const auto marked = random_marked_set(n, m, cell_seed(seed, n, m));
        if (!marked) {
            continue;
        }
        const SubgroupLayout layout = make_layout(n, m);
        for (int k = 1; k <= layout.stage_count(); ++k) {
            ops.push_back(make_stage_operator(*marked, layout, k));
        }
    }
    return ops;
}

PropertyResult norm_preservation(const VerifyConfig &config) {
    Tracker t("norm-preservation");
    std::mt19937_64 rng(config.seed);
    for (StageOperator op : small_operators(config.max_n, config.seed)) {
        const StateVector in = random_state(op.width, rng);
        const double a = apply_stage(in, op).norm_squared();
        const double b = apply_oracle_phase(in, op.oracle, op.phi).norm_squared();
        const double c = apply_rank1_phase(in, op.s_k, op.phi).norm_squared();
        for (double v : {a, b, c}) {
            if (std::abs(v - 1.0) > kNormTol) {
                t.fail(fmt::format("stage {} width {}: norm^2 = {:.17g}", op.k, op.width, v));
            }
        }
    }
    return t.result;
}

PropertyResult unitarity(const VerifyConfig &config) {
    Tracker t("unitarity");
    for (const StageOperator &op : small_operators(config.max_n, config.seed)) {
        for (OracleForm form : {OracleForm::kDiagonal, OracleForm::kRank1}) {
            const double defect = unitarity_defect(dense_operator(dense_spec(op, form)));
            if (defect > kDenseTol) {
                t.fail(fmt::format("stage {} width {}: defect {:.3e}", op.k, op.width, defect));
            }
        }
    }
    return t.result;
}

PropertyResult dense_equivalence(const VerifyConfig &config) {
    Tracker t("dense-equivalence");
    std::mt19937_64 rng(config.seed + 1);
    for (StageOperator op : small_operators(config.max_n, config.seed)) {
        const Eigen::MatrixXcd u = dense_operator(dense_spec(op, OracleForm::kDiagonal));
        for (int trial = 0; trial < 10; ++trial) {
            const StateVector in = random_state(op.width, rng);
            const Eigen::VectorXcd expected = u * to_eigen(in.amplitudes());
            const StateVector out = apply_stage(in, op);
            const std::vector<Complex> exp(expected.data(), expected.data() + expected.size());
            const double diff = max_abs_diff(out.amplitudes(), exp);
            if (diff > kDenseTol) {
                t.fail(fmt::format("stage {} width {}: diff {:.3e}", op.k, op.width, diff));
            }
        }
    }
    return t.result;
}

PropertyResult oracle_equivalence(const VerifyConfig &config) {
    Tracker t("oracle-equivalence");
    std::mt19937_64 rng(config.seed + 2);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.141592653589793);
    for (StageOperator op : small_operators(config.max_n, config.seed)) {
        // r = normalized component of s_k orthogonal to tau_k.
        const Complex overlap = inner_product(op.tau_k, op.s_k);
        std::vector<Complex> r(op.s_k.dimension());
        double rnorm = 0.0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            r[i] = op.s_k[i] - overlap * op.tau_k[i];
            rnorm += std::norm(r[i]);
        }
        if (rnorm < 1e-24) {
            continue;
        }
        const double mix = angle(rng);
        const Complex alpha = std::polar(std::cos(mix), angle(rng));
        const double beta = std::sin(mix);
        std::vector<Complex> amps(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) {
            amps[i] = alpha * op.tau_k[i] + beta * r[i] / std::sqrt(rnorm);
        }
        const StateVector in(op.width, std::move(amps));
        const StateVector diag = apply_oracle_phase(in, op.oracle, op.phi);
        const StateVector rank1 = apply_rank1_phase(in, op.tau_k, op.phi);
        const double diff = max_abs_diff(diag.amplitudes(), rank1.amplitudes());
        if (diff > kNormTol) {
            t.fail(fmt::format("stage {} width {}: diff {:.3e}", op.k, op.width, diff));
        }
    }
    return t.result;
}

PropertyResult stage1_certainty(const VerifyConfig &config) {
    Tracker t("stage1-certainty");
    for (int m = 1; m <= kMaxMarked; ++m) {
        // Smallest register holding 4M states; stage 1 still acts on n0 qubits.
        const int n = 64 - std::countl_zero(static_cast<std::uint64_t>(4 * m - 1));
        if (n > config.max_n) {
            continue;
        }
        const auto marked = random_marked_set(n, m, cell_seed(config.seed, n, m));
        if (!marked) {
            t.fail(fmt::format("M={}: no valid prefix set drawn", m));
            continue;
        }
        const SubgroupLayout layout = make_layout(n, m);
        const int n0 = layout.n0;
        StageOptions options;
        options.phase_offset = config.phase_error;
        StageOperator op = make_stage_operator(*marked, layout, 1, options);
        const StateVector out = apply_stage(uniform_state(n0), op);
        const double success = fidelity(as_state(op.tau_k), out);
        if (std::abs(success - 1.0) > kSuccessTol) {
            t.fail(fmt::format("M={} n0={}: |<tau1|out>|^2 = {:.12f}", m, n0, success));
        }
    }
    return t.result;
}

void end_to_end(const VerifyConfig &config, Tracker &certainty, Tracker &outlets,
                Tracker &formula) {
    PlanOptions options;
    options.phase_error = config.phase_error;
    for (const auto &[n, m] : cells(config.max_n)) {
        for (int s = 0; s < config.sets_per_cell; ++s) {
            const auto marked = random_marked_set(n, m, cell_seed(config.seed, n, m, s));
            if (!marked) {
                certainty.fail(fmt::format("n={} M={}: rejection cap reached", n, m));
                continue;
            }
            const Plan p = plan(n, *marked, options);
            const RunReport r = run(p);
            if (std::abs(r.final_success - 1.0) > kSuccessTol ||
                r.queries_used != static_cast<std::uint64_t>(p.stage_count)) {
                certainty.fail(fmt::format("n={} M={}: success {:.12f}, {} queries", n, m,
                                           r.final_success, r.queries_used));
            }
            for (const StageRecord &rec : r.per_stage) {
                if (rec.fidelity_to_closed_form < 1.0 - kSuccessTol ||
                    rec.off_support > kOffSupportTol) {
                    outlets.fail(fmt::format("n={} M={} stage {}: fidelity {:.12f}, off {:.3e}", n,
                                             m, rec.k, rec.fidelity_to_closed_form,
                                             rec.off_support));
                }
            }
            const int rest = n - p.layout.n0;
            if (rest % 2 == 0 && r.queries_used != static_cast<std::uint64_t>((rest + 2) / 2)) {
                formula.fail(fmt::format("n={} M={}: {} queries, formula {}", n, m,
                                         r.queries_used, (rest + 2) / 2));
            }
        }
    }
}

PropertyResult baseline_consistency(const VerifyConfig &config) {
    Tracker t("baseline-consistency");
    for (const auto &[n, m] : cells(config.max_n)) {
        if (m > 2) {
            continue;
        }
        try {
            run_baseline(n, random_distinct_items(n, m, cell_seed(config.seed, n, m)));
        } catch (const NumericalIntegrityError &e) {
            t.fail(e.what());
        }
    }
    return t.result;
}

}  // namespace

std::vector<PropertyResult> run_property_suite(const VerifyConfig &config) {
    if (config.max_n < 2) {
        throw ArgumentError(fmt::format("max_n must be >= 2, got {}", config.max_n));
    }
    std::vector<PropertyResult> results;
    results.push_back(norm_preservation(config));
    results.push_back(unitarity(config));
    results.push_back(dense_equivalence(config));
    results.push_back(oracle_equivalence(config));
    results.push_back(stage1_certainty(config));
    Tracker certainty("end-to-end-certainty");
    Tracker outlets("closed-form-outlets");
    Tracker formula("query-formula");
    end_to_end(config, certainty, outlets, formula);
    results.push_back(certainty.result);
    results.push_back(outlets.result);
    results.push_back(formula.result);
    results.push_back(baseline_consistency(config));
    return results;
}

}  // namespace subgrover
