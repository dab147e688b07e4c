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

#include "subgrover/statevector.h"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <string>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "subgrover/register.h"

namespace subgrover {

namespace {

constexpr double kUnitNormTolerance = 1e-12;
constexpr double kDumpThreshold = 1e-14;

std::vector<std::uint8_t> tabulate(const BasisPredicate &pred, int m) {
    std::vector<std::uint8_t> table(std::size_t{1} << m);
    for (std::size_t y = 0; y < table.size(); ++y) {
        table[y] = pred(y) ? 1 : 0;
    }
    return table;
}

void require_width(int m, int n) {
    if (m < 0 || m > n) {
        throw DimensionError(fmt::format("subspace width {} exceeds register width {}", m, n));
    }
}

}  // namespace

int max_qubits() {
    const char *env = std::getenv("SUBGROVER_MAX_QUBITS");
    if (env == nullptr || *env == '\0') {
        return kDefaultMaxQubits;
    }
    char *end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 40) {
        throw ArgumentError(fmt::format("SUBGROVER_MAX_QUBITS='{}' is not an integer in [1, 40]", env));
    }
    return static_cast<int>(v);
}

StateVector uniform_state(int n) {
    if (n < 1) {
        throw ArgumentError(fmt::format("qubit count must be >= 1, got {}", n));
    }
    if (n > max_qubits()) {
        throw CapacityError(fmt::format("{} qubits exceeds the cap of {}", n, max_qubits()));
    }
    const std::size_t dim = std::size_t{1} << n;
    return StateVector(n, std::vector<Complex>(dim, Complex(std::pow(2.0, -0.5 * n), 0.0)));
}

StateVector basis_state(int n, std::uint64_t index) {
    StateVector out = StateVector::zero(n);
    out[index] = 1.0;
    return out;
}

SubspaceVector uniform_subspace(int m) {
    const std::size_t dim = std::size_t{1} << m;
    return SubspaceVector(m, std::vector<Complex>(dim, Complex(std::pow(2.0, -0.5 * m), 0.0)));
}

StateVector apply_diagonal_phase(StateVector state, const BasisPredicate &pred, int m, double phi) {
    require_width(m, state.qubits());
    return apply_diagonal_phase(std::move(state), tabulate(pred, m), phi);
}

StateVector apply_diagonal_phase(StateVector state, std::span<const std::uint8_t> accept, double phi) {
    if (accept.empty() || !std::has_single_bit(accept.size()) || accept.size() > state.dimension()) {
        throw DimensionError("acceptance table must have 2^m entries with m <= n");
    }
    const Complex phase = std::polar(1.0, phi);
    const std::size_t mask = accept.size() - 1;
    auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (accept[i & mask] != 0) {
            amps[i] *= phase;
        }
    }
    return state;
}

StateVector apply_rank1_phase(StateVector state, const SubspaceVector &a, double phi) {
    require_width(a.qubits(), state.qubits());
    if (std::abs(a.norm_squared() - 1.0) > kUnitNormTolerance) {
        throw ArgumentError("rank-1 phase vector is not unit norm");
    }
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < a.dimension(); ++j) {
        if (a[j] != Complex(0.0, 0.0)) {
            support.push_back(j);
        }
    }
    const Complex factor = std::polar(1.0, phi) - 1.0;
    const std::size_t block = a.dimension();
    auto amps = state.amplitudes();
    for (std::size_t base = 0; base < amps.size(); base += block) {
        Complex overlap = 0.0;
        for (std::size_t j : support) {
            overlap += std::conj(a[j]) * amps[base + j];
        }
        const Complex scale = factor * overlap;
        for (std::size_t j : support) {
            amps[base + j] += scale * a[j];
        }
    }
    return state;
}

namespace {

template <class V>
Complex inner(const V &x, const V &y) {
    if (x.qubits() != y.qubits()) {
        throw DimensionError(
            fmt::format("inner product of {}- and {}-qubit vectors", x.qubits(), y.qubits()));
    }
    Complex acc = 0.0;
    for (std::size_t i = 0; i < x.dimension(); ++i) {
        acc += std::conj(x[i]) * y[i];
    }
    return acc;
}

}  // namespace

Complex inner_product(const StateVector &x, const StateVector &y) { return inner(x, y); }

Complex inner_product(const SubspaceVector &x, const SubspaceVector &y) { return inner(x, y); }

double fidelity(const StateVector &x, const StateVector &y) { return std::norm(inner(x, y)); }

double off_support_mass(const StateVector &state, const BasisPredicate &pred, int m) {
    require_width(m, state.qubits());
    const auto table = tabulate(pred, m);
    const std::size_t mask = table.size() - 1;
    double mass = 0.0;
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (table[i & mask] == 0) {
            mass += std::norm(amps[i]);
        }
    }
    return mass;
}

StateVector project_onto_support(StateVector state, const BasisPredicate &pred, int m) {
    require_width(m, state.qubits());
    const auto table = tabulate(pred, m);
    const std::size_t mask = table.size() - 1;
    auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (table[i & mask] == 0) {
            amps[i] = 0.0;
        }
    }
    const double norm = std::sqrt(state.norm_squared());
    if (norm == 0.0) {
        throw NumericalIntegrityError("projection removed the entire state");
    }
    for (Complex &a : amps) {
        a /= norm;
    }
    return state;
}

StateVector embed_uniform_high(int n, const SubspaceVector &low) {
    require_width(low.qubits(), n);
    if (n > max_qubits()) {
        throw CapacityError(fmt::format("{} qubits exceeds the cap of {}", n, max_qubits()));
    }
    StateVector out = StateVector::zero(n);
    const double weight = std::pow(2.0, -0.5 * (n - low.qubits()));
    const std::size_t block = low.dimension();
    auto amps = out.amplitudes();
    for (std::size_t base = 0; base < amps.size(); base += block) {
        for (std::size_t j = 0; j < block; ++j) {
            amps[base + j] = weight * low[j];
        }
    }
    return out;
}

StateVector as_state(const SubspaceVector &v) {
    const auto amps = v.amplitudes();
    return StateVector(v.qubits(), std::vector<Complex>(amps.begin(), amps.end()));
}

void dump_state(std::ostream &out, const StateVector &state) {
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (std::abs(amps[i]) >= kDumpThreshold) {
            fmt::print(out, "{}\t{:.17g}\t{:.17g}\n", format_bitstring(i, state.qubits()),
                       amps[i].real(), amps[i].imag());
        }
    }
}

Eigen::VectorXcd to_eigen(std::span<const Complex> amps) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(amps.size()));
    for (std::size_t i = 0; i < amps.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = amps[i];
    }
    return v;
}

Eigen::MatrixXcd dense_operator(const DenseOperatorSpec &spec) {
    if (spec.m < 0 || spec.m > kMaxDenseQubits) {
        throw CapacityError(
            fmt::format("dense operator on {} qubits exceeds limit {}", spec.m, kMaxDenseQubits));
    }
    if (spec.reference.qubits() != spec.m) {
        throw DimensionError("reference vector width does not match operator width");
    }
    const Eigen::Index dim = Eigen::Index{1} << spec.m;
    const Complex factor = std::polar(1.0, spec.phi) - 1.0;
    const Eigen::MatrixXcd identity = Eigen::MatrixXcd::Identity(dim, dim);

    const Eigen::VectorXcd s = to_eigen(spec.reference.amplitudes());
    const Eigen::MatrixXcd diffusion = identity + factor * (s * s.adjoint());

    Eigen::MatrixXcd oracle = identity;
    if (spec.form == OracleForm::kDiagonal) {
        if (spec.accept.size() != static_cast<std::size_t>(dim)) {
            throw DimensionError("acceptance table size does not match operator width");
        }
        for (Eigen::Index y = 0; y < dim; ++y) {
            if (spec.accept[static_cast<std::size_t>(y)] != 0) {
                Eigen::VectorXcd e = Eigen::VectorXcd::Zero(dim);
                e(y) = 1.0;
                oracle += factor * (e * e.adjoint());
            }
        }
    } else {
        if (spec.marked.qubits() != spec.m) {
            throw DimensionError("marked vector width does not match operator width");
        }
        const Eigen::VectorXcd t = to_eigen(spec.marked.amplitudes());
        oracle += factor * (t * t.adjoint());
    }
    return -(diffusion * oracle);
}

double unitarity_defect(const Eigen::MatrixXcd &u) {
    const Eigen::MatrixXcd d = u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols());
    return d.cwiseAbs().maxCoeff();
}

}  // namespace subgrover
