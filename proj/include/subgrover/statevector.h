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

#include <complex>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "subgrover/errors.h"

namespace subgrover {

using Complex = std::complex<double>;

/// Default register cap; SUBGROVER_MAX_QUBITS overrides it.
inline constexpr int kDefaultMaxQubits = 24;

/// Largest dense verification matrix, in qubits.
inline constexpr int kMaxDenseQubits = 10;

int max_qubits();

/// A flat array of 2^m amplitudes indexed by the integer value of the basis
/// bitstring. The tag keeps full-register states and low-qubit subspace
/// vectors from being mixed up.
template <class Tag>
class BasicVector {
  public:
    BasicVector() = default;

    BasicVector(int qubits, std::vector<Complex> amps) : qubits_(qubits), amps_(std::move(amps)) {
        if (qubits < 0 || qubits >= 63 || amps_.size() != (std::size_t{1} << qubits)) {
            throw DimensionError("amplitude count must be 2^qubits");
        }
    }

    static BasicVector zero(int qubits) {
        return BasicVector(qubits, std::vector<Complex>(std::size_t{1} << qubits));
    }

    int qubits() const { return qubits_; }
    std::size_t dimension() const { return amps_.size(); }

    std::span<const Complex> amplitudes() const { return amps_; }
    std::span<Complex> amplitudes() { return amps_; }

    const Complex &operator[](std::size_t i) const { return amps_[i]; }
    Complex &operator[](std::size_t i) { return amps_[i]; }

    /// Sum of |a_i|^2 accumulated in index order.
    double norm_squared() const {
        double acc = 0.0;
        for (const Complex &a : amps_) {
            acc += std::norm(a);
        }
        return acc;
    }

    bool operator==(const BasicVector &) const = default;

  private:
    int qubits_ = 0;
    std::vector<Complex> amps_;
};

using StateVector = BasicVector<struct RegisterTag>;
using SubspaceVector = BasicVector<struct SubspaceTag>;

/// Predicate over low-m-bit values.
using BasisPredicate = std::function<bool(std::uint64_t)>;

StateVector uniform_state(int n);

StateVector basis_state(int n, std::uint64_t index);

SubspaceVector uniform_subspace(int m);

/// Multiplies amplitude i by e^{i phi} iff pred(i mod 2^m). The predicate is
/// evaluated once per subspace value.
StateVector apply_diagonal_phase(StateVector state, const BasisPredicate &pred, int m, double phi);

/// Same as above with a precomputed acceptance table of size 2^m.
StateVector apply_diagonal_phase(StateVector state, std::span<const std::uint8_t> accept, double phi);

/// Applies (I + (e^{i phi} - 1)|a><a|) to the low a.qubits() qubits, identity
/// on the rest: every contiguous block b of 2^m amplitudes becomes
/// b + (e^{i phi} - 1) <a|b> a.
StateVector apply_rank1_phase(StateVector state, const SubspaceVector &a, double phi);

/// <x|y>, conjugating x.
Complex inner_product(const StateVector &x, const StateVector &y);
Complex inner_product(const SubspaceVector &x, const SubspaceVector &y);

/// |<x|y>|^2.
double fidelity(const StateVector &x, const StateVector &y);

/// Probability mass on basis states whose low m bits fail the predicate.
double off_support_mass(const StateVector &state, const BasisPredicate &pred, int m);

/// Zeroes every amplitude outside the predicate's support and renormalizes.
StateVector project_onto_support(StateVector state, const BasisPredicate &pred, int m);

/// |high uniform> (x) |low>, the low factor on the least significant bits.
StateVector embed_uniform_high(int n, const SubspaceVector &low);

StateVector as_state(const SubspaceVector &v);

/// Writes "bitstring\treal\timag" per amplitude with |a| >= 1e-14.
void dump_state(std::ostream &out, const StateVector &state);

Eigen::VectorXcd to_eigen(std::span<const Complex> amps);

enum class OracleForm {
    // Diagonal phase e^{i phi f(y)} on the accepted basis states.
    kDiagonal,
    // Rank-1 phase about the normalized marked superposition.
    kRank1,
};

/// Everything needed to write a stage operator
///   -(I + (e^{i phi} - 1)|s><s|) O
/// as an explicit matrix, where O is either the diagonal oracle phase or
/// (I + (e^{i phi} - 1)|tau><tau|).
struct DenseOperatorSpec {
    int m = 0;
    double phi = 0.0;
    SubspaceVector reference;
    OracleForm form = OracleForm::kDiagonal;
    std::vector<std::uint8_t> accept;  // kDiagonal
    SubspaceVector marked;             // kRank1
};

/// Explicit 2^m x 2^m matrix built from outer products. m <= kMaxDenseQubits.
Eigen::MatrixXcd dense_operator(const DenseOperatorSpec &spec);

/// max_ij |(U^dagger U - I)_ij|
double unitarity_defect(const Eigen::MatrixXcd &u);

}  // namespace subgrover
