// Copyright 2026 The qmoney Authors
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

#ifndef QMONEY_STATESIM_H
#define QMONEY_STATESIM_H

#include <complex>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qmoney/codes.h"
#include "qmoney/gf2.h"

namespace qmoney {

using cplx = std::complex<double>;

constexpr size_t kMaxPureQubits = 20;
constexpr size_t kMaxMixedQubits = 14;
constexpr double kInvariantTol = 1e-9;
constexpr double kExactTol = 1e-12;

/// Exact 2^n amplitude vector. Index b is the basis string whose coordinate
/// i is bit i of b (see BitVec).
class DenseState {
  public:
    DenseState() = default;
    /// |0...0>. Throws BudgetExceeded above max_qubits.
    explicit DenseState(size_t num_qubits, size_t max_qubits = kMaxPureQubits);
    /// Takes ownership of amplitudes (size must be a power of two). No
    /// normalization is performed or checked.
    DenseState(size_t num_qubits, std::vector<cplx> amplitudes);

    static DenseState basis(size_t num_qubits, uint64_t index);
    static DenseState basis(const BitVec &x);

    size_t num_qubits() const {
        return num_qubits_;
    }
    size_t dimension() const {
        return amps_.size();
    }
    const std::vector<cplx> &amplitudes() const {
        return amps_;
    }
    std::vector<cplx> &amplitudes() {
        return amps_;
    }
    cplx operator[](size_t i) const {
        return amps_[i];
    }
    cplx &operator[](size_t i) {
        return amps_[i];
    }

    double norm_squared() const;
    bool is_normalized(double tol = kInvariantTol) const;
    /// Divides by the norm; throws std::domain_error on the zero vector.
    DenseState normalized() const;
    /// |this> ⊗ |other>, with this occupying the low qubits (leftmost text).
    DenseState tensor(const DenseState &other) const;
    /// max_b |a_b - b_b|.
    double max_deviation(const DenseState &other) const;

  private:
    size_t num_qubits_ = 0;
    std::vector<cplx> amps_;
};

/// X^e Z^{e'} |C> times a ±1 phase. `spec` may be null for a label read from
/// a file before its code has been resolved.
struct CosetLabel {
    std::shared_ptr<const CodeSpec> spec;
    BitVec e;
    BitVec e_prime;
    int sign = 1;

    /// Both error weights within the spec's tolerance.
    bool tolerated() const;
};

/// Dense density matrix, row-major 2^n x 2^n.
class MixedState {
  public:
    MixedState() = default;
    MixedState(size_t num_qubits, std::vector<cplx> matrix);

    static MixedState from_pure(const DenseState &psi);
    static MixedState maximally_mixed(size_t num_qubits);

    size_t num_qubits() const {
        return num_qubits_;
    }
    size_t dimension() const {
        return size_t{1} << num_qubits_;
    }
    cplx at(size_t r, size_t c) const {
        return matrix_[r * dimension() + c];
    }
    const std::vector<cplx> &matrix() const {
        return matrix_;
    }
    /// <psi| rho |psi>.
    double expectation(const DenseState &psi) const;
    /// Trace-one and Hermitian within tol.
    bool is_valid(double tol = kInvariantTol) const;

  private:
    size_t num_qubits_ = 0;
    std::vector<cplx> matrix_;
};

/// Uniform superposition over the subspace.
DenseState subspace_state(const SubspaceBasis &s, size_t max_qubits = kMaxPureQubits);
DenseState coset_to_dense(const CosetLabel &label, size_t max_qubits = kMaxPureQubits);

/// X^e Z^{e'} applied to st: amp'[b ^ e] = (-1)^{b.e'} amp[b].
DenseState apply_pauli(const DenseState &st, const BitVec &e, const BitVec &e_prime);
/// In-place form of apply_pauli on a raw amplitude span of n qubits.
void apply_pauli_in_place(std::span<cplx> amps, uint64_t e, uint64_t e_prime);

/// Normalized Walsh-Hadamard transform on all qubits.
DenseState hadamard_all(const DenseState &st);
/// Walsh-Hadamard on qubits [offset, offset + count) of a raw vector.
void hadamard_range_in_place(std::span<cplx> amps, size_t offset, size_t count);

/// <a|b>. Throws std::invalid_argument on size mismatch.
cplx inner(const DenseState &a, const DenseState &b);

/// sqrt(sum_i |<basis_i|psi>|^2). Throws std::invalid_argument unless the
/// basis states are orthonormal within 1e-9.
double fidelity_with_span(const DenseState &psi, std::span<const DenseState> basis_states);
/// sqrt(sum_i <basis_i|rho|basis_i>).
double fidelity_with_span(const MixedState &rho, std::span<const DenseState> basis_states);
/// F between pure states = |<a|b>|.
double fidelity(const DenseState &a, const DenseState &b);

/// All |C_{e,e'}> for (e, e') in E_q, ordered by (index(e), index(e')).
std::vector<DenseState> tolerated_basis(const CodeSpec &spec, size_t max_qubits = kMaxPureQubits);

/// One line per nonzero amplitude, "<bits> <re> <im>", sorted by bit string,
/// 17 significant digits, LF terminated.
std::string dump_state(const DenseState &st);
DenseState parse_state(size_t num_qubits, const std::string &text);

/// Gaussian-amplitude random pure state (unitarily invariant distribution).
DenseState random_state(size_t num_qubits, Rng &rng);

}  // namespace qmoney

#endif
