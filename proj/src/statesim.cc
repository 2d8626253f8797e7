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

#include "qmoney/statesim.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qmoney/errors.h"

namespace qmoney {

namespace {

void check_budget(size_t num_qubits, size_t max_qubits) {
    if (num_qubits > max_qubits) {
        throw BudgetExceeded("dense state of " + std::to_string(num_qubits) + " qubits exceeds budget of " +
                             std::to_string(max_qubits));
    }
}

int parity_sign(uint64_t x) {
    return (std::popcount(x) & 1) ? -1 : 1;
}

}  // namespace

DenseState::DenseState(size_t num_qubits, size_t max_qubits) : num_qubits_(num_qubits) {
    check_budget(num_qubits, max_qubits);
    amps_.assign(size_t{1} << num_qubits, cplx(0));
    amps_[0] = 1;
}

DenseState::DenseState(size_t num_qubits, std::vector<cplx> amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
    if (num_qubits >= 63 || amps_.size() != (size_t{1} << num_qubits)) {
        throw std::invalid_argument("DenseState: amplitude count must be 2^num_qubits");
    }
}

DenseState DenseState::basis(size_t num_qubits, uint64_t index) {
    DenseState st(num_qubits);
    st.amps_[0] = 0;
    st.amps_.at(index) = 1;
    return st;
}

DenseState DenseState::basis(const BitVec &x) {
    return basis(x.size(), x.to_index());
}

double DenseState::norm_squared() const {
    double total = 0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

bool DenseState::is_normalized(double tol) const {
    return std::abs(norm_squared() - 1.0) <= tol;
}

DenseState DenseState::normalized() const {
    double nrm = std::sqrt(norm_squared());
    if (nrm == 0) {
        throw std::domain_error("cannot normalize the zero vector");
    }
    DenseState out = *this;
    for (auto &a : out.amps_) {
        a /= nrm;
    }
    return out;
}

DenseState DenseState::tensor(const DenseState &other) const {
    size_t total = num_qubits_ + other.num_qubits_;
    check_budget(total, kMaxPureQubits);
    std::vector<cplx> out(size_t{1} << total);
    for (size_t hi = 0; hi < other.amps_.size(); hi++) {
        if (other.amps_[hi] == cplx(0)) {
            continue;
        }
        for (size_t lo = 0; lo < amps_.size(); lo++) {
            out[lo | (hi << num_qubits_)] = amps_[lo] * other.amps_[hi];
        }
    }
    return DenseState(total, std::move(out));
}

double DenseState::max_deviation(const DenseState &other) const {
    if (other.amps_.size() != amps_.size()) {
        throw std::invalid_argument("max_deviation: size mismatch");
    }
    double worst = 0;
    for (size_t i = 0; i < amps_.size(); i++) {
        worst = std::max(worst, std::abs(amps_[i] - other.amps_[i]));
    }
    return worst;
}

bool CosetLabel::tolerated() const {
    return spec != nullptr && e.weight() <= spec->q && e_prime.weight() <= spec->q;
}

MixedState::MixedState(size_t num_qubits, std::vector<cplx> matrix)
    : num_qubits_(num_qubits), matrix_(std::move(matrix)) {
    check_budget(num_qubits, kMaxMixedQubits);
    size_t d = size_t{1} << num_qubits;
    if (matrix_.size() != d * d) {
        throw std::invalid_argument("MixedState: matrix must be 2^n x 2^n");
    }
}

MixedState MixedState::from_pure(const DenseState &psi) {
    check_budget(psi.num_qubits(), kMaxMixedQubits);
    size_t d = psi.dimension();
    std::vector<cplx> m(d * d);
    for (size_t r = 0; r < d; r++) {
        for (size_t c = 0; c < d; c++) {
            m[r * d + c] = psi[r] * std::conj(psi[c]);
        }
    }
    return MixedState(psi.num_qubits(), std::move(m));
}

MixedState MixedState::maximally_mixed(size_t num_qubits) {
    check_budget(num_qubits, kMaxMixedQubits);
    size_t d = size_t{1} << num_qubits;
    std::vector<cplx> m(d * d);
    for (size_t i = 0; i < d; i++) {
        m[i * d + i] = 1.0 / static_cast<double>(d);
    }
    return MixedState(num_qubits, std::move(m));
}

double MixedState::expectation(const DenseState &psi) const {
    size_t d = dimension();
    if (psi.dimension() != d) {
        throw std::invalid_argument("expectation: size mismatch");
    }
    cplx total = 0;
    for (size_t r = 0; r < d; r++) {
        if (psi[r] == cplx(0)) {
            continue;
        }
        cplx row = 0;
        for (size_t c = 0; c < d; c++) {
            row += matrix_[r * d + c] * psi[c];
        }
        total += std::conj(psi[r]) * row;
    }
    return total.real();
}

bool MixedState::is_valid(double tol) const {
    size_t d = dimension();
    cplx trace = 0;
    for (size_t r = 0; r < d; r++) {
        trace += at(r, r);
        for (size_t c = r; c < d; c++) {
            if (std::abs(at(r, c) - std::conj(at(c, r))) > tol) {
                return false;
            }
        }
    }
    return std::abs(trace - cplx(1)) <= tol;
}

DenseState subspace_state(const SubspaceBasis &s, size_t max_qubits) {
    check_budget(s.ambient_dim(), max_qubits);
    DenseState st(s.ambient_dim(), max_qubits);
    st[0] = 0;
    double amp = std::pow(2.0, -0.5 * static_cast<double>(s.dim()));
    s.for_each_element([&](const BitVec &v) { st[v.to_index()] = amp; });
    return st;
}

DenseState coset_to_dense(const CosetLabel &label, size_t max_qubits) {
    if (!label.spec) {
        throw std::invalid_argument("coset_to_dense: label has no code attached");
    }
    const auto &code = label.spec->code;
    check_budget(code.ambient_dim(), max_qubits);
    DenseState st(code.ambient_dim(), max_qubits);
    st[0] = 0;
    double amp = label.sign * std::pow(2.0, -0.5 * static_cast<double>(code.dim()));
    uint64_t shift = label.e.to_index();
    uint64_t phase = label.e_prime.to_index();
    code.for_each_element([&](const BitVec &v) {
        uint64_t b = v.to_index();
        st[b ^ shift] = amp * parity_sign(b & phase);
    });
    return st;
}

void apply_pauli_in_place(std::span<cplx> amps, uint64_t e, uint64_t e_prime) {
    if (e_prime != 0) {
        for (size_t b = 0; b < amps.size(); b++) {
            if (std::popcount(b & e_prime) & 1) {
                amps[b] = -amps[b];
            }
        }
    }
    if (e != 0) {
        for (size_t b = 0; b < amps.size(); b++) {
            size_t partner = b ^ e;
            if (b < partner) {
                std::swap(amps[b], amps[partner]);
            }
        }
    }
}

DenseState apply_pauli(const DenseState &st, const BitVec &e, const BitVec &e_prime) {
    if (e.size() != st.num_qubits() || e_prime.size() != st.num_qubits()) {
        throw std::invalid_argument("apply_pauli: length mismatch");
    }
    DenseState out = st;
    apply_pauli_in_place(out.amplitudes(), e.to_index(), e_prime.to_index());
    return out;
}

void hadamard_range_in_place(std::span<cplx> amps, size_t offset, size_t count) {
    const double s = std::numbers::sqrt2 / 2;
    for (size_t q = offset; q < offset + count; q++) {
        size_t bit = size_t{1} << q;
        for (size_t b = 0; b < amps.size(); b++) {
            if (b & bit) {
                continue;
            }
            cplx x = amps[b];
            cplx y = amps[b | bit];
            amps[b] = (x + y) * s;
            amps[b | bit] = (x - y) * s;
        }
    }
}

DenseState hadamard_all(const DenseState &st) {
    DenseState out = st;
    hadamard_range_in_place(out.amplitudes(), 0, st.num_qubits());
    return out;
}

cplx inner(const DenseState &a, const DenseState &b) {
    if (a.dimension() != b.dimension()) {
        throw std::invalid_argument("inner: size mismatch");
    }
    cplx total = 0;
    for (size_t i = 0; i < a.dimension(); i++) {
        total += std::conj(a[i]) * b[i];
    }
    return total;
}

namespace {

void require_orthonormal(std::span<const DenseState> basis_states) {
    for (size_t i = 0; i < basis_states.size(); i++) {
        for (size_t j = i; j < basis_states.size(); j++) {
            cplx g = inner(basis_states[i], basis_states[j]);
            double want = i == j ? 1.0 : 0.0;
            if (std::abs(g - want) > kInvariantTol) {
                throw std::invalid_argument("fidelity_with_span: basis is not orthonormal (pair " +
                                            std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    }
}

}  // namespace

double fidelity_with_span(const DenseState &psi, std::span<const DenseState> basis_states) {
    require_orthonormal(basis_states);
    double total = 0;
    for (const auto &b : basis_states) {
        total += std::norm(inner(b, psi));
    }
    return std::sqrt(total);
}

double fidelity_with_span(const MixedState &rho, std::span<const DenseState> basis_states) {
    require_orthonormal(basis_states);
    double total = 0;
    for (const auto &b : basis_states) {
        total += rho.expectation(b);
    }
    return std::sqrt(std::max(0.0, total));
}

double fidelity(const DenseState &a, const DenseState &b) {
    return std::abs(inner(a, b));
}

std::vector<DenseState> tolerated_basis(const CodeSpec &spec, size_t max_qubits) {
    auto errors = enumerate_errors(spec.n, spec.q);
    auto shared = std::make_shared<const CodeSpec>(spec);
    std::vector<DenseState> out;
    out.reserve(errors.size() * errors.size());
    for (const auto &e : errors.vectors) {
        for (const auto &ez : errors.vectors) {
            out.push_back(coset_to_dense(CosetLabel{shared, e, ez, 1}, max_qubits));
        }
    }
    return out;
}

std::string dump_state(const DenseState &st) {
    struct Line {
        BitVec bits;
        cplx amp;
    };
    std::vector<Line> lines;
    for (size_t b = 0; b < st.dimension(); b++) {
        if (st[b] != cplx(0)) {
            lines.push_back({BitVec::from_index(st.num_qubits(), b), st[b]});
        }
    }
    std::sort(lines.begin(), lines.end(), [](const Line &a, const Line &b) { return a.bits < b.bits; });
    std::string out;
    char buf[64];
    for (const auto &l : lines) {
        out += l.bits.str();
        std::snprintf(buf, sizeof(buf), " %.17g %.17g\n", l.amp.real(), l.amp.imag());
        out += buf;
    }
    return out;
}

DenseState parse_state(size_t num_qubits, const std::string &text) {
    check_budget(num_qubits, kMaxPureQubits);
    std::vector<cplx> amps(size_t{1} << num_qubits);
    std::istringstream in(text);
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        if (line.empty()) {
            continue;
        }
        std::istringstream fields(line);
        std::string bits, re_text, im_text, extra;
        if (!(fields >> bits >> re_text >> im_text) || (fields >> extra)) {
            throw std::invalid_argument("state dump line " + std::to_string(line_no) + " is malformed");
        }
        auto x = BitVec::from_string(bits);
        if (x.size() != num_qubits) {
            throw std::invalid_argument("state dump line " + std::to_string(line_no) + " has wrong length");
        }
        size_t used_re = 0, used_im = 0;
        double re = std::stod(re_text, &used_re);
        double im = std::stod(im_text, &used_im);
        if (used_re != re_text.size() || used_im != im_text.size()) {
            throw std::invalid_argument("state dump line " + std::to_string(line_no) + " has a bad number");
        }
        amps[x.to_index()] = cplx(re, im);
    }
    return DenseState(num_qubits, std::move(amps));
}

DenseState random_state(size_t num_qubits, Rng &rng) {
    check_budget(num_qubits, kMaxPureQubits);
    std::vector<cplx> amps(size_t{1} << num_qubits);
    for (auto &a : amps) {
        // Box-Muller on the portable uniform source.
        double u1 = 1.0 - uniform01(rng);
        double u2 = uniform01(rng);
        double r = std::sqrt(-2.0 * std::log(u1));
        a = cplx(r * std::cos(2 * std::numbers::pi * u2), r * std::sin(2 * std::numbers::pi * u2));
    }
    return DenseState(num_qubits, std::move(amps)).normalized();
}

}  // namespace qmoney
