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

#include "qmoney/oracles.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qmoney {

struct MembershipPredicate::Tables {
    std::shared_ptr<const CodeSpec> spec;
    SyndromeTable primal_table;
    SyndromeTable dual_table;
    std::vector<BitVec> primal_columns;
    std::vector<BitVec> dual_columns;
    std::vector<BitVec> primal_good;  // sorted
    std::vector<BitVec> dual_good;    // sorted
};

namespace {

std::vector<BitVec> columns_of(const Gf2Matrix &m) {
    std::vector<BitVec> out;
    for (size_t c = 0; c < m.cols(); c++) {
        out.push_back(m.column(c));
    }
    return out;
}

/// Good syndromes built from the column sums of each correctable error,
/// without going through the syndrome table.
std::vector<BitVec> good_syndromes(const std::vector<BitVec> &columns, size_t rows, const ErrorSet &errors) {
    std::vector<BitVec> out;
    for (const auto &e : errors.vectors) {
        BitVec s(rows);
        for (size_t i = 0; i < e.size(); i++) {
            if (e.get(i)) {
                s ^= columns[i];
            }
        }
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

BitVec column_syndrome(const std::vector<BitVec> &columns, size_t rows, const BitVec &x) {
    BitVec s(rows);
    for (size_t i = 0; i < x.size(); i++) {
        if (x.get(i)) {
            s ^= columns[i];
        }
    }
    return s;
}

bool is_subset_kind(PredicateKind k) {
    return k == PredicateKind::SubsetPrimal || k == PredicateKind::SubsetDual;
}

bool is_syndrome_kind(PredicateKind k) {
    return k == PredicateKind::SyndromePrimal || k == PredicateKind::SyndromeDual;
}

bool is_primal_kind(PredicateKind k) {
    return k == PredicateKind::SubsetPrimal || k == PredicateKind::SyndromePrimal || k == PredicateKind::CosetPrimal;
}

}  // namespace

MembershipPredicate::MembershipPredicate(PredicateKind kind, std::shared_ptr<const CodeSpec> spec) : kind_(kind) {
    if (!spec) {
        throw std::invalid_argument("MembershipPredicate: null spec");
    }
    auto t = std::make_shared<Tables>();
    t->spec = spec;
    if (is_subset_kind(kind) || is_syndrome_kind(kind)) {
        auto errors = enumerate_errors(spec->n, spec->q);
        t->primal_table = SyndromeTable(spec->parity_primal, spec->q);
        t->dual_table = SyndromeTable(spec->parity_dual, spec->q);
        t->primal_columns = columns_of(spec->parity_primal);
        t->dual_columns = columns_of(spec->parity_dual);
        t->primal_good = good_syndromes(t->primal_columns, spec->parity_primal.rows(), errors);
        t->dual_good = good_syndromes(t->dual_columns, spec->parity_dual.rows(), errors);
    }
    tables_ = std::move(t);
    offset_ = BitVec(spec->n);
}

MembershipPredicate MembershipPredicate::coset(Side side, std::shared_ptr<const CodeSpec> spec, BitVec offset) {
    if (spec && offset.size() != spec->n) {
        throw std::invalid_argument("coset predicate: offset length mismatch");
    }
    MembershipPredicate p(side == Side::Primal ? PredicateKind::CosetPrimal : PredicateKind::CosetDual,
                          std::move(spec));
    p.offset_ = std::move(offset);
    return p;
}

size_t MembershipPredicate::num_bits() const {
    return tables_ ? tables_->spec->n : 0;
}

BitVec MembershipPredicate::pull_back(const BitVec &x) const {
    if (x.size() != num_bits()) {
        throw std::invalid_argument("membership query: length mismatch (" + std::to_string(x.size()) + " vs " +
                                    std::to_string(num_bits()) + ")");
    }
    return inverse_map_ ? inverse_map_->apply(x) : x;
}

bool MembershipPredicate::subset_test(const BitVec &x_in) const {
    BitVec x = pull_back(x_in);
    bool primal = is_primal_kind(kind_);
    const auto &table = primal ? tables_->primal_table : tables_->dual_table;
    const auto &space = primal ? tables_->spec->code : tables_->spec->dual_code;
    auto e = table.lookup(table.parity().multiply(x));
    return e && space.member(x ^ *e);
}

bool MembershipPredicate::syndrome_test(const BitVec &x_in) const {
    BitVec x = pull_back(x_in);
    bool primal = is_primal_kind(kind_);
    const auto &columns = primal ? tables_->primal_columns : tables_->dual_columns;
    const auto &good = primal ? tables_->primal_good : tables_->dual_good;
    size_t rows = primal ? tables_->spec->parity_primal.rows() : tables_->spec->parity_dual.rows();
    return std::binary_search(good.begin(), good.end(), column_syndrome(columns, rows, x));
}

bool MembershipPredicate::contains(const BitVec &x) const {
    switch (kind_) {
        case PredicateKind::SubsetPrimal:
        case PredicateKind::SubsetDual:
            return subset_test(x);
        case PredicateKind::SyndromePrimal:
        case PredicateKind::SyndromeDual:
            return syndrome_test(x);
        case PredicateKind::CosetPrimal:
            return tables_->spec->code.member(pull_back(x) ^ offset_);
        case PredicateKind::CosetDual:
            return tables_->spec->dual_code.member(pull_back(x) ^ offset_);
    }
    return false;
}

std::vector<uint8_t> MembershipPredicate::truth_table() const {
    size_t n = num_bits();
    if (n > kMaxPureQubits) {
        throw std::invalid_argument("truth_table: too many bits");
    }
    std::vector<uint8_t> out(size_t{1} << n);
    for (size_t b = 0; b < out.size(); b++) {
        out[b] = contains(BitVec::from_index(n, b)) ? 1 : 0;
    }
    return out;
}

MembershipPredicate MembershipPredicate::conjugated_by(const BasisMap &f) const {
    if (f.ambient_dim() != num_bits()) {
        throw std::invalid_argument("conjugated_by: dimension mismatch");
    }
    MembershipPredicate out = *this;
    // (U_f U U_f^†)|x> = U_f U |f^{-1}(x)>: the membership test sees f^{-1}(x),
    // composed with any earlier conjugation.
    std::vector<BitVec> cols;
    for (size_t i = 0; i < f.ambient_dim(); i++) {
        BitVec image = f.apply_inverse(BitVec::unit(f.ambient_dim(), i));
        cols.push_back(inverse_map_ ? inverse_map_->apply(image) : image);
    }
    out.inverse_map_ = std::make_shared<const BasisMap>(std::move(cols));
    return out;
}

bool member_subset(const MembershipPredicate &pred, const BitVec &x) {
    if (!is_subset_kind(pred.kind())) {
        throw std::invalid_argument("member_subset requires a subset predicate");
    }
    return pred.subset_test(x);
}

bool member_syndrome(const MembershipPredicate &pred, const BitVec &x) {
    if (!is_syndrome_kind(pred.kind())) {
        throw std::invalid_argument("member_syndrome requires a syndrome predicate");
    }
    return pred.syndrome_test(x);
}

namespace {

void require_state_matches(const MembershipPredicate &pred, const DenseState &st) {
    if (st.num_qubits() != pred.num_bits()) {
        throw std::invalid_argument("oracle/state qubit count mismatch");
    }
}

}  // namespace

DenseState apply_phase_oracle(const MembershipPredicate &pred, const DenseState &st) {
    require_state_matches(pred, st);
    auto mask = pred.truth_table();
    DenseState out = st;
    for (size_t b = 0; b < mask.size(); b++) {
        if (mask[b]) {
            out[b] = -out[b];
        }
    }
    return out;
}

namespace {

ProjectionResult finish_projection(size_t n, std::vector<cplx> in, std::vector<cplx> out) {
    ProjectionResult r;
    DenseState in_state(n, std::move(in));
    DenseState out_state(n, std::move(out));
    r.prob_in = in_state.norm_squared();
    double prob_out = out_state.norm_squared();
    if (r.prob_in > 0) {
        r.state_in = in_state.normalized();
    }
    if (prob_out > 0) {
        r.state_out = out_state.normalized();
    }
    return r;
}

}  // namespace

ProjectionResult project_via_control(const MembershipPredicate &pred, const DenseState &st) {
    require_state_matches(pred, st);
    size_t n = st.num_qubits();
    size_t dim = st.dimension();
    // Control qubit is the top qubit: |+> ⊗ |psi>, then controlled-U_A.
    const double s = std::numbers::sqrt2 / 2;
    std::vector<cplx> joint(2 * dim);
    for (size_t b = 0; b < dim; b++) {
        joint[b] = s * st[b];
        joint[dim + b] = s * st[b];
    }
    DenseState upper(n, std::vector<cplx>(joint.begin() + dim, joint.end()));
    upper = apply_phase_oracle(pred, upper);
    std::copy(upper.amplitudes().begin(), upper.amplitudes().end(), joint.begin() + dim);
    hadamard_range_in_place(joint, n, 1);
    // Control outcome |-> (now |1>) means x in A.
    std::vector<cplx> in(joint.begin() + dim, joint.end());
    std::vector<cplx> out(joint.begin(), joint.begin() + dim);
    return finish_projection(n, std::move(in), std::move(out));
}

ProjectionResult project_by_mask(const MembershipPredicate &pred, const DenseState &st) {
    require_state_matches(pred, st);
    auto mask = pred.truth_table();
    std::vector<cplx> in(st.dimension()), out(st.dimension());
    for (size_t b = 0; b < mask.size(); b++) {
        (mask[b] ? in : out)[b] = st[b];
    }
    return finish_projection(st.num_qubits(), std::move(in), std::move(out));
}

CombinedOracle::CombinedOracle(std::shared_ptr<const CodeSpec> spec)
    : spec_(std::move(spec)), errors_(enumerate_errors(spec_->n, spec_->q)) {
    // k = 1 + ceil(log2 |E_X|).
    size_t e = errors_.size();
    k_ = 1 + (e <= 1 ? 0 : static_cast<size_t>(std::bit_width(e - 1)));
}

size_t CombinedOracle::num_bits() const {
    return k_ + spec_->n;
}

BitVec CombinedOracle::tag(Side side, size_t error_index) const {
    if (error_index >= errors_.size()) {
        throw std::invalid_argument("tag: error index out of range");
    }
    uint64_t t = (error_index << 1) | static_cast<uint64_t>(side);
    BitVec out(k_);
    for (size_t i = 0; i < k_; i++) {
        out.set(i, (t >> (k_ - 1 - i)) & 1);
    }
    return out;
}

BitVec CombinedOracle::tagged(Side side, size_t error_index, const BitVec &x) const {
    return tag(side, error_index).concat(x);
}

bool CombinedOracle::member(const BitVec &tagged_x) const {
    if (tagged_x.size() != num_bits()) {
        throw std::invalid_argument("member_combined: expected " + std::to_string(num_bits()) + " bits");
    }
    uint64_t t = 0;
    for (size_t i = 0; i < k_; i++) {
        t = (t << 1) | static_cast<uint64_t>(tagged_x.get(i));
    }
    if (t >= num_real_tags()) {
        return false;
    }
    BitVec x = tagged_x.slice(k_, spec_->n) ^ errors_.vectors[t >> 1];
    return (t & 1) ? spec_->dual_code.member(x) : spec_->code.member(x);
}

bool member_combined(const CombinedOracle &oracle, const BitVec &tagged_x) {
    return oracle.member(tagged_x);
}

QueryLedger::QueryLedger(uint64_t conversion_factor) : factor_(conversion_factor) {
}

QueryLedger QueryLedger::charge(const std::string &oracle, uint64_t count) const {
    if (oracle != kPrimal && oracle != kDual && oracle != kCombined && oracle != kCoset && oracle != kSerial) {
        throw std::invalid_argument("unknown oracle '" + oracle + "'");
    }
    QueryLedger out = *this;
    out.counters_[oracle] += count;
    return out;
}

QueryLedger QueryLedger::merged(const QueryLedger &other) const {
    if (other.factor_ != factor_) {
        throw std::invalid_argument("merging ledgers with different conversion factors");
    }
    QueryLedger out = *this;
    for (const auto &[name, c] : other.counters_) {
        out.counters_[name] += c;
    }
    return out;
}

uint64_t QueryLedger::count(const std::string &oracle) const {
    auto it = counters_.find(oracle);
    return it == counters_.end() ? 0 : it->second;
}

uint64_t QueryLedger::combined_equivalent() const {
    return factor_ * (count(kPrimal) + count(kDual)) + count(kCombined) + count(kCoset);
}

QueryLedger ledger_charge(const QueryLedger &ledger, const std::string &oracle, uint64_t count) {
    return ledger.charge(oracle, count);
}

OracleSession::OracleSession(std::shared_ptr<const CodeSpec> spec)
    : primal_(PredicateKind::SubsetPrimal, spec),
      dual_(PredicateKind::SubsetDual, spec),
      combined_(spec),
      ledger_(error_count(spec->n, spec->q)) {
}

size_t OracleSession::num_qubits() const {
    return primal_.num_bits();
}

bool OracleSession::query_primal(const BitVec &x) {
    ledger_ = ledger_.charge(QueryLedger::kPrimal);
    return primal_.contains(x);
}

bool OracleSession::query_dual(const BitVec &x) {
    ledger_ = ledger_.charge(QueryLedger::kDual);
    return dual_.contains(x);
}

bool OracleSession::query_combined(const BitVec &tagged_x) {
    ledger_ = ledger_.charge(QueryLedger::kCombined);
    return combined_.member(tagged_x);
}

bool OracleSession::query_primal_via_combined(const BitVec &x) {
    bool found = false;
    for (size_t i = 0; i < combined_.num_real_tags() / 2; i++) {
        found = query_combined(combined_.tagged(Side::Primal, i, x)) || found;
    }
    return found;
}

DenseState OracleSession::phase_primal(const DenseState &st) {
    ledger_ = ledger_.charge(QueryLedger::kPrimal);
    return apply_phase_oracle(primal_, st);
}

DenseState OracleSession::phase_dual(const DenseState &st) {
    ledger_ = ledger_.charge(QueryLedger::kDual);
    return apply_phase_oracle(dual_, st);
}

ProjectionResult OracleSession::project_primal(const DenseState &st) {
    ledger_ = ledger_.charge(QueryLedger::kPrimal);
    return project_via_control(primal_, st);
}

ProjectionResult OracleSession::project_dual(const DenseState &st) {
    ledger_ = ledger_.charge(QueryLedger::kDual);
    return project_via_control(dual_, st);
}

}  // namespace qmoney
