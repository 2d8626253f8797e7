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

#include "qmoney/scheme.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qmoney/errors.h"

namespace qmoney {

namespace {

constexpr int kSerialRetryLimit = 64;

/// Random theta of weight n/2 and a random basis whose theta-selected
/// columns are a random basis of spec.code.
std::pair<BitVec, BasisMap> conjugate_data(const CodeSpec &spec, Rng &rng) {
    size_t n = spec.n;
    size_t half = n / 2;
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (size_t i = n - 1; i > 0; i--) {
        std::swap(order[i], order[uniform_below(rng, i + 1)]);
    }
    BitVec theta(n);
    for (size_t i = 0; i < half; i++) {
        theta.set(order[i], true);
    }

    // Random basis of C: random combinations of the RREF rows until independent.
    std::vector<BitVec> inside;
    while (true) {
        inside.clear();
        for (size_t i = 0; i < half; i++) {
            BitVec coeffs = random_bitvec(half, rng);
            BitVec v(n);
            for (size_t j = 0; j < half; j++) {
                if (coeffs.get(j)) {
                    v ^= spec.code.basis().row(j);
                }
            }
            inside.push_back(std::move(v));
        }
        if (SubspaceBasis::span(n, inside).dim() == half) {
            break;
        }
    }
    // Complete to a basis of F_2^n with uniformly random extra columns.
    std::vector<BitVec> outside;
    while (true) {
        outside.clear();
        std::vector<BitVec> all = inside;
        for (size_t i = 0; i < n - half; i++) {
            outside.push_back(random_bitvec(n, rng));
            all.push_back(outside.back());
        }
        if (SubspaceBasis::span(n, all).dim() == n) {
            break;
        }
    }
    std::vector<BitVec> columns(n);
    size_t next_in = 0, next_out = 0;
    for (size_t i = 0; i < n; i++) {
        columns[i] = theta.get(i) ? inside[next_in++] : outside[next_out++];
    }
    return {std::move(theta), BasisMap(std::move(columns))};
}

}  // namespace

const char *route_name(MintRoute route) {
    return route == MintRoute::Direct ? "direct" : "conjugate";
}

MintRoute parse_route(const std::string &name) {
    if (name == "direct") {
        return MintRoute::Direct;
    }
    if (name == "conjugate") {
        return MintRoute::Conjugate;
    }
    throw std::invalid_argument("unknown mint route '" + name + "'");
}

size_t Banknote::num_qubits() const {
    if (auto *d = std::get_if<DenseState>(&state)) {
        return d->num_qubits();
    }
    return std::get<CosetLabel>(state).e.size();
}

OracleRegistry::OracleRegistry(RegistryConfig config) : config_(std::move(config)) {
    if (config_.n == 0 || config_.n % 2 != 0) {
        throw std::invalid_argument("registry: n must be positive and even");
    }
    if (config_.fixed_spec && (config_.fixed_spec->n != config_.n || config_.fixed_spec->q != config_.q)) {
        throw std::invalid_argument("registry: fixed code does not match n/q");
    }
}

std::shared_ptr<const MintRecord> OracleRegistry::generate(const BitVec &r) {
    if (r.size() != config_.n) {
        throw std::invalid_argument("registry_generate: r must have n bits");
    }
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = records_.find(r); it != records_.end()) {
        return it->second;
    }
    uint64_t base = split_seed(config_.master_seed, r.hash());
    MintRecord rec;
    rec.r = r;
    rec.route = config_.route;
    rec.spec = config_.fixed_spec
                   ? config_.fixed_spec
                   : std::make_shared<const CodeSpec>(search_applicable_code(
                         config_.n, config_.q, split_seed(base, 1), config_.max_attempts, config_.jobs));
    if (rec.route == MintRoute::Conjugate) {
        Rng rng = make_rng(split_seed(base, 2));
        auto [theta, basis] = conjugate_data(*rec.spec, rng);
        rec.theta = std::move(theta);
        rec.basis_map = std::move(basis);
    }
    for (int nonce = 0;; nonce++) {
        if (nonce == kSerialRetryLimit) {
            throw std::runtime_error("registry_generate: could not derive a distinct serial");
        }
        Rng rng = make_rng(split_seed(base, 1000 + static_cast<uint64_t>(nonce)));
        BitVec serial = random_bitvec(3 * config_.n, rng);
        if (!serial_index_.count(serial)) {
            rec.serial = std::move(serial);
            break;
        }
    }
    serial_index_.emplace(rec.serial, rec.r);
    auto shared = std::make_shared<const MintRecord>(std::move(rec));
    records_.emplace(r, shared);
    return shared;
}

bool OracleRegistry::serial_check(const BitVec &z) const {
    if (z.size() != 3 * config_.n) {
        throw std::invalid_argument("serial_check: serial must have 3n bits");
    }
    std::lock_guard<std::mutex> lock(mutex_);
    return serial_index_.count(z) != 0;
}

std::shared_ptr<const MintRecord> OracleRegistry::find_by_serial(const BitVec &z) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = serial_index_.find(z);
    if (it == serial_index_.end()) {
        return nullptr;
    }
    return records_.at(it->second);
}

std::shared_ptr<const MintRecord> OracleRegistry::find(const BitVec &r) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = records_.find(r);
    return it == records_.end() ? nullptr : it->second;
}

std::vector<std::shared_ptr<const MintRecord>> OracleRegistry::records() const {
    std::lock_guard<std::mutex> lock(mutex_);
    std::vector<std::shared_ptr<const MintRecord>> out;
    for (const auto &[r, rec] : records_) {
        out.push_back(rec);
    }
    return out;
}

void OracleRegistry::insert(MintRecord record) {
    if (record.r.size() != config_.n || record.serial.size() != 3 * config_.n || !record.spec ||
        record.spec->n != config_.n) {
        throw std::invalid_argument("registry insert: record does not match registry dimensions");
    }
    if (record.route == MintRoute::Conjugate &&
        (!record.basis_map || record.basis_map->ambient_dim() != config_.n || record.theta.size() != config_.n)) {
        throw std::invalid_argument("registry insert: conjugate record needs theta and a basis map");
    }
    std::lock_guard<std::mutex> lock(mutex_);
    if (records_.count(record.r) || serial_index_.count(record.serial)) {
        throw std::invalid_argument("registry insert: duplicate r or serial");
    }
    serial_index_.emplace(record.serial, record.r);
    BitVec r = record.r;
    records_.emplace(std::move(r), std::make_shared<const MintRecord>(std::move(record)));
}

OracleSession OracleRegistry::open_session(const BitVec &serial) const {
    auto rec = find_by_serial(serial);
    if (!rec) {
        throw UnknownSerial("unknown serial");
    }
    return OracleSession(rec->spec);
}

std::shared_ptr<const MintRecord> registry_generate(OracleRegistry &registry, const BitVec &r) {
    return registry.generate(r);
}

bool serial_check(const OracleRegistry &registry, const BitVec &z) {
    return registry.serial_check(z);
}

Banknote mint_direct(OracleRegistry &registry, const BitVec &r) {
    auto rec = registry.generate(r);
    return Banknote{rec->serial, subspace_state(rec->spec->code)};
}

Banknote mint_symbolic(OracleRegistry &registry, const BitVec &r) {
    auto rec = registry.generate(r);
    size_t n = rec->spec->n;
    return Banknote{rec->serial, CosetLabel{rec->spec, BitVec(n), BitVec(n), 1}};
}

DenseState conjugate_coding_state(const BitVec &theta, const BitVec &x) {
    if (theta.size() != x.size()) {
        throw std::invalid_argument("conjugate_coding_state: length mismatch");
    }
    // Support: y agreeing with x off theta; sign (-1)^{x.y} on theta.
    // Amplitudes are written directly so x = 0 matches subspace_state bit for bit.
    size_t n = theta.size();
    uint64_t th = theta.to_index(), xi = x.to_index();
    DenseState st(n);
    st[0] = 0;
    double amp = std::pow(2.0, -0.5 * static_cast<double>(theta.weight()));
    uint64_t fixed = xi & ~th;
    for (uint64_t sub = th;; sub = (sub - 1) & th) {
        st[fixed | sub] = (std::popcount(sub & xi) & 1) ? -amp : amp;
        if (sub == 0) {
            break;
        }
    }
    return st;
}

DenseState apply_basis_unitary(const BasisMap &b, const DenseState &st) {
    size_t n = b.ambient_dim();
    if (st.num_qubits() != n) {
        throw std::invalid_argument("apply_basis_unitary: dimension mismatch");
    }
    std::vector<uint64_t> cols(n);
    for (size_t i = 0; i < n; i++) {
        cols[i] = b.column(i).to_index();
    }
    std::vector<uint64_t> image(st.dimension(), 0);
    std::vector<cplx> out(st.dimension());
    for (size_t y = 1; y < st.dimension(); y++) {
        image[y] = image[y & (y - 1)] ^ cols[std::countr_zero(y)];
    }
    for (size_t y = 0; y < st.dimension(); y++) {
        out[image[y]] = st[y];
    }
    return DenseState(n, std::move(out));
}

Banknote mint_conjugate(OracleRegistry &registry, const BitVec &r, const BitVec &x, bool test_mode) {
    if (!x.is_zero() && !test_mode) {
        throw std::invalid_argument("mint_conjugate: scheme-conformant minting requires x = 0");
    }
    auto rec = registry.generate(r);
    if (rec->route != MintRoute::Conjugate || !rec->basis_map) {
        throw std::invalid_argument("mint_conjugate: record was not generated for the conjugate route");
    }
    if (x.size() != rec->spec->n) {
        throw std::invalid_argument("mint_conjugate: x must have n bits");
    }
    return Banknote{rec->serial, apply_basis_unitary(*rec->basis_map, conjugate_coding_state(rec->theta, x))};
}

Banknote corrupt(const Banknote &note, const BitVec &e, const BitVec &e_prime) {
    size_t n = note.num_qubits();
    if (e.size() != n || e_prime.size() != n) {
        throw std::invalid_argument("corrupt: error vectors must have n bits");
    }
    Banknote out = note;
    if (auto *label = std::get_if<CosetLabel>(&out.state)) {
        // X^e Z^{e'} X^a Z^b = (-1)^{a.e'} X^{a+e} Z^{b+e'}.
        if (label->e.dot(e_prime)) {
            label->sign = -label->sign;
        }
        label->e ^= e;
        label->e_prime ^= e_prime;
    } else {
        out.state = apply_pauli(std::get<DenseState>(note.state), e, e_prime);
    }
    return out;
}

DenseState note_state(const OracleRegistry &registry, const Banknote &note) {
    if (const auto *d = std::get_if<DenseState>(&note.state)) {
        return *d;
    }
    CosetLabel label = std::get<CosetLabel>(note.state);
    if (!label.spec) {
        auto rec = registry.find_by_serial(note.serial);
        if (!rec) {
            throw UnknownSerial("cannot resolve symbolic note: unknown serial");
        }
        label.spec = rec->spec;
    }
    return coset_to_dense(label);
}

Verifier::Verifier(std::shared_ptr<const CodeSpec> spec)
    : Verifier(MembershipPredicate(PredicateKind::SubsetPrimal, spec),
               MembershipPredicate(PredicateKind::SubsetDual, spec)) {
}

Verifier::Verifier(MembershipPredicate primal, MembershipPredicate dual)
    : primal_(std::move(primal)),
      dual_(std::move(dual)),
      primal_mask_(primal_.truth_table()),
      dual_mask_(dual_.truth_table()) {
    if (primal_.num_bits() != dual_.num_bits()) {
        throw std::invalid_argument("Verifier: predicate sizes differ");
    }
}

void Verifier::apply_on_register(std::vector<cplx> &amps, size_t offset) const {
    size_t n = num_qubits();
    uint64_t reg_mask = (uint64_t{1} << n) - 1;
    if (amps.size() < (size_t{1} << (offset + n))) {
        throw std::invalid_argument("apply_on_register: register out of range");
    }
    auto mask_with = [&](const std::vector<uint8_t> &mask) {
        for (size_t b = 0; b < amps.size(); b++) {
            if (!mask[(b >> offset) & reg_mask]) {
                amps[b] = 0;
            }
        }
    };
    mask_with(primal_mask_);
    hadamard_range_in_place(amps, offset, n);
    mask_with(dual_mask_);
    hadamard_range_in_place(amps, offset, n);
}

std::vector<cplx> Verifier::apply(std::span<const cplx> amps) const {
    std::vector<cplx> out(amps.begin(), amps.end());
    if (out.size() != (size_t{1} << num_qubits())) {
        throw std::invalid_argument("Verifier::apply: size mismatch");
    }
    apply_on_register(out, 0);
    return out;
}

double Verifier::accept_probability(const DenseState &st) const {
    return DenseState(st.num_qubits(), apply(st.amplitudes())).norm_squared();
}

std::vector<cplx> Verifier::matrix() const {
    size_t dim = size_t{1} << num_qubits();
    std::vector<cplx> m(dim * dim);
    std::vector<cplx> unit(dim);
    for (size_t c = 0; c < dim; c++) {
        std::fill(unit.begin(), unit.end(), cplx(0));
        unit[c] = 1;
        auto col = apply(unit);
        for (size_t r = 0; r < dim; r++) {
            m[r * dim + c] = col[r];
        }
    }
    return m;
}

VerifyOutcome verify_with_session(OracleSession &session, const DenseState &st, Rng &rng) {
    VerifyOutcome out;
    out.serial_valid = true;
    auto first = session.project_primal(st);
    double prob = first.prob_in;
    std::optional<DenseState> current = first.state_in;
    if (current) {
        auto second = session.project_dual(hadamard_all(*current));
        prob *= second.prob_in;
        current = second.state_in ? std::optional<DenseState>(hadamard_all(*second.state_in)) : std::nullopt;
    }
    if (!current) {
        prob = 0;
    }
    // Clamp roundoff; the projector norms lie in [0, 1].
    out.accept_probability = std::clamp(prob, 0.0, 1.0);
    out.accepted = current.has_value() && uniform01(rng) < prob;
    if (out.accepted) {
        out.post_state = std::move(current);
    } else {
        out.reason = "state rejected by the verification projector";
    }
    return out;
}

VerifyOutcome verify(const OracleRegistry &registry, const Banknote &note, Rng &rng, QueryLedger *ledger) {
    if (ledger) {
        *ledger = ledger->charge(QueryLedger::kSerial);
    }
    if (note.serial.size() != 3 * registry.n() || !registry.serial_check(note.serial)) {
        VerifyOutcome out;
        out.reason = "unknown serial";
        return out;
    }
    OracleSession session = registry.open_session(note.serial);
    auto out = verify_with_session(session, note_state(registry, note), rng);
    if (ledger) {
        for (const auto &[name, count] : session.ledger().counters()) {
            *ledger = ledger->charge(name, count);
        }
    }
    return out;
}

DoubleVerifyOutcome double_verify(const OracleRegistry &registry, const BitVec &serial, const DenseState &joint,
                                  Rng &rng) {
    auto rec = registry.find_by_serial(serial);
    if (!rec) {
        throw UnknownSerial("unknown serial");
    }
    size_t n = rec->spec->n;
    if (joint.num_qubits() != 2 * n) {
        throw std::invalid_argument("double_verify: joint state must have 2n qubits");
    }
    Verifier v(rec->spec);
    std::vector<cplx> amps = joint.amplitudes();
    v.apply_on_register(amps, 0);
    v.apply_on_register(amps, n);
    DoubleVerifyOutcome out;
    out.accept_probability = std::clamp(DenseState(2 * n, std::move(amps)).norm_squared(), 0.0, 1.0);
    out.accepted = uniform01(rng) < out.accept_probability;
    return out;
}

CorrectionResult correct(const OracleRegistry &registry, const Banknote &note) {
    auto rec = registry.find_by_serial(note.serial);
    if (!rec) {
        throw UnknownSerial("unknown serial");
    }
    const auto &spec = rec->spec;
    auto errors = enumerate_errors(spec->n, spec->q);
    CorrectionResult result{false, note, BitVec(spec->n), BitVec(spec->n), QueryLedger(errors.size()), ""};
    DenseState st = note_state(registry, note);

    auto locate = [&](Side side, const DenseState &probe) -> std::optional<BitVec> {
        for (const auto &e : errors.vectors) {
            result.ledger = result.ledger.charge(QueryLedger::kCoset);
            auto r = project_via_control(MembershipPredicate::coset(side, spec, e), probe);
            if (r.prob_in > 1.0 - kInvariantTol) {
                return e;
            }
        }
        return std::nullopt;
    };

    auto e = locate(Side::Primal, st);
    if (!e) {
        result.reason = "undecodable: no tolerated bit-flip coset contains the state";
        return result;
    }
    auto e_prime = locate(Side::Dual, hadamard_all(st));
    if (!e_prime) {
        result.reason = "undecodable: no tolerated phase-flip coset contains the state";
        return result;
    }
    BitVec zero(spec->n);
    // X^e first, then Z^{e'}, undoes X^e Z^{e'}.
    result.note = corrupt(corrupt(note, *e, zero), zero, *e_prime);
    result.e = *e;
    result.e_prime = *e_prime;
    result.corrected = true;
    return result;
}

}  // namespace qmoney
