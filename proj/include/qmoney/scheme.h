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

#ifndef QMONEY_SCHEME_H
#define QMONEY_SCHEME_H

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "qmoney/codes.h"
#include "qmoney/oracles.h"
#include "qmoney/statesim.h"

namespace qmoney {

enum class MintRoute { Direct, Conjugate };

const char *route_name(MintRoute route);
MintRoute parse_route(const std::string &name);

/// Bank-internal data for one banknote, keyed by the randomness r.
struct MintRecord {
    BitVec r;
    BitVec serial;  // 3n bits
    std::shared_ptr<const CodeSpec> spec;
    MintRoute route = MintRoute::Direct;
    BitVec theta;                        // conjugate route only, weight n/2
    std::optional<BasisMap> basis_map;   // conjugate route only
};

struct Banknote {
    BitVec serial;
    std::variant<DenseState, CosetLabel> state;

    size_t num_qubits() const;
    bool is_symbolic() const {
        return std::holds_alternative<CosetLabel>(state);
    }
};

struct RegistryConfig {
    size_t n = 6;
    size_t q = 1;
    uint64_t master_seed = 0;
    MintRoute route = MintRoute::Direct;
    size_t max_attempts = kDefaultMaxAttempts;
    unsigned jobs = 1;
    /// When set, every record uses this code instead of a searched one.
    std::shared_ptr<const CodeSpec> fixed_spec;
};

/// The bank's oracle U: generator G, serial checker Z and the two subset
/// testers, realized lazily from a master seed. Record creation is
/// serialized; lookups may run concurrently.
class OracleRegistry {
  public:
    explicit OracleRegistry(RegistryConfig config);
    OracleRegistry(const OracleRegistry &) = delete;
    OracleRegistry &operator=(const OracleRegistry &) = delete;

    const RegistryConfig &config() const {
        return config_;
    }
    size_t n() const {
        return config_.n;
    }

    /// G(r). Idempotent; a fresh record gets a serial distinct from all others.
    std::shared_ptr<const MintRecord> generate(const BitVec &r);
    /// Z(z).
    bool serial_check(const BitVec &z) const;
    std::shared_ptr<const MintRecord> find_by_serial(const BitVec &z) const;
    std::shared_ptr<const MintRecord> find(const BitVec &r) const;
    /// All records ordered by r.
    std::vector<std::shared_ptr<const MintRecord>> records() const;
    /// Adds a previously persisted record. Throws on duplicate r or serial.
    void insert(MintRecord record);

    /// T_primal/T_dual access for one serial. Throws UnknownSerial.
    OracleSession open_session(const BitVec &serial) const;

  private:
    RegistryConfig config_;
    mutable std::mutex mutex_;
    std::map<BitVec, std::shared_ptr<const MintRecord>> records_;
    std::unordered_map<BitVec, BitVec> serial_index_;
};

std::shared_ptr<const MintRecord> registry_generate(OracleRegistry &registry, const BitVec &r);
bool serial_check(const OracleRegistry &registry, const BitVec &z);

/// |z_r>|C_r> with a dense state.
Banknote mint_direct(OracleRegistry &registry, const BitVec &r);
/// Same note with the state kept as the exact coset label (0, 0, +1).
Banknote mint_symbolic(OracleRegistry &registry, const BitVec &r);
/// |z_r> U_B |x>_theta. x must be zero unless test_mode is set. Requires a
/// conjugate-route record.
Banknote mint_conjugate(OracleRegistry &registry, const BitVec &r, const BitVec &x, bool test_mode = false);

/// |x>_theta: qubit i is |x_i> if theta_i = 0 and H|x_i> if theta_i = 1.
DenseState conjugate_coding_state(const BitVec &theta, const BitVec &x);
/// U_B|y> = |sum_i y_i u_i>, a permutation of basis states.
DenseState apply_basis_unitary(const BasisMap &b, const DenseState &st);

/// X^e Z^{e'} on the note; symbolic notes stay symbolic.
Banknote corrupt(const Banknote &note, const BitVec &e, const BitVec &e_prime);

/// The note's state as a dense vector, resolving a symbolic label against
/// the registry when the label has no code attached.
DenseState note_state(const OracleRegistry &registry, const Banknote &note);

/// V = H P_{C⊥} H P_C for one code, backed by two membership predicates.
class Verifier {
  public:
    explicit Verifier(std::shared_ptr<const CodeSpec> spec);
    Verifier(MembershipPredicate primal, MembershipPredicate dual);

    size_t num_qubits() const {
        return primal_.num_bits();
    }
    const MembershipPredicate &primal() const {
        return primal_;
    }
    const MembershipPredicate &dual() const {
        return dual_;
    }

    /// V|psi>, unnormalized.
    std::vector<cplx> apply(std::span<const cplx> amps) const;
    /// V on the n qubits starting at `offset` of a larger register.
    void apply_on_register(std::vector<cplx> &amps, size_t offset) const;
    /// Exact acceptance probability ||V psi||^2.
    double accept_probability(const DenseState &st) const;
    /// Row-major 2^n x 2^n matrix of V.
    std::vector<cplx> matrix() const;

  private:
    MembershipPredicate primal_;
    MembershipPredicate dual_;
    std::vector<uint8_t> primal_mask_;
    std::vector<uint8_t> dual_mask_;
};

struct VerifyOutcome {
    bool serial_valid = false;
    bool accepted = false;
    double accept_probability = 0;
    std::optional<DenseState> post_state;
    std::string reason;
};

/// Serial check, then the four-stage pipeline through the controlled-oracle
/// projectors. Queries are charged to *ledger when given.
VerifyOutcome verify(const OracleRegistry &registry, const Banknote &note, Rng &rng, QueryLedger *ledger = nullptr);
/// The pipeline alone against an oracle session.
VerifyOutcome verify_with_session(OracleSession &session, const DenseState &st, Rng &rng);

struct DoubleVerifyOutcome {
    double accept_probability = 0;
    bool accepted = false;
};

/// V ⊗ V on a 2n-qubit state (register 1 = first n qubits). Throws UnknownSerial.
DoubleVerifyOutcome double_verify(const OracleRegistry &registry, const BitVec &serial, const DenseState &joint,
                                  Rng &rng);

struct CorrectionResult {
    bool corrected = false;
    Banknote note;  // unchanged on failure
    BitVec e;
    BitVec e_prime;
    QueryLedger ledger;
    std::string reason;
};

/// Identifies (e, e') with per-coset oracles tested in enumerate_errors
/// order, one ledger charge each, then undoes the error.
CorrectionResult correct(const OracleRegistry &registry, const Banknote &note);

}  // namespace qmoney

#endif
