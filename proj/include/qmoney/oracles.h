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

#ifndef QMONEY_ORACLES_H
#define QMONEY_ORACLES_H

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qmoney/codes.h"
#include "qmoney/statesim.h"

namespace qmoney {

enum class PredicateKind {
    SubsetPrimal,    // x in C + e for some wt(e) <= q
    SubsetDual,      // x in C⊥ + e' for some wt(e') <= q
    SyndromePrimal,  // H_C x is a good syndrome
    SyndromeDual,    // H_{C⊥} x is a good syndrome
    CosetPrimal,     // x in C + e for one fixed e
    CosetDual,       // x in C⊥ + e' for one fixed e'
};

enum class Side { Primal = 0, Dual = 1 };

/// A pure boolean function on {0,1}^n backed by a code. Immutable and
/// cheap to copy (shared tables).
class MembershipPredicate {
  public:
    MembershipPredicate() = default;
    MembershipPredicate(PredicateKind kind, std::shared_ptr<const CodeSpec> spec);
    /// Single-coset predicate x in side + offset.
    static MembershipPredicate coset(Side side, std::shared_ptr<const CodeSpec> spec, BitVec offset);

    PredicateKind kind() const {
        return kind_;
    }
    size_t num_bits() const;

    /// Dispatches on kind(). Throws std::invalid_argument on length mismatch.
    bool contains(const BitVec &x) const;
    /// contains() over all 2^n inputs, indexed like DenseState.
    std::vector<uint8_t> truth_table() const;

    /// The predicate x -> this(f^{-1}(x)), i.e. the oracle U_f U U_f^†.
    MembershipPredicate conjugated_by(const BasisMap &f) const;

    // Implementation hooks used by the free functions below.
    bool subset_test(const BitVec &x) const;
    bool syndrome_test(const BitVec &x) const;

    struct Tables;

  private:
    BitVec pull_back(const BitVec &x) const;

    PredicateKind kind_ = PredicateKind::SubsetPrimal;
    std::shared_ptr<const Tables> tables_;
    BitVec offset_;
    std::shared_ptr<const BasisMap> inverse_map_;
};

/// Subset approach: decode H x through the syndrome table, then confirm
/// x + e lies in the code. Requires a subset kind.
bool member_subset(const MembershipPredicate &pred, const BitVec &x);
/// Subspace approach: the syndrome, accumulated column by column, is looked
/// up in the sorted good-syndrome set. Requires a syndrome kind.
bool member_syndrome(const MembershipPredicate &pred, const BitVec &x);

/// U_A: negates amplitudes on basis states inside the predicate set.
DenseState apply_phase_oracle(const MembershipPredicate &pred, const DenseState &st);

struct ProjectionResult {
    double prob_in = 0;
    std::optional<DenseState> state_in;   // renormalized |->-outcome branch
    std::optional<DenseState> state_out;  // renormalized |+>-outcome branch
};

/// Controlled-U_A with a |+> control, then measure the control in the
/// Hadamard basis. Simulated on n+1 qubits.
ProjectionResult project_via_control(const MembershipPredicate &pred, const DenseState &st);
/// The same measurement computed by masking amplitudes directly.
ProjectionResult project_by_mask(const MembershipPredicate &pred, const DenseState &st);

/// The single oracle over tag-extended strings. Tag t (read as a k-bit
/// big-endian integer from the first k characters) selects side t & 1 and
/// error index t >> 1 in enumerate_errors order; t >= 2|E_X| is padding.
class CombinedOracle {
  public:
    CombinedOracle() = default;
    explicit CombinedOracle(std::shared_ptr<const CodeSpec> spec);

    size_t tag_width() const {
        return k_;
    }
    size_t num_real_tags() const {
        return 2 * errors_.size();
    }
    size_t num_bits() const;

    BitVec tag(Side side, size_t error_index) const;
    BitVec tagged(Side side, size_t error_index, const BitVec &x) const;
    /// Throws std::invalid_argument unless tagged_x has k + n bits.
    bool member(const BitVec &tagged_x) const;

  private:
    std::shared_ptr<const CodeSpec> spec_;
    ErrorSet errors_;
    size_t k_ = 0;
};

bool member_combined(const CombinedOracle &oracle, const BitVec &tagged_x);

/// Oracle query counters. A value: charge() returns a new ledger.
class QueryLedger {
  public:
    static constexpr const char *kPrimal = "primal";
    static constexpr const char *kDual = "dual";
    static constexpr const char *kCombined = "combined";
    static constexpr const char *kCoset = "coset";
    static constexpr const char *kSerial = "serial";

    QueryLedger() = default;
    explicit QueryLedger(uint64_t conversion_factor);

    /// Throws std::invalid_argument for unknown names.
    QueryLedger charge(const std::string &oracle, uint64_t count = 1) const;
    QueryLedger merged(const QueryLedger &other) const;

    uint64_t count(const std::string &oracle) const;
    uint64_t conversion_factor() const {
        return factor_;
    }
    /// |E_X| * (primal + dual) + combined + coset. A single-coset query
    /// costs one combined query.
    uint64_t combined_equivalent() const;
    const std::map<std::string, uint64_t> &counters() const {
        return counters_;
    }

  private:
    uint64_t factor_ = 1;
    std::map<std::string, uint64_t> counters_;
};

QueryLedger ledger_charge(const QueryLedger &ledger, const std::string &oracle, uint64_t count);

/// Oracle access for one banknote, as handed to a verifier or counterfeiter.
/// Every call charges the session's ledger; the code itself is not exposed.
class OracleSession {
  public:
    explicit OracleSession(std::shared_ptr<const CodeSpec> spec);

    size_t num_qubits() const;

    bool query_primal(const BitVec &x);
    bool query_dual(const BitVec &x);
    bool query_combined(const BitVec &tagged_x);
    /// Emulates one primal subset query with |E_X| combined queries.
    bool query_primal_via_combined(const BitVec &x);
    size_t combined_tag_width() const {
        return combined_.tag_width();
    }

    DenseState phase_primal(const DenseState &st);
    DenseState phase_dual(const DenseState &st);
    ProjectionResult project_primal(const DenseState &st);
    ProjectionResult project_dual(const DenseState &st);

    const QueryLedger &ledger() const {
        return ledger_;
    }

  private:
    MembershipPredicate primal_;
    MembershipPredicate dual_;
    CombinedOracle combined_;
    QueryLedger ledger_;
};

}  // namespace qmoney

#endif
