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

#ifndef QMONEY_CODES_H
#define QMONEY_CODES_H

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qmoney/gf2.h"

namespace qmoney {

/// A candidate member of W: an n/2-dimensional code C together with its
/// dual, both minimum distances and both parity-check matrices.
///
/// parity_primal = H_C has the rows of a C⊥ basis; parity_dual = H_{C⊥} has
/// the rows of a C basis. Use certify() to check membership in W; only
/// search_applicable_code() guarantees it.
struct CodeSpec {
    size_t n = 0;
    size_t q = 0;
    SubspaceBasis code;
    SubspaceBasis dual_code;
    size_t d_primal = 0;
    size_t d_dual = 0;
    Gf2Matrix parity_primal;
    Gf2Matrix parity_dual;

    bool operator==(const CodeSpec &other) const = default;
};

/// Fills in dual, distances and parity matrices for `code`. Does not
/// require membership in W (a zero-dimensional side reports distance 0).
CodeSpec build_code_spec(const SubspaceBasis &code, size_t q);

/// Builds a spec from the rows of a generator matrix transpose (one row per
/// basis vector of C).
CodeSpec code_spec_from_generators(const std::vector<std::string> &basis_rows, size_t q);

struct CertificateCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct CertificateReport {
    std::vector<CertificateCheck> checks;
    size_t dim = 0;
    size_t dual_dim = 0;
    size_t d_primal = 0;
    size_t d_dual = 0;

    bool passed() const;
    std::string summary() const;
};

/// Recomputes everything from spec.code and compares against the stored fields.
CertificateReport certify(const CodeSpec &spec);

constexpr size_t kDefaultMaxAttempts = 10000;

/// Rejection sampling of uniform n/2-dimensional subspaces until both
/// distances reach 2q+1. Attempt i draws from split_seed(seed, i), so the
/// result does not depend on `jobs`. Throws NotFound when attempts run out.
CodeSpec search_applicable_code(size_t n, size_t q, uint64_t seed, size_t max_attempts = kDefaultMaxAttempts,
                                unsigned jobs = 1);

/// Weight <= q vectors of length n, sorted lexicographically by text encoding.
struct ErrorSet {
    size_t n = 0;
    size_t q = 0;
    std::vector<BitVec> vectors;

    size_t size() const {
        return vectors.size();
    }
    /// Position of e in `vectors`, or nullopt.
    std::optional<size_t> index_of(const BitVec &e) const;
};

constexpr uint64_t kDefaultErrorBudget = uint64_t{1} << 22;

ErrorSet enumerate_errors(size_t n, size_t q, uint64_t budget = kDefaultErrorBudget);

/// sum_{j<=q} binom(n, j), exact. Throws std::overflow_error rather than wrapping.
uint64_t error_count(size_t n, size_t q);
/// |E_q| = error_count(n, q)^2, exact. Throws std::overflow_error.
uint64_t count_error_pairs(size_t n, size_t q);

/// Maps each syndrome parity*e (wt(e) <= q) to its unique e.
class SyndromeTable {
  public:
    SyndromeTable() = default;
    /// Throws SyndromeCollision if two correctable errors share a syndrome.
    SyndromeTable(Gf2Matrix parity, size_t q);

    const Gf2Matrix &parity() const {
        return parity_;
    }
    size_t q() const {
        return q_;
    }
    size_t size() const {
        return entries_.size();
    }
    std::optional<BitVec> lookup(const BitVec &syndrome) const;
    bool contains(const BitVec &syndrome) const {
        return entries_.count(syndrome) != 0;
    }
    const std::unordered_map<BitVec, BitVec> &entries() const {
        return entries_;
    }

  private:
    Gf2Matrix parity_;
    size_t q_ = 0;
    std::unordered_map<BitVec, BitVec> entries_;
};

SyndromeTable build_syndrome_table(const Gf2Matrix &parity, size_t q);

/// Rows of the CSS check matrix [H_{C⊥} | 0 ; 0 | H_C].
struct StabilizerSet {
    Gf2Matrix x_type_rows;
    Gf2Matrix z_type_rows;

    size_t size() const {
        return x_type_rows.rows() + z_type_rows.rows();
    }
    /// The full check matrix, 2n columns wide: X-part then Z-part.
    Gf2Matrix check_matrix() const;
};

StabilizerSet stabilizer_generators(const CodeSpec &spec);

/// Binary Shannon entropy in bits, with H(0) = H(1) = 0.
double binary_entropy(double x);

/// 1 - 2 H(2q/n). Negative means a k = 0 code is guaranteed to exist.
double gv_margin(size_t n, size_t q);

/// log2(|E_q|^2 * 2^{-n/2}).
double soundness_tradeoff_log2(size_t n, size_t q);
/// |E_q|^2 * 2^{-n/2}; may be +inf for huge parameters (use the log form).
double soundness_tradeoff(size_t n, size_t q);

}  // namespace qmoney

#endif
