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

#ifndef QMONEY_GF2_H
#define QMONEY_GF2_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qmoney/rng.h"

namespace qmoney {

/// A fixed-length vector over GF(2), packed 64 coordinates per word.
///
/// Coordinate i (0-based) is bit i of the packing and is the i-th character
/// (from the left) of the text encoding. So "100011" has coordinates 0, 4
/// and 5 set, and BitVec::from_index(6, b) has coordinate i = bit i of b.
class BitVec {
  public:
    BitVec() = default;
    explicit BitVec(size_t num_bits);

    static BitVec from_string(std::string_view text);
    static BitVec from_index(size_t num_bits, uint64_t index);
    static BitVec unit(size_t num_bits, size_t coordinate);

    size_t size() const {
        return num_bits_;
    }
    bool get(size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void set(size_t i, bool value);
    void flip(size_t i) {
        words_[i >> 6] ^= uint64_t{1} << (i & 63);
    }

    size_t weight() const;
    bool is_zero() const;
    /// GF(2) dot product. Throws std::invalid_argument on length mismatch.
    bool dot(const BitVec &other) const;

    BitVec &operator^=(const BitVec &other);
    friend BitVec operator^(BitVec a, const BitVec &b) {
        a ^= b;
        return a;
    }

    /// Packed integer form; requires size() <= 64.
    uint64_t to_index() const;
    std::string str() const;
    std::span<const uint64_t> words() const {
        return words_;
    }

    BitVec slice(size_t start, size_t length) const;
    BitVec concat(const BitVec &tail) const;

    bool operator==(const BitVec &other) const = default;
    /// Lexicographic order of the text encoding (shorter vectors first).
    std::strong_ordering operator<=>(const BitVec &other) const;

    size_t hash() const;

  private:
    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

BitVec random_bitvec(size_t num_bits, Rng &rng);

/// Row-major bit grid. Each row is a BitVec of length cols().
class Gf2Matrix {
  public:
    Gf2Matrix() = default;
    Gf2Matrix(size_t rows, size_t cols);
    Gf2Matrix(size_t cols, std::vector<BitVec> rows);

    static Gf2Matrix from_strings(const std::vector<std::string> &rows);
    static Gf2Matrix identity(size_t n);

    size_t rows() const {
        return rows_.size();
    }
    size_t cols() const {
        return cols_;
    }
    const BitVec &row(size_t i) const {
        return rows_[i];
    }
    BitVec &row(size_t i) {
        return rows_[i];
    }
    const std::vector<BitVec> &row_vectors() const {
        return rows_;
    }
    bool get(size_t r, size_t c) const {
        return rows_[r].get(c);
    }
    void set(size_t r, size_t c, bool v) {
        rows_[r].set(c, v);
    }
    BitVec column(size_t c) const;

    Gf2Matrix transpose() const;
    /// this * v, one output bit per row.
    BitVec multiply(const BitVec &v) const;
    Gf2Matrix multiply(const Gf2Matrix &rhs) const;
    bool is_zero() const;
    std::vector<std::string> str_rows() const;

    bool operator==(const Gf2Matrix &other) const = default;

  private:
    size_t cols_ = 0;
    std::vector<BitVec> rows_;
};

struct RrefResult {
    Gf2Matrix matrix;  // zero rows dropped
    size_t rank = 0;
    std::vector<size_t> pivots;
};

/// Reduced row-echelon form over GF(2). Pivot columns are strictly increasing.
RrefResult rref(const Gf2Matrix &m);

/// A linear subspace of F_2^n, stored as the RREF of a basis. Two
/// SubspaceBasis values compare equal iff they span the same subspace.
class SubspaceBasis {
  public:
    SubspaceBasis() = default;
    explicit SubspaceBasis(size_t ambient_dim);  // zero subspace

    static SubspaceBasis span(size_t ambient_dim, const std::vector<BitVec> &generators);
    static SubspaceBasis row_space(const Gf2Matrix &m);
    static SubspaceBasis full(size_t ambient_dim);

    size_t ambient_dim() const {
        return ambient_dim_;
    }
    size_t dim() const {
        return basis_.rows();
    }
    const Gf2Matrix &basis() const {
        return basis_;
    }
    const std::vector<size_t> &pivots() const {
        return pivots_;
    }

    bool member(const BitVec &v) const;
    /// All 2^dim elements in Gray-code order; dim must be small.
    std::vector<BitVec> elements() const;
    /// Calls f on every element (including zero) in Gray-code order.
    void for_each_element(const std::function<void(const BitVec &)> &f) const;

    bool operator==(const SubspaceBasis &other) const {
        return ambient_dim_ == other.ambient_dim_ && basis_ == other.basis_;
    }

  private:
    size_t ambient_dim_ = 0;
    Gf2Matrix basis_;
    std::vector<size_t> pivots_;
};

bool member(const SubspaceBasis &s, const BitVec &v);
SubspaceBasis dual(const SubspaceBasis &s);
SubspaceBasis intersect(const SubspaceBasis &a, const SubspaceBasis &b);

/// Largest subspace dimension min_distance will enumerate.
constexpr size_t kDefaultDistanceBudgetDim = 26;

/// Minimum weight over nonzero elements, by exhaustive enumeration.
/// Throws std::invalid_argument if dim == 0 and BudgetExceeded above the budget.
size_t min_distance(const SubspaceBasis &s, size_t max_dim = kDefaultDistanceBudgetDim);

/// An invertible n x n matrix read column-wise as a basis {u_1..u_n}, with
/// its inverse cached. Row i of the inverse is the dual basis vector u^i.
class BasisMap {
  public:
    BasisMap() = default;
    /// Throws std::invalid_argument if the columns are not a basis.
    explicit BasisMap(std::vector<BitVec> columns);

    static BasisMap identity(size_t n);
    static BasisMap permutation(const std::vector<size_t> &perm);

    size_t ambient_dim() const {
        return columns_.size();
    }
    const BitVec &column(size_t i) const {
        return columns_[i];
    }
    const std::vector<BitVec> &columns() const {
        return columns_;
    }
    /// Column-major view as an n x n matrix.
    Gf2Matrix matrix() const;
    const Gf2Matrix &inverse() const {
        return inverse_;
    }

    BitVec apply(const BitVec &x) const;
    BitVec apply_inverse(const BitVec &y) const;
    SubspaceBasis apply(const SubspaceBasis &s) const;

    bool operator==(const BasisMap &other) const {
        return columns_ == other.columns_;
    }

  private:
    std::vector<BitVec> columns_;
    Gf2Matrix inverse_;
};

/// Dual basis rows u^i with u^i . u_j = delta_ij (checked exhaustively).
Gf2Matrix dual_basis(const BasisMap &b);
BitVec apply_basis_map(const BasisMap &b, const BitVec &x);

/// Inverse of a square matrix, or throws std::invalid_argument if singular.
Gf2Matrix invert(const Gf2Matrix &m);

SubspaceBasis random_subspace(size_t n, size_t dim, Rng &rng);
SubspaceBasis random_subspace(size_t n, size_t dim, uint64_t seed);
/// Uniform random coordinate permutation; these are exactly the invertible
/// linear isometries of F_2^n under the Hamming metric.
BasisMap random_isometry(size_t n, Rng &rng);
BasisMap random_isometry(size_t n, uint64_t seed);
/// Uniform random invertible matrix, returned as a basis.
BasisMap random_basis(size_t n, Rng &rng);

}  // namespace qmoney

template <>
struct std::hash<qmoney::BitVec> {
    size_t operator()(const qmoney::BitVec &v) const noexcept {
        return v.hash();
    }
};

#endif
