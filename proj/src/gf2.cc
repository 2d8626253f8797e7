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

#include "qmoney/gf2.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "qmoney/errors.h"

namespace qmoney {

namespace {

size_t words_for(size_t num_bits) {
    return (num_bits + 63) / 64;
}

void require_same_length(size_t a, size_t b, const char *what) {
    if (a != b) {
        throw std::invalid_argument(std::string(what) + ": length mismatch (" + std::to_string(a) + " vs " +
                                    std::to_string(b) + ")");
    }
}

}  // namespace

BitVec::BitVec(size_t num_bits) : num_bits_(num_bits), words_(words_for(num_bits), 0) {
}

BitVec BitVec::from_string(std::string_view text) {
    BitVec v(text.size());
    for (size_t i = 0; i < text.size(); i++) {
        char c = text[i];
        if (c == '1') {
            v.flip(i);
        } else if (c != '0') {
            throw std::invalid_argument("bit string may only contain '0' and '1': '" + std::string(text) + "'");
        }
    }
    return v;
}

BitVec BitVec::from_index(size_t num_bits, uint64_t index) {
    if (num_bits > 64) {
        throw std::invalid_argument("from_index requires at most 64 bits");
    }
    BitVec v(num_bits);
    if (num_bits > 0) {
        v.words_[0] = num_bits == 64 ? index : index & ((uint64_t{1} << num_bits) - 1);
    }
    return v;
}

BitVec BitVec::unit(size_t num_bits, size_t coordinate) {
    BitVec v(num_bits);
    v.set(coordinate, true);
    return v;
}

void BitVec::set(size_t i, bool value) {
    uint64_t mask = uint64_t{1} << (i & 63);
    if (value) {
        words_[i >> 6] |= mask;
    } else {
        words_[i >> 6] &= ~mask;
    }
}

size_t BitVec::weight() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += std::popcount(w);
    }
    return total;
}

bool BitVec::is_zero() const {
    return std::all_of(words_.begin(), words_.end(), [](uint64_t w) { return w == 0; });
}

bool BitVec::dot(const BitVec &other) const {
    require_same_length(num_bits_, other.num_bits_, "dot");
    uint64_t acc = 0;
    for (size_t k = 0; k < words_.size(); k++) {
        acc ^= words_[k] & other.words_[k];
    }
    return std::popcount(acc) & 1;
}

BitVec &BitVec::operator^=(const BitVec &other) {
    require_same_length(num_bits_, other.num_bits_, "xor");
    for (size_t k = 0; k < words_.size(); k++) {
        words_[k] ^= other.words_[k];
    }
    return *this;
}

uint64_t BitVec::to_index() const {
    if (num_bits_ > 64) {
        throw std::invalid_argument("to_index requires at most 64 bits");
    }
    return words_.empty() ? 0 : words_[0];
}

std::string BitVec::str() const {
    std::string out(num_bits_, '0');
    for (size_t i = 0; i < num_bits_; i++) {
        if (get(i)) {
            out[i] = '1';
        }
    }
    return out;
}

BitVec BitVec::slice(size_t start, size_t length) const {
    if (start + length > num_bits_) {
        throw std::invalid_argument("slice out of range");
    }
    BitVec out(length);
    for (size_t i = 0; i < length; i++) {
        if (get(start + i)) {
            out.flip(i);
        }
    }
    return out;
}

BitVec BitVec::concat(const BitVec &tail) const {
    BitVec out(num_bits_ + tail.num_bits_);
    std::copy(words_.begin(), words_.end(), out.words_.begin());
    for (size_t i = 0; i < tail.num_bits_; i++) {
        if (tail.get(i)) {
            out.flip(num_bits_ + i);
        }
    }
    return out;
}

std::strong_ordering BitVec::operator<=>(const BitVec &other) const {
    if (num_bits_ != other.num_bits_) {
        return num_bits_ <=> other.num_bits_;
    }
    for (size_t k = 0; k < words_.size(); k++) {
        uint64_t diff = words_[k] ^ other.words_[k];
        if (diff != 0) {
            // The lowest differing coordinate decides; '0' sorts first.
            uint64_t lowest = diff & (~diff + 1);
            return (words_[k] & lowest) ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    }
    return std::strong_ordering::equal;
}

size_t BitVec::hash() const {
    uint64_t h = mix64(num_bits_);
    for (uint64_t w : words_) {
        h = mix64(h ^ w);
    }
    return static_cast<size_t>(h);
}

BitVec random_bitvec(size_t num_bits, Rng &rng) {
    BitVec v(num_bits);
    for (size_t i = 0; i < num_bits; i += 64) {
        uint64_t w = rng();
        for (size_t j = 0; j < 64 && i + j < num_bits; j++) {
            if ((w >> j) & 1) {
                v.flip(i + j);
            }
        }
    }
    return v;
}

Gf2Matrix::Gf2Matrix(size_t rows, size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {
}

Gf2Matrix::Gf2Matrix(size_t cols, std::vector<BitVec> rows) : cols_(cols), rows_(std::move(rows)) {
    for (const auto &r : rows_) {
        require_same_length(r.size(), cols_, "Gf2Matrix row");
    }
}

Gf2Matrix Gf2Matrix::from_strings(const std::vector<std::string> &rows) {
    if (rows.empty()) {
        return Gf2Matrix();
    }
    std::vector<BitVec> parsed;
    parsed.reserve(rows.size());
    for (const auto &r : rows) {
        parsed.push_back(BitVec::from_string(r));
    }
    size_t cols = parsed.front().size();
    return Gf2Matrix(cols, std::move(parsed));
}

Gf2Matrix Gf2Matrix::identity(size_t n) {
    Gf2Matrix m(n, n);
    for (size_t i = 0; i < n; i++) {
        m.set(i, i, true);
    }
    return m;
}

BitVec Gf2Matrix::column(size_t c) const {
    BitVec out(rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        if (rows_[r].get(c)) {
            out.flip(r);
        }
    }
    return out;
}

Gf2Matrix Gf2Matrix::transpose() const {
    Gf2Matrix t(cols_, rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        for (size_t c = 0; c < cols_; c++) {
            if (rows_[r].get(c)) {
                t.rows_[c].flip(r);
            }
        }
    }
    return t;
}

BitVec Gf2Matrix::multiply(const BitVec &v) const {
    require_same_length(v.size(), cols_, "matrix-vector product");
    BitVec out(rows_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
        if (rows_[r].dot(v)) {
            out.flip(r);
        }
    }
    return out;
}

Gf2Matrix Gf2Matrix::multiply(const Gf2Matrix &rhs) const {
    require_same_length(cols_, rhs.rows(), "matrix product");
    Gf2Matrix out(rows_.size(), rhs.cols());
    for (size_t r = 0; r < rows_.size(); r++) {
        for (size_t k = 0; k < cols_; k++) {
            if (rows_[r].get(k)) {
                out.rows_[r] ^= rhs.rows_[k];
            }
        }
    }
    return out;
}

bool Gf2Matrix::is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](const BitVec &r) { return r.is_zero(); });
}

std::vector<std::string> Gf2Matrix::str_rows() const {
    std::vector<std::string> out;
    out.reserve(rows_.size());
    for (const auto &r : rows_) {
        out.push_back(r.str());
    }
    return out;
}

RrefResult rref(const Gf2Matrix &m) {
    std::vector<BitVec> rows = m.row_vectors();
    std::vector<size_t> pivots;
    size_t rank = 0;
    for (size_t col = 0; col < m.cols() && rank < rows.size(); col++) {
        size_t found = rank;
        while (found < rows.size() && !rows[found].get(col)) {
            found++;
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[found]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != rank && rows[r].get(col)) {
                rows[r] ^= rows[rank];
            }
        }
        pivots.push_back(col);
        rank++;
    }
    rows.resize(rank);
    return RrefResult{Gf2Matrix(m.cols(), std::move(rows)), rank, std::move(pivots)};
}

SubspaceBasis::SubspaceBasis(size_t ambient_dim) : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {
}

SubspaceBasis SubspaceBasis::row_space(const Gf2Matrix &m) {
    auto reduced = rref(m);
    SubspaceBasis s;
    s.ambient_dim_ = m.cols();
    s.basis_ = std::move(reduced.matrix);
    s.pivots_ = std::move(reduced.pivots);
    return s;
}

SubspaceBasis SubspaceBasis::span(size_t ambient_dim, const std::vector<BitVec> &generators) {
    return row_space(Gf2Matrix(ambient_dim, generators));
}

SubspaceBasis SubspaceBasis::full(size_t ambient_dim) {
    return row_space(Gf2Matrix::identity(ambient_dim));
}

bool SubspaceBasis::member(const BitVec &v) const {
    require_same_length(v.size(), ambient_dim_, "member");
    BitVec residue = v;
    for (size_t r = 0; r < basis_.rows(); r++) {
        if (residue.get(pivots_[r])) {
            residue ^= basis_.row(r);
        }
    }
    return residue.is_zero();
}

void SubspaceBasis::for_each_element(const std::function<void(const BitVec &)> &f) const {
    size_t k = dim();
    if (k >= 63) {
        throw BudgetExceeded("subspace too large to enumerate");
    }
    BitVec cur(ambient_dim_);
    f(cur);
    uint64_t total = uint64_t{1} << k;
    for (uint64_t i = 1; i < total; i++) {
        cur ^= basis_.row(static_cast<size_t>(std::countr_zero(i)));
        f(cur);
    }
}

std::vector<BitVec> SubspaceBasis::elements() const {
    std::vector<BitVec> out;
    for_each_element([&](const BitVec &v) { out.push_back(v); });
    return out;
}

bool member(const SubspaceBasis &s, const BitVec &v) {
    return s.member(v);
}

SubspaceBasis dual(const SubspaceBasis &s) {
    size_t n = s.ambient_dim();
    const auto &pivots = s.pivots();
    std::vector<bool> is_pivot(n, false);
    for (size_t p : pivots) {
        is_pivot[p] = true;
    }
    // One kernel vector per free column j: x_j = 1, x_{pivot(r)} = row_r[j].
    std::vector<BitVec> kernel;
    for (size_t j = 0; j < n; j++) {
        if (is_pivot[j]) {
            continue;
        }
        BitVec v(n);
        v.set(j, true);
        for (size_t r = 0; r < s.dim(); r++) {
            if (s.basis().get(r, j)) {
                v.set(pivots[r], true);
            }
        }
        kernel.push_back(std::move(v));
    }
    return SubspaceBasis::span(n, kernel);
}

SubspaceBasis intersect(const SubspaceBasis &a, const SubspaceBasis &b) {
    // A ∩ B = (A⊥ + B⊥)⊥.
    std::vector<BitVec> gens = dual(a).basis().row_vectors();
    SubspaceBasis db = dual(b);
    for (const auto &r : db.basis().row_vectors()) {
        gens.push_back(r);
    }
    return dual(SubspaceBasis::span(a.ambient_dim(), gens));
}

size_t min_distance(const SubspaceBasis &s, size_t max_dim) {
    if (s.dim() == 0) {
        throw std::invalid_argument("min_distance of the zero subspace is undefined");
    }
    if (s.dim() > max_dim) {
        throw BudgetExceeded("min_distance: dimension " + std::to_string(s.dim()) + " exceeds enumeration budget " +
                             std::to_string(max_dim));
    }
    size_t best = s.ambient_dim();
    bool first = true;
    s.for_each_element([&](const BitVec &v) {
        if (first) {
            first = false;  // skip the zero vector
            return;
        }
        best = std::min(best, v.weight());
    });
    return best;
}

Gf2Matrix invert(const Gf2Matrix &m) {
    size_t n = m.rows();
    if (m.cols() != n) {
        throw std::invalid_argument("invert: matrix is not square");
    }
    std::vector<BitVec> left = m.row_vectors();
    std::vector<BitVec> right = Gf2Matrix::identity(n).row_vectors();
    for (size_t col = 0; col < n; col++) {
        size_t found = col;
        while (found < n && !left[found].get(col)) {
            found++;
        }
        if (found == n) {
            throw std::invalid_argument("invert: matrix is singular over GF(2)");
        }
        std::swap(left[col], left[found]);
        std::swap(right[col], right[found]);
        for (size_t r = 0; r < n; r++) {
            if (r != col && left[r].get(col)) {
                left[r] ^= left[col];
                right[r] ^= right[col];
            }
        }
    }
    return Gf2Matrix(n, std::move(right));
}

BasisMap::BasisMap(std::vector<BitVec> columns) : columns_(std::move(columns)) {
    for (const auto &c : columns_) {
        require_same_length(c.size(), columns_.size(), "BasisMap column");
    }
    inverse_ = invert(matrix());
}

BasisMap BasisMap::identity(size_t n) {
    std::vector<BitVec> cols;
    for (size_t i = 0; i < n; i++) {
        cols.push_back(BitVec::unit(n, i));
    }
    return BasisMap(std::move(cols));
}

BasisMap BasisMap::permutation(const std::vector<size_t> &perm) {
    size_t n = perm.size();
    std::vector<BitVec> cols;
    for (size_t i = 0; i < n; i++) {
        cols.push_back(BitVec::unit(n, perm[i]));
    }
    return BasisMap(std::move(cols));
}

Gf2Matrix BasisMap::matrix() const {
    return Gf2Matrix(columns_.size(), columns_).transpose();
}

BitVec BasisMap::apply(const BitVec &x) const {
    require_same_length(x.size(), columns_.size(), "apply_basis_map");
    BitVec out(columns_.size());
    for (size_t i = 0; i < columns_.size(); i++) {
        if (x.get(i)) {
            out ^= columns_[i];
        }
    }
    return out;
}

BitVec BasisMap::apply_inverse(const BitVec &y) const {
    return inverse_.multiply(y);
}

SubspaceBasis BasisMap::apply(const SubspaceBasis &s) const {
    std::vector<BitVec> mapped;
    for (const auto &r : s.basis().row_vectors()) {
        mapped.push_back(apply(r));
    }
    return SubspaceBasis::span(ambient_dim(), mapped);
}

Gf2Matrix dual_basis(const BasisMap &b) {
    const Gf2Matrix &rows = b.inverse();
    size_t n = b.ambient_dim();
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            if (rows.row(i).dot(b.column(j)) != (i == j)) {
                throw std::logic_error("dual_basis: u^i . u_j != delta_ij");
            }
        }
    }
    return rows;
}

BitVec apply_basis_map(const BasisMap &b, const BitVec &x) {
    return b.apply(x);
}

SubspaceBasis random_subspace(size_t n, size_t dim, Rng &rng) {
    if (dim > n) {
        throw std::invalid_argument("random_subspace: dim exceeds ambient dimension");
    }
    while (true) {
        std::vector<BitVec> rows;
        rows.reserve(dim);
        for (size_t i = 0; i < dim; i++) {
            rows.push_back(random_bitvec(n, rng));
        }
        auto s = SubspaceBasis::span(n, rows);
        if (s.dim() == dim) {
            return s;
        }
    }
}

SubspaceBasis random_subspace(size_t n, size_t dim, uint64_t seed) {
    Rng rng = make_rng(seed);
    return random_subspace(n, dim, rng);
}

BasisMap random_isometry(size_t n, Rng &rng) {
    if (n == 0) {
        throw std::invalid_argument("random_isometry: n must be positive");
    }
    std::vector<size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    // Fisher-Yates with the portable bounded sampler.
    for (size_t i = n - 1; i > 0; i--) {
        std::swap(perm[i], perm[uniform_below(rng, i + 1)]);
    }
    return BasisMap::permutation(perm);
}

BasisMap random_isometry(size_t n, uint64_t seed) {
    Rng rng = make_rng(seed);
    return random_isometry(n, rng);
}

BasisMap random_basis(size_t n, Rng &rng) {
    while (true) {
        std::vector<BitVec> cols;
        for (size_t i = 0; i < n; i++) {
            cols.push_back(random_bitvec(n, rng));
        }
        if (rref(Gf2Matrix(n, cols)).rank == n) {
            return BasisMap(std::move(cols));
        }
    }
}

}  // namespace qmoney
