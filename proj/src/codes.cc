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

#include "qmoney/codes.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qmoney/errors.h"

namespace qmoney {

namespace {

size_t distance_or_zero(const SubspaceBasis &s) {
    return s.dim() == 0 ? 0 : min_distance(s);
}

/// Early-exit variant used by the search: true iff every nonzero element
/// has weight >= bound.
bool distance_at_least(const SubspaceBasis &s, size_t bound) {
    if (s.dim() == 0) {
        return false;
    }
    if (bound <= 1) {
        return true;
    }
    return min_distance(s) >= bound;
}

}  // namespace

CodeSpec build_code_spec(const SubspaceBasis &code, size_t q) {
    CodeSpec spec;
    spec.n = code.ambient_dim();
    spec.q = q;
    spec.code = code;
    spec.dual_code = dual(code);
    spec.d_primal = distance_or_zero(spec.code);
    spec.d_dual = distance_or_zero(spec.dual_code);
    spec.parity_primal = spec.dual_code.basis();
    spec.parity_dual = spec.code.basis();
    return spec;
}

CodeSpec code_spec_from_generators(const std::vector<std::string> &basis_rows, size_t q) {
    auto m = Gf2Matrix::from_strings(basis_rows);
    return build_code_spec(SubspaceBasis::row_space(m), q);
}

bool CertificateReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CertificateCheck &c) { return c.passed; });
}

std::string CertificateReport::summary() const {
    std::ostringstream out;
    out << (passed() ? "pass" : "fail") << " d=" << d_primal << "/" << d_dual;
    for (const auto &c : checks) {
        if (!c.passed) {
            out << "; " << c.name << ": " << c.detail;
        }
    }
    return out.str();
}

CertificateReport certify(const CodeSpec &spec) {
    CertificateReport report;
    auto add = [&](std::string name, bool ok, std::string detail) {
        report.checks.push_back({std::move(name), ok, std::move(detail)});
    };
    size_t n = spec.code.ambient_dim();
    report.dim = spec.code.dim();
    SubspaceBasis fresh_dual = dual(spec.code);
    report.dual_dim = fresh_dual.dim();

    add("ambient", n == spec.n && n % 2 == 0 && n > 0,
        "n=" + std::to_string(n) + " (stored " + std::to_string(spec.n) + ")");
    add("dimension", 2 * report.dim == n, "dim(C)=" + std::to_string(report.dim));
    add("dual", fresh_dual == spec.dual_code, "stored dual must equal recomputed C⊥");

    try {
        report.d_primal = report.dim == 0 ? 0 : min_distance(spec.code);
        report.d_dual = report.dual_dim == 0 ? 0 : min_distance(fresh_dual);
    } catch (const BudgetExceeded &e) {
        add("distance", false, e.what());
        return report;
    }
    size_t need = 2 * spec.q + 1;
    add("distance_primal", report.d_primal >= need,
        "d(C)=" + std::to_string(report.d_primal) + " needs >= " + std::to_string(need));
    add("distance_dual", report.d_dual >= need,
        "d(C⊥)=" + std::to_string(report.d_dual) + " needs >= " + std::to_string(need));
    add("stored_distances", report.d_primal == spec.d_primal && report.d_dual == spec.d_dual,
        "stored " + std::to_string(spec.d_primal) + "/" + std::to_string(spec.d_dual));

    bool parity_ok = spec.parity_primal.cols() == n && spec.parity_dual.cols() == n &&
                     SubspaceBasis::row_space(spec.parity_primal) == fresh_dual &&
                     SubspaceBasis::row_space(spec.parity_dual) == spec.code &&
                     spec.parity_primal.multiply(spec.code.basis().transpose()).is_zero();
    add("parity", parity_ok, "H_C must annihilate C and H_{C⊥} must annihilate C⊥");
    return report;
}

CodeSpec search_applicable_code(size_t n, size_t q, uint64_t seed, size_t max_attempts, unsigned jobs) {
    if (n == 0 || n % 2 != 0) {
        throw std::invalid_argument("search_applicable_code: n must be positive and even");
    }
    if (n / 2 > kDefaultDistanceBudgetDim) {
        throw BudgetExceeded("search_applicable_code: n/2 exceeds the distance enumeration budget");
    }
    size_t need = 2 * q + 1;
    auto attempt = [&](size_t index) -> std::optional<SubspaceBasis> {
        auto c = random_subspace(n, n / 2, split_seed(seed, index));
        if (distance_at_least(c, need) && distance_at_least(dual(c), need)) {
            return c;
        }
        return std::nullopt;
    };

    jobs = std::max(1u, jobs);
    size_t batch = jobs == 1 ? 1 : size_t{jobs} * 8;
    for (size_t start = 0; start < max_attempts; start += batch) {
        size_t end = std::min(max_attempts, start + batch);
        std::vector<std::optional<SubspaceBasis>> results(end - start);
        if (jobs == 1) {
            results[0] = attempt(start);
        } else {
            std::atomic<size_t> next{start};
            std::vector<std::thread> workers;
            for (unsigned w = 0; w < jobs; w++) {
                workers.emplace_back([&] {
                    for (size_t i = next++; i < end; i = next++) {
                        results[i - start] = attempt(i);
                    }
                });
            }
            for (auto &t : workers) {
                t.join();
            }
        }
        // Smallest successful attempt index wins.
        for (auto &r : results) {
            if (r) {
                return build_code_spec(*r, q);
            }
        }
    }
    throw NotFound("no applicable code found for n=" + std::to_string(n) + ", q=" + std::to_string(q) + " after " +
                   std::to_string(max_attempts) + " attempts (gv_margin=" + std::to_string(gv_margin(n, q)) + ")");
}

std::optional<size_t> ErrorSet::index_of(const BitVec &e) const {
    auto it = std::lower_bound(vectors.begin(), vectors.end(), e);
    if (it == vectors.end() || *it != e) {
        return std::nullopt;
    }
    return static_cast<size_t>(it - vectors.begin());
}

uint64_t error_count(size_t n, size_t q) {
    unsigned __int128 total = 0;
    unsigned __int128 binom = 1;
    for (size_t j = 0; j <= std::min(n, q); j++) {
        if (j > 0) {
            binom = binom * (n - j + 1) / j;
        }
        total += binom;
        if (binom > std::numeric_limits<uint64_t>::max() || total > std::numeric_limits<uint64_t>::max()) {
            throw std::overflow_error("error_count overflows 64 bits");
        }
    }
    return static_cast<uint64_t>(total);
}

uint64_t count_error_pairs(size_t n, size_t q) {
    uint64_t side = error_count(n, q);
    uint64_t out;
    if (__builtin_mul_overflow(side, side, &out)) {
        throw std::overflow_error("count_error_pairs overflows 64 bits");
    }
    return out;
}

ErrorSet enumerate_errors(size_t n, size_t q, uint64_t budget) {
    uint64_t expected;
    try {
        expected = error_count(n, q);
    } catch (const std::overflow_error &) {
        throw BudgetExceeded("enumerate_errors: count overflows");
    }
    if (expected > budget) {
        throw BudgetExceeded("enumerate_errors: " + std::to_string(expected) + " vectors exceed budget " +
                             std::to_string(budget));
    }
    ErrorSet set{n, q, {}};
    set.vectors.reserve(expected);
    std::vector<size_t> positions;
    // Depth-first over increasing position lists of length <= q.
    auto recurse = [&](auto &&self, size_t from) -> void {
        BitVec v(n);
        for (size_t p : positions) {
            v.set(p, true);
        }
        set.vectors.push_back(std::move(v));
        if (positions.size() == q) {
            return;
        }
        for (size_t p = from; p < n; p++) {
            positions.push_back(p);
            self(self, p + 1);
            positions.pop_back();
        }
    };
    recurse(recurse, 0);
    std::sort(set.vectors.begin(), set.vectors.end());
    return set;
}

SyndromeTable::SyndromeTable(Gf2Matrix parity, size_t q) : parity_(std::move(parity)), q_(q) {
    auto errors = enumerate_errors(parity_.cols(), q);
    entries_.reserve(errors.size());
    for (auto &e : errors.vectors) {
        BitVec s = parity_.multiply(e);
        auto [it, inserted] = entries_.emplace(s, e);
        if (!inserted) {
            throw SyndromeCollision("errors " + it->second.str() + " and " + e.str() + " share syndrome " + s.str());
        }
    }
}

std::optional<BitVec> SyndromeTable::lookup(const BitVec &syndrome) const {
    auto it = entries_.find(syndrome);
    if (it == entries_.end()) {
        return std::nullopt;
    }
    return it->second;
}

SyndromeTable build_syndrome_table(const Gf2Matrix &parity, size_t q) {
    return SyndromeTable(parity, q);
}

Gf2Matrix StabilizerSet::check_matrix() const {
    size_t n = x_type_rows.rows() ? x_type_rows.cols() : z_type_rows.cols();
    std::vector<BitVec> rows;
    for (const auto &r : x_type_rows.row_vectors()) {
        rows.push_back(r.concat(BitVec(n)));
    }
    for (const auto &r : z_type_rows.row_vectors()) {
        rows.push_back(BitVec(n).concat(r));
    }
    return Gf2Matrix(2 * n, std::move(rows));
}

StabilizerSet stabilizer_generators(const CodeSpec &spec) {
    return StabilizerSet{spec.parity_dual, spec.parity_primal};
}

double binary_entropy(double x) {
    if (x <= 0.0 || x >= 1.0) {
        return 0.0;
    }
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double gv_margin(size_t n, size_t q) {
    if (n == 0 || 2 * q > n) {
        throw std::invalid_argument("gv_margin requires 0 <= 2q <= n and n > 0");
    }
    return 1.0 - 2.0 * binary_entropy(static_cast<double>(2 * q) / static_cast<double>(n));
}

double soundness_tradeoff_log2(size_t n, size_t q) {
    // |E_q|^2 = error_count^4; keep everything in log2 so large n never overflows.
    double side = std::log2(static_cast<double>(error_count(n, q)));
    return 4.0 * side - static_cast<double>(n) / 2.0;
}

double soundness_tradeoff(size_t n, size_t q) {
    // Exact when |E_q|^2 fits a double's mantissa and n is even.
    uint64_t side = error_count(n, q);
    if (n % 2 == 0 && side < (uint64_t{1} << 13)) {
        double pairs = static_cast<double>(side * side);
        return std::ldexp(pairs * pairs, -static_cast<int>(n / 2));
    }
    return std::exp2(soundness_tradeoff_log2(n, q));
}

}  // namespace qmoney
