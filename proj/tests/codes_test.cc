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

#include <cmath>

#include "brute.h"
#include "gtest/gtest.h"
#include "qmoney/errors.h"

using namespace qmoney;

namespace {

const std::vector<std::string> kGenerators = {"100011", "010110", "001101"};
const std::vector<std::string> kParity = {"011100", "110010", "101001"};

CodeSpec golden(size_t q = 1) {
    return code_spec_from_generators(kGenerators, q);
}

std::vector<uint64_t> elements_of(const SubspaceBasis &s) {
    std::vector<uint64_t> out;
    for (const auto &v : s.elements()) {
        out.push_back(v.to_index());
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool check_passed(const CertificateReport &r, const std::string &name) {
    for (const auto &c : r.checks) {
        if (c.name == name) {
            return c.passed;
        }
    }
    ADD_FAILURE() << "no check named " << name;
    return false;
}

}  // namespace

TEST(code_spec, golden_code_fields) {
    CodeSpec spec = golden();
    ASSERT_EQ(spec.n, 6);
    ASSERT_EQ(spec.code.dim(), 3);
    ASSERT_EQ(spec.d_primal, 3);
    ASSERT_EQ(spec.d_dual, 3);
    ASSERT_EQ(spec.dual_code, SubspaceBasis::row_space(Gf2Matrix::from_strings(kParity)));
    // H_C G_C = 0, with G_C the transpose of the generator rows.
    ASSERT_TRUE(Gf2Matrix::from_strings(kParity).multiply(Gf2Matrix::from_strings(kGenerators).transpose()).is_zero());
    for (const auto &v : spec.code.elements()) {
        ASSERT_TRUE(spec.parity_primal.multiply(v).is_zero());
    }
    for (const auto &w : spec.dual_code.elements()) {
        ASSERT_TRUE(spec.parity_dual.multiply(w).is_zero());
    }
}

TEST(certify, examples) {
    auto report = certify(golden(1));
    ASSERT_TRUE(report.passed()) << report.summary();
    ASSERT_EQ(report.d_primal, 3);
    ASSERT_EQ(report.d_dual, 3);
    ASSERT_EQ(report.summary(), "pass d=3/3");

    auto full = certify(build_code_spec(SubspaceBasis::full(6), 1));
    ASSERT_FALSE(full.passed());
    ASSERT_EQ(full.d_primal, 1);

    auto strict = certify(golden(2));
    ASSERT_FALSE(strict.passed());
    ASSERT_FALSE(check_passed(strict, "distance_primal"));
    ASSERT_FALSE(check_passed(strict, "distance_dual"));
    ASSERT_TRUE(check_passed(strict, "dimension"));
}

TEST(certify, detects_tampered_fields) {
    CodeSpec spec = golden();
    spec.d_primal = 4;
    ASSERT_FALSE(check_passed(certify(spec), "stored_distances"));
    spec = golden();
    spec.dual_code = spec.code;
    ASSERT_FALSE(certify(spec).passed());
}

TEST(search, q0_accepts_any_half_dimensional_code) {
    CodeSpec spec = search_applicable_code(6, 0, 1);
    ASSERT_EQ(spec.code.dim(), 3);
    ASSERT_TRUE(certify(spec).passed());
}

TEST(search, q1_finds_certified_codes) {
    for (size_t n : {6, 8, 10}) {
        ASSERT_LT(gv_margin(n, 1), 0);
        for (uint64_t seed = 0; seed < 10; seed++) {
            CodeSpec spec = search_applicable_code(n, 1, seed);
            ASSERT_TRUE(certify(spec).passed());
            ASSERT_GE(spec.d_primal, 3);
            ASSERT_GE(spec.d_dual, 3);
            // Brute-force re-check of both distances.
            ASSERT_GE(brute::pairwise_distance(elements_of(spec.code)), 3);
            ASSERT_GE(brute::pairwise_distance(elements_of(spec.dual_code)), 3);
        }
    }
}

TEST(search, deterministic_and_parallel_merge_matches_serial) {
    ASSERT_EQ(search_applicable_code(8, 1, 42), search_applicable_code(8, 1, 42));
    ASSERT_EQ(search_applicable_code(8, 1, 42, kDefaultMaxAttempts, 4), search_applicable_code(8, 1, 42));
    ASSERT_EQ(search_applicable_code(10, 1, 5, kDefaultMaxAttempts, 3), search_applicable_code(10, 1, 5));
}

TEST(search, n6_q2_does_not_exist) {
    // Every 3-dim subspace of F_2^6 has a nonzero word of weight < 5.
    auto all = brute::all_subspaces(6, 3);
    ASSERT_EQ(all.size(), 1395);
    for (const auto &s : all) {
        ASSERT_LT(brute::pairwise_distance(s), 5);
    }
    ASSERT_THROW(search_applicable_code(6, 2, 0, 100000), NotFound);
}

TEST(search, rejects_bad_parameters) {
    ASSERT_THROW(search_applicable_code(7, 1, 0), std::invalid_argument);
    ASSERT_THROW(search_applicable_code(0, 1, 0), std::invalid_argument);
}

TEST(errors, enumerate_examples) {
    auto e0 = enumerate_errors(6, 0);
    ASSERT_EQ(e0.size(), 1);
    ASSERT_EQ(e0.vectors[0].str(), "000000");
    auto e1 = enumerate_errors(6, 1);
    ASSERT_EQ(e1.size(), 7);
    ASSERT_EQ(e1.vectors[0].str(), "000000");
    ASSERT_EQ(e1.vectors[1].str(), "000001");
    ASSERT_EQ(e1.vectors[6].str(), "100000");
    ASSERT_EQ(enumerate_errors(4, 2).size(), 11);
    ASSERT_EQ(e1.index_of(BitVec::from_string("000010")), std::optional<size_t>(2));
    ASSERT_EQ(e1.index_of(BitVec::from_string("000011")), std::nullopt);
    ASSERT_THROW(enumerate_errors(30, 15, 1000), BudgetExceeded);
}

TEST(errors, enumerate_matches_scan) {
    for (size_t n = 1; n <= 12; n++) {
        for (int q = 0; q <= 3; q++) {
            auto got = enumerate_errors(n, q);
            std::vector<std::string> expect;
            for (uint64_t x : brute::low_weight(n, q)) {
                expect.push_back(brute::str(x, n));
            }
            std::sort(expect.begin(), expect.end());
            ASSERT_EQ(got.size(), expect.size());
            for (size_t i = 0; i < expect.size(); i++) {
                ASSERT_EQ(got.vectors[i].str(), expect[i]);
            }
        }
    }
}

TEST(errors, count_error_pairs) {
    ASSERT_EQ(count_error_pairs(6, 1), 49);
    for (size_t n = 1; n < 40; n++) {
        ASSERT_EQ(count_error_pairs(n, 0), 1);
    }
    ASSERT_EQ(count_error_pairs(14, 3), 470 * 470);
    uint64_t side = 0;
    for (int j = 0; j <= 3; j++) {
        side += brute::binom(14, j);
    }
    ASSERT_EQ(side, 470);
    for (size_t n = 1; n <= 16; n++) {
        for (size_t q = 0; q <= 3; q++) {
            uint64_t size = enumerate_errors(n, q).size();
            ASSERT_EQ(count_error_pairs(n, q), size * size);
            ASSERT_EQ(error_count(n, q), size);
        }
    }
    ASSERT_THROW(count_error_pairs(200, 100), std::overflow_error);
}

TEST(syndrome_table, golden_parity) {
    CodeSpec spec = golden();
    auto parity = Gf2Matrix::from_strings(kParity);
    auto table = build_syndrome_table(parity, 1);
    ASSERT_EQ(table.size(), 7);
    ASSERT_EQ(table.lookup(BitVec(3)), std::optional<BitVec>(BitVec(6)));
    for (size_t j = 0; j < 6; j++) {
        auto hit = table.lookup(parity.column(j));
        ASSERT_TRUE(hit.has_value());
        ASSERT_EQ(*hit, BitVec::unit(6, j));
    }
    ASSERT_FALSE(table.contains(BitVec::from_string("111")));
    ASSERT_EQ(parity.multiply(BitVec::from_string("000111")).str(), "111");
}

TEST(syndrome_table, q0_and_collisions) {
    auto table = build_syndrome_table(Gf2Matrix::from_strings(kParity), 0);
    ASSERT_EQ(table.size(), 1);
    ASSERT_TRUE(table.contains(BitVec(3)));
    // A distance-3 code cannot separate weight-2 errors.
    ASSERT_THROW(build_syndrome_table(Gf2Matrix::from_strings(kParity), 2), SyndromeCollision);
}

TEST(syndrome_table, decodes_every_tolerated_error) {
    for (size_t n : {6, 8, 10, 12}) {
        CodeSpec spec = search_applicable_code(n, 1, n);
        for (const auto *parity : {&spec.parity_primal, &spec.parity_dual}) {
            SyndromeTable t(*parity, 1);
            ASSERT_EQ(t.size(), error_count(n, 1));
            for (const auto &e : enumerate_errors(n, 1).vectors) {
                ASSERT_EQ(t.lookup(parity->multiply(e)), std::optional<BitVec>(e));
            }
            for (const auto &[s, e] : t.entries()) {
                ASSERT_EQ(parity->multiply(e), s);
            }
        }
    }
}

TEST(stabilizers, generator_counts) {
    auto g = stabilizer_generators(golden());
    ASSERT_EQ(g.x_type_rows.rows(), 3);
    ASSERT_EQ(g.z_type_rows.rows(), 3);
    ASSERT_EQ(g.x_type_rows, golden().parity_dual);
    ASSERT_EQ(g.z_type_rows, golden().parity_primal);
    auto check = g.check_matrix();
    ASSERT_EQ(check.rows(), 6);
    ASSERT_EQ(check.cols(), 12);

    auto tiny = stabilizer_generators(code_spec_from_generators({"11"}, 0));
    ASSERT_EQ(tiny.x_type_rows.rows(), 1);
    ASSERT_EQ(tiny.z_type_rows.rows(), 1);

    for (size_t n : {6, 8, 10}) {
        ASSERT_EQ(stabilizer_generators(search_applicable_code(n, 1, 3)).size(), n);
    }
}

TEST(stabilizers, x_and_z_generators_commute) {
    for (size_t n : {6, 8, 10}) {
        auto g = stabilizer_generators(search_applicable_code(n, 1, 17));
        for (const auto &x : g.x_type_rows.row_vectors()) {
            for (const auto &z : g.z_type_rows.row_vectors()) {
                ASSERT_FALSE(x.dot(z));
            }
        }
    }
}

TEST(bounds, binary_entropy) {
    ASSERT_EQ(binary_entropy(0), 0);
    ASSERT_EQ(binary_entropy(1), 0);
    ASSERT_DOUBLE_EQ(binary_entropy(0.5), 1);
    for (double x : {0.1, 1.0 / 3, 0.7}) {
        ASSERT_NEAR(binary_entropy(x), brute::entropy(x), 1e-15);
    }
}

TEST(bounds, gv_margin_examples) {
    ASSERT_EQ(gv_margin(10, 0), 1.0);
    double h = (1.0 / 3) * std::log2(3.0) + (2.0 / 3) * std::log2(1.5);
    ASSERT_NEAR(gv_margin(6, 1), 1 - 2 * h, 1e-12);
    ASSERT_NEAR(gv_margin(6, 1), -0.8366, 1e-4);
    for (size_t q = 1; q <= 5; q++) {
        ASSERT_DOUBLE_EQ(gv_margin(4 * q, q), -1.0);
        ASSERT_DOUBLE_EQ(gv_margin(2 * q, q), 1.0);
    }
    ASSERT_THROW(gv_margin(3, 2), std::invalid_argument);
}

TEST(bounds, soundness_tradeoff_examples) {
    ASSERT_DOUBLE_EQ(soundness_tradeoff(6, 1), 300.125);
    for (size_t n = 2; n <= 40; n += 2) {
        ASSERT_DOUBLE_EQ(soundness_tradeoff(n, 0), std::exp2(-0.5 * n));
        for (size_t q = 1; q <= 4; q++) {
            ASSERT_GE(soundness_tradeoff(n, q), soundness_tradeoff(n, q - 1));
        }
    }
}
