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

#include <cmath>

#include "brute.h"
#include "gtest/gtest.h"

using namespace qmoney;

namespace {

std::shared_ptr<const CodeSpec> golden() {
    static auto spec = std::make_shared<const CodeSpec>(
        code_spec_from_generators({"100011", "010110", "001101"}, 1));
    return spec;
}

std::vector<uint64_t> elements_of(const SubspaceBasis &s) {
    std::vector<uint64_t> out;
    for (const auto &v : s.elements()) {
        out.push_back(v.to_index());
    }
    return out;
}

/// x in (code + e) for some e of weight <= q, by scanning all cosets.
bool brute_in_union(const std::vector<uint64_t> &code, size_t n, int q, uint64_t x) {
    for (uint64_t e : brute::low_weight(n, q)) {
        for (uint64_t v : code) {
            if ((v ^ e) == x) {
                return true;
            }
        }
    }
    return false;
}

}  // namespace

TEST(member_subset, examples) {
    MembershipPredicate p(PredicateKind::SubsetPrimal, golden());
    ASSERT_TRUE(member_subset(p, BitVec(6)));
    ASSERT_TRUE(member_subset(p, BitVec::from_string("110000")));
    ASSERT_EQ(SubspaceBasis::row_space(golden()->parity_primal),
              SubspaceBasis::row_space(Gf2Matrix::from_strings({"011100", "110010", "101001"})));
    ASSERT_FALSE(member_subset(p, BitVec::from_string("000111")));
    ASSERT_THROW(member_subset(p, BitVec(5)), std::invalid_argument);
    MembershipPredicate s(PredicateKind::SyndromePrimal, golden());
    ASSERT_THROW(member_subset(s, BitVec(6)), std::invalid_argument);
}

TEST(member_syndrome, examples) {
    MembershipPredicate p(PredicateKind::SyndromePrimal, golden());
    for (const auto &v : golden()->code.elements()) {
        ASSERT_TRUE(member_syndrome(p, v));
    }
    ASSERT_FALSE(member_syndrome(p, BitVec::from_string("000111")));
    MembershipPredicate s(PredicateKind::SubsetPrimal, golden());
    ASSERT_THROW(member_syndrome(s, BitVec(6)), std::invalid_argument);
}

TEST(membership, both_approaches_agree_with_brute_force) {
    for (size_t n : {6, 8, 10, 12}) {
        auto spec = std::make_shared<const CodeSpec>(search_applicable_code(n, 1, n + 1));
        auto code = elements_of(spec->code), dual_code = elements_of(spec->dual_code);
        MembershipPredicate sp(PredicateKind::SubsetPrimal, spec), yp(PredicateKind::SyndromePrimal, spec);
        MembershipPredicate sd(PredicateKind::SubsetDual, spec), yd(PredicateKind::SyndromeDual, spec);
        size_t primal_count = 0;
        for (uint64_t x = 0; x < (uint64_t{1} << n); x++) {
            BitVec v = BitVec::from_index(n, x);
            bool a = member_subset(sp, v);
            ASSERT_EQ(a, member_syndrome(yp, v));
            ASSERT_EQ(member_subset(sd, v), member_syndrome(yd, v));
            primal_count += a;
            if (n <= 8) {
                ASSERT_EQ(a, brute_in_union(code, n, 1, x));
                ASSERT_EQ(member_subset(sd, v), brute_in_union(dual_code, n, 1, x));
            }
        }
        // Disjoint cosets: |C_{E_X}| = |E_X| 2^{n/2}.
        ASSERT_EQ(primal_count, error_count(n, 1) << (n / 2));
    }
}

TEST(membership, sampled_agreement_above_exhaustive_range) {
    auto spec = std::make_shared<const CodeSpec>(search_applicable_code(16, 1, 3));
    MembershipPredicate sp(PredicateKind::SubsetPrimal, spec), yp(PredicateKind::SyndromePrimal, spec);
    MembershipPredicate sd(PredicateKind::SubsetDual, spec), yd(PredicateKind::SyndromeDual, spec);
    Rng rng = make_rng(1);
    for (int t = 0; t < 100000; t++) {
        BitVec v = random_bitvec(16, rng);
        ASSERT_EQ(sp.contains(v), yp.contains(v));
        ASSERT_EQ(sd.contains(v), yd.contains(v));
    }
}

TEST(apply_phase_oracle, examples) {
    auto spec = golden();
    MembershipPredicate p(PredicateKind::SubsetPrimal, spec);
    DenseState c = subspace_state(spec->code);
    DenseState flipped = apply_phase_oracle(p, c);
    for (size_t b = 0; b < c.dimension(); b++) {
        ASSERT_EQ(flipped[b], -c[b]);
    }
    Rng rng = make_rng(2);
    DenseState psi = random_state(6, rng);
    ASSERT_EQ(apply_phase_oracle(p, apply_phase_oracle(p, psi)).max_deviation(psi), 0);
    ASSERT_NEAR(apply_phase_oracle(p, psi).norm_squared(), psi.norm_squared(), 1e-15);

    // A coset predicate for an offset outside every tolerated coset never fires
    // on |C>, so it acts as the identity there.
    auto far = MembershipPredicate::coset(Side::Primal, spec, BitVec::from_string("000111"));
    ASSERT_EQ(apply_phase_oracle(far, c).max_deviation(c), 0);
}

TEST(project_via_control, examples) {
    auto spec = golden();
    MembershipPredicate p(PredicateKind::SubsetPrimal, spec);
    auto inside = project_via_control(p, subspace_state(spec->code));
    ASSERT_NEAR(inside.prob_in, 1, 1e-12);
    ASSERT_FALSE(inside.state_out.has_value());

    auto outside = project_via_control(p, DenseState::basis(BitVec::from_string("000111")));
    ASSERT_NEAR(outside.prob_in, 0, 1e-12);
    ASSERT_FALSE(outside.state_in.has_value());

    auto uniform = project_via_control(p, hadamard_all(DenseState(6)));
    ASSERT_NEAR(uniform.prob_in, 56.0 / 64, 1e-12);
}

TEST(project_via_control, agrees_with_direct_mask) {
    Rng rng = make_rng(3);
    for (size_t n : {6, 8}) {
        auto spec = std::make_shared<const CodeSpec>(search_applicable_code(n, 1, 7));
        for (auto kind : {PredicateKind::SubsetPrimal, PredicateKind::SubsetDual, PredicateKind::SyndromeDual}) {
            MembershipPredicate p(kind, spec);
            for (int t = 0; t < 10; t++) {
                DenseState psi = random_state(n, rng);
                auto a = project_via_control(p, psi);
                auto b = project_by_mask(p, psi);
                double prob = 0;
                for (size_t x = 0; x < psi.dimension(); x++) {
                    if (p.contains(BitVec::from_index(n, x))) {
                        prob += std::norm(psi[x]);
                    }
                }
                ASSERT_NEAR(a.prob_in, prob, 1e-12);
                ASSERT_NEAR(a.prob_in, b.prob_in, 1e-12);
                ASSERT_LE(a.state_in->max_deviation(*b.state_in), 1e-12);
                ASSERT_LE(a.state_out->max_deviation(*b.state_out), 1e-12);
            }
        }
    }
}

TEST(combined_oracle, tag_layout) {
    CombinedOracle o(golden());
    ASSERT_EQ(o.tag_width(), 4);  // 1 + ceil(log2 7)
    ASSERT_EQ(o.num_real_tags(), 14);
    ASSERT_EQ(o.num_bits(), 10);
    ASSERT_EQ(o.tag(Side::Primal, 0).str(), "0000");
    ASSERT_EQ(o.tag(Side::Dual, 0).str(), "0001");
    ASSERT_EQ(o.tag(Side::Primal, 1).str(), "0010");
    ASSERT_EQ(o.tag(Side::Dual, 6).str(), "1101");
    for (size_t q : {0, 1, 2}) {
        // The layout depends on (n, q) only; the code need not be applicable.
        size_t n = q == 2 ? 12 : 6;
        auto spec = std::make_shared<const CodeSpec>(build_code_spec(random_subspace(n, n / 2, uint64_t{1}), q));
        CombinedOracle oq(spec);
        size_t ex = error_count(spec->n, q);
        ASSERT_EQ(oq.tag_width(), 1 + static_cast<size_t>(std::ceil(std::log2(static_cast<double>(ex)))));
        ASSERT_GE(size_t{1} << oq.tag_width(), 2 * ex);
    }
}

TEST(combined_oracle, examples) {
    auto spec = golden();
    CombinedOracle o(spec);
    for (const auto &v : spec->code.elements()) {
        ASSERT_TRUE(member_combined(o, o.tagged(Side::Primal, 0, v)));
    }
    Rng rng = make_rng(4);
    for (uint64_t t = o.num_real_tags(); t < 16; t++) {
        for (int k = 0; k < 10; k++) {
            // Big-endian: the first character is the most significant bit.
            std::string s;
            for (int i = 3; i >= 0; i--) {
                s += ((t >> i) & 1) ? '1' : '0';
            }
            ASSERT_FALSE(member_combined(o, BitVec::from_string(s).concat(random_bitvec(6, rng))));
        }
    }
    ASSERT_THROW(member_combined(o, BitVec(6)), std::invalid_argument);
}

TEST(combined_oracle, unfolds_to_the_subset_predicates) {
    auto spec = golden();
    CombinedOracle o(spec);
    MembershipPredicate sp(PredicateKind::SubsetPrimal, spec), sd(PredicateKind::SubsetDual, spec);
    size_t total = 0;
    for (uint64_t x = 0; x < 64; x++) {
        BitVec v = BitVec::from_index(6, x);
        bool any_primal = false, any_dual = false;
        for (size_t i = 0; i < 7; i++) {
            bool p = member_combined(o, o.tagged(Side::Primal, i, v));
            bool d = member_combined(o, o.tagged(Side::Dual, i, v));
            any_primal |= p;
            any_dual |= d;
            total += p + d;
        }
        ASSERT_EQ(any_primal, member_subset(sp, v));
        ASSERT_EQ(any_dual, member_subset(sd, v));
    }
    ASSERT_EQ(total, 7 * 8 * 2);
}

TEST(query_ledger, charges) {
    QueryLedger l(7);
    ASSERT_EQ(l.combined_equivalent(), 0);
    ASSERT_EQ(ledger_charge(l, QueryLedger::kPrimal, 0).combined_equivalent(), 0);
    ASSERT_EQ(ledger_charge(l, QueryLedger::kPrimal, 1).combined_equivalent(), 7);
    ASSERT_EQ(l.charge(QueryLedger::kPrimal).charge(QueryLedger::kDual).combined_equivalent(), 14);
    ASSERT_EQ(l.charge(QueryLedger::kCombined, 3).charge(QueryLedger::kCoset, 2).combined_equivalent(), 5);
    ASSERT_EQ(l.charge(QueryLedger::kSerial, 9).combined_equivalent(), 0);
    ASSERT_THROW(l.charge("teleport"), std::invalid_argument);
    // Charging returns a new value.
    ASSERT_EQ(l.count(QueryLedger::kPrimal), 0);
    auto m = l.charge(QueryLedger::kPrimal, 2).merged(l.charge(QueryLedger::kDual, 3));
    ASSERT_EQ(m.count(QueryLedger::kPrimal), 2);
    ASSERT_EQ(m.count(QueryLedger::kDual), 3);
    ASSERT_THROW(m.merged(QueryLedger(8)), std::invalid_argument);
}

TEST(oracle_session, emulated_subset_queries_cost_e_x_combined_queries) {
    OracleSession direct(golden()), emulated(golden());
    Rng rng = make_rng(5);
    for (int t = 0; t < 30; t++) {
        BitVec x = random_bitvec(6, rng);
        ASSERT_EQ(direct.query_primal(x), emulated.query_primal_via_combined(x));
    }
    ASSERT_EQ(direct.ledger().count(QueryLedger::kPrimal), 30);
    ASSERT_EQ(emulated.ledger().count(QueryLedger::kCombined), 30 * 7);
    ASSERT_EQ(direct.ledger().combined_equivalent(), emulated.ledger().combined_equivalent());
}

TEST(predicate, conjugation_by_isometry) {
    auto spec = golden();
    MembershipPredicate p(PredicateKind::SubsetPrimal, spec);
    BasisMap f = random_isometry(6, 3);
    auto mapped_spec = std::make_shared<const CodeSpec>(build_code_spec(f.apply(spec->code), 1));
    MembershipPredicate direct(PredicateKind::SubsetPrimal, mapped_spec);
    auto conj = p.conjugated_by(f);
    for (uint64_t x = 0; x < 64; x++) {
        BitVec v = BitVec::from_index(6, x);
        ASSERT_EQ(conj.contains(v), p.contains(f.apply_inverse(v)));
        ASSERT_EQ(conj.contains(v), direct.contains(v));
    }
}
