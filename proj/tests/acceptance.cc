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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Expected values come from the reference routines in brute.h or
// from the worked example, never from the library under test.

#include <Eigen/Dense>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "brute.h"
#include "qmoney/codes.h"
#include "qmoney/errors.h"
#include "qmoney/gf2.h"
#include "qmoney/labx.h"
#include "qmoney/oracles.h"
#include "qmoney/scheme.h"
#include "qmoney/statesim.h"

using namespace qmoney;

namespace {

struct Failure {
    std::string what;
};

void expect(bool ok, const std::string &what) {
    if (!ok) {
        throw Failure{what};
    }
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::vector<uint64_t> indices(const SubspaceBasis &s) {
    std::vector<uint64_t> out;
    for (const auto &v : s.elements()) {
        out.push_back(v.to_index());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::shared_ptr<const CodeSpec> golden() {
    static auto spec = std::make_shared<const CodeSpec>(
        code_spec_from_generators({"100011", "010110", "001101"}, 1));
    return spec;
}

BitVec random_weight(size_t n, size_t w, Rng &rng) {
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    BitVec out(n);
    for (size_t i = 0; i < w; i++) {
        std::swap(order[i], order[i + uniform_below(rng, n - i)]);
        out.set(order[i], true);
    }
    return out;
}

// 1. Golden [[6,3]] code.
std::string golden_code() {
    const std::vector<std::string> g = {"100011", "010110", "001101"};
    const std::vector<std::string> h = {"011100", "110010", "101001"};
    const std::vector<std::string> words = {"000000", "001101", "010110", "011011",
                                            "100011", "101110", "110101", "111000"};
    CodeSpec spec = code_spec_from_generators(g, 1);
    expect(spec.d_primal == 3 && spec.d_dual == 3, "distances " + std::to_string(spec.d_primal) + "/" +
                                                        std::to_string(spec.d_dual));
    for (const auto &hr : h) {
        for (const auto &gr : g) {
            expect(!brute::dot(brute::parse(hr), brute::parse(gr)), "H_C G_C^T != 0 at " + hr + "," + gr);
        }
    }
    // The printed H_C spans the dual code.
    std::vector<uint64_t> hs;
    for (const auto &hr : h) {
        hs.push_back(brute::parse(hr));
    }
    expect(brute::span(hs) == indices(spec.dual_code), "dual code differs from span(H_C)");
    DenseState st = subspace_state(spec.code);
    double amp = 1 / std::sqrt(8.0);
    for (uint64_t b = 0; b < 64; b++) {
        bool listed = std::find(words.begin(), words.end(), brute::str(b, 6)) != words.end();
        expect(std::abs(st[b] - cplx(listed ? amp : 0.0)) <= 1e-12, "amplitude at " + brute::str(b, 6));
    }
    expect(certify(spec).passed(), "certify failed");
    return "d=3/3, 8-term support";
}

// 2. Perfect completeness through the registry pipeline.
std::string completeness() {
    size_t checked = 0;
    for (size_t n : {6, 8, 10}) {
        auto errors = brute::low_weight(n, 1);
        for (uint64_t seed = 0; seed < 10; seed++) {
            RegistryConfig cfg;
            cfg.n = n;
            cfg.q = 1;
            cfg.master_seed = 1000 + seed;
            OracleRegistry reg(cfg);
            Rng rng = make_rng(seed);
            BitVec r = random_bitvec(n, rng);
            Banknote note = mint_direct(reg, r);
            expect(certify(*reg.generate(r)->spec).passed(), "uncertified code");
            for (uint64_t e : errors) {
                for (uint64_t ez : errors) {
                    auto out = verify(reg, corrupt(note, BitVec::from_index(n, e), BitVec::from_index(n, ez)), rng);
                    expect(std::abs(out.accept_probability - 1) <= 1e-9 && out.accepted,
                           "n=" + std::to_string(n) + " rejected " + brute::str(e, n) + "," + brute::str(ez, n));
                    checked++;
                }
            }
        }
    }
    return std::to_string(checked) + " corruptions accepted";
}

// 3. The verifier matrix is the projector onto the tolerated span.
std::string projector_identity() {
    auto spec = golden();
    Verifier v(spec);
    auto m = v.matrix();
    auto expected = brute::projector(indices(spec->code), 6, 1);
    expect(brute::max_dev(m, expected) < 1e-10, "V differs from the coset projector");
    Eigen::MatrixXcd mat(64, 64);
    for (size_t r = 0; r < 64; r++) {
        for (size_t c = 0; c < 64; c++) {
            mat(static_cast<long>(r), static_cast<long>(c)) = m[r * 64 + c];
        }
    }
    double idem = (mat * mat - mat).cwiseAbs().maxCoeff();
    double herm = (mat - mat.adjoint()).cwiseAbs().maxCoeff();
    expect(idem < 1e-10, "not idempotent: " + fmt(idem));
    expect(herm < 1e-10, "not Hermitian: " + fmt(herm));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(mat);
    long rank = (solver.eigenvalues().array() >= 0.5).count();
    expect(rank == 49, "rank " + std::to_string(rank));
    return "rank 49, ||V^2-V|| = " + fmt(idem);
}

// 4. Subset and subspace membership agree everywhere.
std::string approach_equivalence() {
    uint64_t inputs = 0;
    for (size_t n : {6, 8, 10, 12}) {
        auto spec = std::make_shared<const CodeSpec>(search_applicable_code(n, 1, 40 + n));
        auto errors = brute::low_weight(n, 1);
        for (Side side : {Side::Primal, Side::Dual}) {
            bool primal = side == Side::Primal;
            MembershipPredicate subset(primal ? PredicateKind::SubsetPrimal : PredicateKind::SubsetDual, spec);
            MembershipPredicate syndrome(primal ? PredicateKind::SyndromePrimal : PredicateKind::SyndromeDual, spec);
            std::vector<uint8_t> reference(size_t{1} << n, 0);
            for (uint64_t c : indices(primal ? spec->code : spec->dual_code)) {
                for (uint64_t e : errors) {
                    reference[c ^ e] = 1;
                }
            }
            for (uint64_t x = 0; x < (uint64_t{1} << n); x++) {
                BitVec bx = BitVec::from_index(n, x);
                bool a = member_subset(subset, bx), b = member_syndrome(syndrome, bx);
                expect(a == b && a == static_cast<bool>(reference[x]),
                       "n=" + std::to_string(n) + " disagreement at " + brute::str(x, n));
                inputs++;
            }
        }
    }
    return std::to_string(inputs) + " inputs";
}

// 5. Conjugate coding lands on the coset state |A_{t,t'}>.
std::string conjugate_coding() {
    Rng rng = make_rng(5);
    double worst = 0;
    for (size_t n : {4, 6, 8}) {
        for (int t = 0; t < 50; t++) {
            BasisMap b = random_basis(n, rng);
            BitVec theta = random_weight(n, n / 2, rng);
            BitVec x = random_bitvec(n, rng);
            std::vector<uint64_t> cols;
            for (const auto &c : b.columns()) {
                cols.push_back(c.to_index());
            }
            auto rows = brute::dual_rows(cols, n);
            std::vector<uint64_t> gens;
            uint64_t t1 = 0, t2 = 0;
            for (size_t i = 0; i < n; i++) {
                if (theta.get(i)) {
                    gens.push_back(cols[i]);
                    t2 ^= x.get(i) ? rows[i] : 0;
                } else {
                    t1 ^= x.get(i) ? cols[i] : 0;
                }
            }
            auto expected = brute::coset_state(brute::span(gens), n, t1, t2);
            DenseState got = apply_basis_unitary(b, conjugate_coding_state(theta, x));
            worst = std::max(worst, brute::max_dev(got.amplitudes(), expected));
        }
    }
    expect(worst < 1e-12, "max deviation " + fmt(worst));
    // x = 0 reproduces direct minting.
    for (size_t n : {4, 6, 8}) {
        RegistryConfig cfg;
        cfg.n = n;
        cfg.q = 1;
        cfg.master_seed = 9;
        cfg.route = MintRoute::Conjugate;
        if (n == 4) {
            cfg.q = 0;
        }
        OracleRegistry reg(cfg);
        for (int t = 0; t < 10; t++) {
            BitVec r = random_bitvec(n, rng);
            Banknote c = mint_conjugate(reg, r, BitVec(n));
            Banknote d = mint_direct(reg, r);
            expect(c.serial == d.serial, "serials differ");
            double dev = std::get<DenseState>(c.state).max_deviation(std::get<DenseState>(d.state));
            expect(dev == 0, "x=0 note differs from direct mint by " + fmt(dev));
        }
    }
    return "max deviation " + fmt(worst);
}

// 6. Error-set counts.
std::string error_counts() {
    for (size_t n = 1; n <= 16; n++) {
        for (int q = 0; q <= 3; q++) {
            uint64_t side = brute::low_weight(n, q).size();
            expect(enumerate_errors(n, q).size() == side, "enumeration size at n=" + std::to_string(n));
            expect(count_error_pairs(n, q) == side * side, "pair count at n=" + std::to_string(n));
        }
    }
    expect(count_error_pairs(6, 1) == 49, "|E_1| at n=6");
    return "n<=16, q<=3; |E_1(6)| = 49";
}

// 7. GV margin and the shape of its curves.
std::string gv_margin_shape() {
    double m = gv_margin(6, 1);
    expect(std::abs(m - (1 - 2 * brute::entropy(1.0 / 3))) < 1e-9, "margin(6,1) = " + fmt(m));
    expect(std::abs(m - -0.83659166810897911) < 1e-9, "margin(6,1) = " + fmt(m));
    std::string crossings;
    for (size_t q : {1, 2, 3}) {
        auto report = gv_table(2 * q, 40 * q, {q});
        std::vector<double> ys;
        for (size_t i = 0; i < report.rows.size(); i++) {
            ys.push_back(report.number(i, "margin"));
        }
        // Peak at n = 2q, monotone fall to -1 at n = 4q, then a rise that
        // crosses back above zero once 2q/n drops under H^{-1}(1/2).
        expect(std::abs(ys[0] - 1) < 1e-15, "peak");
        expect(std::abs(ys[2 * q] + 1) < 1e-12, "trough");
        std::vector<size_t> signs;
        for (size_t i = 0; i + 1 < ys.size(); i++) {
            if (i < 2 * q) {
                expect(ys[i + 1] < ys[i], "not decreasing before n=4q");
            } else {
                expect(ys[i + 1] > ys[i], "not increasing after n=4q");
            }
            if ((ys[i] < 0) != (ys[i + 1] < 0)) {
                signs.push_back(2 * q + i + 1);
            }
        }
        expect(signs.size() == 2, "expected two sign changes for q=" + std::to_string(q));
        crossings += (crossings.empty() ? "" : "; ") + std::string("q=") + std::to_string(q) + ": negative on [" +
                     std::to_string(signs[0]) + "," + std::to_string(signs[1] - 1) + "]";
    }
    return crossings;
}

// 8. Soundness table in the log domain.
std::string soundness() {
    auto report = soundness_table(4, 40, {0, 1, 2, 3, 4});
    expect(report.rows.size() == 37 * 5, "row count");
    double worst = 0;
    for (size_t i = 0; i < report.rows.size(); i++) {
        uint64_t n = static_cast<uint64_t>(report.number(i, "n"));
        uint64_t q = static_cast<uint64_t>(report.number(i, "q"));
        uint64_t side = 0;
        for (uint64_t j = 0; j <= q; j++) {
            side += brute::binom(n, j);
        }
        double expected = 4 * std::log2(static_cast<double>(side)) - static_cast<double>(n) / 2;
        worst = std::max(worst, std::abs(report.number(i, "log2_soundness") - expected));
    }
    expect(worst <= 1e-12, "log2 deviation " + fmt(worst));
    expect(soundness_tradeoff(6, 1) == 300.125, "value at (6,1)");
    return "185 rows, max log2 deviation " + fmt(worst);
}

// 9. Counterfeiting baselines.
std::string attacks() {
    RegistryConfig cfg;
    cfg.n = 6;
    cfg.q = 1;
    cfg.master_seed = 2024;
    OracleRegistry reg(cfg);
    std::string out;
    for (auto kind : {AttackKind::PassthroughMixed, AttackKind::MeasureAndCopy}) {
        // Exact rate by enumerating the strategy's output ensemble.
        auto rec = reg.generate(BitVec(6));
        Rng rng = make_rng(1);
        DenseState c = subspace_state(rec->spec->code);
        double exact = 0;
        if (kind == AttackKind::PassthroughMixed) {
            for (uint64_t x = 0; x < 64; x++) {
                exact += double_verify(reg, rec->serial, c.tensor(DenseState::basis(6, x)), rng).accept_probability;
            }
            exact /= 64;
        } else {
            for (const auto &v : rec->spec->code.elements()) {
                DenseState vv = DenseState::basis(v);
                exact += double_verify(reg, rec->serial, vv.tensor(vv), rng).accept_probability;
            }
            exact /= 8;
        }
        expect(std::abs(exact - 49.0 / 64) < 1e-12, std::string(attack_name(kind)) + " exact rate " + fmt(exact));
        auto report = run_attack(reg, {kind, {}}, 10000, 99);
        double analytic = report.number(0, "analytic_rate");
        expect(std::abs(analytic - 49.0 / 64) < 1e-15, "analytic rate");
        WilsonInterval ci{report.number(0, "wilson_low"), report.number(0, "wilson_high")};
        expect(ci.contains(49.0 / 64), std::string(attack_name(kind)) + " interval [" + fmt(ci.low) + ", " +
                                           fmt(ci.high) + "] misses 49/64");
        out += (out.empty() ? "" : "; ") + std::string(attack_name(kind)) + " " +
               fmt(report.number(0, "empirical_rate"));
    }
    return out;
}

// 10. Correction round trip.
std::string correction() {
    size_t fixed = 0, refused = 0;
    Rng rng = make_rng(10);
    for (size_t n : {6, 8}) {
        RegistryConfig cfg;
        cfg.n = n;
        cfg.q = 1;
        cfg.master_seed = 500 + n;
        OracleRegistry reg(cfg);
        for (int t = 0; t < 100; t++) {
            BitVec r = random_bitvec(n, rng);
            Banknote note = mint_direct(reg, r);
            BitVec e = random_weight(n, uniform_below(rng, 2), rng);
            BitVec ez = random_weight(n, uniform_below(rng, 2), rng);
            auto res = correct(reg, corrupt(note, e, ez));
            expect(res.corrected && res.e == e && res.e_prime == ez, "misidentified " + e.str() + "," + ez.str());
            double f = fidelity(std::get<DenseState>(res.note.state), std::get<DenseState>(note.state));
            expect(std::abs(f - 1) <= 1e-12, "fidelity " + fmt(f));
            fixed++;
        }
    }
    // Every corruption of the worked example, decodable or not.
    RegistryConfig cfg;
    cfg.n = 6;
    cfg.q = 1;
    cfg.fixed_spec = golden();
    OracleRegistry reg(cfg);
    Banknote note = mint_direct(reg, BitVec(6));
    auto code = indices(golden()->code), dual = indices(golden()->dual_code);
    auto low = brute::low_weight(6, 1);
    auto decodable = [&](const std::vector<uint64_t> &s, uint64_t e) {
        for (uint64_t c : s) {
            for (uint64_t l : low) {
                if ((c ^ l) == e) {
                    return true;
                }
            }
        }
        return false;
    };
    for (uint64_t e = 0; e < 64; e++) {
        for (uint64_t ez = 0; ez < 64; ez++) {
            Banknote noisy = corrupt(note, BitVec::from_index(6, e), BitVec::from_index(6, ez));
            auto res = correct(reg, noisy);
            if (decodable(code, e) && decodable(dual, ez)) {
                expect(res.corrected, "refused a decodable corruption");
                double f = fidelity(std::get<DenseState>(res.note.state), std::get<DenseState>(note.state));
                expect(std::abs(f - 1) <= 1e-12, "fidelity " + fmt(f));
            } else {
                expect(!res.corrected && res.reason.rfind("undecodable", 0) == 0,
                       "no explicit failure for " + brute::str(e, 6) + "," + brute::str(ez, 6));
                expect(std::get<DenseState>(res.note.state).max_deviation(std::get<DenseState>(noisy.state)) == 0,
                       "failed correction modified the note");
                refused++;
            }
        }
    }
    return std::to_string(fixed) + " round trips, " + std::to_string(refused) + " explicit failures";
}

// 11. Query accounting with scripted sessions.
std::string query_accounting() {
    Rng rng = make_rng(11);
    uint64_t total = 0;
    for (int s = 0; s < 20; s++) {
        auto spec = std::make_shared<const CodeSpec>(search_applicable_code(6, 1, 300 + s));
        OracleSession direct(spec), emulated(spec);
        auto primal = indices(spec->code), dual = indices(spec->dual_code);
        auto low = brute::low_weight(6, 1);
        size_t k = emulated.combined_tag_width();
        expect(k == 4, "tag width " + std::to_string(k));
        uint64_t queries = 1 + uniform_below(rng, 30);
        for (uint64_t i = 0; i < queries; i++) {
            bool side = uniform_below(rng, 2);
            BitVec x = random_bitvec(6, rng);
            bool truth = false;
            for (uint64_t c : side ? dual : primal) {
                for (uint64_t l : low) {
                    truth = truth || (c ^ l) == x.to_index();
                }
            }
            bool a = side ? direct.query_dual(x) : direct.query_primal(x);
            bool b = false;
            for (uint64_t j = 0; j < low.size(); j++) {
                uint64_t t = (j << 1) | (side ? 1 : 0);
                BitVec tagged(k);
                for (size_t bit = 0; bit < k; bit++) {
                    tagged.set(bit, (t >> (k - 1 - bit)) & 1);
                }
                b = emulated.query_combined(tagged.concat(x)) || b;
            }
            expect(a == truth && b == truth, "oracle answer mismatch");
        }
        const auto &dl = direct.ledger();
        const auto &el = emulated.ledger();
        expect(dl.conversion_factor() == 7, "factor");
        expect(dl.count(QueryLedger::kPrimal) + dl.count(QueryLedger::kDual) == queries, "direct count");
        expect(dl.combined_equivalent() == 7 * queries, "combined-equivalent");
        expect(el.count(QueryLedger::kCombined) == 7 * queries, "emulation count");
        expect(el.combined_equivalent() == dl.combined_equivalent(), "ledgers disagree");
        total += queries;
    }
    return std::to_string(total) + " direct queries = " + std::to_string(7 * total) + " combined";
}

// 12. Covariance under coordinate permutations.
std::string isometry_covariance() {
    auto spec = golden();
    Verifier plain(spec);
    Rng rng = make_rng(12);
    double worst = 0;
    for (int t = 0; t < 20; t++) {
        std::vector<size_t> perm(6);
        std::iota(perm.begin(), perm.end(), 0);
        for (size_t i = 5; i > 0; i--) {
            std::swap(perm[i], perm[uniform_below(rng, i + 1)]);
        }
        BasisMap f = BasisMap::permutation(perm);
        auto mapped = std::make_shared<const CodeSpec>(build_code_spec(f.apply(spec->code), 1));
        expect(certify(*mapped).passed(), "f(C) not in W");
        Verifier conj(MembershipPredicate(PredicateKind::SubsetPrimal, spec).conjugated_by(f),
                      MembershipPredicate(PredicateKind::SubsetDual, spec).conjugated_by(f));
        Verifier direct(mapped);
        for (int k = 0; k < 10; k++) {
            DenseState psi = random_state(6, rng);
            DenseState moved = apply_basis_unitary(f, psi);
            double p = plain.accept_probability(psi);
            worst = std::max({worst, std::abs(conj.accept_probability(moved) - p),
                              std::abs(direct.accept_probability(moved) - p)});
        }
    }
    expect(worst < 1e-10, "deviation " + fmt(worst));
    return "max deviation " + fmt(worst);
}

struct Criterion {
    const char *name;
    double limit_seconds;
    std::function<std::string()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"golden-code", 1, golden_code},
        {"perfect-completeness", 60, completeness},
        {"projector-identity", 10, projector_identity},
        {"approach-equivalence", 30, approach_equivalence},
        {"conjugate-coding", 60, conjugate_coding},
        {"error-set-count", 60, error_counts},
        {"gv-margin", 60, gv_margin_shape},
        {"soundness-table", 60, soundness},
        {"attack-baselines", 120, attacks},
        {"correction-round-trip", 60, correction},
        {"query-accounting", 60, query_accounting},
        {"isometry-covariance", 60, isometry_covariance},
    };
    int failures = 0;
    for (size_t i = 0; i < criteria.size(); i++) {
        const auto &c = criteria[i];
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            detail = c.run();
        } catch (const Failure &f) {
            ok = false;
            detail = f.what;
        } catch (const std::exception &e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && secs > c.limit_seconds) {
            ok = false;
            detail += " (over time limit)";
        }
        failures += ok ? 0 : 1;
        std::printf("%s %zu %s [%.2fs] %s\n", ok ? "PASS" : "FAIL", i + 1, c.name, secs, detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
