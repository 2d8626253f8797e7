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

#include "qmoney/labx.h"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qmoney {

size_t ExperimentReport::column_index(const std::string &column) const {
    for (size_t i = 0; i < columns.size(); i++) {
        if (columns[i] == column) {
            return i;
        }
    }
    throw std::invalid_argument("report '" + name + "' has no column '" + column + "'");
}

double ExperimentReport::number(size_t row, const std::string &column) const {
    const Cell &c = rows.at(row).at(column_index(column));
    if (const auto *i = std::get_if<int64_t>(&c)) {
        return static_cast<double>(*i);
    }
    if (const auto *d = std::get_if<double>(&c)) {
        return *d;
    }
    throw std::invalid_argument("column '" + column + "' is not numeric");
}

std::string ExperimentReport::to_csv() const {
    std::string out;
    for (size_t i = 0; i < columns.size(); i++) {
        out += (i ? "," : "") + columns[i];
    }
    out += "\n";
    char buf[64];
    for (const auto &row : rows) {
        for (size_t i = 0; i < row.size(); i++) {
            if (i) {
                out += ",";
            }
            if (const auto *v = std::get_if<int64_t>(&row[i])) {
                out += std::to_string(*v);
            } else if (const auto *d = std::get_if<double>(&row[i])) {
                std::snprintf(buf, sizeof(buf), "%.17g", *d);
                out += buf;
            } else {
                out += std::get<std::string>(row[i]);
            }
        }
        out += "\n";
    }
    return out;
}

std::string ExperimentReport::file_name() const {
    auto get = [&](const char *key) {
        auto it = parameters.find(key);
        return it == parameters.end() ? std::string("na") : it->second;
    };
    return name + "-" + get("n") + "-" + get("q") + "-" + std::to_string(seed) + ".csv";
}

ExperimentReport completeness_sweep(const CodeSpec &spec, const std::vector<std::pair<BitVec, BitVec>> &extra) {
    ExperimentReport report;
    report.name = "completeness";
    report.parameters = {{"n", std::to_string(spec.n)}, {"q", std::to_string(spec.q)}};
    report.columns = {"e", "e_prime", "accept_probability"};
    auto shared = std::make_shared<const CodeSpec>(spec);
    Verifier verifier(shared);
    auto errors = enumerate_errors(spec.n, spec.q);
    std::vector<std::pair<BitVec, BitVec>> pairs;
    for (const auto &e : errors.vectors) {
        for (const auto &ez : errors.vectors) {
            pairs.emplace_back(e, ez);
        }
    }
    pairs.insert(pairs.end(), extra.begin(), extra.end());
    DenseState fresh = subspace_state(spec.code);
    for (const auto &[e, ez] : pairs) {
        double p = verifier.accept_probability(apply_pauli(fresh, e, ez));
        report.rows.push_back({e.str(), ez.str(), p});
    }
    return report;
}

const char *attack_name(AttackKind kind) {
    switch (kind) {
        case AttackKind::PassthroughMixed:
            return "passthrough-mixed";
        case AttackKind::MeasureAndCopy:
            return "measure-and-copy";
        case AttackKind::RandomState:
            return "random-state";
    }
    return "?";
}

AttackKind parse_attack(const std::string &name) {
    for (auto k : {AttackKind::PassthroughMixed, AttackKind::MeasureAndCopy, AttackKind::RandomState}) {
        if (name == attack_name(k)) {
            return k;
        }
    }
    throw std::invalid_argument("unknown attack strategy '" + name + "'");
}

namespace {

uint64_t sample_basis(const DenseState &st, Rng &rng) {
    double u = uniform01(rng);
    double acc = 0;
    size_t last_nonzero = 0;
    for (size_t b = 0; b < st.dimension(); b++) {
        double p = std::norm(st[b]);
        if (p > 0) {
            last_nonzero = b;
        }
        acc += p;
        if (u < acc) {
            return b;
        }
    }
    return last_nonzero;
}

}  // namespace

DenseState counterfeit(const AttackStrategy &strategy, const DenseState &note_state, OracleSession &oracles,
                       Rng &rng) {
    size_t n = oracles.num_qubits();
    if (note_state.num_qubits() != n) {
        throw std::invalid_argument("counterfeit: note/oracle size mismatch");
    }
    switch (strategy.kind) {
        case AttackKind::PassthroughMixed: {
            // Keep the note; second register is one sample of I/2^n.
            uint64_t x = uniform_below(rng, uint64_t{1} << n);
            return note_state.tensor(DenseState::basis(n, x));
        }
        case AttackKind::MeasureAndCopy: {
            uint64_t v = sample_basis(note_state, rng);
            DenseState copy = DenseState::basis(n, v);
            return copy.tensor(copy);
        }
        case AttackKind::RandomState: {
            DenseState a = random_state(n, rng);
            DenseState b = random_state(n, rng);
            return a.tensor(b);
        }
    }
    throw std::invalid_argument("counterfeit: unknown strategy");
}

double analytic_attack_rate(AttackKind kind, size_t n, size_t q) {
    double pairs = static_cast<double>(count_error_pairs(n, q));
    double side = static_cast<double>(error_count(n, q));
    double full = std::ldexp(1.0, static_cast<int>(n));
    double half = std::ldexp(1.0, static_cast<int>(n / 2));
    switch (kind) {
        case AttackKind::PassthroughMixed:
            // 1 * tr(V) / 2^n.
            return pairs / full;
        case AttackKind::MeasureAndCopy:
            // Each register holds some v in C: sum over e' of 1/|C|.
            return (side / half) * (side / half);
        case AttackKind::RandomState:
            return (pairs / full) * (pairs / full);
    }
    return 0;
}

WilsonInterval wilson_interval(uint64_t successes, uint64_t trials, double z) {
    if (trials == 0) {
        return {0, 1};
    }
    double nn = static_cast<double>(trials);
    double p = static_cast<double>(successes) / nn;
    double z2 = z * z;
    double denom = 1 + z2 / nn;
    double center = (p + z2 / (2 * nn)) / denom;
    double half = z * std::sqrt(p * (1 - p) / nn + z2 / (4 * nn * nn)) / denom;
    // The endpoints are exactly 0 and 1 at the extremes; avoid rounding there.
    double low = successes == 0 ? 0.0 : std::max(0.0, center - half);
    double high = successes == trials ? 1.0 : std::min(1.0, center + half);
    return {low, high};
}

ExperimentReport run_attack(OracleRegistry &registry, const AttackStrategy &strategy, uint64_t trials,
                            uint64_t seed) {
    size_t n = registry.n();
    size_t q = registry.config().q;
    uint64_t accepted = 0;
    double exact_sum = 0;
    QueryLedger strategy_ledger(error_count(n, q));
    QueryLedger verifier_ledger(error_count(n, q));
    for (uint64_t t = 0; t < trials; t++) {
        Rng rng = make_rng(split_seed(seed, t));
        BitVec r = random_bitvec(n, rng);
        Banknote note = mint_direct(registry, r);
        OracleSession session = registry.open_session(note.serial);
        DenseState forged = counterfeit(strategy, std::get<DenseState>(note.state), session, rng);
        strategy_ledger = strategy_ledger.merged(session.ledger());
        auto outcome = double_verify(registry, note.serial, forged, rng);
        verifier_ledger = verifier_ledger.charge(QueryLedger::kPrimal, 2).charge(QueryLedger::kDual, 2);
        exact_sum += outcome.accept_probability;
        accepted += outcome.accepted ? 1 : 0;
    }
    auto ci = wilson_interval(accepted, trials);
    ExperimentReport report;
    report.name = std::string("attack-") + attack_name(strategy.kind);
    report.seed = seed;
    report.parameters = {{"n", std::to_string(n)},
                         {"q", std::to_string(q)},
                         {"strategy", attack_name(strategy.kind)},
                         {"trials", std::to_string(trials)}};
    for (const auto &[k, v] : strategy.parameters) {
        report.parameters.emplace(k, v);
    }
    report.columns = {"trials",        "accepted",         "empirical_rate",     "wilson_low",
                      "wilson_high",   "analytic_rate",    "mean_exact_rate",    "strategy_queries",
                      "verifier_queries_combined_equivalent"};
    double rate = trials ? static_cast<double>(accepted) / static_cast<double>(trials) : 0.0;
    report.rows.push_back({static_cast<int64_t>(trials), static_cast<int64_t>(accepted), rate, ci.low, ci.high,
                           analytic_attack_rate(strategy.kind, n, q),
                           trials ? exact_sum / static_cast<double>(trials) : 0.0,
                           static_cast<int64_t>(strategy_ledger.combined_equivalent()),
                           static_cast<int64_t>(verifier_ledger.combined_equivalent())});
    return report;
}

namespace {

std::string join_sizes(const std::vector<size_t> &xs) {
    std::string out;
    for (size_t i = 0; i < xs.size(); i++) {
        out += (i ? "_" : "") + std::to_string(xs[i]);
    }
    return out;
}

}  // namespace

ExperimentReport gv_table(size_t n_min, size_t n_max, const std::vector<size_t> &qs) {
    ExperimentReport report;
    report.name = "gv";
    report.parameters = {{"n", std::to_string(n_min) + "_" + std::to_string(n_max)}, {"q", join_sizes(qs)}};
    report.columns = {"n", "q", "margin"};
    for (size_t q : qs) {
        for (size_t n = std::max<size_t>(n_min, 1); n <= n_max; n++) {
            if (2 * q > n) {
                continue;
            }
            report.rows.push_back({static_cast<int64_t>(n), static_cast<int64_t>(q), gv_margin(n, q)});
        }
    }
    return report;
}

ExperimentReport soundness_table(size_t n_min, size_t n_max, const std::vector<size_t> &qs) {
    ExperimentReport report;
    report.name = "soundness";
    report.parameters = {{"n", std::to_string(n_min) + "_" + std::to_string(n_max)}, {"q", join_sizes(qs)}};
    report.columns = {"n", "q", "error_pairs", "soundness", "log2_soundness"};
    for (size_t q : qs) {
        for (size_t n = n_min; n <= n_max; n++) {
            double lg = soundness_tradeoff_log2(n, q);
            report.rows.push_back({static_cast<int64_t>(n), static_cast<int64_t>(q),
                                   static_cast<int64_t>(count_error_pairs(n, q)), soundness_tradeoff(n, q), lg});
        }
    }
    return report;
}

double amplification_cost(double epsilon, double delta) {
    if (!(epsilon > 0 && epsilon <= 1) || !(delta > 0 && delta < 1)) {
        throw std::invalid_argument("amplification_cost requires 0 < epsilon <= 1 and 0 < delta < 1");
    }
    double root = std::sqrt(epsilon);
    return std::log(1 / delta) / (root * (root + delta * delta));
}

}  // namespace qmoney
