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

#ifndef QMONEY_LABX_H
#define QMONEY_LABX_H

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qmoney/scheme.h"

namespace qmoney {

using Cell = std::variant<int64_t, double, std::string>;

/// Named table of results. Rows are deterministic given (parameters, seed).
struct ExperimentReport {
    std::string name;
    std::map<std::string, std::string> parameters;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    uint64_t seed = 0;

    size_t column_index(const std::string &column) const;
    double number(size_t row, const std::string &column) const;

    /// Header row, then one line per row; reals as %.17g; LF endings.
    std::string to_csv() const;
    /// <name>-<n>-<q>-<seed>.csv
    std::string file_name() const;
};

/// Acceptance probability of every tolerated corruption of the fresh note,
/// plus any `extra` (e, e') pairs appended at the end.
ExperimentReport completeness_sweep(const CodeSpec &spec,
                                    const std::vector<std::pair<BitVec, BitVec>> &extra = {});

enum class AttackKind { PassthroughMixed, MeasureAndCopy, RandomState };

const char *attack_name(AttackKind kind);
AttackKind parse_attack(const std::string &name);

struct AttackStrategy {
    AttackKind kind = AttackKind::PassthroughMixed;
    std::map<std::string, std::string> parameters;
};

/// A counterfeiter sees only its note and an oracle session for the note's
/// serial. It returns one pure 2n-qubit sample of its output ensemble.
DenseState counterfeit(const AttackStrategy &strategy, const DenseState &note_state, OracleSession &oracles,
                       Rng &rng);

/// Exact double-verify acceptance of the strategy's output (in expectation
/// for random-state), from |E_q|, |E_X| and n only.
double analytic_attack_rate(AttackKind kind, size_t n, size_t q);

struct WilsonInterval {
    double low = 0;
    double high = 1;
    bool contains(double p) const {
        return low <= p && p <= high;
    }
};

WilsonInterval wilson_interval(uint64_t successes, uint64_t trials, double z = 1.959963984540054);

/// Each trial: the bank mints a note for a uniformly random r, the
/// counterfeiter produces a 2n-qubit state, and Ver_2 samples a decision.
/// Single summary row.
ExperimentReport run_attack(OracleRegistry &registry, const AttackStrategy &strategy, uint64_t trials,
                            uint64_t seed);

/// Rows (n, q, margin) for every n in range with 2q <= n.
ExperimentReport gv_table(size_t n_min, size_t n_max, const std::vector<size_t> &qs);

/// Rows (n, q, error_pairs, soundness, log2_soundness).
ExperimentReport soundness_table(size_t n_min, size_t n_max, const std::vector<size_t> &qs);

/// log(1/delta) / (sqrt(eps) (sqrt(eps) + delta^2)), the asymptotic query
/// count for amplifying a counterfeiter (constant factor 1). A calculator
/// only; nothing is amplified.
double amplification_cost(double epsilon, double delta);

}  // namespace qmoney

#endif
