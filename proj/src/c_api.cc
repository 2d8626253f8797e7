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

#include "qmoney/qmoney.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <memory>
#include <sstream>
#include <string>

#include "qmoney/errors.h"
#include "qmoney/labx.h"
#include "qmoney/serialize.h"

struct qm_code {
    std::shared_ptr<const qmoney::CodeSpec> spec;
};

struct qm_bank {
    std::unique_ptr<qmoney::OracleRegistry> registry;
};

struct qm_note {
    qmoney::Banknote note;
};

namespace {

using namespace qmoney;

thread_local std::string last_error;

qm_status fail(qm_status status, const std::string &message) {
    last_error = message;
    return status;
}

// Runs body and maps exceptions onto status codes. Order matters: the
// domain types derive from std::runtime_error.
template <typename F>
qm_status guard(F &&body) {
    try {
        body();
        return QM_OK;
    } catch (const NotFound &e) {
        return fail(QM_ERR_NOT_FOUND, e.what());
    } catch (const Undecodable &e) {
        return fail(QM_ERR_UNDECODABLE, e.what());
    } catch (const UnknownSerial &e) {
        return fail(QM_ERR_UNKNOWN_SERIAL, e.what());
    } catch (const BudgetExceeded &e) {
        return fail(QM_ERR_BUDGET, e.what());
    } catch (const ParseError &e) {
        return fail(QM_ERR_PARSE, e.what());
    } catch (const IoError &e) {
        return fail(QM_ERR_IO, e.what());
    } catch (const SyndromeCollision &e) {
        return fail(QM_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::invalid_argument &e) {
        return fail(QM_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::domain_error &e) {
        return fail(QM_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception &e) {
        return fail(QM_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(QM_ERR_INTERNAL, "unknown exception");
    }
}

char *dup_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (!out) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(bool ok, const char *what) {
    if (!ok) {
        throw std::invalid_argument(what);
    }
}

BitVec bits_or_zero(const char *text, size_t n) {
    if (!text) {
        return BitVec(n);
    }
    BitVec v = BitVec::from_string(text);
    require(v.size() == n, "bit string has the wrong length");
    return v;
}

std::vector<std::string> split_rows(const char *rows) {
    std::string text(rows);
    for (char &c : text) {
        if (c == ',' || c == ';') {
            c = ' ';
        }
    }
    std::istringstream in(text);
    std::vector<std::string> out;
    for (std::string row; in >> row;) {
        out.push_back(row);
    }
    return out;
}

void emit_report(const ExperimentReport &report, char **csv, char **file_name) {
    require(csv != nullptr, "csv output pointer is null");
    std::string text = report.to_csv();
    std::string name = report.file_name();
    *csv = dup_string(text);
    if (file_name) {
        *file_name = dup_string(name);
    }
}

BitVec random_weight(size_t n, size_t weight, Rng &rng) {
    std::vector<size_t> idx(n);
    for (size_t i = 0; i < n; i++) {
        idx[i] = i;
    }
    BitVec v(n);
    for (size_t i = 0; i < weight; i++) {
        size_t j = i + uniform_below(rng, n - i);
        std::swap(idx[i], idx[j]);
        v.set(idx[i], true);
    }
    return v;
}

}  // namespace

extern "C" {

QM_API const char *qm_version(void) {
    return "1.0.0";
}

QM_API const char *qm_status_name(qm_status status) {
    switch (status) {
        case QM_OK:
            return "ok";
        case QM_ERR_INVALID_ARGUMENT:
            return "invalid argument";
        case QM_ERR_NOT_FOUND:
            return "not found";
        case QM_ERR_UNDECODABLE:
            return "undecodable";
        case QM_ERR_UNKNOWN_SERIAL:
            return "unknown serial";
        case QM_ERR_BUDGET:
            return "budget exceeded";
        case QM_ERR_PARSE:
            return "parse error";
        case QM_ERR_IO:
            return "i/o error";
        case QM_ERR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

QM_API const char *qm_last_error_message(void) {
    return last_error.c_str();
}

QM_API void qm_string_free(char *s) {
    std::free(s);
}

// ---- codes ----

QM_API qm_status qm_code_search(size_t n, size_t q, uint64_t seed, size_t max_attempts, unsigned jobs,
                                qm_code **out) {
    return guard([&] {
        require(out != nullptr, "output pointer is null");
        auto spec = search_applicable_code(n, q, seed, max_attempts ? max_attempts : kDefaultMaxAttempts,
                                           jobs ? jobs : 1);
        *out = new qm_code{std::make_shared<const CodeSpec>(std::move(spec))};
    });
}

QM_API qm_status qm_code_from_rows(const char *rows, size_t q, qm_code **out) {
    return guard([&] {
        require(rows && out, "null argument");
        auto list = split_rows(rows);
        require(!list.empty(), "no generator rows given");
        *out = new qm_code{std::make_shared<const CodeSpec>(code_spec_from_generators(list, q))};
    });
}

QM_API qm_status qm_code_from_json(const char *json, qm_code **out) {
    return guard([&] {
        require(json && out, "null argument");
        *out = new qm_code{std::make_shared<const CodeSpec>(codespec_from_json(json))};
    });
}

QM_API qm_status qm_code_to_json(const qm_code *code, char **out) {
    return guard([&] {
        require(code && out, "null argument");
        *out = dup_string(codespec_to_json(*code->spec));
    });
}

QM_API qm_status qm_code_info_get(const qm_code *code, qm_code_info *out) {
    return guard([&] {
        require(code && out, "null argument");
        const CodeSpec &s = *code->spec;
        *out = qm_code_info{s.n, s.q, s.code.dim(), s.dual_code.dim(), s.d_primal, s.d_dual, certify(s).passed()};
    });
}

QM_API qm_status qm_code_certify(const qm_code *code, int *passed, char **summary) {
    return guard([&] {
        require(code != nullptr, "null code");
        auto report = certify(*code->spec);
        if (passed) {
            *passed = report.passed() ? 1 : 0;
        }
        if (summary) {
            *summary = dup_string(report.summary());
        }
    });
}

QM_API qm_status qm_code_codewords(const qm_code *code, char **out) {
    return guard([&] {
        require(code && out, "null argument");
        auto words = code->spec->code.elements();
        std::sort(words.begin(), words.end());
        std::string text;
        for (const auto &w : words) {
            text += w.str() + "\n";
        }
        *out = dup_string(text);
    });
}

QM_API qm_status qm_code_state_dump(const qm_code *code, char **out) {
    return guard([&] {
        require(code && out, "null argument");
        *out = dup_string(dump_state(subspace_state(code->spec->code)));
    });
}

QM_API void qm_code_free(qm_code *code) {
    delete code;
}

// ---- bank ----

QM_API qm_status qm_bank_create(size_t n, size_t q, uint64_t master_seed, qm_route route, const qm_code *fixed_code,
                                unsigned jobs, qm_bank **out) {
    return guard([&] {
        require(out != nullptr, "output pointer is null");
        require(route == QM_ROUTE_DIRECT || route == QM_ROUTE_CONJUGATE, "unknown route");
        RegistryConfig cfg;
        cfg.n = n;
        cfg.q = q;
        cfg.master_seed = master_seed;
        cfg.route = route == QM_ROUTE_CONJUGATE ? MintRoute::Conjugate : MintRoute::Direct;
        cfg.jobs = jobs ? jobs : 1;
        if (fixed_code) {
            cfg.fixed_spec = fixed_code->spec;
        }
        *out = new qm_bank{std::make_unique<OracleRegistry>(std::move(cfg))};
    });
}

QM_API void qm_bank_free(qm_bank *bank) {
    delete bank;
}

QM_API qm_status qm_bank_from_json(const char *json, qm_bank **out) {
    return guard([&] {
        require(json && out, "null argument");
        *out = new qm_bank{bank_from_json(json)};
    });
}

QM_API qm_status qm_bank_to_json(const qm_bank *bank, char **out) {
    return guard([&] {
        require(bank && out, "null argument");
        *out = dup_string(bank_to_json(*bank->registry));
    });
}

QM_API qm_status qm_bank_num_qubits(const qm_bank *bank, size_t *out) {
    return guard([&] {
        require(bank && out, "null argument");
        *out = bank->registry->n();
    });
}

QM_API qm_status qm_bank_num_records(const qm_bank *bank, size_t *out) {
    return guard([&] {
        require(bank && out, "null argument");
        *out = bank->registry->records().size();
    });
}

QM_API qm_status qm_bank_route(const qm_bank *bank, qm_route *out) {
    return guard([&] {
        require(bank && out, "null argument");
        *out = bank->registry->config().route == MintRoute::Conjugate ? QM_ROUTE_CONJUGATE : QM_ROUTE_DIRECT;
    });
}

QM_API qm_status qm_bank_mint(qm_bank *bank, const char *r_bits, uint64_t r_seed, const char *x_bits, int test_mode,
                              int symbolic, qm_note **out) {
    return guard([&] {
        require(bank && out, "null argument");
        OracleRegistry &reg = *bank->registry;
        size_t n = reg.n();
        BitVec r;
        if (r_bits) {
            r = bits_or_zero(r_bits, n);
        } else {
            Rng rng = make_rng(r_seed);
            r = random_bitvec(n, rng);
        }
        Banknote note;
        if (reg.config().route == MintRoute::Conjugate) {
            require(!symbolic, "symbolic notes are only minted on the direct route");
            note = mint_conjugate(reg, r, bits_or_zero(x_bits, n), test_mode != 0);
        } else {
            require(x_bits == nullptr, "x is only meaningful on the conjugate route");
            note = symbolic ? mint_symbolic(reg, r) : mint_direct(reg, r);
        }
        if (auto *label = std::get_if<CosetLabel>(&note.state)) {
            // Notes carry no code; it is looked up by serial when needed.
            label->spec.reset();
        }
        *out = new qm_note{std::move(note)};
    });
}

QM_API qm_status qm_bank_verify(const qm_bank *bank, const qm_note *note, uint64_t seed, qm_verify_result *out) {
    return guard([&] {
        require(bank && note && out, "null argument");
        const OracleRegistry &reg = *bank->registry;
        *out = qm_verify_result{};
        QueryLedger ledger(error_count(reg.n(), reg.config().q));
        Rng rng = make_rng(seed);
        VerifyOutcome outcome;
        if (note->note.num_qubits() != reg.n()) {
            outcome.reason = "unknown serial";
            ledger = ledger.charge(QueryLedger::kSerial);
        } else {
            outcome = verify(reg, note->note, rng, &ledger);
        }
        out->serial_valid = outcome.serial_valid ? 1 : 0;
        out->accepted = outcome.accepted ? 1 : 0;
        out->accept_probability = outcome.accept_probability;
        out->serial_queries = ledger.count(QueryLedger::kSerial);
        out->primal_queries = ledger.count(QueryLedger::kPrimal);
        out->dual_queries = ledger.count(QueryLedger::kDual);
        std::string reason = outcome.accepted ? "accepted" : outcome.reason;
        std::snprintf(out->reason, sizeof(out->reason), "%s", reason.c_str());
    });
}

QM_API qm_status qm_bank_correct(const qm_bank *bank, const qm_note *note, qm_correct_result *out) {
    return guard([&] {
        require(bank && note && out, "null argument");
        *out = qm_correct_result{};
        auto result = correct(*bank->registry, note->note);
        if (!result.corrected) {
            throw Undecodable(result.reason);
        }
        auto fixed = std::make_unique<qm_note>(qm_note{std::move(result.note)});
        char *e = dup_string(result.e.str());
        char *e_prime = dup_string(result.e_prime.str());
        *out = qm_correct_result{fixed.release(), e, e_prime, result.ledger.count(QueryLedger::kCoset)};
    });
}

QM_API void qm_correct_result_clear(qm_correct_result *result) {
    if (!result) {
        return;
    }
    delete result->note;
    std::free(result->e);
    std::free(result->e_prime);
    *result = qm_correct_result{};
}

QM_API qm_status qm_bank_fresh_fidelity(const qm_bank *bank, const qm_note *note, double *out) {
    return guard([&] {
        require(bank && note && out, "null argument");
        const OracleRegistry &reg = *bank->registry;
        auto rec = note->note.num_qubits() == reg.n() ? reg.find_by_serial(note->note.serial) : nullptr;
        if (!rec) {
            throw UnknownSerial("unknown serial");
        }
        *out = fidelity(subspace_state(rec->spec->code), note_state(reg, note->note));
    });
}

// ---- notes ----

QM_API qm_status qm_note_from_json(const char *json, qm_note **out) {
    return guard([&] {
        require(json && out, "null argument");
        *out = new qm_note{banknote_from_json(json)};
    });
}

QM_API qm_status qm_note_to_json(const qm_note *note, char **out) {
    return guard([&] {
        require(note && out, "null argument");
        *out = dup_string(banknote_to_json(note->note));
    });
}

QM_API qm_status qm_note_serial(const qm_note *note, char **out) {
    return guard([&] {
        require(note && out, "null argument");
        *out = dup_string(note->note.serial.str());
    });
}

QM_API qm_status qm_note_num_qubits(const qm_note *note, size_t *out) {
    return guard([&] {
        require(note && out, "null argument");
        *out = note->note.num_qubits();
    });
}

QM_API qm_status qm_note_is_symbolic(const qm_note *note, int *out) {
    return guard([&] {
        require(note && out, "null argument");
        *out = note->note.is_symbolic() ? 1 : 0;
    });
}

QM_API qm_status qm_note_corrupt(const qm_note *note, const char *e, const char *e_prime, qm_note **out) {
    return guard([&] {
        require(note && out, "null argument");
        size_t n = note->note.num_qubits();
        *out = new qm_note{corrupt(note->note, bits_or_zero(e, n), bits_or_zero(e_prime, n))};
    });
}

QM_API qm_status qm_note_corrupt_random(const qm_note *note, size_t weight, uint64_t seed, qm_note **out,
                                        char **e_out, char **e_prime_out) {
    return guard([&] {
        require(note && out, "null argument");
        size_t n = note->note.num_qubits();
        require(weight <= n, "weight exceeds the number of qubits");
        Rng rng = make_rng(seed);
        BitVec e = random_weight(n, weight, rng);
        BitVec e_prime = random_weight(n, weight, rng);
        auto corrupted = std::make_unique<qm_note>(qm_note{corrupt(note->note, e, e_prime)});
        char *es = e_out ? dup_string(e.str()) : nullptr;
        char *eps = e_prime_out ? dup_string(e_prime.str()) : nullptr;
        if (e_out) {
            *e_out = es;
        }
        if (e_prime_out) {
            *e_prime_out = eps;
        }
        *out = corrupted.release();
    });
}

QM_API void qm_note_free(qm_note *note) {
    delete note;
}

// ---- experiments ----

QM_API qm_status qm_labx_attack(qm_bank *bank, const char *strategy, uint64_t trials, uint64_t seed, char **csv,
                                char **file_name) {
    return guard([&] {
        require(bank && strategy, "null argument");
        AttackStrategy s{parse_attack(strategy), {}};
        emit_report(run_attack(*bank->registry, s, trials, seed), csv, file_name);
    });
}

QM_API qm_status qm_labx_completeness(const qm_code *code, size_t *rows, double *min_probability, char **csv,
                                      char **file_name) {
    return guard([&] {
        require(code != nullptr, "null code");
        auto report = completeness_sweep(*code->spec);
        double lo = 1;
        size_t col = report.column_index("accept_probability");
        for (size_t i = 0; i < report.rows.size(); i++) {
            lo = std::min(lo, report.number(i, report.columns[col]));
        }
        if (rows) {
            *rows = report.rows.size();
        }
        if (min_probability) {
            *min_probability = lo;
        }
        if (csv) {
            emit_report(report, csv, file_name);
        }
    });
}

QM_API qm_status qm_labx_gv_table(size_t n_min, size_t n_max, const size_t *qs, size_t num_qs, char **csv,
                                  char **file_name) {
    return guard([&] {
        require(qs || num_qs == 0, "null q list");
        emit_report(gv_table(n_min, n_max, std::vector<size_t>(qs, qs + num_qs)), csv, file_name);
    });
}

QM_API qm_status qm_labx_soundness_table(size_t n_min, size_t n_max, const size_t *qs, size_t num_qs, char **csv,
                                         char **file_name) {
    return guard([&] {
        require(qs || num_qs == 0, "null q list");
        emit_report(soundness_table(n_min, n_max, std::vector<size_t>(qs, qs + num_qs)), csv, file_name);
    });
}

QM_API qm_status qm_labx_gv_margin(size_t n, size_t q, double *out) {
    return guard([&] {
        require(out != nullptr, "output pointer is null");
        *out = gv_margin(n, q);
    });
}

QM_API qm_status qm_labx_error_pairs(size_t n, size_t q, uint64_t *out) {
    return guard([&] {
        require(out != nullptr, "output pointer is null");
        *out = count_error_pairs(n, q);
    });
}

QM_API qm_status qm_labx_amplification_cost(double epsilon, double delta, double *out) {
    return guard([&] {
        require(out != nullptr, "output pointer is null");
        *out = amplification_cost(epsilon, delta);
    });
}

}  // extern "C"
