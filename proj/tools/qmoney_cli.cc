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

// qmoney command-line tool. Talks to the library only through qmoney.h.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qmoney/qmoney.h"

namespace {

// Exit codes.
constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void usage_error(const std::string &message) {
    throw CliError{kExitUsage, message};
}

void check(qm_status status) {
    if (status == QM_OK) {
        return;
    }
    std::string message = std::string(qm_status_name(status)) + ": " + qm_last_error_message();
    throw CliError{status == QM_ERR_INVALID_ARGUMENT ? kExitUsage : kExitDomain, message};
}

struct StrFree {
    void operator()(char *s) const {
        qm_string_free(s);
    }
};
struct CodeFree {
    void operator()(qm_code *c) const {
        qm_code_free(c);
    }
};
struct BankFree {
    void operator()(qm_bank *b) const {
        qm_bank_free(b);
    }
};
struct NoteFree {
    void operator()(qm_note *n) const {
        qm_note_free(n);
    }
};
using CodePtr = std::unique_ptr<qm_code, CodeFree>;
using BankPtr = std::unique_ptr<qm_bank, BankFree>;
using NotePtr = std::unique_ptr<qm_note, NoteFree>;

std::string take(char *s) {
    std::unique_ptr<char, StrFree> owned(s);
    return s ? std::string(s) : std::string();
}

// ---- global flags and output ----

struct Globals {
    std::optional<uint64_t> seed;
    std::string out;
    std::string format = "text";
    unsigned jobs = 1;
};

Globals g;

uint64_t resolve_seed() {
    if (!g.seed) {
        std::random_device rd;
        g.seed = (uint64_t{rd()} << 32) ^ rd();
        std::cerr << "seed: " << *g.seed << "\n";
    }
    return *g.seed;
}

std::string read_text(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CliError{kExitDomain, "cannot open '" + path + "'"};
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << text) || !out.flush()) {
        throw CliError{kExitDomain, "cannot write '" + path + "'"};
    }
}

/// Writes an artifact to --out, or to stdout when --out is absent. A
/// directory --out receives the artifact under default_name.
void emit_artifact(const std::string &text, const std::string &default_name = "") {
    if (g.out.empty()) {
        std::cout << text;
        return;
    }
    std::string path = g.out;
    if (!default_name.empty() && std::filesystem::is_directory(path)) {
        path = (std::filesystem::path(path) / default_name).string();
    }
    write_text(path, text);
}

struct Summary {
    std::string command;
    std::string text;
    nlohmann::ordered_json fields = nlohmann::ordered_json::object();
};

/// The one-line result. When the artifact went to stdout the summary goes to
/// stderr so that stdout stays parseable.
void print_summary(const Summary &s) {
    std::ostream &os = g.out.empty() && s.command != "verify" && s.command != "demo" ? std::cerr : std::cout;
    if (g.format == "json") {
        nlohmann::ordered_json doc;
        doc["command"] = s.command;
        doc["summary"] = s.text;
        doc["result"] = s.fields;
        os << doc.dump() << "\n";
    } else if (g.format == "csv") {
        std::string header = "command,summary", row = s.command + ",\"" + s.text + "\"";
        for (const auto &[k, v] : s.fields.items()) {
            header += "," + k;
            row += "," + (v.is_string() ? v.get<std::string>() : v.dump());
        }
        os << header << "\n" << row << "\n";
    } else {
        os << s.text << "\n";
    }
}

BankPtr load_bank(const std::string &path) {
    qm_bank *bank = nullptr;
    check(qm_bank_from_json(read_text(path).c_str(), &bank));
    return BankPtr(bank);
}

NotePtr load_note(const std::string &path) {
    qm_note *note = nullptr;
    check(qm_note_from_json(read_text(path).c_str(), &note));
    return NotePtr(note);
}

std::string note_json(const qm_note *note) {
    char *s = nullptr;
    check(qm_note_to_json(note, &s));
    return take(s);
}

std::string note_serial(const qm_note *note) {
    char *s = nullptr;
    check(qm_note_serial(note, &s));
    return take(s);
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// ---- subcommands ----

struct GencodeArgs {
    size_t n = 6;
    size_t q = 1;
    size_t max_attempts = 0;
};

int run_gencode(const GencodeArgs &a) {
    uint64_t seed = resolve_seed();
    qm_code *raw = nullptr;
    check(qm_code_search(a.n, a.q, seed, a.max_attempts, g.jobs, &raw));
    CodePtr code(raw);
    qm_code_info info{};
    check(qm_code_info_get(code.get(), &info));
    char *js = nullptr;
    check(qm_code_to_json(code.get(), &js));
    emit_artifact(take(js), "code-" + std::to_string(a.n) + "-" + std::to_string(a.q) + "-" +
                                std::to_string(seed) + ".json");
    Summary s{"gencode", "found C in W: d=" + std::to_string(info.d_primal) + "/" + std::to_string(info.d_dual)};
    s.fields = {{"n", info.n}, {"q", info.q}, {"seed", seed}, {"dim", info.dim},
                {"d_primal", info.d_primal}, {"d_dual", info.d_dual}, {"certified", info.certified == 1}};
    print_summary(s);
    return kExitOk;
}

struct MintArgs {
    std::string bank;
    std::optional<size_t> n;
    std::optional<size_t> q;
    std::string code;
    std::optional<std::string> route;
    std::optional<std::string> r;
    std::optional<std::string> x;
    bool test_mode = false;
    bool symbolic = false;
};

qm_route parse_route_flag(const std::string &route) {
    if (route == "direct") {
        return QM_ROUTE_DIRECT;
    }
    if (route == "conjugate") {
        return QM_ROUTE_CONJUGATE;
    }
    usage_error("--route must be direct or conjugate");
}

int run_mint(const MintArgs &a) {
    uint64_t seed = resolve_seed();
    BankPtr bank;
    if (std::filesystem::exists(a.bank)) {
        if (a.n || a.q || !a.code.empty()) {
            usage_error("--n/--q/--code only apply when creating a new bank");
        }
        bank = load_bank(a.bank);
        if (a.route) {
            qm_route have{};
            check(qm_bank_route(bank.get(), &have));
            if (have != parse_route_flag(*a.route)) {
                usage_error("bank '" + a.bank + "' was created for the other minting route");
            }
        }
    } else {
        CodePtr fixed;
        size_t n = a.n.value_or(6), q = a.q.value_or(1);
        if (!a.code.empty()) {
            qm_code *raw = nullptr;
            check(qm_code_from_json(read_text(a.code).c_str(), &raw));
            fixed.reset(raw);
            qm_code_info info{};
            check(qm_code_info_get(fixed.get(), &info));
            if ((a.n && *a.n != info.n) || (a.q && *a.q != info.q)) {
                usage_error("--n/--q disagree with --code");
            }
            n = info.n;
            q = info.q;
        }
        qm_bank *raw = nullptr;
        check(qm_bank_create(n, q, seed, parse_route_flag(a.route.value_or("direct")), fixed.get(), g.jobs, &raw));
        bank.reset(raw);
    }
    qm_note *raw = nullptr;
    check(qm_bank_mint(bank.get(), a.r ? a.r->c_str() : nullptr, seed, a.x ? a.x->c_str() : nullptr,
                       a.test_mode ? 1 : 0, a.symbolic ? 1 : 0, &raw));
    NotePtr note(raw);
    char *bank_js = nullptr;
    check(qm_bank_to_json(bank.get(), &bank_js));
    write_text(a.bank, take(bank_js));
    emit_artifact(note_json(note.get()));
    qm_route route{};
    check(qm_bank_route(bank.get(), &route));
    std::string serial = note_serial(note.get());
    Summary s{"mint", "minted note serial=" + serial};
    s.fields = {{"serial", serial},
                {"route", route == QM_ROUTE_CONJUGATE ? "conjugate" : "direct"},
                {"symbolic", a.symbolic},
                {"seed", seed}};
    print_summary(s);
    return kExitOk;
}

struct CorruptArgs {
    std::string in;
    std::optional<std::string> e;
    std::optional<std::string> ez;
    std::optional<size_t> rand_weight;
};

int run_corrupt(const CorruptArgs &a) {
    NotePtr note = load_note(a.in);
    qm_note *raw = nullptr;
    std::string e, ez;
    if (a.rand_weight) {
        if (a.e || a.ez) {
            usage_error("--rand-weight excludes --e/--ez");
        }
        char *es = nullptr, *ezs = nullptr;
        check(qm_note_corrupt_random(note.get(), *a.rand_weight, resolve_seed(), &raw, &es, &ezs));
        e = take(es);
        ez = take(ezs);
    } else {
        if (!a.e && !a.ez) {
            usage_error("corrupt needs --e/--ez or --rand-weight");
        }
        check(qm_note_corrupt(note.get(), a.e ? a.e->c_str() : nullptr, a.ez ? a.ez->c_str() : nullptr, &raw));
        size_t n = 0;
        check(qm_note_num_qubits(note.get(), &n));
        e = a.e.value_or(std::string(n, '0'));
        ez = a.ez.value_or(std::string(n, '0'));
    }
    NotePtr out(raw);
    emit_artifact(note_json(out.get()));
    Summary s{"corrupt", "corrupted note: e=" + e + " e'=" + ez};
    s.fields = {{"e", e}, {"e_prime", ez}};
    print_summary(s);
    return kExitOk;
}

struct VerifyArgs {
    std::string bank;
    std::string in;
};

int run_verify(const VerifyArgs &a) {
    BankPtr bank = load_bank(a.bank);
    NotePtr note = load_note(a.in);
    qm_verify_result r{};
    check(qm_bank_verify(bank.get(), note.get(), resolve_seed(), &r));
    std::string text = r.accepted ? "accepted (p=" + format_double(r.accept_probability) + ")"
                                  : std::string("rejected: ") + r.reason;
    if (r.serial_valid && !r.accepted) {
        text += " (p=" + format_double(r.accept_probability) + ")";
    }
    Summary s{"verify", text};
    s.fields = {{"serial_valid", r.serial_valid == 1},
                {"accepted", r.accepted == 1},
                {"accept_probability", r.accept_probability},
                {"reason", r.reason},
                {"primal_queries", r.primal_queries},
                {"dual_queries", r.dual_queries}};
    print_summary(s);
    return r.accepted ? kExitOk : kExitDomain;
}

struct CorrectArgs {
    std::string bank;
    std::string in;
};

int run_correct(const CorrectArgs &a) {
    BankPtr bank = load_bank(a.bank);
    NotePtr note = load_note(a.in);
    qm_correct_result r{};
    check(qm_bank_correct(bank.get(), note.get(), &r));
    std::string e = r.e, ez = r.e_prime, js;
    uint64_t queries = r.coset_queries;
    double fid = 0;
    qm_status st = qm_bank_fresh_fidelity(bank.get(), r.note, &fid);
    if (st == QM_OK) {
        char *s = nullptr;
        st = qm_note_to_json(r.note, &s);
        js = take(s);
    }
    qm_correct_result_clear(&r);
    check(st);
    emit_artifact(js);
    Summary s{"correct", "corrected: e=" + e + " e'=" + ez + " fidelity=" + format_double(fid)};
    s.fields = {{"e", e}, {"e_prime", ez}, {"fidelity", fid}, {"coset_queries", queries}};
    print_summary(s);
    return kExitOk;
}

struct AttackArgs {
    size_t n = 6;
    size_t q = 1;
    std::string strategy;
    uint64_t trials = 1000;
    std::string bank;
};

int run_attack(const AttackArgs &a) {
    uint64_t seed = resolve_seed();
    BankPtr bank;
    if (!a.bank.empty()) {
        bank = load_bank(a.bank);
    } else {
        qm_bank *raw = nullptr;
        check(qm_bank_create(a.n, a.q, seed, QM_ROUTE_DIRECT, nullptr, g.jobs, &raw));
        bank.reset(raw);
    }
    char *csv = nullptr, *name = nullptr;
    check(qm_labx_attack(bank.get(), a.strategy.c_str(), a.trials, seed, &csv, &name));
    std::string text = take(csv), file = take(name);
    emit_artifact(text, file);
    // Second CSV line holds the single summary row.
    std::istringstream lines(text);
    std::string header, row;
    std::getline(lines, header);
    std::getline(lines, row);
    Summary s{"attack", ""};
    std::istringstream hs(header), rs(row);
    std::map<std::string, std::string> raw;
    for (std::string k, v; std::getline(hs, k, ',') && std::getline(rs, v, ',');) {
        s.fields[k] = std::stod(v);
        raw[k] = v;
    }
    char line[256];
    std::snprintf(line, sizeof(line), "attack %s: accepted %s/%s, rate %.4f, 95%% CI [%.4f, %.4f], analytic %.6f",
                  a.strategy.c_str(), raw["accepted"].c_str(), raw["trials"].c_str(), std::stod(raw["empirical_rate"]),
                  std::stod(raw["wilson_low"]), std::stod(raw["wilson_high"]), std::stod(raw["analytic_rate"]));
    s.text = line;
    print_summary(s);
    return kExitOk;
}

struct BoundsArgs {
    bool gv = false;
    bool soundness = false;
    size_t n_min = 2;
    size_t n_max = 64;
    std::vector<size_t> qs{1, 2, 3};
};

int run_bounds(const BoundsArgs &a) {
    if (a.gv == a.soundness) {
        usage_error("bounds needs exactly one of --gv and --soundness");
    }
    if (a.n_min > a.n_max) {
        usage_error("--n-min exceeds --n-max");
    }
    char *csv = nullptr, *name = nullptr;
    if (a.gv) {
        check(qm_labx_gv_table(a.n_min, a.n_max, a.qs.data(), a.qs.size(), &csv, &name));
    } else {
        check(qm_labx_soundness_table(a.n_min, a.n_max, a.qs.data(), a.qs.size(), &csv, &name));
    }
    std::string text = take(csv), file = take(name);
    emit_artifact(text, file);
    size_t rows = static_cast<size_t>(std::count(text.begin(), text.end(), '\n')) - 1;
    Summary s{"bounds", std::string(a.gv ? "gv" : "soundness") + " table: " + std::to_string(rows) + " rows"};
    s.fields = {{"table", a.gv ? "gv" : "soundness"}, {"rows", rows}, {"file", file}};
    print_summary(s);
    return kExitOk;
}

// ---- demo: the worked [[6,3]] example ----

const std::vector<std::string> kGoldenGenerators = {"100011", "010110", "001101"};
const std::vector<std::string> kGoldenParity = {"011100", "110010", "101001"};
const std::vector<std::string> kGoldenCodewords = {"000000", "001101", "010110", "011011",
                                                   "100011", "101110", "110101", "111000"};

bool dot(const std::string &a, const std::string &b) {
    bool acc = false;
    for (size_t i = 0; i < a.size(); i++) {
        acc ^= a[i] == '1' && b[i] == '1';
    }
    return acc;
}

std::vector<std::string> split_lines(const std::string &text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) {
        out.push_back(line);
    }
    return out;
}

int run_demo() {
    std::vector<std::pair<std::string, bool>> checks;
    auto record = [&](const std::string &name, bool ok) {
        checks.emplace_back(name, ok);
        if (g.format == "text") {
            std::cout << (ok ? "  ok    " : "  FAIL  ") << name << "\n";
        }
    };

    std::string rows;
    for (const auto &r : kGoldenGenerators) {
        rows += r + " ";
    }
    qm_code *raw = nullptr;
    check(qm_code_from_rows(rows.c_str(), 1, &raw));
    CodePtr code(raw);
    qm_code_info info{};
    check(qm_code_info_get(code.get(), &info));
    record("dim C = 3", info.dim == 3);
    record("d(C) = 3 and d(C^perp) = 3", info.d_primal == 3 && info.d_dual == 3);

    bool orthogonal = true;
    for (const auto &h : kGoldenParity) {
        for (const auto &gen : kGoldenGenerators) {
            orthogonal &= !dot(h, gen);
        }
    }
    qm_code *hraw = nullptr;
    check(qm_code_from_rows((kGoldenParity[0] + " " + kGoldenParity[1] + " " + kGoldenParity[2]).c_str(), 1, &hraw));
    CodePtr parity(hraw);
    qm_code_info hinfo{};
    check(qm_code_info_get(parity.get(), &hinfo));
    record("H_C G_C = 0 with rank H_C = 3", orthogonal && hinfo.dim == 3);

    char *words = nullptr;
    check(qm_code_codewords(code.get(), &words));
    record("codewords match the 8 listed strings", split_lines(take(words)) == kGoldenCodewords);

    char *dump = nullptr;
    check(qm_code_state_dump(code.get(), &dump));
    auto lines = split_lines(take(dump));
    bool amplitudes = lines.size() == kGoldenCodewords.size();
    for (size_t i = 0; amplitudes && i < lines.size(); i++) {
        std::istringstream in(lines[i]);
        std::string bits;
        double re = 0, im = 0;
        in >> bits >> re >> im;
        amplitudes = bits == kGoldenCodewords[i] && std::abs(re - 1 / std::sqrt(8.0)) <= 1e-12 &&
                     std::abs(im) <= 1e-12;
    }
    record("|C> has amplitude 1/sqrt(8) on each codeword", amplitudes);

    int certified = 0;
    check(qm_code_certify(code.get(), &certified, nullptr));
    record("code is applicable for q = 1", certified == 1);

    uint64_t pairs = 0;
    check(qm_labx_error_pairs(6, 1, &pairs));
    record("|E_1| = 49", pairs == 49);

    size_t sweep_rows = 0;
    double min_p = 0;
    check(qm_labx_completeness(code.get(), &sweep_rows, &min_p, nullptr, nullptr));
    record("all 49 tolerated corruptions verify with probability 1",
           sweep_rows == 49 && std::abs(min_p - 1) <= 1e-9);

    qm_bank *braw = nullptr;
    check(qm_bank_create(6, 1, 0, QM_ROUTE_DIRECT, code.get(), 1, &braw));
    BankPtr bank(braw);
    qm_note *nraw = nullptr;
    check(qm_bank_mint(bank.get(), "000000", 0, nullptr, 0, 0, &nraw));
    NotePtr note(nraw);
    qm_verify_result vr{};
    check(qm_bank_verify(bank.get(), note.get(), 0, &vr));
    record("fresh note verifies with probability 1", vr.accepted && std::abs(vr.accept_probability - 1) <= 1e-9);

    check(qm_note_corrupt(note.get(), "000111", nullptr, &nraw));
    NotePtr bad(nraw);
    check(qm_bank_verify(bank.get(), bad.get(), 0, &vr));
    qm_correct_result cr{};
    qm_status st = qm_bank_correct(bank.get(), bad.get(), &cr);
    qm_correct_result_clear(&cr);
    record("X^000111 corruption is rejected and undecodable",
           st == QM_ERR_UNDECODABLE && vr.accept_probability <= 1e-9);

    check(qm_note_corrupt(note.get(), "100000", "010000", &nraw));
    NotePtr noisy(nraw);
    check(qm_bank_correct(bank.get(), noisy.get(), &cr));
    double fid = 0;
    st = qm_bank_fresh_fidelity(bank.get(), cr.note, &fid);
    bool identified = std::string(cr.e) == "100000" && std::string(cr.e_prime) == "010000";
    qm_correct_result_clear(&cr);
    check(st);
    record("correction of (100000, 010000) restores |C>", identified && std::abs(fid - 1) <= 1e-12);

    size_t passed = 0;
    for (const auto &c : checks) {
        passed += c.second ? 1 : 0;
    }
    Summary s{"demo", "demo: " + std::to_string(passed) + "/" + std::to_string(checks.size()) + " checks passed"};
    for (const auto &[name, ok] : checks) {
        s.fields[name] = ok;
    }
    print_summary(s);
    return passed == checks.size() ? kExitOk : kExitDomain;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"qmoney: public quantum money from subspace states and CSS codes"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    app.add_option("--seed", g.seed, "RNG seed (generated and printed when absent)");
    app.add_option("--out", g.out, "Artifact path (file or directory); stdout when absent");
    app.add_option("--format", g.format, "Summary format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--jobs", g.jobs, "Worker threads for code search")->check(CLI::PositiveNumber);

    GencodeArgs gencode;
    auto *c_gencode = app.add_subcommand("gencode", "Search for an applicable CSS code");
    c_gencode->add_option("--n", gencode.n, "Number of qubits (even)");
    c_gencode->add_option("--q", gencode.q, "Tolerated errors per side");
    c_gencode->add_option("--max-attempts", gencode.max_attempts, "Search budget (0 = default)");

    MintArgs mint;
    auto *c_mint = app.add_subcommand("mint", "Mint a banknote (creates the bank file if missing)");
    c_mint->add_option("--bank", mint.bank, "Bank key file")->required();
    c_mint->add_option("--n", mint.n, "Qubits for a new bank (default 6)");
    c_mint->add_option("--q", mint.q, "Tolerance for a new bank (default 1)");
    c_mint->add_option("--code", mint.code, "Use this CodeSpec file for every record of a new bank");
    c_mint->add_option("--route", mint.route, "direct or conjugate")->check(CLI::IsMember({"direct", "conjugate"}));
    c_mint->add_option("--r", mint.r, "Bank randomness r (n bits); derived from --seed when absent");
    c_mint->add_option("--x", mint.x, "Conjugate-coding string x (nonzero needs --test-mode)");
    c_mint->add_flag("--test-mode", mint.test_mode, "Allow x != 0");
    c_mint->add_flag("--symbolic", mint.symbolic, "Store the state as a coset label");

    CorruptArgs corrupt;
    auto *c_corrupt = app.add_subcommand("corrupt", "Apply X^e Z^ez to a banknote");
    c_corrupt->add_option("--in", corrupt.in, "Banknote file")->required();
    c_corrupt->add_option("--e", corrupt.e, "Bit-flip pattern");
    c_corrupt->add_option("--ez", corrupt.ez, "Phase-flip pattern");
    c_corrupt->add_option("--rand-weight", corrupt.rand_weight, "Random e and ez of this weight");

    VerifyArgs verify;
    auto *c_verify = app.add_subcommand("verify", "Verify a banknote");
    c_verify->add_option("--bank", verify.bank, "Bank key file")->required();
    c_verify->add_option("--in", verify.in, "Banknote file")->required();

    CorrectArgs correct;
    auto *c_correct = app.add_subcommand("correct", "Identify and undo a tolerated error");
    c_correct->add_option("--bank", correct.bank, "Bank key file")->required();
    c_correct->add_option("--in", correct.in, "Banknote file")->required();

    AttackArgs attack;
    auto *c_attack = app.add_subcommand("attack", "Run a counterfeiting baseline against double verification");
    c_attack->add_option("--strategy", attack.strategy, "passthrough-mixed, measure-and-copy or random-state")
        ->required()
        ->check(CLI::IsMember({"passthrough-mixed", "measure-and-copy", "random-state"}));
    c_attack->add_option("--trials", attack.trials, "Number of trials");
    c_attack->add_option("--n", attack.n, "Qubits");
    c_attack->add_option("--q", attack.q, "Tolerance");
    c_attack->add_option("--bank", attack.bank, "Attack an existing bank instead of a fresh one");

    BoundsArgs bounds;
    auto *c_bounds = app.add_subcommand("bounds", "Tabulate the GV margin or the soundness trade-off");
    c_bounds->add_flag("--gv", bounds.gv, "GV margin table");
    c_bounds->add_flag("--soundness", bounds.soundness, "Soundness table");
    c_bounds->add_option("--n-min", bounds.n_min, "Smallest n");
    c_bounds->add_option("--n-max", bounds.n_max, "Largest n");
    c_bounds->add_option("--q", bounds.qs, "Values of q")->delimiter(',');

    auto *c_demo = app.add_subcommand("demo", "Rerun the [[6,3]] worked example and check every value");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*c_gencode) {
            return run_gencode(gencode);
        }
        if (*c_mint) {
            return run_mint(mint);
        }
        if (*c_corrupt) {
            return run_corrupt(corrupt);
        }
        if (*c_verify) {
            return run_verify(verify);
        }
        if (*c_correct) {
            return run_correct(correct);
        }
        if (*c_attack) {
            return run_attack(attack);
        }
        if (*c_bounds) {
            return run_bounds(bounds);
        }
        if (*c_demo) {
            return run_demo();
        }
    } catch (const CliError &e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    }
    return kExitUsage;
}
