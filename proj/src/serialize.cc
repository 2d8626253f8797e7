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

#include "qmoney/serialize.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qmoney/errors.h"

namespace qmoney {

using nlohmann::json;

namespace {

std::string dump(const json &doc) {
    return doc.dump(2) + "\n";
}

json parse(const std::string &text, const char *format) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("format") || doc["format"] != format) {
        throw ParseError(std::string("expected a ") + format + " document");
    }
    return doc;
}

json rows_json(const Gf2Matrix &m) {
    return m.str_rows();
}

std::vector<std::string> rows_from(const json &j) {
    return j.get<std::vector<std::string>>();
}

json code_json(const CodeSpec &spec) {
    return json{{"n", spec.n},
                {"q", spec.q},
                {"basis", rows_json(spec.code.basis())},
                {"dual_basis", rows_json(spec.dual_code.basis())},
                {"parity_primal", rows_json(spec.parity_primal)},
                {"parity_dual", rows_json(spec.parity_dual)},
                {"d_primal", spec.d_primal},
                {"d_dual", spec.d_dual}};
}

CodeSpec code_from(const json &j) {
    size_t n = j.at("n").get<size_t>();
    size_t q = j.at("q").get<size_t>();
    auto basis = rows_from(j.at("basis"));
    for (const auto &row : basis) {
        if (row.size() != n) {
            throw ParseError("code basis row has the wrong length");
        }
    }
    // An all-zero code has no rows; keep the ambient dimension anyway.
    CodeSpec spec = basis.empty() ? build_code_spec(SubspaceBasis(n), q) : code_spec_from_generators(basis, q);
    if (spec.code.basis().str_rows() != basis) {
        throw ParseError("code basis is not in reduced row echelon form");
    }
    if (spec.dual_code.basis().str_rows() != rows_from(j.at("dual_basis")) ||
        spec.parity_primal.str_rows() != rows_from(j.at("parity_primal")) ||
        spec.parity_dual.str_rows() != rows_from(j.at("parity_dual"))) {
        throw ParseError("stored dual/parity rows disagree with the basis");
    }
    if (spec.d_primal != j.at("d_primal").get<size_t>() || spec.d_dual != j.at("d_dual").get<size_t>()) {
        throw ParseError("stored distances disagree with the basis");
    }
    return spec;
}

BitVec bits_from(const json &j) {
    try {
        return BitVec::from_string(j.get<std::string>());
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what());
    }
}

template <typename F>
auto guarded(F &&f) -> decltype(f()) {
    try {
        return f();
    } catch (const json::exception &e) {
        throw ParseError(std::string("bad field: ") + e.what());
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what());
    }
}

}  // namespace

std::string codespec_to_json(const CodeSpec &spec) {
    json doc = code_json(spec);
    doc["format"] = kCodeSpecFormat;
    return dump(doc);
}

CodeSpec codespec_from_json(const std::string &text) {
    json doc = parse(text, kCodeSpecFormat);
    return guarded([&] { return code_from(doc); });
}

std::string banknote_to_json(const Banknote &note) {
    json state;
    if (const auto *label = std::get_if<CosetLabel>(&note.state)) {
        state = {{"kind", "coset"}, {"e", label->e.str()}, {"e_prime", label->e_prime.str()}, {"sign", label->sign}};
    } else {
        const auto &dense = std::get<DenseState>(note.state);
        state = {{"kind", "dense"}, {"n", dense.num_qubits()}, {"dump", dump_state(dense)}};
    }
    return dump(json{{"format", kBanknoteFormat}, {"serial", note.serial.str()}, {"state", state}});
}

Banknote banknote_from_json(const std::string &text) {
    json doc = parse(text, kBanknoteFormat);
    return guarded([&] {
        Banknote note;
        note.serial = bits_from(doc.at("serial"));
        const json &state = doc.at("state");
        std::string kind = state.at("kind").get<std::string>();
        if (kind == "coset") {
            CosetLabel label;
            label.e = bits_from(state.at("e"));
            label.e_prime = bits_from(state.at("e_prime"));
            label.sign = state.at("sign").get<int>();
            if (label.e.size() != label.e_prime.size() || (label.sign != 1 && label.sign != -1)) {
                throw ParseError("coset state needs equal-length e/e_prime and sign +1 or -1");
            }
            note.state = std::move(label);
        } else if (kind == "dense") {
            size_t n = state.at("n").get<size_t>();
            try {
                note.state = parse_state(n, state.at("dump").get<std::string>());
            } catch (const std::invalid_argument &e) {
                throw ParseError(std::string("dense state: ") + e.what());
            }
        } else {
            throw ParseError("unknown state kind '" + kind + "'");
        }
        if (note.serial.size() != 3 * note.num_qubits()) {
            throw ParseError("serial must have 3n bits");
        }
        return note;
    });
}

std::string bank_to_json(const OracleRegistry &registry) {
    const RegistryConfig &cfg = registry.config();
    json config = {{"n", cfg.n},
                   {"q", cfg.q},
                   {"master_seed", cfg.master_seed},
                   {"route", route_name(cfg.route)},
                   {"max_attempts", cfg.max_attempts},
                   {"fixed_code", cfg.fixed_spec ? code_json(*cfg.fixed_spec) : json(nullptr)}};
    json records = json::array();
    for (const auto &rec : registry.records()) {
        json r = {{"r", rec->r.str()},
                  {"serial", rec->serial.str()},
                  {"route", route_name(rec->route)},
                  {"code", code_json(*rec->spec)}};
        if (rec->route == MintRoute::Conjugate) {
            r["theta"] = rec->theta.str();
            json cols = json::array();
            for (const auto &c : rec->basis_map->columns()) {
                cols.push_back(c.str());
            }
            r["basis_columns"] = cols;
        }
        records.push_back(r);
    }
    return dump(json{{"format", kBankFormat}, {"config", config}, {"records", records}});
}

std::unique_ptr<OracleRegistry> bank_from_json(const std::string &text) {
    json doc = parse(text, kBankFormat);
    return guarded([&] {
        const json &c = doc.at("config");
        RegistryConfig cfg;
        cfg.n = c.at("n").get<size_t>();
        cfg.q = c.at("q").get<size_t>();
        cfg.master_seed = c.at("master_seed").get<uint64_t>();
        cfg.route = parse_route(c.at("route").get<std::string>());
        cfg.max_attempts = c.at("max_attempts").get<size_t>();
        if (!c.at("fixed_code").is_null()) {
            cfg.fixed_spec = std::make_shared<const CodeSpec>(code_from(c.at("fixed_code")));
        }
        std::unique_ptr<OracleRegistry> registry;
        try {
            registry = std::make_unique<OracleRegistry>(cfg);
        } catch (const std::invalid_argument &e) {
            throw ParseError(e.what());
        }
        for (const json &r : doc.at("records")) {
            MintRecord rec;
            rec.r = bits_from(r.at("r"));
            rec.serial = bits_from(r.at("serial"));
            rec.route = parse_route(r.at("route").get<std::string>());
            CodeSpec spec = code_from(r.at("code"));
            rec.spec = cfg.fixed_spec && *cfg.fixed_spec == spec ? cfg.fixed_spec
                                                                 : std::make_shared<const CodeSpec>(std::move(spec));
            if (rec.route == MintRoute::Conjugate) {
                rec.theta = bits_from(r.at("theta"));
                std::vector<BitVec> cols;
                for (const json &col : r.at("basis_columns")) {
                    cols.push_back(bits_from(col));
                }
                try {
                    rec.basis_map = BasisMap(std::move(cols));
                } catch (const std::invalid_argument &e) {
                    throw ParseError(std::string("basis_columns: ") + e.what());
                }
            }
            try {
                registry->insert(std::move(rec));
            } catch (const std::invalid_argument &e) {
                throw ParseError(std::string("record: ") + e.what());
            }
        }
        return registry;
    });
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open '" + path + "' for reading");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string &path, const std::string &contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out << contents;
    if (!out.flush()) {
        throw IoError("write to '" + path + "' failed");
    }
}

}  // namespace qmoney
