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

#ifndef QMONEY_SERIALIZE_H
#define QMONEY_SERIALIZE_H

#include <memory>
#include <string>

#include "qmoney/codes.h"
#include "qmoney/scheme.h"

namespace qmoney {

// JSON documents. Writers are deterministic (sorted keys, two-space indent,
// trailing newline), so reading a written file and writing it again yields
// the same bytes. Readers throw ParseError.

constexpr const char *kCodeSpecFormat = "qmoney.codespec/1";
constexpr const char *kBanknoteFormat = "qmoney.banknote/1";
constexpr const char *kBankFormat = "qmoney.bank/1";

std::string codespec_to_json(const CodeSpec &spec);
/// Rebuilds the spec from its basis rows and checks the stored dual, parity
/// and distance fields against it.
CodeSpec codespec_from_json(const std::string &text);

std::string banknote_to_json(const Banknote &note);
/// Coset states come back with a null spec; note_state() resolves them.
Banknote banknote_from_json(const std::string &text);

/// Registry configuration plus every MintRecord. Holds the codes, so it is
/// the bank's secret key.
std::string bank_to_json(const OracleRegistry &registry);
std::unique_ptr<OracleRegistry> bank_from_json(const std::string &text);

std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &contents);

}  // namespace qmoney

#endif
