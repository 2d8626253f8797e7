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

#ifndef QMONEY_ERRORS_H
#define QMONEY_ERRORS_H

#include <stdexcept>
#include <string>

namespace qmoney {

// Domain failures. Length mismatches and malformed input use std::invalid_argument.

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Randomized search ran out of attempts (e.g. no applicable code found).
struct NotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A state lies outside every tolerated coset.
struct Undecodable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownSerial : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two correctable errors share a syndrome, so the code is not in W.
struct SyndromeCollision : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A file or document does not match its declared format.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qmoney

#endif
