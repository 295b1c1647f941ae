// Copyright 2026 The qchansim Authors
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

#include "qchan/errors.h"

namespace qchan {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::kDimensionMismatch:
            return "dimension mismatch";
        case ErrorKind::kOutOfRange:
            return "out of range";
        case ErrorKind::kDivideByZero:
            return "divide by zero";
        case ErrorKind::kInvalidState:
            return "invalid state";
        case ErrorKind::kNotCptp:
            return "not CPTP";
        case ErrorKind::kNotPositive:
            return "not positive";
        case ErrorKind::kNonUnitary:
            return "non-unitary";
        case ErrorKind::kNonUnitVector:
            return "non-unit vector";
        case ErrorKind::kStrategyInapplicable:
            return "strategy inapplicable";
        case ErrorKind::kDegenerate:
            return "degenerate";
        case ErrorKind::kUnknownName:
            return "unknown name";
        case ErrorKind::kNegativeWeight:
            return "negative weight";
        case ErrorKind::kWireBudget:
            return "wire budget exceeded";
        case ErrorKind::kConfig:
            return "config error";
        case ErrorKind::kIo:
            return "I/O error";
        case ErrorKind::kParse:
            return "parse error";
    }
    return "error";
}

Error::Error(ErrorKind kind, const std::string &message)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind), message_(message) {
}

}  // namespace qchan
