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

#ifndef QCHAN_ERRORS_H_
#define QCHAN_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace qchan {

enum class ErrorKind {
    kDimensionMismatch,
    kOutOfRange,
    kDivideByZero,
    kInvalidState,
    kNotCptp,
    kNotPositive,
    kNonUnitary,
    kNonUnitVector,
    kStrategyInapplicable,
    kDegenerate,
    kUnknownName,
    kNegativeWeight,
    kWireBudget,
    kConfig,
    kIo,
    kParse,
};

std::string_view error_kind_name(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (and tests)
/// can distinguish e.g. a strategy that does not apply from a malformed input.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message);

    ErrorKind kind() const noexcept {
        return kind_;
    }

    /// The message without the kind prefix.
    const std::string &message() const noexcept {
        return message_;
    }

   private:
    ErrorKind kind_;
    std::string message_;
};

}  // namespace qchan

#endif  // QCHAN_ERRORS_H_
