// Copyright 2026 The relsvet Authors
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

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace relsvet {

enum class ErrorKind {
    NegativeProbability,
    NotNormalized,
    MissingSetting,
    IndexOutOfRange,
    InfeasibleProfile,
    EmptyRange,
    DomainError,
    RegimeMismatch,
    UnsupportedRegime,
    InfeasibleConstraints,
    BudgetExceeded,
    ParseError,
    CrossCheckMismatch,
};

constexpr std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::NegativeProbability: return "NegativeProbability";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::MissingSetting: return "MissingSetting";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::InfeasibleProfile: return "InfeasibleProfile";
    case ErrorKind::EmptyRange: return "EmptyRange";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::RegimeMismatch: return "RegimeMismatch";
    case ErrorKind::UnsupportedRegime: return "UnsupportedRegime";
    case ErrorKind::InfeasibleConstraints: return "InfeasibleConstraints";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::CrossCheckMismatch: return "CrossCheckMismatch";
    }
    return "Unknown";
}

/// Where in a behavior a validation failure was found. Fields that do not
/// apply are left empty.
struct ErrorLocation {
    std::optional<std::size_t> lambda;
    std::optional<int> setting;  // 1..8
    std::optional<int> outcome;  // 0..7, fixed outcome order
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string &message, ErrorLocation where = {})
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind),
          where_(where) {}

    ErrorKind kind() const noexcept { return kind_; }
    const ErrorLocation &where() const noexcept { return where_; }

  private:
    ErrorKind kind_;
    ErrorLocation where_;
};

}  // namespace relsvet
