// Copyright 2026 The belrev Authors
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

#ifndef BELREV_CORE_ERROR_HPP_
#define BELREV_CORE_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace belrev {

enum class ErrorCode {
    invalid_argument,
    parse_error,
    unknown_atom,
    space_too_large,
    invalid_prior,
    zero_condition,
    undefined_conditional,
    absolute_confidence,
    undefined_frequency,
    rule_inapplicable,
    correlative_sources,
    disjoint_sources,
    not_combinable,
    no_evidence,
    unusable_scenario,
};

/// Every failure in the engine is reported as an Error carrying one of the
/// codes above plus a human-readable message.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace belrev

#endif  // BELREV_CORE_ERROR_HPP_
