// Copyright 2026 The agcss Authors
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

#ifndef AGCSS_ERRORS_H
#define AGCSS_ERRORS_H

#include <stdexcept>
#include <string>

namespace agcss {

/// Mismatched operands, malformed inputs, or a call outside an operation's contract.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Mathematically undefined input, e.g. inverting zero.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

/// A construction parameter violates one of the code-family inequalities.
/// The message names the violated inequality.
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Exhaustive work would exceed the configured enumeration budget.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// CSS containment failed for caller-supplied codes.
struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An internal guarantee did not hold. Always a bug.
struct DefectError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace agcss

#endif  // AGCSS_ERRORS_H
