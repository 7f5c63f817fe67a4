// Copyright 2026 The qbecc Authors
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

#ifndef QBECC_ERRORS_H
#define QBECC_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qbecc {

/// Malformed textual input (polynomial grammar, ranges, registry JSON).
struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An operation was called with arguments outside its contract.
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Generators of a would-be stabilizer do not commute.
struct CommutationError : PreconditionError {
    CommutationError(size_t first, size_t second, const std::string &msg)
        : PreconditionError(msg), first(first), second(second) {
    }
    size_t first;
    size_t second;
};

/// A computation would exceed a configured enumeration or memory limit.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qbecc

#endif
