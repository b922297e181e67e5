// Copyright 2026 The readacuity Authors. All Rights Reserved.
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

#ifndef READACUITY_ERROR_HPP_
#define READACUITY_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace readacuity {

// Argument outside the mathematical domain of a conversion or formula.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Data that violates a protocol invariant (error count above word count,
// non-monotonic timestamps, rating out of range, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed CSV/config input. `row()` is the 1-based line number of the
// offending record (the header is line 1), or 0 when not row-specific.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t row)
      : std::runtime_error(row == 0 ? message
                                    : "row " + std::to_string(row) + ": " +
                                          message),
        row_(row) {}

  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

}  // namespace readacuity

#endif  // READACUITY_ERROR_HPP_
