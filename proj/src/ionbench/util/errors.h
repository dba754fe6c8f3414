// Copyright 2026 The ionbench Authors
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

#ifndef IONBENCH_UTIL_ERRORS_H
#define IONBENCH_UTIL_ERRORS_H

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ionbench {

/// Malformed text input. Carries a 1-based line/column when known (0 otherwise).
class ParseError : public std::invalid_argument {
   public:
    ParseError(const std::string &message, size_t line = 0, size_t column = 0);
    size_t line() const { return line_; }
    size_t column() const { return column_; }

   private:
    size_t line_;
    size_t column_;
};

/// A request exceeding a configured size guard (qubit count, memory limit).
class SizeError : public std::length_error {
   public:
    using std::length_error::length_error;
};

/// 1-based (line, column) of byte `offset` in `text`.
std::pair<size_t, size_t> line_column_at(const std::string &text, size_t offset);

}  // namespace ionbench

#endif
