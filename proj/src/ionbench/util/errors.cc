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

#include "ionbench/util/errors.h"

namespace ionbench {

static std::string with_location(const std::string &message, size_t line, size_t column) {
    if (line == 0) {
        return message;
    }
    if (column == 0) {
        return "line " + std::to_string(line) + ": " + message;
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
}

ParseError::ParseError(const std::string &message, size_t line, size_t column)
    : std::invalid_argument(with_location(message, line, column)), line_(line), column_(column) {
}

std::pair<size_t, size_t> line_column_at(const std::string &text, size_t offset) {
    size_t line = 1;
    size_t column = 1;
    for (size_t k = 0; k < offset && k < text.size(); k++) {
        if (text[k] == '\n') {
            line++;
            column = 1;
        } else {
            column++;
        }
    }
    return {line, column};
}

}  // namespace ionbench
