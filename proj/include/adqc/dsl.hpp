// Copyright 2026 The ADQC Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>

#include "adqc/pattern.hpp"

namespace adqc {

class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line, int column);
    [[nodiscard]] int line() const { return line_; }
    [[nodiscard]] int column() const { return column_; }

private:
    int line_;
    int column_;
};

struct ParseOptions {
    /// Multiplier applied to every angle literal (pi for --pi-units).
    double angle_scale = 1.0;
};

/// Reads one pattern in the text format:
///
///   pattern J {
///     system: s;
///     ancilla: a;
///     commands:
///       N a
///       E a s
///       M a XY 0.5 s[] t[]
///       X s [a]
///   }
///
/// Commands are listed in execution order. `#` starts a comment.
Pattern parse_pattern(std::string_view text, const ParseOptions& opts = {});

/// Writes a pattern so that parse_pattern(print_pattern(p)) == p.
std::string print_pattern(const Pattern& p);

}  // namespace adqc
