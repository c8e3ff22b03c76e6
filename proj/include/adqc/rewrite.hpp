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

#include <cstddef>
#include <string>
#include <vector>

#include "adqc/pattern.hpp"

namespace adqc {

struct RewriteStep {
    /// Rule name, e.g. "etilde-x" or "swap".
    std::string rule;
    /// The rule rewrote the adjacent commands at index and index + 1.
    std::size_t index = 0;
    /// Number of commands the pair was replaced with.
    std::size_t produced = 0;
};

using RewriteTrace = std::vector<RewriteStep>;

class RewriteBudgetError : public Error {
public:
    using Error::Error;
};

/// True iff command kinds appear in the order preparation, interaction,
/// measurement, then corrections and shifts. Single-qubit gates make a pattern
/// non-standard.
bool is_standard(const Pattern& p);

struct StandardizeResult {
    Pattern pattern;
    RewriteTrace trace;
};

/// Rewrites a valid pattern into standard form by repeatedly resolving the
/// leftmost adjacent pair that is out of order. Throws RewriteBudgetError after
/// 10 * n^2 rule applications (n = number of input commands).
StandardizeResult standardize(const Pattern& p);

/// Re-applies a trace produced by standardize to its input.
Pattern replay(const Pattern& p, const RewriteTrace& trace);

/// Applies one named rule at a pair position; throws if the rule does not match.
void apply_rule(std::vector<Command>& cmds, const std::string& rule, std::size_t index);

/// Removes all shifts and outcome-flip dependencies from a standard pattern.
///
/// Dependencies that only flip a measurement's outcome become shifts after
/// the measurement (Z dependencies of XY measurements, both dependencies of Z
/// measurements, X dependencies of YZ measurements). All shifts are then
/// substituted into later signals and dropped. The map is unchanged up to a
/// relabeling of outcomes.
Pattern shift_signals(const Pattern& p);

}  // namespace adqc
