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

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "adqc/pattern.hpp"

namespace adqc {

/// Where measurement outcomes come from during a run.
class OutcomeSource {
public:
    /// Sample outcomes with Born weights from a seeded generator.
    static OutcomeSource sampled(std::uint64_t seed);
    /// Force outcomes in measurement order.
    static OutcomeSource forced(std::vector<int> bits);

    int next(double p0);

private:
    bool forced_ = false;
    std::vector<int> bits_;
    std::size_t pos_ = 0;
    std::mt19937_64 rng_;
};

struct RunResult {
    /// Final state on the system qubits, in the pattern's system order.
    StateVector state;
    /// Outcomes after all shifts, keyed by ancilla.
    OutcomeMap outcomes;
    /// Raw outcomes in measurement order.
    std::vector<int> bits;
    /// Set when a forced branch has zero probability.
    bool impossible = false;
};

/// Executes the pattern on `input` (a state over the pattern's systems).
/// The state is never renormalized: its squared norm is the branch probability
/// times the squared norm of the input.
RunResult run(const Pattern& p, const StateVector& input, OutcomeSource source);

struct Branch {
    std::vector<int> bits;
    StateVector state;
    double probability = 0.0;
};

inline constexpr std::size_t kMaxBranchAncillas = 16;

/// All 2^|A| branches in lexicographic order of their bitstrings.
std::vector<Branch> enumerate_branches(const Pattern& p, const StateVector& input);

struct BranchMap {
    std::vector<int> bits;
    Matrix op;
    /// tr(K^dag K) / 2^|S|.
    double weight = 0.0;
};

struct CptpMap {
    std::size_t num_qubits = 0;
    std::vector<BranchMap> branches;

    [[nodiscard]] std::size_t dim() const { return std::size_t{1} << num_qubits; }
    /// max |sum K^dag K - 1|.
    [[nodiscard]] double completeness_error() const;
};

inline constexpr std::size_t kMaxKrausSystems = 6;
inline constexpr std::size_t kMaxKrausAncillas = 12;

/// Branch operators of the pattern on its system space (first system = most
/// significant), obtained by running a purified maximally entangled input.
CptpMap kraus_map(const Pattern& p);

/// Choi matrix sum_b vec(K_b) vec(K_b)^dag with vec stacking columns.
Matrix choi(const CptpMap& m);
double choi_distance(const CptpMap& a, const CptpMap& b);

/// Composition: first `first`, then `second`.
CptpMap compose_maps(const CptpMap& second, const CptpMap& first);
CptpMap tensor_maps(const CptpMap& a, const CptpMap& b);

Matrix apply_cptp(const CptpMap& m, const Matrix& rho);

struct DeterminismResult {
    bool deterministic = false;
    /// Common unitary, phase fixed so that its first nonzero entry is real positive.
    std::optional<Matrix> unitary;
    /// Smallest phase-insensitive overlap between a branch and the reference branch.
    double min_overlap = 1.0;
};

/// Strong determinism: every branch with nonzero weight equals the same
/// operator up to a global phase.
DeterminismResult is_strongly_deterministic(const Pattern& p, double tol = kDefaultTol);
DeterminismResult is_strongly_deterministic(const CptpMap& m, double tol = kDefaultTol);

}  // namespace adqc
