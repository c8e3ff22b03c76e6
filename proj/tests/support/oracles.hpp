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

// Independent reference implementations used only by tests.

#include <cstdint>
#include <random>
#include <vector>

#include "adqc/interaction.hpp"
#include "adqc/pattern.hpp"
#include "adqc/sim.hpp"
#include "adqc/tgs.hpp"
#include "adqc/translate.hpp"

namespace adqc::testing {

// ---- oracles

/// Branch operators of a one-way pattern from inputs to outputs (in m.outputs
/// order), computed by a direct interpreter that runs each basis input with
/// fixed outcomes.
CptpMap oneway_map(const MbqcPattern& m);

/// exp(-i ax XX) exp(-i ay YY) exp(-i az ZZ) as a product of commuting factors.
Matrix d_from_exponentials(const Alphas& a);

/// Makhlin invariants (G1, G2) of a two-qubit unitary.
std::pair<Complex, Complex> makhlin_invariants(const Matrix& u);

/// Kraus operator (<m| (x) 1) D (|p> (x) 1) by explicit Kronecker products.
Matrix kraus_by_kron(const Matrix& d, const Vector& prep, const Vector& meas);

/// max |a - e^{i x} b| with the phase x taken from the overlap tr(b^dag a).
double phase_aligned_distance(const Matrix& a, const Matrix& b);

/// Haar-random unitary of the given dimension.
Matrix random_unitary(std::size_t dim, std::mt19937_64& rng);

// ---- generators

struct WildOptions {
    std::size_t max_systems = 2;
    std::size_t max_ancillas = 3;
    std::string ancilla_prefix = "a";
    std::vector<QubitId> systems;  // fixed systems when non-empty
};

/// Valid but generally non-standard pattern with random preparations,
/// interactions, dependent measurements, corrections and shifts.
Pattern random_wild_pattern(std::mt19937_64& rng, const WildOptions& opts = {});

/// Twisted graph with ancilla degree 1 or 2 and labels from a random edge order.
TwistedGraph random_twisted_graph(std::mt19937_64& rng, std::size_t max_systems, std::size_t max_ancillas);

/// Random twisted graph with default plans, random XY angles and a causal flow.
TwistedGraph random_flow_graph(std::mt19937_64& rng, std::size_t max_systems, std::size_t max_ancillas);

/// Random circuit over the full gate set.
Circuit random_circuit(std::mt19937_64& rng, std::size_t qubits, std::size_t gates);

/// Random XY-measured open graph with a flow, turned into its flow pattern.
/// Keeps the translated ancilla count within max_ancillas.
MbqcPattern random_flow_mbqc(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_ancillas);

double random_angle(std::mt19937_64& rng);

}  // namespace adqc::testing
