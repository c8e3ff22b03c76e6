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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adqc/pattern.hpp"

namespace adqc {

struct TgsEdge {
    QubitId ancilla;
    QubitId system;
    int label = 1;
    friend bool operator==(const TgsEdge&, const TgsEdge&) = default;
};

/// Measurement planned for an ancilla. Pauli Z is stored as XZ at angle 0.
struct MeasurementPlan {
    Plane plane = Plane::XY;
    double angle = 0.0;

    static MeasurementPlan xy(double a) { return {Plane::XY, a}; }
    static MeasurementPlan z() { return {Plane::XZ, 0.0}; }
    [[nodiscard]] bool is_z() const { return is_z_measurement(plane, angle); }
    [[nodiscard]] bool is_pauli() const { return is_pauli_measurement(plane, angle); }
    friend bool operator==(const MeasurementPlan&, const MeasurementPlan&) = default;
};

/// Bipartite labelled graph of interactions between systems and ancillas.
/// Ancillas have degree at most 2 and edges sharing a vertex carry distinct labels.
struct TwistedGraph {
    std::vector<QubitId> systems;
    std::vector<QubitId> ancillas;
    /// Kept in the order the interactions are applied.
    std::vector<TgsEdge> edges;
    std::map<QubitId, MeasurementPlan> measurements;

    [[nodiscard]] std::vector<const TgsEdge*> edges_of(const QubitId& q) const;
    [[nodiscard]] std::size_t degree(const QubitId& q) const { return edges_of(q).size(); }
    [[nodiscard]] int max_label() const;
    /// Edges sorted by label, ties kept in stored order.
    [[nodiscard]] std::vector<TgsEdge> edges_by_label() const;

    friend bool operator==(const TwistedGraph&, const TwistedGraph&) = default;
};

/// Problems with the labelling or degrees; empty when the graph is well formed.
std::vector<std::string> check_graph(const TwistedGraph& g);

/// Forgets measurements and corrections of a standard pattern. Interactions
/// get the smallest label exceeding every earlier label on either endpoint.
/// Measurement plans are read off the pattern (Z measurements and XY angles).
TwistedGraph extract_graph(const Pattern& p);

/// Default plan: degree-1 ancillas measured in XY at 0, degree-2 in Z.
void assign_default_plan(TwistedGraph& g);

/// Walks the edges of S(a) from the label of a's edge onwards and assigns the
/// alternating letters; see stabilizer() for the rules.
PauliString local_stabilizer(const TwistedGraph& g, const QubitId& a);

/// Stabilizer of the twisted graph state generated by the preparation of a.
///
/// Degree-1 ancillas contribute Z_a, degree-2 ancillas X_a. Along the system
/// reached through a's first edge the letters alternate: an even position
/// receives X on a degree-1 ancilla, Z on a degree-2 ancilla whose other edge
/// comes later (the walk then continues on that ancilla's other system from
/// that edge), or X on a degree-2 ancilla whose other edge came earlier. The
/// system ends with X after an odd number of positions and Z otherwise. The
/// overall sign is obtained by pushing X_a through the interactions.
PauliString stabilizer(const TwistedGraph& g, const QubitId& a);

/// Pushes X_a through all interactions after a's preparation; exact including sign.
PauliString propagated_stabilizer(const TwistedGraph& g, const QubitId& a);

inline constexpr std::size_t kMaxVerifyQubits = 12;

/// State of the graph with the given system input (in g.systems order).
StateVector graph_state(const TwistedGraph& g, const StateVector& system_input);

/// Checks numerically that `p` fixes the graph state for a random system input.
bool verify_stabilizer(const TwistedGraph& g, const PauliString& p, std::uint64_t seed, double tol = kDefaultTol);
bool verify_stabilizer(const TwistedGraph& g, const QubitId& a, std::uint64_t seed, double tol = kDefaultTol);

struct FlowResult {
    bool exists = false;
    /// Ancillas grouped by longest-path rank, first layer first.
    std::vector<std::vector<QubitId>> layers;
    /// Ancillas in a linear extension of the order.
    std::vector<QubitId> order;
    std::map<QubitId, PauliString> stabilizers;
    std::map<QubitId, PauliString> corrections;
    /// Constraint edges a -> b meaning a must be measured before b.
    std::vector<std::pair<QubitId, QubitId>> constraints;
    std::string diagnostic;
};

/// Causal flow of a graph whose degree-1 ancillas are XY measured and degree-2
/// ancillas Z measured. Each ancilla in the support of P(a) must come after a,
/// unless it is Z measured and P(a) puts a Z on it.
FlowResult find_causal_flow(const TwistedGraph& g);

/// Builds the deterministic pattern: preparations, interactions by label, then
/// for each ancilla in flow order its measurement and the corrections C(a).
/// `angles` overrides the XY angles of the measurement plan.
Pattern synthesize_deterministic(const TwistedGraph& g, const std::map<QubitId, double>& angles = {});

}  // namespace adqc
