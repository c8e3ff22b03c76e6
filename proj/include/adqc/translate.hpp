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

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adqc/pattern.hpp"
#include "adqc/tgs.hpp"

namespace adqc {

// ---------------------------------------------------------------- circuits

enum class GateKind { J, ETILDE, H, P, CZ };

std::string gate_kind_name(GateKind k);
/// Throws Error on an unknown name.
GateKind gate_kind_from_name(const std::string& name);

/// Single-qubit gates use q0; two-qubit gates act on (q0, q1), read as (a, s) for ETILDE.
struct Gate {
    GateKind kind = GateKind::J;
    std::size_t q0 = 0;
    std::size_t q1 = 0;
    double angle = 0.0;
    [[nodiscard]] bool two_qubit() const { return kind == GateKind::ETILDE || kind == GateKind::CZ; }
    friend bool operator==(const Gate&, const Gate&) = default;
};

struct Circuit {
    std::size_t qubits = 0;
    std::vector<Gate> gates;

    /// Number of layers when every gate is placed right after the last gate on its qubits.
    [[nodiscard]] std::size_t depth() const;
    /// Throws Error for gates on undeclared qubits or repeated two-qubit targets.
    void check() const;
    friend bool operator==(const Circuit&, const Circuit&) = default;
};

/// Name of the system qubit carrying circuit wire i.
QubitId wire_name(std::size_t i);

/// Unitary of the circuit; wire 0 is the most significant qubit.
Matrix circuit_unitary(const Circuit& c);

/// P(angles[i]) on every wire followed by a staircase of ETILDE(i, i+1).
Circuit ladder_circuit(std::size_t n, const std::vector<double>& angles);

/// Replaces every gate by its generating pattern, composes them and standardizes.
/// Systems are named by wire_name, ancillas a1, a2, ... in gate order.
Pattern circuit_to_adqc(const Circuit& c);

// ---------------------------------------------------------------- one-way patterns

struct MbqcMeasurement {
    Plane plane = Plane::XY;
    double angle = 0.0;
    friend bool operator==(const MbqcMeasurement&, const MbqcMeasurement&) = default;
};

enum class MbqcOp { N, E, M, X, Z };

/// One-way command. E is a controlled-Z on (q, q2). M follows the same
/// dependency convention as ancilla measurements: Z^t, X^s, then projection.
struct MbqcCommand {
    MbqcOp op = MbqcOp::N;
    QubitId q;
    QubitId q2;
    MbqcMeasurement meas;
    Signal s;
    Signal t;
    friend bool operator==(const MbqcCommand&, const MbqcCommand&) = default;
};

std::string describe(const MbqcCommand& c);

struct MbqcFlow {
    std::map<QubitId, QubitId> successor;
    /// Vertices grouped by distance to the outputs; the last group is measured first.
    std::vector<std::vector<QubitId>> layers;
    /// Measured vertices in a valid execution order.
    std::vector<QubitId> order;
    friend bool operator==(const MbqcFlow&, const MbqcFlow&) = default;
};

struct MbqcPattern {
    std::string name;
    std::vector<QubitId> vertices;
    std::vector<QubitId> inputs;
    /// outputs[i] carries the logical qubit that entered at inputs[i].
    std::vector<QubitId> outputs;
    std::vector<std::pair<QubitId, QubitId>> edges;
    std::map<QubitId, MbqcMeasurement> measurements;
    std::vector<MbqcCommand> commands;
    std::optional<MbqcFlow> flow;
    /// Logical label (input vertex or translated system) to output vertex.
    std::map<QubitId, QubitId> output_map;
    friend bool operator==(const MbqcPattern&, const MbqcPattern&) = default;
};

/// Structural problems of an open graph with measurements; empty when fine.
std::vector<std::string> check_open_graph(const MbqcPattern& m);

/// Causal flow of the open graph, found backwards from the outputs.
std::optional<MbqcFlow> find_mbqc_flow(const MbqcPattern& m);

/// Fills commands and flow for an XY-measured open graph: preparations,
/// all edges, then per vertex in flow order M, X on its successor and Z on
/// the successor's other neighbours. Outputs are reordered to follow the
/// flow chains. Throws Error when no flow exists.
MbqcPattern flow_pattern(MbqcPattern m);

/// Flow-based translation into an ancilla-driven pattern. Each chain becomes a
/// system wire named after its input; flow steps become generator patterns
/// measured at the vertex angle and non-flow edges become CZ gadgets, placed
/// while both endpoints are alive. Throws Error when no flow exists.
Pattern mbqc_to_adqc(const MbqcPattern& m);

/// Twisted graph with r(o) degree-one ancillas per chain (labels 1..r(o)) and one
/// Z-measured degree-two ancilla per non-flow edge, labelled r(a)+1 and r(b)+1
/// with the second raised on a tie or collision.
TwistedGraph mbqc_twisted_graph(const MbqcPattern& m);

/// One-way pattern for a standard ancilla-driven pattern. Interactions with a
/// fresh ancilla become a CZ with the roles of the two labels swapped; other
/// interactions become a CZ plus pending Hadamards, which are folded into later
/// measurements and corrections or realized by an extra X-measured vertex.
/// Throws Error on non-default preparations or ancilla degree above 2.
MbqcPattern adqc_to_mbqc(const Pattern& p);

// ---------------------------------------------------------------- depth

struct DepthMetrics {
    int preparation = 0;
    int flow = 0;
};

/// Preparation depth is the largest edge label of the extracted twisted graph.
/// Flow depth counts non-Pauli ancillas along the longest constraint chain,
/// plus one layer holding the Pauli measurements when there are any.
/// Non-standard patterns are standardized first. Throws Error without a causal flow.
DepthMetrics depth_metrics(const Pattern& p);

}  // namespace adqc
