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
#include <map>
#include <numbers>
#include <string>
#include <variant>
#include <vector>

#include "adqc/qcore.hpp"

namespace adqc {

/// Parity of a set of measurement outcomes. Kept sorted and duplicate free;
/// adding a member that is already present removes it.
class Signal {
public:
    Signal() = default;
    Signal(std::initializer_list<QubitId> ids);
    explicit Signal(const std::vector<QubitId>& ids);

    [[nodiscard]] const std::vector<QubitId>& members() const { return ids_; }
    [[nodiscard]] bool empty() const { return ids_.empty(); }
    [[nodiscard]] std::size_t size() const { return ids_.size(); }
    [[nodiscard]] bool contains(const QubitId& q) const;

    /// Toggles membership of q.
    void toggle(const QubitId& q);
    Signal& operator^=(const Signal& other);
    friend Signal operator^(Signal a, const Signal& b) { return a ^= b; }
    friend bool operator==(const Signal& a, const Signal& b) { return a.ids_ == b.ids_; }

    /// Parity of the members' outcomes. Throws if a member has no outcome.
    [[nodiscard]] int evaluate(const std::map<QubitId, int>& outcomes) const;

private:
    std::vector<QubitId> ids_;
};

using OutcomeMap = std::map<QubitId, int>;

enum class Plane { XY, XZ, YZ };

std::string plane_name(Plane p);

/// Shortest decimal form that reads back to the same double.
std::string format_angle(double a);

/// Bloch-sphere angles (theta, phi) of the |+> state of a planar basis.
std::pair<double, double> plane_angles(Plane plane, double angle);

/// True for the computational-basis measurement (XZ or YZ at angle 0).
bool is_z_measurement(Plane plane, double angle, double tol = kDefaultTol);
/// Z measurement, or XY at a multiple of pi/2.
bool is_pauli_measurement(Plane plane, double angle, double tol = kDefaultTol);

namespace cmd {

/// Ancilla preparation in |+_{theta,phi}>; the default is |+>.
struct Prep {
    QubitId q;
    double theta = std::numbers::pi / 2;
    double phi = 0.0;
    friend bool operator==(const Prep&, const Prep&) = default;
};

/// The fixed interaction (H (x) H) CZ between an ancilla and a system qubit.
struct Interact {
    QubitId ancilla;
    QubitId system;
    friend bool operator==(const Interact&, const Interact&) = default;
};

/// Destructive measurement of q, applied as Z^t then X^s followed by the
/// projection on |+> (outcome 0) or |-> (outcome 1) of the plane.
struct Measure {
    QubitId q;
    Plane plane = Plane::XY;
    double angle = 0.0;
    Signal s;
    Signal t;
    friend bool operator==(const Measure&, const Measure&) = default;
};

enum class Axis { X, Z };

struct Correct {
    QubitId q;
    Axis axis = Axis::X;
    Signal signal;
    friend bool operator==(const Correct&, const Correct&) = default;
};

/// Adds the parity of `signal` to the recorded outcome of q.
struct Shift {
    QubitId q;
    Signal signal;
    friend bool operator==(const Shift&, const Shift&) = default;
};

enum class CliffordKind { H, P };

/// Single-qubit gate used only as a translation device.
struct LocalClifford {
    QubitId q;
    CliffordKind kind = CliffordKind::H;
    double angle = 0.0;
    friend bool operator==(const LocalClifford&, const LocalClifford&) = default;
};

}  // namespace cmd

using Command = std::variant<cmd::Prep, cmd::Interact, cmd::Measure, cmd::Correct, cmd::Shift, cmd::LocalClifford>;

/// Qubits a command acts on (not the ones it reads through signals).
std::vector<QubitId> command_qubits(const Command& c);
/// Qubits whose outcomes a command reads.
std::vector<QubitId> command_dependencies(const Command& c);
/// Short human-readable rendering in the DSL syntax.
std::string describe(const Command& c);

/// A measurement pattern. Commands are stored in execution order.
struct Pattern {
    std::string name;
    std::vector<QubitId> systems;
    std::vector<QubitId> ancillas;
    std::vector<Command> commands;

    [[nodiscard]] bool is_system(const QubitId& q) const;
    [[nodiscard]] bool is_ancilla(const QubitId& q) const;
    /// Ancillas in the order in which they are measured.
    [[nodiscard]] std::vector<QubitId> measurement_order() const;

    friend bool operator==(const Pattern&, const Pattern&) = default;
};

struct Violation {
    /// Offending command index, or -1 for a pattern-level problem.
    long index = -1;
    std::string rule;
    std::string message;
};

struct ValidateOptions {
    /// Reject translation-only single-qubit gates.
    bool strict = false;
};

std::vector<Violation> validate(const Pattern& p, const ValidateOptions& opts = {});

/// Sequential composition: p1 runs first, then p2.
Pattern compose(const Pattern& p2, const Pattern& p1);
/// Parallel composition over disjoint qubit sets.
Pattern tensor(const Pattern& p1, const Pattern& p2);
/// Renames qubits; ids missing from the map are kept.
Pattern rename(const Pattern& p, const std::map<QubitId, QubitId>& mapping);

/// Builds the single-qubit generator: N a; E a s; M a XY alpha; X s [a].
/// It realizes J(-alpha) on s.
Pattern j_pattern(double alpha, const QubitId& s = "s", const QubitId& a = "a");
/// Builds the two-qubit generator realizing (H (x) H) CZ on (s, s2):
/// N a; E a s; E a s2; M a XZ 0; X s [a].
Pattern ctrl_z_pattern(const QubitId& s = "s", const QubitId& s2 = "s2", const QubitId& a = "a");

}  // namespace adqc
