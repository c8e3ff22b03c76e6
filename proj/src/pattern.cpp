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

#include "adqc/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>

namespace adqc {

Signal::Signal(std::initializer_list<QubitId> ids) {
    for (const auto& q : ids) toggle(q);
}

Signal::Signal(const std::vector<QubitId>& ids) {
    for (const auto& q : ids) toggle(q);
}

bool Signal::contains(const QubitId& q) const { return std::binary_search(ids_.begin(), ids_.end(), q); }

void Signal::toggle(const QubitId& q) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), q);
    if (it != ids_.end() && *it == q) {
        ids_.erase(it);
    } else {
        ids_.insert(it, q);
    }
}

Signal& Signal::operator^=(const Signal& other) {
    for (const auto& q : other.ids_) toggle(q);
    return *this;
}

int Signal::evaluate(const std::map<QubitId, int>& outcomes) const {
    int parity = 0;
    for (const auto& q : ids_) {
        auto it = outcomes.find(q);
        if (it == outcomes.end()) throw Error("signal reads outcome of unmeasured qubit '" + q + "'");
        parity ^= it->second & 1;
    }
    return parity;
}

std::string format_angle(double a) {
    char buf[40];
    for (int digits = 15; digits <= 17; ++digits) {
        std::snprintf(buf, sizeof buf, "%.*g", digits, a);
        if (std::strtod(buf, nullptr) == a) break;
    }
    return buf;
}

std::string plane_name(Plane p) {
    switch (p) {
        case Plane::XY: return "XY";
        case Plane::XZ: return "XZ";
        case Plane::YZ: return "YZ";
    }
    return "?";
}

std::pair<double, double> plane_angles(Plane plane, double angle) {
    constexpr double half_pi = std::numbers::pi / 2;
    switch (plane) {
        case Plane::XY: return {half_pi, angle};
        case Plane::XZ: return {angle, 0.0};
        case Plane::YZ: return {angle, half_pi};
    }
    return {half_pi, angle};
}

namespace {

// Distance of an angle to the nearest multiple of `step`.
double off_grid(double angle, double step) {
    double r = std::fmod(std::abs(angle), step);
    return std::min(r, step - r);
}

}  // namespace

bool is_z_measurement(Plane plane, double angle, double tol) {
    if (plane == Plane::XY) return false;
    return off_grid(angle, 2 * std::numbers::pi) <= tol;
}

bool is_pauli_measurement(Plane plane, double angle, double tol) {
    if (is_z_measurement(plane, angle, tol)) return true;
    if (plane == Plane::XY) return off_grid(angle, std::numbers::pi / 2) <= tol;
    return false;
}

std::vector<QubitId> command_qubits(const Command& c) {
    return std::visit(
        [](const auto& x) -> std::vector<QubitId> {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, cmd::Interact>) {
                return {x.ancilla, x.system};
            } else {
                return {x.q};
            }
        },
        c);
}

std::vector<QubitId> command_dependencies(const Command& c) {
    return std::visit(
        [](const auto& x) -> std::vector<QubitId> {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, cmd::Measure>) {
                std::vector<QubitId> out = x.s.members();
                for (const auto& q : x.t.members()) {
                    if (!x.s.contains(q)) out.push_back(q);
                }
                return out;
            } else if constexpr (std::is_same_v<T, cmd::Correct> || std::is_same_v<T, cmd::Shift>) {
                return x.signal.members();
            } else {
                return {};
            }
        },
        c);
}

namespace {


std::string fmt_signal(const Signal& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.members().size(); ++i) {
        if (i) out += ",";
        out += s.members()[i];
    }
    return out + "]";
}

}  // namespace

std::string describe(const Command& c) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, cmd::Prep>) {
                if (x.theta == std::numbers::pi / 2 && x.phi == 0.0) return "N " + x.q;
                return "N " + x.q + " " + format_angle(x.theta) + " " + format_angle(x.phi);
            } else if constexpr (std::is_same_v<T, cmd::Interact>) {
                return "E " + x.ancilla + " " + x.system;
            } else if constexpr (std::is_same_v<T, cmd::Measure>) {
                std::string out = "M " + x.q + " " + plane_name(x.plane) + " " + format_angle(x.angle);
                if (!x.s.empty()) out += " s" + fmt_signal(x.s);
                if (!x.t.empty()) out += " t" + fmt_signal(x.t);
                return out;
            } else if constexpr (std::is_same_v<T, cmd::Correct>) {
                return std::string(x.axis == cmd::Axis::X ? "X " : "Z ") + x.q + " " + fmt_signal(x.signal);
            } else if constexpr (std::is_same_v<T, cmd::Shift>) {
                return "S " + x.q + " " + fmt_signal(x.signal);
            } else {
                if (x.kind == cmd::CliffordKind::H) return "H " + x.q;
                return "P " + x.q + " " + format_angle(x.angle);
            }
        },
        c);
}

bool Pattern::is_system(const QubitId& q) const {
    return std::find(systems.begin(), systems.end(), q) != systems.end();
}

bool Pattern::is_ancilla(const QubitId& q) const {
    return std::find(ancillas.begin(), ancillas.end(), q) != ancillas.end();
}

std::vector<QubitId> Pattern::measurement_order() const {
    std::vector<QubitId> out;
    for (const auto& c : commands) {
        if (const auto* m = std::get_if<cmd::Measure>(&c)) out.push_back(m->q);
    }
    return out;
}

std::vector<Violation> validate(const Pattern& p, const ValidateOptions& opts) {
    std::vector<Violation> out;
    auto report = [&](long idx, const char* rule, std::string msg) { out.push_back({idx, rule, std::move(msg)}); };

    std::set<QubitId> seen;
    for (const auto& q : p.systems) {
        if (!seen.insert(q).second) report(-1, "duplicate-declaration", "qubit '" + q + "' declared twice");
    }
    for (const auto& q : p.ancillas) {
        if (!seen.insert(q).second) report(-1, "duplicate-declaration", "qubit '" + q + "' declared twice");
    }

    std::set<QubitId> prepared;
    std::set<QubitId> measured;
    for (std::size_t i = 0; i < p.commands.size(); ++i) {
        const Command& c = p.commands[i];
        const long idx = static_cast<long>(i);
        bool known = true;
        for (const auto& q : command_qubits(c)) {
            if (!p.is_system(q) && !p.is_ancilla(q)) {
                report(idx, "unknown-qubit", "unknown qubit '" + q + "'");
                known = false;
            }
        }
        for (const auto& q : command_dependencies(c)) {
            if (!measured.count(q)) {
                report(idx, "acausal-dependency", "signal reads '" + q + "' before it is measured");
            }
        }
        if (!known) continue;

        if (const auto* prep = std::get_if<cmd::Prep>(&c)) {
            if (!p.is_ancilla(prep->q)) {
                report(idx, "prep-only-ancilla", "preparation of non-ancilla '" + prep->q + "'");
            } else if (prepared.count(prep->q)) {
                report(idx, "double-prep", "ancilla '" + prep->q + "' prepared twice");
            }
            prepared.insert(prep->q);
            continue;
        }
        if (const auto* sh = std::get_if<cmd::Shift>(&c)) {
            if (!measured.count(sh->q)) {
                report(idx, "shift-on-unmeasured", "shift of '" + sh->q + "' before it is measured");
            }
            continue;
        }
        for (const auto& q : command_qubits(c)) {
            if (measured.count(q)) report(idx, "act-on-measured", "command acts on measured qubit '" + q + "'");
            if (p.is_ancilla(q) && !prepared.count(q)) {
                report(idx, "ancilla-not-prepared", "ancilla '" + q + "' used before preparation");
            }
        }
        if (const auto* e = std::get_if<cmd::Interact>(&c)) {
            if (!p.is_ancilla(e->ancilla) || !p.is_system(e->system)) {
                report(idx, "interact-shape", "interaction must couple an ancilla with a system qubit");
            }
        } else if (const auto* m = std::get_if<cmd::Measure>(&c)) {
            if (!p.is_ancilla(m->q)) {
                report(idx, "only-ancillas-measured", "measurement of non-ancilla '" + m->q + "'");
            }
            measured.insert(m->q);
        } else if (std::holds_alternative<cmd::LocalClifford>(c) && opts.strict) {
            report(idx, "local-clifford", "single-qubit gate is not an ancilla-driven command");
        }
    }
    for (const auto& a : p.ancillas) {
        if (!prepared.count(a)) report(-1, "ancilla-not-prepared", "ancilla '" + a + "' is never prepared");
        if (!measured.count(a)) report(-1, "ancilla-not-measured", "ancilla '" + a + "' is never measured");
    }
    return out;
}

namespace {

bool is_empty_pattern(const Pattern& p) { return p.commands.empty() && p.ancillas.empty(); }

}  // namespace

Pattern compose(const Pattern& p2, const Pattern& p1) {
    std::set<QubitId> s1(p1.systems.begin(), p1.systems.end());
    std::set<QubitId> s2(p2.systems.begin(), p2.systems.end());
    if (s1 != s2) throw Error("compose: system qubits of the two patterns differ");
    for (const auto& a : p2.ancillas) {
        if (p1.is_ancilla(a)) throw Error("compose: ancilla '" + a + "' appears in both patterns");
    }
    if (is_empty_pattern(p1)) return p2;
    if (is_empty_pattern(p2)) return p1;
    Pattern out;
    out.name = p2.name + "_after_" + p1.name;
    out.systems = p1.systems;
    out.ancillas = p1.ancillas;
    out.ancillas.insert(out.ancillas.end(), p2.ancillas.begin(), p2.ancillas.end());
    out.commands = p1.commands;
    out.commands.insert(out.commands.end(), p2.commands.begin(), p2.commands.end());
    return out;
}

Pattern tensor(const Pattern& p1, const Pattern& p2) {
    std::set<QubitId> q1(p1.systems.begin(), p1.systems.end());
    q1.insert(p1.ancillas.begin(), p1.ancillas.end());
    for (const auto* list : {&p2.systems, &p2.ancillas}) {
        for (const auto& q : *list) {
            if (q1.count(q)) throw Error("tensor: qubit '" + q + "' appears in both patterns");
        }
    }
    if (is_empty_pattern(p2) && p2.systems.empty()) return p1;
    if (is_empty_pattern(p1) && p1.systems.empty()) return p2;
    Pattern out;
    out.name = p1.name + "_x_" + p2.name;
    out.systems = p1.systems;
    out.systems.insert(out.systems.end(), p2.systems.begin(), p2.systems.end());
    out.ancillas = p1.ancillas;
    out.ancillas.insert(out.ancillas.end(), p2.ancillas.begin(), p2.ancillas.end());
    out.commands = p1.commands;
    out.commands.insert(out.commands.end(), p2.commands.begin(), p2.commands.end());
    return out;
}

Pattern rename(const Pattern& p, const std::map<QubitId, QubitId>& mapping) {
    auto r = [&](const QubitId& q) {
        auto it = mapping.find(q);
        return it == mapping.end() ? q : it->second;
    };
    auto rs = [&](const Signal& s) {
        Signal out;
        for (const auto& q : s.members()) out.toggle(r(q));
        return out;
    };
    Pattern out;
    out.name = p.name;
    for (const auto& q : p.systems) out.systems.push_back(r(q));
    for (const auto& q : p.ancillas) out.ancillas.push_back(r(q));
    for (const auto& c : p.commands) {
        out.commands.push_back(std::visit(
            [&](auto x) -> Command {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, cmd::Interact>) {
                    x.ancilla = r(x.ancilla);
                    x.system = r(x.system);
                } else {
                    x.q = r(x.q);
                }
                if constexpr (std::is_same_v<T, cmd::Measure>) {
                    x.s = rs(x.s);
                    x.t = rs(x.t);
                } else if constexpr (std::is_same_v<T, cmd::Correct> || std::is_same_v<T, cmd::Shift>) {
                    x.signal = rs(x.signal);
                }
                return x;
            },
            c));
    }
    return out;
}

Pattern j_pattern(double alpha, const QubitId& s, const QubitId& a) {
    Pattern p;
    p.name = "J";
    p.systems = {s};
    p.ancillas = {a};
    p.commands = {cmd::Prep{a}, cmd::Interact{a, s}, cmd::Measure{a, Plane::XY, normalize_angle(alpha), {}, {}},
                  cmd::Correct{s, cmd::Axis::X, Signal{a}}};
    return p;
}

Pattern ctrl_z_pattern(const QubitId& s, const QubitId& s2, const QubitId& a) {
    Pattern p;
    p.name = "ctrlZ";
    p.systems = {s, s2};
    p.ancillas = {a};
    p.commands = {cmd::Prep{a}, cmd::Interact{a, s}, cmd::Interact{a, s2}, cmd::Measure{a, Plane::XZ, 0.0, {}, {}},
                  cmd::Correct{s, cmd::Axis::X, Signal{a}}};
    return p;
}

}  // namespace adqc
