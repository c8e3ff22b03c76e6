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

#include "adqc/translate.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <numbers>
#include <set>

#include "adqc/rewrite.hpp"

namespace adqc {

namespace {

constexpr double kPi = std::numbers::pi;

// Pattern on all circuit wires; the gadget only touches its own.
Pattern on_all_wires(Pattern p, const std::vector<QubitId>& wires) {
    p.systems = wires;
    return p;
}

}  // namespace

std::string gate_kind_name(GateKind k) {
    switch (k) {
        case GateKind::J: return "J";
        case GateKind::ETILDE: return "ETILDE";
        case GateKind::H: return "H";
        case GateKind::P: return "P";
        case GateKind::CZ: return "CZ";
    }
    return "?";
}

GateKind gate_kind_from_name(const std::string& name) {
    for (GateKind k : {GateKind::J, GateKind::ETILDE, GateKind::H, GateKind::P, GateKind::CZ}) {
        if (gate_kind_name(k) == name) return k;
    }
    throw Error("unsupported gate '" + name + "'");
}

void Circuit::check() const {
    for (std::size_t i = 0; i < gates.size(); ++i) {
        const Gate& g = gates[i];
        if (g.q0 >= qubits || (g.two_qubit() && g.q1 >= qubits)) {
            throw Error("gate " + std::to_string(i) + " acts on an undeclared qubit");
        }
        if (g.two_qubit() && g.q0 == g.q1) {
            throw Error("gate " + std::to_string(i) + " repeats its target qubit");
        }
    }
}

std::size_t Circuit::depth() const {
    std::vector<std::size_t> layer(qubits, 0);
    std::size_t depth = 0;
    for (const Gate& g : gates) {
        std::size_t l = layer.at(g.q0);
        if (g.two_qubit()) l = std::max(l, layer.at(g.q1));
        ++l;
        layer[g.q0] = l;
        if (g.two_qubit()) layer[g.q1] = l;
        depth = std::max(depth, l);
    }
    return depth;
}

QubitId wire_name(std::size_t i) { return "q" + std::to_string(i); }

Matrix circuit_unitary(const Circuit& c) {
    c.check();
    if (c.qubits > kMaxQubits) throw CapacityError("circuit has too many qubits");
    std::vector<QubitId> wires;
    for (std::size_t i = 0; i < c.qubits; ++i) wires.push_back(wire_name(i));
    const std::size_t dim = std::size_t{1} << c.qubits;
    Matrix u(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t col = 0; col < dim; ++col) {
        Vector e = Vector::Zero(static_cast<Eigen::Index>(dim));
        e(static_cast<Eigen::Index>(col)) = 1.0;
        StateVector st(wires, e);
        for (const Gate& g : c.gates) {
            const QubitId& a = wires[g.q0];
            switch (g.kind) {
                case GateKind::J: apply_gate_inplace(st, gates::j(g.angle), {a}); break;
                case GateKind::H: apply_gate_inplace(st, gates::hadamard(), {a}); break;
                case GateKind::P: apply_gate_inplace(st, gates::phase(g.angle), {a}); break;
                case GateKind::ETILDE: apply_gate_inplace(st, gates::etilde(), {a, wires[g.q1]}); break;
                case GateKind::CZ: apply_gate_inplace(st, gates::cz(), {a, wires[g.q1]}); break;
            }
        }
        u.col(static_cast<Eigen::Index>(col)) = st.amplitudes();
    }
    return u;
}

Circuit ladder_circuit(std::size_t n, const std::vector<double>& angles) {
    if (angles.size() != n) throw Error("ladder needs one angle per wire");
    Circuit c;
    c.qubits = n;
    for (std::size_t i = 0; i < n; ++i) c.gates.push_back({GateKind::P, i, 0, angles[i]});
    for (std::size_t i = 0; i + 1 < n; ++i) c.gates.push_back({GateKind::ETILDE, i, i + 1, 0.0});
    return c;
}

Pattern circuit_to_adqc(const Circuit& c) {
    c.check();
    std::vector<QubitId> wires;
    for (std::size_t i = 0; i < c.qubits; ++i) wires.push_back(wire_name(i));
    Pattern acc;
    acc.name = "circuit";
    acc.systems = wires;
    std::size_t counter = 0;
    auto fresh = [&] { return "a" + std::to_string(++counter); };
    auto add = [&](const Pattern& gadget) {
        acc = compose(on_all_wires(gadget, wires), acc);
    };
    // The generator pattern measured at beta realizes J(-beta).
    auto add_j = [&](std::size_t q, double angle) { add(j_pattern(normalize_angle(-angle), wires[q], fresh())); };
    auto add_etilde = [&](std::size_t a, std::size_t s) { add(ctrl_z_pattern(wires[s], wires[a], fresh())); };
    for (const Gate& g : c.gates) {
        switch (g.kind) {
            case GateKind::J: add_j(g.q0, g.angle); break;
            case GateKind::H: add_j(g.q0, 0.0); break;
            case GateKind::P:
                add_j(g.q0, g.angle);
                add_j(g.q0, 0.0);
                break;
            case GateKind::ETILDE: add_etilde(g.q0, g.q1); break;
            case GateKind::CZ:
                add_etilde(g.q0, g.q1);
                add_j(g.q0, 0.0);
                add_j(g.q1, 0.0);
                break;
        }
    }
    Pattern out = standardize(acc).pattern;
    out.name = "circuit";
    return out;
}

std::string describe(const MbqcCommand& c) {
    auto sig = [](char tag, const Signal& s) {
        if (s.empty()) return std::string();
        std::string out = std::string(" ") + tag + "[";
        for (std::size_t i = 0; i < s.members().size(); ++i) out += (i ? " " : "") + s.members()[i];
        return out + "]";
    };
    switch (c.op) {
        case MbqcOp::N: return "N " + c.q;
        case MbqcOp::E: return "E " + c.q + " " + c.q2;
        case MbqcOp::M:
            return "M " + c.q + " " + plane_name(c.meas.plane) + " " + format_angle(c.meas.angle) + sig('s', c.s) +
                   sig('t', c.t);
        case MbqcOp::X: return "X " + c.q + (c.s.empty() ? "" : " " + sig('s', c.s).substr(2));
        case MbqcOp::Z: return "Z " + c.q + (c.s.empty() ? "" : " " + sig('s', c.s).substr(2));
    }
    return "?";
}

namespace {

std::map<QubitId, std::vector<QubitId>> adjacency(const MbqcPattern& m) {
    std::map<QubitId, std::vector<QubitId>> adj;
    for (const auto& v : m.vertices) adj[v];
    for (const auto& [u, v] : m.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return adj;
}

bool contains(const std::vector<QubitId>& xs, const QubitId& x) {
    return std::find(xs.begin(), xs.end(), x) != xs.end();
}

}  // namespace

std::vector<std::string> check_open_graph(const MbqcPattern& m) {
    std::vector<std::string> out;
    std::set<QubitId> seen;
    for (const auto& v : m.vertices) {
        if (!seen.insert(v).second) out.push_back("duplicate vertex " + v);
    }
    for (const auto& v : m.inputs) {
        if (!seen.count(v)) out.push_back("input " + v + " is not a vertex");
    }
    for (const auto& v : m.outputs) {
        if (!seen.count(v)) out.push_back("output " + v + " is not a vertex");
    }
    std::set<std::pair<QubitId, QubitId>> edges;
    for (const auto& [u, v] : m.edges) {
        if (!seen.count(u) || !seen.count(v)) out.push_back("edge " + u + "-" + v + " has an unknown endpoint");
        if (u == v) out.push_back("self loop at " + u);
        if (!edges.insert(std::minmax(u, v)).second) out.push_back("repeated edge " + u + "-" + v);
    }
    for (const auto& v : m.vertices) {
        const bool measured = m.measurements.count(v) > 0;
        if (contains(m.outputs, v) && measured) out.push_back("output " + v + " is measured");
        if (!contains(m.outputs, v) && !measured) out.push_back("vertex " + v + " has no measurement");
    }
    return out;
}

std::optional<MbqcFlow> find_mbqc_flow(const MbqcPattern& m) {
    const auto adj = adjacency(m);
    std::set<QubitId> processed(m.outputs.begin(), m.outputs.end());
    std::set<QubitId> correctors;
    for (const auto& o : m.outputs) {
        if (!contains(m.inputs, o)) correctors.insert(o);
    }
    MbqcFlow flow;
    while (true) {
        std::set<QubitId> fresh;
        std::set<QubitId> used;
        for (const auto& c : correctors) {
            std::vector<QubitId> open;
            for (const auto& w : adj.at(c)) {
                if (!processed.count(w)) open.push_back(w);
            }
            if (open.size() == 1 && !fresh.count(open[0])) {
                flow.successor[open[0]] = c;
                fresh.insert(open[0]);
                used.insert(c);
            }
        }
        if (fresh.empty()) break;
        std::vector<QubitId> layer;
        for (const auto& v : m.vertices) {
            if (fresh.count(v)) layer.push_back(v);
        }
        flow.layers.push_back(layer);
        for (const auto& c : used) correctors.erase(c);
        for (const auto& v : fresh) {
            processed.insert(v);
            if (!contains(m.inputs, v)) correctors.insert(v);
        }
    }
    if (processed.size() != m.vertices.size()) return std::nullopt;
    for (auto it = flow.layers.rbegin(); it != flow.layers.rend(); ++it) {
        flow.order.insert(flow.order.end(), it->begin(), it->end());
    }
    return flow;
}

namespace {

// Follows successors from each input; the result is aligned with m.inputs.
std::vector<QubitId> chain_ends(const MbqcPattern& m, const MbqcFlow& flow) {
    std::vector<QubitId> ends;
    for (const auto& i : m.inputs) {
        QubitId v = i;
        while (flow.successor.count(v)) v = flow.successor.at(v);
        ends.push_back(v);
    }
    return ends;
}

MbqcFlow require_flow(const MbqcPattern& m) {
    auto problems = check_open_graph(m);
    if (!problems.empty()) throw Error("invalid open graph: " + problems.front());
    if (m.inputs.size() != m.outputs.size()) throw Error("open graph needs as many inputs as outputs");
    auto flow = find_mbqc_flow(m);
    if (!flow) throw Error("open graph has no causal flow");
    return *flow;
}

}  // namespace

MbqcPattern flow_pattern(MbqcPattern m) {
    const MbqcFlow flow = require_flow(m);
    const auto adj = adjacency(m);
    m.outputs = chain_ends(m, flow);
    m.output_map.clear();
    for (std::size_t i = 0; i < m.inputs.size(); ++i) m.output_map[m.inputs[i]] = m.outputs[i];
    m.commands.clear();
    for (const auto& v : m.vertices) {
        if (!contains(m.inputs, v)) m.commands.push_back({MbqcOp::N, v, {}, {}, {}, {}});
    }
    for (const auto& [u, v] : m.edges) m.commands.push_back({MbqcOp::E, u, v, {}, {}, {}});
    for (const auto& v : flow.order) {
        const MbqcMeasurement& meas = m.measurements.at(v);
        if (meas.plane != Plane::XY) throw Error("flow patterns need XY measurements");
        m.commands.push_back({MbqcOp::M, v, {}, meas, {}, {}});
        const QubitId& f = flow.successor.at(v);
        m.commands.push_back({MbqcOp::X, f, {}, {}, Signal{v}, {}});
        for (const auto& w : adj.at(f)) {
            if (w != v) m.commands.push_back({MbqcOp::Z, w, {}, {}, Signal{v}, {}});
        }
    }
    m.flow = flow;
    return m;
}

Pattern mbqc_to_adqc(const MbqcPattern& m) {
    const MbqcFlow flow = require_flow(m);
    const auto adj = adjacency(m);
    Circuit c;
    c.qubits = m.inputs.size();
    std::map<QubitId, std::size_t> wire;  // alive vertex -> wire
    for (std::size_t i = 0; i < m.inputs.size(); ++i) wire[m.inputs[i]] = i;
    std::set<std::pair<QubitId, QubitId>> done;
    auto key = [](const QubitId& u, const QubitId& v) { return std::minmax(u, v); };
    auto entangle_alive = [&](const QubitId& v, const QubitId& skip) {
        for (const auto& w : adj.at(v)) {
            if (w == skip || done.count(key(v, w)) || !wire.count(w)) continue;
            c.gates.push_back({GateKind::CZ, wire.at(v), wire.at(w), 0.0});
            done.insert(key(v, w));
        }
    };
    for (const auto& v : flow.order) {
        const MbqcMeasurement& meas = m.measurements.at(v);
        if (meas.plane != Plane::XY) throw Error("flow translation needs XY measurements");
        const QubitId& f = flow.successor.at(v);
        entangle_alive(v, f);
        const std::size_t w = wire.at(v);
        c.gates.push_back({GateKind::J, w, 0, -meas.angle});
        done.insert(key(v, f));
        wire.erase(v);
        wire[f] = w;
    }
    for (const auto& o : m.outputs) entangle_alive(o, {});
    if (done.size() != m.edges.size()) throw Error("edge between vertices that are never alive together");

    Pattern p = circuit_to_adqc(c);
    std::map<QubitId, QubitId> names;
    std::set<QubitId> taken(m.inputs.begin(), m.inputs.end());
    for (std::size_t i = 0; i < m.inputs.size(); ++i) names[wire_name(i)] = m.inputs[i];
    for (const auto& a : p.ancillas) {
        QubitId n = a;
        while (taken.count(n)) n += "'";
        taken.insert(n);
        names[a] = n;
    }
    p = rename(p, names);
    p.name = m.name.empty() ? "translated" : m.name;
    return p;
}

TwistedGraph mbqc_twisted_graph(const MbqcPattern& m) {
    const MbqcFlow flow = require_flow(m);
    const auto adj = adjacency(m);
    TwistedGraph g;
    g.systems = m.inputs;
    std::map<QubitId, std::size_t> chain;
    std::map<QubitId, int> rank;
    std::map<QubitId, std::set<int>> used;
    for (std::size_t i = 0; i < m.inputs.size(); ++i) {
        QubitId v = m.inputs[i];
        int r = 0;
        while (true) {
            chain[v] = i;
            rank[v] = r;
            if (!flow.successor.count(v)) break;
            ++r;
            // The degree-one ancilla standing for the flow step out of v.
            const QubitId name = "f_" + v;
            g.ancillas.push_back(name);
            g.edges.push_back({name, m.inputs[i], r});
            g.measurements[name] = MeasurementPlan::xy(m.measurements.at(v).angle);
            used[m.inputs[i]].insert(r);
            v = flow.successor.at(v);
        }
    }
    std::set<std::pair<QubitId, QubitId>> seen;
    for (const auto& [u, v] : m.edges) {
        if ((flow.successor.count(u) && flow.successor.at(u) == v) ||
            (flow.successor.count(v) && flow.successor.at(v) == u)) {
            continue;
        }
        const QubitId& su = m.inputs[chain.at(u)];
        const QubitId& sv = m.inputs[chain.at(v)];
        if (su == sv) throw Error("rank collision: non-flow edge " + u + "-" + v + " inside one chain");
        int lu = rank.at(u) + 1;
        int lv = rank.at(v) + 1;
        while (used[su].count(lu)) ++lu;
        if (lv == lu) ++lv;
        while (used[sv].count(lv) || lv == lu) ++lv;
        used[su].insert(lu);
        used[sv].insert(lv);
        QubitId name = "e_" + u + "_" + v;
        g.ancillas.push_back(name);
        g.edges.push_back({name, su, lu});
        g.edges.push_back({name, sv, lv});
        g.measurements[name] = MeasurementPlan::z();
    }
    auto problems = check_graph(g);
    if (!problems.empty()) throw Error("rank collision: " + problems.front());
    return g;
}

namespace {

// Basis of a measurement taken before a Hadamard: Bloch (x, y, z) -> (z, -y, x).
MbqcMeasurement through_hadamard(const MbqcMeasurement& m) {
    switch (m.plane) {
        case Plane::XY: return {Plane::YZ, normalize_angle(-m.angle)};
        case Plane::YZ: return {Plane::XY, normalize_angle(-m.angle)};
        case Plane::XZ: {
            const double a = normalize_angle(kPi / 2 - m.angle);
            if (std::abs(a - kPi / 2) <= kDefaultTol) return {Plane::XY, 0.0};
            return {Plane::XZ, a};
        }
    }
    return m;
}

class OneWayBuilder {
public:
    explicit OneWayBuilder(const Pattern& p) : p_(p) {
        for (const auto& q : p.systems) taken_.insert(q);
        for (const auto& q : p.ancillas) taken_.insert(q);
        out_.name = p.name.empty() ? "one-way" : p.name + "_oneway";
        for (const auto& s : p.systems) {
            phi_[s] = s;
            out_.vertices.push_back(s);
            out_.inputs.push_back(s);
        }
    }

    MbqcPattern build() {
        std::map<QubitId, int> degree;
        for (const auto& c : p_.commands) {
            if (const auto* e = std::get_if<cmd::Interact>(&c)) {
                if (++degree[e->ancilla] > 2) throw Error("degree violation: ancilla " + e->ancilla + " has more than two edges");
            }
        }
        for (const auto& c : p_.commands) std::visit([this](const auto& x) { step(x); }, c);
        for (const auto& s : p_.systems) materialize(s);
        for (const auto& s : p_.systems) {
            out_.outputs.push_back(phi_.at(s));
            out_.output_map[s] = phi_.at(s);
        }
        bool all_xy = true;
        for (const auto& [v, meas] : out_.measurements) all_xy = all_xy && meas.plane == Plane::XY;
        if (all_xy && out_.inputs.size() == out_.outputs.size()) out_.flow = find_mbqc_flow(out_);
        return out_;
    }

private:
    QubitId fresh_vertex() {
        QubitId v;
        do {
            v = "h" + std::to_string(++counter_);
        } while (taken_.count(v));
        taken_.insert(v);
        return v;
    }

    Signal translate(const Signal& s) const {
        Signal out;
        for (const auto& q : s.members()) {
            auto it = measured_.find(q);
            if (it == measured_.end()) throw Error("signal reads " + q + " before its measurement");
            out.toggle(it->second);
        }
        return out;
    }

    void emit_edge(const QubitId& u, const QubitId& v) {
        out_.edges.emplace_back(u, v);
        out_.commands.push_back({MbqcOp::E, u, v, {}, {}, {}});
    }

    // Realizes a pending Hadamard by teleporting the label onto a new vertex.
    void materialize(const QubitId& label) {
        if (!pending_.count(label)) return;
        pending_.erase(label);
        const QubitId v = phi_.at(label);
        const QubitId b = fresh_vertex();
        out_.vertices.push_back(b);
        out_.commands.push_back({MbqcOp::N, b, {}, {}, {}, {}});
        emit_edge(v, b);
        out_.measurements[v] = {Plane::XY, 0.0};
        out_.commands.push_back({MbqcOp::M, v, {}, {Plane::XY, 0.0}, {}, {}});
        out_.commands.push_back({MbqcOp::X, b, {}, {}, Signal{v}, {}});
        phi_[label] = b;
    }

    void step(const cmd::Prep& c) {
        if (std::abs(c.theta - kPi / 2) > kDefaultTol || std::abs(c.phi) > kDefaultTol) {
            throw Error("only |+> preparations translate to one-way patterns");
        }
        phi_[c.q] = c.q;
        fresh_.insert(c.q);
        out_.vertices.push_back(c.q);
        out_.commands.push_back({MbqcOp::N, c.q, {}, {}, {}, {}});
    }

    void step(const cmd::Interact& c) {
        materialize(c.system);
        if (fresh_.erase(c.ancilla)) {
            // A fresh |+> ancilla: the interaction is a CZ followed by a swap of roles.
            emit_edge(phi_.at(c.ancilla), phi_.at(c.system));
            std::swap(phi_.at(c.ancilla), phi_.at(c.system));
            return;
        }
        materialize(c.ancilla);
        emit_edge(phi_.at(c.ancilla), phi_.at(c.system));
        pending_.insert(c.ancilla);
        pending_.insert(c.system);
    }

    void step(const cmd::Measure& c) {
        fresh_.erase(c.q);
        MbqcMeasurement meas{c.plane, c.angle};
        Signal s = translate(c.s);
        Signal t = translate(c.t);
        if (pending_.erase(c.q)) {
            meas = through_hadamard(meas);
            std::swap(s, t);
        }
        const QubitId v = phi_.at(c.q);
        out_.measurements[v] = meas;
        out_.commands.push_back({MbqcOp::M, v, {}, meas, s, t});
        measured_[c.q] = v;
    }

    void step(const cmd::Correct& c) {
        cmd::Axis axis = c.axis;
        if (pending_.count(c.q)) axis = axis == cmd::Axis::X ? cmd::Axis::Z : cmd::Axis::X;
        out_.commands.push_back(
            {axis == cmd::Axis::X ? MbqcOp::X : MbqcOp::Z, phi_.at(c.q), {}, {}, translate(c.signal), {}});
    }

    void step(const cmd::Shift&) { throw Error("shifts must be removed before translation"); }

    void step(const cmd::LocalClifford& c) {
        if (c.kind != cmd::CliffordKind::H) throw Error("only Hadamard local gates translate to one-way patterns");
        fresh_.erase(c.q);
        if (!pending_.erase(c.q)) pending_.insert(c.q);
    }

    const Pattern& p_;
    MbqcPattern out_;
    std::map<QubitId, QubitId> phi_;
    std::map<QubitId, QubitId> measured_;
    std::set<QubitId> pending_;
    std::set<QubitId> fresh_;
    std::set<QubitId> taken_;
    int counter_ = 0;
};

}  // namespace

MbqcPattern adqc_to_mbqc(const Pattern& p) {
    auto problems = validate(p);
    if (!problems.empty()) throw Error("invalid pattern: " + problems.front().message);
    return OneWayBuilder(shift_signals(p)).build();
}

DepthMetrics depth_metrics(const Pattern& p) {
    const Pattern sp = is_standard(p) ? p : standardize(p).pattern;
    TwistedGraph g = extract_graph(sp);
    assign_default_plan(g);
    DepthMetrics out;
    out.preparation = g.max_label();
    if (g.ancillas.empty()) return out;
    const FlowResult flow = find_causal_flow(g);
    if (!flow.exists) throw Error("no causal flow: " + flow.diagnostic);
    std::map<QubitId, std::vector<QubitId>> succ;
    for (const auto& [a, b] : flow.constraints) succ[a].push_back(b);
    bool any_pauli = false;
    std::map<QubitId, int> longest;  // non-Pauli nodes on the longest chain starting here
    for (auto it = flow.order.rbegin(); it != flow.order.rend(); ++it) {
        const QubitId& a = *it;
        const bool pauli = g.measurements.at(a).is_pauli();
        any_pauli = any_pauli || pauli;
        int best = 0;
        for (const auto& b : succ[a]) best = std::max(best, longest.at(b));
        longest[a] = best + (pauli ? 0 : 1);
        out.flow = std::max(out.flow, longest[a]);
    }
    if (any_pauli) out.flow += 1;
    return out;
}

}  // namespace adqc
