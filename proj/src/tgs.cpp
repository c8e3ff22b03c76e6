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

#include "adqc/tgs.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

#include "adqc/rewrite.hpp"

namespace adqc {

std::vector<const TgsEdge*> TwistedGraph::edges_of(const QubitId& q) const {
    std::vector<const TgsEdge*> out;
    for (const auto& e : edges) {
        if (e.ancilla == q || e.system == q) out.push_back(&e);
    }
    std::stable_sort(out.begin(), out.end(), [](const TgsEdge* x, const TgsEdge* y) { return x->label < y->label; });
    return out;
}

int TwistedGraph::max_label() const {
    int m = 0;
    for (const auto& e : edges) m = std::max(m, e.label);
    return m;
}

std::vector<TgsEdge> TwistedGraph::edges_by_label() const {
    std::vector<TgsEdge> out = edges;
    std::stable_sort(out.begin(), out.end(), [](const TgsEdge& x, const TgsEdge& y) { return x.label < y.label; });
    return out;
}

std::vector<std::string> check_graph(const TwistedGraph& g) {
    std::vector<std::string> out;
    std::set<QubitId> sys(g.systems.begin(), g.systems.end());
    std::set<QubitId> anc(g.ancillas.begin(), g.ancillas.end());
    for (const auto& a : g.ancillas) {
        if (sys.count(a)) out.push_back("qubit '" + a + "' is both system and ancilla");
    }
    std::set<std::pair<QubitId, QubitId>> pairs;
    for (const auto& e : g.edges) {
        if (!anc.count(e.ancilla)) out.push_back("edge endpoint '" + e.ancilla + "' is not an ancilla");
        if (!sys.count(e.system)) out.push_back("edge endpoint '" + e.system + "' is not a system");
        if (e.label < 1) out.push_back("edge labels start at 1");
        if (!pairs.insert({e.ancilla, e.system}).second) {
            out.push_back("repeated edge (" + e.ancilla + "," + e.system + ")");
        }
    }
    for (const auto& a : g.ancillas) {
        const auto d = g.degree(a);
        if (d == 0) out.push_back("ancilla '" + a + "' has no edge");
        if (d > 2) out.push_back("ancilla '" + a + "' has degree " + std::to_string(d) + " > 2");
    }
    for (const auto* list : {&g.systems, &g.ancillas}) {
        for (const auto& q : *list) {
            auto es = g.edges_of(q);
            for (std::size_t i = 1; i < es.size(); ++i) {
                if (es[i]->label == es[i - 1]->label) {
                    out.push_back("edges at '" + q + "' share label " + std::to_string(es[i]->label));
                }
            }
        }
    }
    return out;
}

namespace {

void require_well_formed(const TwistedGraph& g) {
    auto problems = check_graph(g);
    if (!problems.empty()) throw Error("malformed twisted graph: " + problems.front());
}

const TgsEdge* other_edge(const TwistedGraph& g, const QubitId& b, const TgsEdge* via) {
    for (const auto* e : g.edges_of(b)) {
        if (e != via) return e;
    }
    return nullptr;
}

struct WalkPoint {
    QubitId system;
    int from_label;
};

// Letters produced by a walk along `system` from `from_label`; appends the
// points where the walk continues on another system.
PauliString walk(const TwistedGraph& g, const WalkPoint& start, std::vector<WalkPoint>* next) {
    PauliString out;
    int position = 0;
    for (const auto* e : g.edges_of(start.system)) {
        if (e->label < start.from_label) continue;
        ++position;
        if (position % 2 == 1) continue;
        const QubitId& b = e->ancilla;
        const TgsEdge* other = other_edge(g, b, e);
        if (!other || other->label < e->label) {
            out.set(b, Pauli::X);
        } else {
            out.set(b, Pauli::Z);
            if (next) next->push_back({other->system, other->label});
        }
    }
    out.set(start.system, position % 2 == 1 ? Pauli::X : Pauli::Z);
    return out;
}

const TgsEdge* first_edge(const TwistedGraph& g, const QubitId& a) {
    auto es = g.edges_of(a);
    if (es.empty()) throw Error("ancilla '" + a + "' has no edge");
    return es.front();
}

// Conjugation of a single letter on u by the interaction on (u, v).
PauliString conjugate_letter(Pauli p, const QubitId& u, const QubitId& v) {
    PauliString out;
    switch (p) {
        case Pauli::I: break;
        case Pauli::X:
            out.set(u, Pauli::Z);
            out.set(v, Pauli::X);
            break;
        case Pauli::Z: out.set(u, Pauli::X); break;
        case Pauli::Y:
            out.set(u, Pauli::Y);
            out.set(v, Pauli::X);
            out.phase = -1.0;
            break;
    }
    return out;
}

}  // namespace

TwistedGraph extract_graph(const Pattern& p) {
    if (!is_standard(p)) throw Error("extract_graph: pattern is not in standard form");
    TwistedGraph g;
    g.systems = p.systems;
    g.ancillas = p.ancillas;
    std::map<QubitId, int> last;
    for (const auto& c : p.commands) {
        if (const auto* e = std::get_if<cmd::Interact>(&c)) {
            int label = std::max(last[e->ancilla], last[e->system]) + 1;
            last[e->ancilla] = last[e->system] = label;
            g.edges.push_back({e->ancilla, e->system, label});
        } else if (const auto* m = std::get_if<cmd::Measure>(&c)) {
            g.measurements[m->q] = MeasurementPlan{m->plane, m->angle};
        }
    }
    for (const auto& a : g.ancillas) {
        if (g.degree(a) > 2) throw Error("extract_graph: ancilla '" + a + "' has degree > 2");
    }
    return g;
}

void assign_default_plan(TwistedGraph& g) {
    for (const auto& a : g.ancillas) {
        if (g.measurements.count(a)) continue;
        g.measurements[a] = g.degree(a) == 2 ? MeasurementPlan::z() : MeasurementPlan::xy(0.0);
    }
}

PauliString local_stabilizer(const TwistedGraph& g, const QubitId& a) {
    require_well_formed(g);
    const TgsEdge* e = first_edge(g, a);
    return walk(g, {e->system, e->label}, nullptr);
}

PauliString propagated_stabilizer(const TwistedGraph& g, const QubitId& a) {
    require_well_formed(g);
    const int start = first_edge(g, a)->label;
    PauliString p;
    p.set(a, Pauli::X);
    for (const auto& e : g.edges_by_label()) {
        if (e.label < start) continue;
        const Pauli la = p.at(e.ancilla);
        const Pauli ls = p.at(e.system);
        if (la == Pauli::I && ls == Pauli::I) continue;
        PauliString rest = p;
        rest.set(e.ancilla, Pauli::I);
        rest.set(e.system, Pauli::I);
        p = rest * conjugate_letter(la, e.ancilla, e.system) * conjugate_letter(ls, e.system, e.ancilla);
    }
    return p;
}

PauliString stabilizer(const TwistedGraph& g, const QubitId& a) {
    require_well_formed(g);
    PauliString p;
    p.set(a, g.degree(a) == 1 ? Pauli::Z : Pauli::X);
    const TgsEdge* e = first_edge(g, a);
    std::deque<WalkPoint> pending{{e->system, e->label}};
    std::size_t steps = 0;
    while (!pending.empty()) {
        if (++steps > g.ancillas.size() + 1) throw Error("stabilizer recursion did not terminate; labelling is malformed");
        std::vector<WalkPoint> next;
        PauliString part = walk(g, pending.front(), &next);
        pending.pop_front();
        p = p * part;
        pending.insert(pending.end(), next.begin(), next.end());
    }
    // The walk fixes the letters; the sign comes from exact propagation.
    PauliString exact = propagated_stabilizer(g, a);
    if (exact.ops != p.ops) {
        throw Error("stabilizer walk disagrees with propagation for '" + a + "': " + p.to_string() + " vs " +
                    exact.to_string());
    }
    p.phase = exact.phase;
    return p;
}

StateVector graph_state(const TwistedGraph& g, const StateVector& system_input) {
    require_well_formed(g);
    StateVector st = system_input.reordered(g.systems);
    for (const auto& a : g.ancillas) st.append(a, ket_plus(std::numbers::pi / 2, 0.0));
    for (const auto& e : g.edges_by_label()) apply_gate_inplace(st, gates::etilde(), {e.ancilla, e.system});
    return st;
}

bool verify_stabilizer(const TwistedGraph& g, const PauliString& p, std::uint64_t seed, double tol) {
    if (g.systems.size() + g.ancillas.size() > kMaxVerifyQubits) {
        throw CapacityError("stabilizer verification supports at most " + std::to_string(kMaxVerifyQubits) + " qubits");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> n(0.0, 1.0);
    Vector in(Eigen::Index{1} << g.systems.size());
    for (Eigen::Index i = 0; i < in.size(); ++i) in(i) = Complex(n(rng), n(rng));
    in.normalize();
    StateVector st = graph_state(g, StateVector(g.systems, in));
    StateVector img = st;
    for (const auto& [q, letter] : p.ops) apply_gate_inplace(img, gates::pauli(letter), {q});
    img.amplitudes() *= p.phase;
    return (img.amplitudes() - st.amplitudes()).cwiseAbs().maxCoeff() <= tol;
}

bool verify_stabilizer(const TwistedGraph& g, const QubitId& a, std::uint64_t seed, double tol) {
    return verify_stabilizer(g, stabilizer(g, a), seed, tol);
}

FlowResult find_causal_flow(const TwistedGraph& g) {
    FlowResult out;
    auto problems = check_graph(g);
    if (!problems.empty()) {
        out.diagnostic = problems.front();
        return out;
    }
    for (const auto& a : g.ancillas) {
        auto it = g.measurements.find(a);
        if (it == g.measurements.end()) {
            out.diagnostic = "ancilla '" + a + "' has no measurement";
            return out;
        }
        const bool deg2 = g.degree(a) == 2;
        if (deg2 && !it->second.is_z()) {
            out.diagnostic = "degree-2 ancilla '" + a + "' must be measured in Z";
            return out;
        }
        if (!deg2 && it->second.plane != Plane::XY) {
            out.diagnostic = "degree-1 ancilla '" + a + "' must be measured in the XY plane";
            return out;
        }
    }
    std::map<QubitId, std::vector<QubitId>> succ;
    std::map<QubitId, int> indeg;
    for (const auto& a : g.ancillas) indeg[a] = 0;
    for (const auto& a : g.ancillas) {
        PauliString p = stabilizer(g, a);
        out.stabilizers[a] = p;
        PauliString c = p;
        c.multiply_on(a, g.degree(a) == 1 ? Pauli::Z : Pauli::X);
        if (c.at(a) != Pauli::I) {
            out.diagnostic = "stabilizer of '" + a + "' does not flip its own measurement";
            out.stabilizers.clear();
            out.corrections.clear();
            out.constraints.clear();
            return out;
        }
        for (const auto& [q, letter] : p.ops) {
            if (q == a || !indeg.count(q)) continue;
            const bool z_measured = g.measurements.at(q).is_z();
            if (z_measured) {
                // A Z on a Z-measured ancilla only changes a phase.
                if (letter == Pauli::Z) {
                    c.set(q, Pauli::I);
                    continue;
                }
                if (letter == Pauli::Y) c.set(q, Pauli::X);
            }
            succ[a].push_back(q);
            ++indeg[q];
            out.constraints.emplace_back(a, q);
        }
        c.phase = 1.0;
        out.corrections[a] = c;
    }
    // Longest-path ranks by Kahn's algorithm over declaration order.
    std::map<QubitId, int> rank;
    std::deque<QubitId> ready;
    for (const auto& a : g.ancillas) {
        if (indeg[a] == 0) {
            ready.push_back(a);
            rank[a] = 1;
        }
    }
    std::size_t seen = 0;
    while (!ready.empty()) {
        QubitId a = ready.front();
        ready.pop_front();
        ++seen;
        for (const auto& b : succ[a]) {
            rank[b] = std::max(rank[b], rank[a] + 1);
            if (--indeg[b] == 0) ready.push_back(b);
        }
    }
    if (seen != g.ancillas.size()) {
        out.diagnostic = "correction dependencies form a cycle";
        out.layers.clear();
        return out;
    }
    out.exists = true;
    int depth = 0;
    for (const auto& [a, r] : rank) depth = std::max(depth, r);
    out.layers.assign(static_cast<std::size_t>(depth), {});
    for (const auto& a : g.ancillas) out.layers[static_cast<std::size_t>(rank[a] - 1)].push_back(a);
    for (const auto& layer : out.layers) out.order.insert(out.order.end(), layer.begin(), layer.end());
    return out;
}

Pattern synthesize_deterministic(const TwistedGraph& g, const std::map<QubitId, double>& angles) {
    FlowResult flow = find_causal_flow(g);
    if (!flow.exists) throw Error("synthesize: graph has no causal flow (" + flow.diagnostic + ")");
    Pattern p;
    p.name = "synthesized";
    p.systems = g.systems;
    p.ancillas = g.ancillas;
    for (const auto& a : g.ancillas) p.commands.push_back(cmd::Prep{a});
    for (const auto& e : g.edges_by_label()) p.commands.push_back(cmd::Interact{e.ancilla, e.system});
    for (const auto& a : flow.order) {
        MeasurementPlan plan = g.measurements.at(a);
        if (auto it = angles.find(a); it != angles.end() && plan.plane == Plane::XY) plan.angle = it->second;
        p.commands.push_back(cmd::Measure{a, plan.plane, normalize_angle(plan.angle), {}, {}});
        for (const auto& [q, letter] : flow.corrections.at(a).ops) {
            if (letter == Pauli::X || letter == Pauli::Y) p.commands.push_back(cmd::Correct{q, cmd::Axis::X, Signal{a}});
            if (letter == Pauli::Z || letter == Pauli::Y) p.commands.push_back(cmd::Correct{q, cmd::Axis::Z, Signal{a}});
        }
    }
    return p;
}

}  // namespace adqc
