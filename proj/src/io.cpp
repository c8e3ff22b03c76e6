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

#include "adqc/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace adqc::io {

namespace {

void round_all(Json& j) {
    if (j.is_number_float()) {
        j = round12(j.get<double>());
    } else if (j.is_array() || j.is_object()) {
        for (auto& x : j) round_all(x);
    }
}

template <typename T>
T require(const Json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key)) throw Error(std::string(what) + " is missing '" + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception&) {
        throw Error(std::string(what) + " has a malformed '" + key + "'");
    }
}

Plane plane_from_name(const std::string& s) {
    for (Plane p : {Plane::XY, Plane::XZ, Plane::YZ}) {
        if (plane_name(p) == s) return p;
    }
    throw Error("unknown measurement plane '" + s + "'");
}

Json measurement_json(Plane plane, double angle) { return {{"plane", plane_name(plane)}, {"angle", angle}}; }

}  // namespace

double round12(double x) {
    if (!std::isfinite(x)) return x;
    // Rounding residue below the printed precision of unit-scale values.
    if (std::abs(x) < 1e-12) return 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;
}

std::string dump(const Json& j) {
    Json copy = j;
    round_all(copy);
    return copy.dump(2) + "\n";
}

Json to_json(const Complex& c) { return Json::array({c.real(), c.imag()}); }

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

Json to_json(const PauliString& p) { return p.to_string(); }

Json to_json(const TwistedGraph& g) {
    Json edges = Json::array();
    for (const auto& e : g.edges) edges.push_back({{"ancilla", e.ancilla}, {"system", e.system}, {"label", e.label}});
    Json meas = Json::object();
    for (const auto& [a, m] : g.measurements) meas[a] = measurement_json(m.plane, m.angle);
    return {{"systems", g.systems}, {"ancillas", g.ancillas}, {"edges", edges}, {"measurements", meas}};
}

TwistedGraph graph_from_json(const Json& j, double scale) {
    TwistedGraph g;
    g.systems = require<std::vector<std::string>>(j, "systems", "graph");
    g.ancillas = require<std::vector<std::string>>(j, "ancillas", "graph");
    for (const auto& e : require<Json>(j, "edges", "graph")) {
        g.edges.push_back({require<std::string>(e, "ancilla", "edge"), require<std::string>(e, "system", "edge"),
                           require<int>(e, "label", "edge")});
    }
    if (j.contains("measurements")) {
        for (auto it = j.at("measurements").begin(); it != j.at("measurements").end(); ++it) {
            g.measurements[it.key()] = {plane_from_name(require<std::string>(it.value(), "plane", "measurement")),
                                        require<double>(it.value(), "angle", "measurement") * scale};
        }
    }
    auto problems = check_graph(g);
    if (!problems.empty()) throw Error("invalid graph: " + problems.front());
    return g;
}

Json to_json(const Circuit& c) {
    Json gates = Json::array();
    for (const Gate& g : c.gates) {
        Json x = {{"kind", gate_kind_name(g.kind)}};
        if (g.two_qubit()) {
            x["a"] = g.q0;
            x["s"] = g.q1;
        } else {
            x["q"] = g.q0;
        }
        if (g.kind == GateKind::J || g.kind == GateKind::P) x["angle"] = g.angle;
        gates.push_back(x);
    }
    return {{"qubits", c.qubits}, {"gates", gates}};
}

Circuit circuit_from_json(const Json& j, double scale) {
    Circuit c;
    c.qubits = require<std::size_t>(j, "qubits", "circuit");
    for (const auto& x : require<Json>(j, "gates", "circuit")) {
        Gate g;
        g.kind = gate_kind_from_name(require<std::string>(x, "kind", "gate"));
        if (g.two_qubit()) {
            g.q0 = require<std::size_t>(x, "a", "gate");
            g.q1 = require<std::size_t>(x, "s", "gate");
        } else {
            g.q0 = require<std::size_t>(x, "q", "gate");
        }
        if (g.kind == GateKind::J || g.kind == GateKind::P) g.angle = require<double>(x, "angle", "gate") * scale;
        c.gates.push_back(g);
    }
    c.check();
    return c;
}

Json to_json(const MbqcPattern& m) {
    Json edges = Json::array();
    for (const auto& [u, v] : m.edges) edges.push_back({u, v});
    Json meas = Json::object();
    for (const auto& [v, x] : m.measurements) meas[v] = measurement_json(x.plane, x.angle);
    Json cmds = Json::array();
    for (const auto& c : m.commands) cmds.push_back(describe(c));
    Json out = {{"name", m.name},       {"vertices", m.vertices},     {"inputs", m.inputs},
                {"outputs", m.outputs}, {"edges", edges},             {"measurements", meas},
                {"commands", cmds},     {"output_map", m.output_map}, {"flow", nullptr}};
    if (m.flow) out["flow"] = {{"successor", m.flow->successor}, {"layers", m.flow->layers}, {"order", m.flow->order}};
    return out;
}

MbqcPattern mbqc_from_json(const Json& j, double scale) {
    MbqcPattern m;
    m.name = j.value("name", std::string("mbqc"));
    m.vertices = require<std::vector<std::string>>(j, "vertices", "one-way pattern");
    m.inputs = require<std::vector<std::string>>(j, "inputs", "one-way pattern");
    m.outputs = require<std::vector<std::string>>(j, "outputs", "one-way pattern");
    for (const auto& e : require<Json>(j, "edges", "one-way pattern")) {
        if (!e.is_array() || e.size() != 2) throw Error("edges must be vertex pairs");
        m.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    const Json meas = require<Json>(j, "measurements", "one-way pattern");
    for (auto it = meas.begin(); it != meas.end(); ++it) {
        m.measurements[it.key()] = {plane_from_name(require<std::string>(it.value(), "plane", "measurement")),
                                    require<double>(it.value(), "angle", "measurement") * scale};
    }
    if (j.contains("output_map") && j.at("output_map").is_object()) {
        m.output_map = j.at("output_map").get<std::map<std::string, std::string>>();
    }
    auto problems = check_open_graph(m);
    if (!problems.empty()) throw Error("invalid open graph: " + problems.front());
    return m;
}

Json to_json(const FlowResult& f) {
    Json stabs = Json::object();
    for (const auto& [a, p] : f.stabilizers) stabs[a] = to_json(p);
    Json corr = Json::object();
    for (const auto& [a, p] : f.corrections) corr[a] = to_json(p);
    Json cons = Json::array();
    for (const auto& [a, b] : f.constraints) cons.push_back({a, b});
    Json out = {{"exists", f.exists},     {"layers", f.layers},      {"order", f.order},
                {"stabilizers", stabs},   {"corrections", corr},     {"constraints", cons}};
    if (!f.diagnostic.empty()) out["diagnostic"] = f.diagnostic;
    return out;
}

Json to_json(const Classification& c) {
    return {{"case", case_name(c.kind)},
            {"universal", c.universal},
            {"canonical", c.canonical},
            {"corrections", c.corrections},
            {"boundary_distance", c.boundary_distance},
            {"snap_error", c.snap_error},
            {"unitarity_obstruction", c.unitarity_obstruction},
            {"probe_t", c.probe_t},
            {"probe_r", c.probe_r}};
}

Json to_json(const DeterminismResult& d) {
    Json out = {{"deterministic", d.deterministic}, {"min_overlap", d.min_overlap}, {"unitary", nullptr}};
    if (d.unitary) out["unitary"] = to_json(*d.unitary);
    return out;
}

Json to_json(const CptpMap& m, const std::vector<QubitId>& ancillas) {
    Json branches = Json::array();
    for (const auto& b : m.branches) {
        Json outcomes = Json::object();
        for (std::size_t i = 0; i < b.bits.size() && i < ancillas.size(); ++i) outcomes[ancillas[i]] = b.bits[i];
        branches.push_back({{"outcomes", outcomes}, {"weight", b.weight}, {"kraus", to_json(b.op)}});
    }
    return {{"qubits", m.num_qubits}, {"branches", branches}, {"completeness_error", m.completeness_error()}};
}

Json to_json(const DepthMetrics& d) { return {{"preparation", d.preparation}, {"flow", d.flow}}; }

JsonKind detect_kind(const Json& j) {
    if (!j.is_object()) return JsonKind::Unknown;
    if (j.contains("gates")) return JsonKind::Circuit;
    if (j.contains("vertices")) return JsonKind::Mbqc;
    if (j.contains("ancillas") && j.contains("edges")) return JsonKind::Graph;
    return JsonKind::Unknown;
}

}  // namespace adqc::io
