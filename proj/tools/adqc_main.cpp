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

// Command-line frontend. Exit codes: 0 success, 1 domain failure, 2 usage or parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>

#include "adqc/dsl.hpp"
#include "adqc/interaction.hpp"
#include "adqc/io.hpp"
#include "adqc/rewrite.hpp"
#include "adqc/sim.hpp"
#include "adqc/tgs.hpp"
#include "adqc/translate.hpp"

namespace {

using adqc::io::Json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::uint64_t seed = 1;
    double tol = adqc::kDefaultTol;
    std::string format = "text";
    int shots = 1;
    bool pi_units = false;
    [[nodiscard]] double scale() const { return pi_units ? std::numbers::pi : 1.0; }
    [[nodiscard]] bool json() const { return format == "json"; }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool is_json_path(const std::string& path) { return path.size() >= 5 && path.substr(path.size() - 5) == ".json"; }

Json read_json(const std::string& path) {
    try {
        return Json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw UsageError(path + ": " + e.what());
    }
}

adqc::Pattern read_pattern(const std::string& path, const Config& cfg) {
    if (is_json_path(path)) throw UsageError(path + ": expected a pattern file");
    try {
        return adqc::parse_pattern(read_file(path), {cfg.scale()});
    } catch (const adqc::ParseError& e) {
        throw UsageError(path + ":" + e.what());
    }
}

void require_valid(const adqc::Pattern& p) {
    auto v = adqc::validate(p);
    if (!v.empty()) throw adqc::Error("invalid pattern: " + v.front().rule + ": " + v.front().message);
}

// Twisted graph from a pattern (standardized first) or from a graph file.
adqc::TwistedGraph read_graph(const std::string& path, const Config& cfg) {
    if (is_json_path(path)) {
        Json j = read_json(path);
        if (adqc::io::detect_kind(j) != adqc::io::JsonKind::Graph) throw UsageError(path + ": not a graph file");
        return adqc::io::graph_from_json(j, cfg.scale());
    }
    adqc::Pattern p = read_pattern(path, cfg);
    require_valid(p);
    if (!adqc::is_standard(p)) p = adqc::standardize(p).pattern;
    return adqc::extract_graph(p);
}

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", adqc::io::round12(x));
    return buf;
}

std::string fmt(const adqc::Complex& c) {
    const double im = adqc::io::round12(c.imag());
    return fmt(c.real()) + (im < 0 ? "-" : "+") + fmt(std::abs(im)) + "i";
}

std::string matrix_text(const adqc::Matrix& m) {
    std::string out;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        out += "  [";
        for (Eigen::Index c = 0; c < m.cols(); ++c) out += (c ? ", " : "") + fmt(m(r, c));
        out += "]\n";
    }
    return out;
}

void emit(const Config& cfg, const Json& j, const std::string& text) {
    if (cfg.json()) {
        std::cout << adqc::io::dump(j);
    } else {
        std::cout << text;
    }
}

int cmd_validate(const Config& cfg, const std::string& path) {
    adqc::Pattern p = read_pattern(path, cfg);
    auto v = adqc::validate(p);
    Json list = Json::array();
    std::string text;
    for (const auto& x : v) {
        list.push_back({{"index", x.index}, {"rule", x.rule}, {"message", x.message}});
        text += std::to_string(x.index) + " " + x.rule + ": " + x.message + "\n";
    }
    emit(cfg, {{"valid", v.empty()}, {"violations", list}}, v.empty() ? "valid\n" : text);
    return v.empty() ? 0 : 1;
}

int cmd_standardize(const Config& cfg, const std::string& path) {
    adqc::Pattern p = read_pattern(path, cfg);
    auto res = adqc::standardize(p);
    Json trace = Json::array();
    for (const auto& s : res.trace) trace.push_back({{"rule", s.rule}, {"index", s.index}});
    const std::string text = adqc::print_pattern(res.pattern);
    emit(cfg, {{"pattern", text}, {"trace", trace}, {"steps", res.trace.size()}}, text);
    return 0;
}

adqc::StateVector plus_input(const adqc::Pattern& p) {
    std::vector<adqc::Vector> kets(p.systems.size(), adqc::ket_plus(std::numbers::pi / 2, 0.0));
    return adqc::StateVector::product(p.systems, kets);
}

int cmd_simulate(const Config& cfg, const std::string& path, const std::string& input) {
    adqc::Pattern p = read_pattern(path, cfg);
    require_valid(p);
    adqc::StateVector in = input == "zero" ? adqc::StateVector::zeros(p.systems) : plus_input(p);
    std::mt19937_64 seeds(cfg.seed);
    Json shots = Json::array();
    std::string text;
    for (int i = 0; i < cfg.shots; ++i) {
        auto r = adqc::run(p, in, adqc::OutcomeSource::sampled(seeds()));
        adqc::Vector amp = r.state.amplitudes() / r.state.norm();
        Json state = Json::array();
        for (Eigen::Index k = 0; k < amp.size(); ++k) state.push_back(adqc::io::to_json(amp(k)));
        shots.push_back({{"outcomes", r.outcomes}, {"state", state}});
        text += "shot " + std::to_string(i + 1) + ":";
        for (const auto& [a, b] : r.outcomes) text += " " + a + "=" + std::to_string(b);
        text += "\n  state:";
        for (Eigen::Index k = 0; k < amp.size(); ++k) text += " " + fmt(amp(k));
        text += "\n";
    }
    emit(cfg, {{"systems", p.systems}, {"input", input}, {"shots", shots}}, text);
    return 0;
}

int cmd_branches(const Config& cfg, const std::string& path) {
    adqc::Pattern p = read_pattern(path, cfg);
    require_valid(p);
    const auto order = p.measurement_order();
    adqc::CptpMap m = adqc::kraus_map(p);
    std::string text;
    for (const auto& b : m.branches) {
        text += "branch";
        for (std::size_t i = 0; i < b.bits.size(); ++i) text += " " + order[i] + "=" + std::to_string(b.bits[i]);
        text += " weight " + fmt(b.weight) + "\n" + matrix_text(b.op);
    }
    emit(cfg, adqc::io::to_json(m, order), text);
    return 0;
}

int cmd_determinism(const Config& cfg, const std::string& path) {
    adqc::Pattern p = read_pattern(path, cfg);
    require_valid(p);
    auto d = adqc::is_strongly_deterministic(p, cfg.tol);
    std::string text = d.deterministic ? "deterministic\n" : "not deterministic\n";
    text += "min overlap " + fmt(d.min_overlap) + "\n";
    if (d.unitary) text += "unitary:\n" + matrix_text(*d.unitary);
    emit(cfg, adqc::io::to_json(d), text);
    return d.deterministic ? 0 : 1;
}

int cmd_graph(const Config& cfg, const std::string& path) {
    adqc::TwistedGraph g = read_graph(path, cfg);
    std::string text = "systems:";
    for (const auto& s : g.systems) text += " " + s;
    text += "\nancillas:";
    for (const auto& a : g.ancillas) text += " " + a;
    text += "\n";
    for (const auto& e : g.edges_by_label()) text += "edge " + e.ancilla + " " + e.system + " label " + std::to_string(e.label) + "\n";
    for (const auto& [a, m] : g.measurements) text += "measure " + a + " " + adqc::plane_name(m.plane) + " " + fmt(m.angle) + "\n";
    emit(cfg, adqc::io::to_json(g), text);
    return 0;
}

int cmd_flow(const Config& cfg, const std::string& path) {
    adqc::TwistedGraph g = read_graph(path, cfg);
    adqc::assign_default_plan(g);
    auto f = adqc::find_causal_flow(g);
    std::string text;
    if (!f.exists) {
        text = "no flow: " + f.diagnostic + "\n";
    } else {
        for (std::size_t i = 0; i < f.layers.size(); ++i) {
            text += "layer " + std::to_string(i + 1) + ":";
            for (const auto& a : f.layers[i]) text += " " + a;
            text += "\n";
        }
        for (const auto& [a, s] : f.stabilizers) text += "stabilizer " + a + ": " + s.to_string() + "\n";
        for (const auto& [a, c] : f.corrections) text += "correction " + a + ": " + c.to_string() + "\n";
    }
    emit(cfg, adqc::io::to_json(f), text);
    return f.exists ? 0 : 1;
}

std::map<std::string, double> parse_angles(const std::string& spec, double scale) {
    std::map<std::string, double> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("angles must look like a1=0.5,a2=0.25");
        try {
            out[item.substr(0, eq)] = std::stod(item.substr(eq + 1)) * scale;
        } catch (const std::exception&) {
            throw UsageError("bad angle in '" + item + "'");
        }
    }
    return out;
}

int cmd_synthesize(const Config& cfg, const std::string& path, const std::string& angles) {
    adqc::TwistedGraph g = read_graph(path, cfg);
    adqc::assign_default_plan(g);
    std::map<std::string, double> a;
    for (const auto& [q, m] : g.measurements) {
        if (m.plane == adqc::Plane::XY) a[q] = m.angle;
    }
    for (const auto& [q, v] : parse_angles(angles, cfg.scale())) a[q] = v;
    if (!adqc::find_causal_flow(g).exists) throw adqc::Error("graph has no causal flow");
    const std::string text = adqc::print_pattern(adqc::synthesize_deterministic(g, a));
    emit(cfg, {{"pattern", text}}, text);
    return 0;
}

int cmd_classify(const Config& cfg, const std::string& alphas) {
    std::vector<double> v;
    std::stringstream ss(alphas);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            v.push_back(std::stod(item) * cfg.scale());
        } catch (const std::exception&) {
            throw UsageError("bad coordinate '" + item + "'");
        }
    }
    if (v.size() != 3) throw UsageError("--alphas needs three comma separated values");
    auto c = adqc::classify({v[0], v[1], v[2]}, cfg.tol);
    std::string text = adqc::case_name(c.kind) + (c.universal ? " universal\n" : " not universal\n");
    text += "canonical " + fmt(c.canonical[0]) + " " + fmt(c.canonical[1]) + " " + fmt(c.canonical[2]) + "\n";
    if (!c.corrections.empty()) {
        text += "corrections:";
        for (const auto& x : c.corrections) text += " " + x;
        text += "\n";
    }
    text += "unitarity obstruction " + fmt(c.unitarity_obstruction) + "\n";
    emit(cfg, adqc::io::to_json(c), text);
    return 0;
}

int emit_pattern(const Config& cfg, const adqc::Pattern& p) {
    const std::string text = adqc::print_pattern(p);
    emit(cfg, {{"pattern", text}}, text);
    return 0;
}

int cmd_translate(const Config& cfg, const std::string& path, bool literal) {
    if (!is_json_path(path)) {
        adqc::Pattern p = read_pattern(path, cfg);
        adqc::MbqcPattern m = adqc::adqc_to_mbqc(p);
        std::string text;
        for (const auto& c : m.commands) text += adqc::describe(c) + "\n";
        emit(cfg, adqc::io::to_json(m), text);
        return 0;
    }
    Json j = read_json(path);
    switch (adqc::io::detect_kind(j)) {
        case adqc::io::JsonKind::Circuit:
            return emit_pattern(cfg, adqc::circuit_to_adqc(adqc::io::circuit_from_json(j, cfg.scale())));
        case adqc::io::JsonKind::Mbqc: {
            adqc::MbqcPattern m = adqc::io::mbqc_from_json(j, cfg.scale());
            if (!literal) return emit_pattern(cfg, adqc::mbqc_to_adqc(m));
            adqc::TwistedGraph g = adqc::mbqc_twisted_graph(m);
            emit(cfg, adqc::io::to_json(g), adqc::io::dump(adqc::io::to_json(g)));
            return 0;
        }
        default: throw UsageError(path + ": expected a circuit or one-way pattern file");
    }
}

int cmd_depth(const Config& cfg, const std::string& path) {
    adqc::DepthMetrics d;
    Json j;
    std::string text;
    if (is_json_path(path)) {
        Json in = read_json(path);
        if (adqc::io::detect_kind(in) != adqc::io::JsonKind::Circuit) throw UsageError(path + ": expected a circuit file");
        adqc::Circuit c = adqc::io::circuit_from_json(in, cfg.scale());
        d = adqc::depth_metrics(adqc::circuit_to_adqc(c));
        j = adqc::io::to_json(d);
        j["circuit"] = c.depth();
        text = "circuit " + std::to_string(c.depth()) + "\n";
    } else {
        adqc::Pattern p = read_pattern(path, cfg);
        require_valid(p);
        d = adqc::depth_metrics(p);
        j = adqc::io::to_json(d);
    }
    text += "preparation " + std::to_string(d.preparation) + "\nflow " + std::to_string(d.flow) + "\n";
    emit(cfg, j, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ancilla-driven pattern toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    app.add_option("--seed", cfg.seed, "Random seed");
    app.add_option("--tol", cfg.tol, "Numerical tolerance")->check(CLI::PositiveNumber);
    app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--shots", cfg.shots, "Number of sampled runs")->check(CLI::Range(1, 1 << 20));
    app.add_flag("--pi-units", cfg.pi_units, "Read all angles in units of pi");

    std::string file;
    std::string input = "plus";
    std::string angles;
    std::string alphas;
    bool literal = false;
    std::function<int()> action;
    auto with_file = [&](const char* name, const char* help, auto fn) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("file", file, "Input file")->required();
        sub->callback([&, fn] { action = [&, fn] { return fn(); }; });
        return sub;
    };
    with_file("validate", "Check pattern well-formedness", [&] { return cmd_validate(cfg, file); });
    with_file("standardize", "Rewrite a pattern into standard form", [&] { return cmd_standardize(cfg, file); });
    auto* sim = with_file("simulate", "Sample runs of a pattern", [&] { return cmd_simulate(cfg, file, input); });
    sim->add_option("--input", input, "System input state")->check(CLI::IsMember({"plus", "zero"}));
    with_file("branches", "Kraus operator of every outcome branch", [&] { return cmd_branches(cfg, file); });
    with_file("determinism", "Check strong determinism", [&] { return cmd_determinism(cfg, file); });
    with_file("graph", "Twisted graph of a pattern", [&] { return cmd_graph(cfg, file); });
    with_file("flow", "Causal flow of a twisted graph", [&] { return cmd_flow(cfg, file); });
    auto* syn = with_file("synthesize", "Deterministic pattern from a twisted graph",
                          [&] { return cmd_synthesize(cfg, file, angles); });
    syn->add_option("--angles", angles, "Measurement angles, e.g. a1=0.5,a2=0.25");
    auto* cls = app.add_subcommand("classify", "Classify an interaction by its canonical coordinates");
    cls->add_option("--alphas", alphas, "alpha_x,alpha_y,alpha_z")->required();
    cls->callback([&] { action = [&] { return cmd_classify(cfg, alphas); }; });
    auto* tr = with_file("translate", "Translate between circuits, ancilla-driven and one-way patterns",
                         [&] { return cmd_translate(cfg, file, literal); });
    tr->add_flag("--literal", literal, "Emit the twisted graph built directly from a one-way pattern");
    with_file("depth", "Preparation and flow depth", [&] { return cmd_depth(cfg, file); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    try {
        return action();
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const adqc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
