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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>

#include "adqc/interaction.hpp"
#include "adqc/pattern.hpp"
#include "adqc/rewrite.hpp"
#include "adqc/sim.hpp"
#include "adqc/tgs.hpp"
#include "adqc/translate.hpp"
#include "../support/oracles.hpp"

using namespace adqc;
using adqc::testing::random_angle;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTol = 1e-9;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double phase_aligned_error(const Matrix& a, const Matrix& b) { return adqc::testing::phase_aligned_distance(a, b); }

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

Outcome generator_pattern() {
    double worst = 0.0;
    bool det = true;
    for (int k = 0; k < 16; ++k) {
        const double alpha = 2 * kPi * k / 16;
        auto r = is_strongly_deterministic(j_pattern(alpha));
        det = det && r.deterministic && r.unitary;
        if (r.unitary) worst = std::max(worst, phase_aligned_error(*r.unitary, gates::j(-alpha)));
    }
    return {det && worst <= kTol, "16 angles, max error " + num(worst)};
}

Outcome two_qubit_generator() {
    auto r = is_strongly_deterministic(ctrl_z_pattern("s", "s2", "a"));
    if (!r.deterministic || !r.unitary) return {false, "not deterministic"};
    const double err = phase_aligned_error(*r.unitary, gates::etilde());
    return {err <= kTol, "error " + num(err)};
}

Outcome standardisation_soundness() {
    std::mt19937_64 rng(3);
    double worst = 0.0;
    std::size_t steps = 0;
    for (int i = 0; i < 500; ++i) {
        Pattern p = adqc::testing::random_wild_pattern(rng, {2, 3, "a", {}});
        StandardizeResult res;
        try {
            res = standardize(p);
        } catch (const RewriteBudgetError& e) {
            return {false, "budget exceeded on case " + std::to_string(i)};
        }
        if (!is_standard(res.pattern)) return {false, "case " + std::to_string(i) + " not standard"};
        steps = std::max(steps, res.trace.size());
        worst = std::max(worst, choi_distance(kraus_map(p), kraus_map(res.pattern)));
    }
    return {worst <= kTol, "500 patterns, max Choi distance " + num(worst) + ", longest trace " + std::to_string(steps)};
}

Outcome composition_semantics() {
    std::mt19937_64 rng(4);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        Pattern p1 = adqc::testing::random_wild_pattern(rng, {2, 2, "a", {}});
        Pattern p2 = adqc::testing::random_wild_pattern(rng, {2, 2, "b", p1.systems});
        const double dc = choi_distance(kraus_map(compose(p2, p1)), compose_maps(kraus_map(p2), kraus_map(p1)));
        Pattern p3 = adqc::testing::random_wild_pattern(rng, {1, 2, "c", {"t1"}});
        const double dt = choi_distance(kraus_map(tensor(p1, p3)), tensor_maps(kraus_map(p1), kraus_map(p3)));
        worst = std::max({worst, dc, dt});
    }
    return {worst <= kTol, "200 compositions and tensors, max Choi distance " + num(worst)};
}

Outcome stabilizer_suite() {
    TwistedGraph one{{"s"}, {"a"}, {{"a", "s", 1}}, {}};
    PauliString want1;
    want1.set("a", Pauli::Z);
    want1.set("s", Pauli::X);
    TwistedGraph two{{"s", "t"}, {"a"}, {{"a", "s", 1}, {"a", "t", 2}}, {}};
    PauliString want2;
    want2.set("a", Pauli::X);
    want2.set("s", Pauli::X);
    const bool exact = stabilizer(one, "a") == want1 && stabilizer(two, "a") == want2;
    std::mt19937_64 rng(5);
    std::size_t checked = 0;
    for (int i = 0; i < 200; ++i) {
        TwistedGraph g = adqc::testing::random_twisted_graph(rng, 3, 5);
        for (const auto& a : g.ancillas) {
            if (!verify_stabilizer(g, a, rng())) return {false, "stabilizer of " + a + " fails on graph " + std::to_string(i)};
            ++checked;
        }
    }
    return {exact, std::string(exact ? "single and double edge forms exact" : "closed forms differ") + ", " +
                       std::to_string(checked) + " ancillas verified"};
}

Outcome synthesis_determinism() {
    std::mt19937_64 rng(6);
    double worst = 1.0;
    for (int i = 0; i < 100; ++i) {
        TwistedGraph g = adqc::testing::random_flow_graph(rng, 3, 5);
        for (int k = 0; k < 8; ++k) {
            std::map<QubitId, double> angles;
            for (const auto& a : g.ancillas) {
                if (g.degree(a) == 1) angles[a] = random_angle(rng);
            }
            auto r = is_strongly_deterministic(synthesize_deterministic(g, angles));
            if (!r.deterministic) return {false, "graph " + std::to_string(i) + " angle set " + std::to_string(k)};
            worst = std::min(worst, r.min_overlap);
        }
    }
    return {true, "800 synthesized patterns, min branch overlap " + num(worst)};
}

Outcome classification() {
    const double q = kPi / 4;
    auto c1 = classify({q, q, 0});
    auto c3 = classify({q, 0, 0});
    auto c4 = classify({kPi / 8, 0, 0});
    auto cn = classify({kPi / 8, kPi / 8, kPi / 8});
    const double plane = plane_confinement_witness({kPi / 8, 0, 0}, 200, 8, 7);
    const auto t = check_unitarity({kPi / 8, kPi / 8, kPi / 8}, {kPi / 3, 0.4, kPi / 3, 0.4});
    const bool ok = c1.kind == InteractionCase::FixedHeisenberg && c1.universal &&
                    c3.kind == InteractionCase::FixedIsing && c3.universal &&
                    c4.kind == InteractionCase::GeneralIsing && !c4.universal && plane <= kTol &&
                    cn.kind == InteractionCase::NotUnitaryCapable && std::abs(t.t) > kTol && !t.ok;
    return {ok, "plane residual " + num(plane) + ", t " + num(t.t) + ", obstruction " + num(cn.unitarity_obstruction)};
}

Outcome kraus_closed_forms() {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double worst = 0.0;
    auto frame_invariant = [](const Matrix& m) { return m(0, 0) * m(1, 1) * std::conj(m(0, 1) * m(1, 0)); };
    auto heis_err = [&](const Matrix& k, Complex a, Complex b, double p, double pk) {
        const Matrix c = heisenberg_matrix(a, b);
        double e = (k.cwiseAbs() - c.cwiseAbs()).cwiseAbs().maxCoeff();
        e = std::max(e, std::abs(frame_invariant(k) - frame_invariant(c)));
        return std::max(e, std::abs(p - pk));
    };
    for (int i = 0; i < 1000; ++i) {
        // Two nonzero coordinates, preparation and measurement in the XY plane.
        const double ax = u(rng) * kPi / 2, ay = u(rng) * kPi / 2;
        const double delta = random_angle(rng), phi = random_angle(rng);
        const Matrix d = adqc::testing::d_from_exponentials({ax, ay, 0});
        const Vector prep = ket_plus(kPi / 2, delta);
        auto h = heisenberg_coefficients(ax, ay, delta, phi);
        const Matrix kp = adqc::testing::kraus_by_kron(d, prep, ket_plus(kPi / 2, phi));
        const Matrix km = adqc::testing::kraus_by_kron(d, prep, ket_minus(kPi / 2, phi));
        worst = std::max(worst, heis_err(kp, h.a_plus, h.b_plus, h.p_plus, kp.squaredNorm() / 2));
        worst = std::max(worst, heis_err(km, h.a_minus, h.b_minus, h.p_minus, km.squaredNorm() / 2));

        // alpha_y = pi/4 with a real preparation.
        const Matrix df = adqc::testing::d_from_exponentials({ax, kPi / 4, 0});
        auto hf = heisenberg_fixed_coefficients(ax, phi);
        const Vector p0 = ket_plus(kPi / 2, 0.0);
        const Matrix fp = adqc::testing::kraus_by_kron(df, p0, ket_plus(kPi / 2, phi));
        const Matrix fm = adqc::testing::kraus_by_kron(df, p0, ket_minus(kPi / 2, phi));
        worst = std::max(worst, heis_err(fp, hf.a_plus, hf.b_plus, hf.p_plus, fp.squaredNorm() / 2));
        worst = std::max(worst, heis_err(fm, hf.a_minus, hf.b_minus, hf.p_minus, fm.squaredNorm() / 2));

        // One nonzero coordinate with a measurement basis meeting the unitarity condition.
        AncillaParams ap{u(rng) * kPi, random_angle(rng), 0.0, 0.0};
        if (i % 2 == 0) {
            ap.theta = ap.gamma;
            ap.phi = ap.delta;
        } else {
            ap.theta = u(rng) * kPi;
            const double s = std::cos(ap.theta) * std::sin(ap.gamma) * std::sin(ap.delta) /
                             (std::sin(ap.theta) * std::cos(ap.gamma));
            if (std::abs(s) > 1.0) {
                ap.theta = ap.gamma;
                ap.phi = ap.delta;
            } else {
                ap.phi = std::asin(s);
            }
        }
        const Matrix di = adqc::testing::d_from_exponentials({ax, 0, 0});
        const Vector pi = ket_plus(ap.gamma, ap.delta);
        const Matrix ip = adqc::testing::kraus_by_kron(di, pi, ket_plus(ap.theta, ap.phi));
        const Matrix im = adqc::testing::kraus_by_kron(di, pi, ket_minus(ap.theta, ap.phi));
        auto ic = ising_coefficients(ax, ap);
        auto best = [&](const Matrix& k, double a, double b) {
            return std::min(phase_aligned_error(k, ising_matrix(a, b, 0)), phase_aligned_error(k, ising_matrix(a, b, 1)));
        };
        worst = std::max(worst, best(ip, ic.a_plus, ic.b_plus));
        worst = std::max(worst, best(im, ic.a_minus, ic.b_minus));
        worst = std::max(worst, std::abs(ic.p_plus - ip.squaredNorm() / 2));
        worst = std::max(worst, std::abs(ic.p_minus - im.squaredNorm() / 2));
    }
    return {worst <= kTol, "1000 draws per family, max deviation " + num(worst)};
}

Outcome depth_separation() {
    std::mt19937_64 rng(9);
    std::string detail;
    bool ok = true;
    for (std::size_t n : {4u, 8u}) {
        std::vector<double> angles;
        for (std::size_t i = 0; i < n; ++i) angles.push_back(0.1 + random_angle(rng) * 0.4);
        Circuit c = ladder_circuit(n, angles);
        DepthMetrics d = depth_metrics(circuit_to_adqc(c));
        ok = ok && c.depth() == n && d.preparation == 4 && d.flow == 2;
        detail += "n=" + std::to_string(n) + ": circuit " + std::to_string(c.depth()) + ", preparation " +
                  std::to_string(d.preparation) + ", flow " + std::to_string(d.flow) + "; ";
    }
    detail.resize(detail.size() - 2);
    return {ok, detail};
}

Outcome mbqc_round_trip() {
    std::mt19937_64 rng(10);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        MbqcPattern m = adqc::testing::random_flow_mbqc(rng, 4, 12);
        worst = std::max(worst, choi_distance(adqc::testing::oneway_map(m), kraus_map(mbqc_to_adqc(m))));
    }
    return {worst <= kTol, "50 open graphs, max Choi distance " + num(worst)};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double budget;
        std::function<Outcome()> run;
    };
    const Criterion all[] = {
        {1, "generator pattern realizes J(-alpha)", 1, generator_pattern},
        {2, "two-qubit generator realizes the interaction", 1, two_qubit_generator},
        {3, "standardization preserves semantics", 60, standardisation_soundness},
        {4, "composition and tensor semantics", 60, composition_semantics},
        {5, "twisted graph stabilizers", 60, stabilizer_suite},
        {6, "synthesized patterns are deterministic", 60, synthesis_determinism},
        {7, "interaction classification", 30, classification},
        {8, "Kraus closed forms", 10, kraus_closed_forms},
        {9, "ladder depth separation", 5, depth_separation},
        {10, "one-way round trip", 60, mbqc_round_trip},
    };
    int failures = 0;
    for (const auto& c : all) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool pass = o.pass && secs <= c.budget;
        if (!pass) ++failures;
        std::printf("criterion %2d %s: %s (%s; %.2fs of %.0fs)\n", c.id, pass ? "PASS" : "FAIL", c.name,
                    o.detail.c_str(), secs, c.budget);
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
