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

#include <gtest/gtest.h>

#include <algorithm>
#include <numbers>
#include <random>

#include "adqc/dsl.hpp"
#include "adqc/pattern.hpp"
#include "../support/oracles.hpp"

using namespace adqc;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<std::string> rules(const Pattern& p, ValidateOptions opts = {}) {
    std::vector<std::string> out;
    for (const auto& v : validate(p, opts)) out.push_back(v.rule);
    return out;
}

bool has(const std::vector<std::string>& xs, const std::string& x) {
    return std::find(xs.begin(), xs.end(), x) != xs.end();
}

Pattern base() {
    Pattern p;
    p.name = "t";
    p.systems = {"s"};
    p.ancillas = {"a"};
    return p;
}

}  // namespace

TEST(Signal, ToggleSemantics) {
    Signal s{"b", "a"};
    EXPECT_EQ(s.members(), (std::vector<QubitId>{"a", "b"}));
    s ^= Signal{"a", "c"};
    EXPECT_EQ(s.members(), (std::vector<QubitId>{"b", "c"}));
    EXPECT_EQ(s.evaluate({{"b", 1}, {"c", 1}}), 0);
    EXPECT_THROW((void)s.evaluate({{"b", 1}}), Error);
}

TEST(Planes, PauliAndZClassification) {
    EXPECT_TRUE(is_z_measurement(Plane::XZ, 0.0));
    EXPECT_TRUE(is_z_measurement(Plane::YZ, 0.0));
    EXPECT_FALSE(is_z_measurement(Plane::XY, 0.0));
    EXPECT_TRUE(is_pauli_measurement(Plane::XY, kPi / 2));
    EXPECT_FALSE(is_pauli_measurement(Plane::XY, 0.3));
    auto [t, p] = plane_angles(Plane::YZ, 0.4);
    EXPECT_DOUBLE_EQ(t, 0.4);
    EXPECT_DOUBLE_EQ(p, kPi / 2);
}

TEST(Validate, GeneratorPatternsAreValid) {
    EXPECT_TRUE(validate(j_pattern(0.3)).empty());
    EXPECT_TRUE(validate(ctrl_z_pattern()).empty());
}

TEST(Validate, ReportsEachRule) {
    Pattern p = base();
    p.ancillas.push_back("s");
    EXPECT_TRUE(has(rules(p), "duplicate-declaration"));

    p = base();
    p.commands = {cmd::Prep{"a"}, cmd::Interact{"a", "x"}, cmd::Measure{"a"}};
    EXPECT_TRUE(has(rules(p), "unknown-qubit"));

    p = base();
    p.commands = {cmd::Prep{"a"}, cmd::Correct{"s", cmd::Axis::X, Signal{"a"}}, cmd::Measure{"a"}};
    EXPECT_TRUE(has(rules(p), "acausal-dependency"));

    p = base();
    p.commands = {cmd::Prep{"s"}, cmd::Prep{"a"}, cmd::Measure{"a"}};
    EXPECT_TRUE(has(rules(p), "prep-only-ancilla"));

    p = base();
    p.commands = {cmd::Prep{"a"}, cmd::Prep{"a"}, cmd::Measure{"a"}};
    EXPECT_TRUE(has(rules(p), "double-prep"));

    p = base();
    p.commands = {cmd::Prep{"a"}, cmd::Shift{"a", {}}, cmd::Measure{"a"}};
    EXPECT_TRUE(has(rules(p), "shift-on-unmeasured"));

    p = base();
    p.commands = {cmd::Prep{"a"}, cmd::Measure{"a"}, cmd::Interact{"a", "s"}};
    EXPECT_TRUE(has(rules(p), "act-on-measured"));

    p = base();
    p.commands = {cmd::Interact{"a", "s"}, cmd::Measure{"a"}};
    EXPECT_TRUE(has(rules(p), "ancilla-not-prepared"));

    p = base();
    p.commands = {cmd::Prep{"a"}, cmd::Interact{"s", "a"}, cmd::Measure{"a"}};
    EXPECT_TRUE(has(rules(p), "interact-shape"));

    p = base();
    p.commands = {cmd::Prep{"a"}, cmd::Measure{"s"}, cmd::Measure{"a"}};
    EXPECT_TRUE(has(rules(p), "only-ancillas-measured"));

    p = base();
    p.commands = {cmd::Prep{"a"}};
    EXPECT_TRUE(has(rules(p), "ancilla-not-measured"));

    p = j_pattern(0.1);
    p.commands.emplace_back(cmd::LocalClifford{"s", cmd::CliffordKind::H, 0.0});
    EXPECT_TRUE(rules(p).empty());
    EXPECT_TRUE(has(rules(p, {true}), "local-clifford"));
}

TEST(Compose, RunsFirstPatternFirst) {
    Pattern p1 = j_pattern(0.1, "s", "a");
    Pattern p2 = j_pattern(0.2, "s", "b");
    Pattern c = compose(p2, p1);
    EXPECT_EQ(c.ancillas, (std::vector<QubitId>{"a", "b"}));
    EXPECT_EQ(c.commands.front(), p1.commands.front());
    EXPECT_EQ(c.commands.size(), 8u);
    EXPECT_EQ(c.measurement_order(), (std::vector<QubitId>{"a", "b"}));
    EXPECT_THROW(compose(p1, p1), Error);
    EXPECT_THROW(compose(j_pattern(0.1, "t", "b"), p1), Error);
}

TEST(Tensor, RequiresDisjointQubits) {
    Pattern t = tensor(j_pattern(0.1, "s", "a"), j_pattern(0.2, "t", "b"));
    EXPECT_EQ(t.systems, (std::vector<QubitId>{"s", "t"}));
    EXPECT_THROW(tensor(j_pattern(0.1), j_pattern(0.2)), Error);
}

TEST(Rename, MapsQubitsAndSignals) {
    Pattern r = rename(j_pattern(0.1), {{"a", "x"}, {"s", "y"}});
    EXPECT_EQ(r.systems, std::vector<QubitId>{"y"});
    const auto& c = std::get<cmd::Correct>(r.commands.back());
    EXPECT_TRUE(c.signal.contains("x"));
    EXPECT_EQ(c.q, "y");
}

TEST(Dsl, ParsesCommandsAndAngles) {
    const char* text = R"(# comment
pattern demo {
  system: s, t;
  ancilla: a, b;
  commands:
  N a
  N b 0.5 0.25
  E a s
  E b t   # trailing comment
  M a XY 0.3
  M b YZ 1 s[a] t[a]
  X s [a]
  Z t [a, b]
  S b [a]
}
)";
    Pattern p = parse_pattern(text);
    EXPECT_EQ(p.name, "demo");
    EXPECT_EQ(p.systems, (std::vector<QubitId>{"s", "t"}));
    ASSERT_EQ(p.commands.size(), 9u);
    const auto& prep = std::get<cmd::Prep>(p.commands[1]);
    EXPECT_DOUBLE_EQ(prep.theta, 0.5);
    const auto& m = std::get<cmd::Measure>(p.commands[5]);
    EXPECT_EQ(m.plane, Plane::YZ);
    EXPECT_TRUE(m.s.contains("a"));
    EXPECT_TRUE(m.t.contains("a"));
    EXPECT_EQ(std::get<cmd::Correct>(p.commands[7]).signal.size(), 2u);
    EXPECT_TRUE(std::holds_alternative<cmd::Shift>(p.commands[8]));
}

TEST(Dsl, PiUnitsScaleAngles) {
    Pattern p = parse_pattern("pattern J { system: s; ancilla: a; commands:\nN a\nE a s\nM a XY 0.25\nX s [a]\n}",
                              {kPi});
    EXPECT_DOUBLE_EQ(std::get<cmd::Measure>(p.commands[2]).angle, kPi / 4);
}

TEST(Dsl, ErrorsCarryPositions) {
    try {
        (void)parse_pattern("pattern p {\n  system: s;\n  ancilla: a;\n  commands:\n  M a QQ 0\n}");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 5);
    }
    EXPECT_THROW((void)parse_pattern("pattern p { system: s; ancilla: a; commands:\nE a z\n}"), ParseError);
    EXPECT_THROW((void)parse_pattern("pattern p { system: s; ancilla: s; commands:\n}"), ParseError);
    EXPECT_THROW((void)parse_pattern("pattern p { system: s; ancilla: a; commands:\nQ a\n}"), ParseError);
    EXPECT_THROW((void)parse_pattern("pattern p { system: s"), ParseError);
}

TEST(Dsl, PrintParseRoundTrip) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        Pattern p = adqc::testing::random_wild_pattern(rng);
        Pattern back = parse_pattern(print_pattern(p));
        back.name = p.name;
        EXPECT_EQ(back, p) << print_pattern(p);
    }
}

TEST(Describe, RendersDslLines) {
    EXPECT_EQ(describe(cmd::Interact{"a", "s"}), "E a s");
    EXPECT_EQ(describe(cmd::Correct{"s", cmd::Axis::Z, Signal{"a", "b"}}), "Z s [a,b]");
    EXPECT_EQ(describe(cmd::Measure{"a", Plane::XY, 0.5, {}, {}}), "M a XY 0.5");
    EXPECT_EQ(command_dependencies(cmd::Measure{"a", Plane::XY, 0.5, Signal{"b"}, Signal{"c"}}),
              (std::vector<QubitId>{"b", "c"}));
}
