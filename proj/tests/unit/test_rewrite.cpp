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

#include <numbers>
#include <random>

#include "adqc/dsl.hpp"
#include "adqc/rewrite.hpp"
#include "adqc/sim.hpp"
#include "../support/oracles.hpp"

using namespace adqc;

namespace {

constexpr double kPi = std::numbers::pi;

Pattern two_j(double a, double b) { return compose(j_pattern(b, "s", "b"), j_pattern(a, "s", "a")); }

}  // namespace

TEST(Standardize, AlreadyStandardIsUntouched) {
    Pattern p = j_pattern(0.4);
    ASSERT_TRUE(is_standard(p));
    auto r = standardize(p);
    EXPECT_TRUE(r.trace.empty());
    EXPECT_EQ(r.pattern, p);
}

TEST(Standardize, ComposedJPatternsBecomeStandard) {
    Pattern p = two_j(0.3, 1.1);
    EXPECT_FALSE(is_standard(p));
    auto r = standardize(p);
    EXPECT_TRUE(is_standard(r.pattern));
    EXPECT_TRUE(validate(r.pattern).empty());
    EXPECT_FALSE(r.trace.empty());
    EXPECT_LT(choi_distance(kraus_map(r.pattern), kraus_map(p)), 1e-9);
    EXPECT_EQ(replay(p, r.trace), r.pattern);
}

TEST(Standardize, PreservesRandomPatternMaps) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 40; ++i) {
        Pattern p = adqc::testing::random_wild_pattern(rng);
        auto r = standardize(p);
        ASSERT_TRUE(is_standard(r.pattern)) << print_pattern(p);
        EXPECT_LT(choi_distance(kraus_map(r.pattern), kraus_map(p)), 1e-9) << print_pattern(p);
        EXPECT_EQ(replay(p, r.trace), r.pattern);
    }
}

TEST(Standardize, RejectsLocalCliffordAndInvalidInput) {
    Pattern p = j_pattern(0.1);
    p.commands.emplace_back(cmd::LocalClifford{"s", cmd::CliffordKind::H, 0.0});
    EXPECT_THROW(standardize(p), Error);
    Pattern bad = j_pattern(0.1);
    bad.commands.pop_back();
    bad.commands.pop_back();
    EXPECT_THROW(standardize(bad), Error);
}

TEST(ApplyRule, RejectsMismatchedRules) {
    Pattern p = j_pattern(0.2);
    EXPECT_THROW(apply_rule(p.commands, "merge", 0), Error);
    EXPECT_THROW(apply_rule(p.commands, "no-such-rule", 0), Error);
    EXPECT_THROW(apply_rule(p.commands, "swap", 99), Error);
}

TEST(ApplyRule, CorrectionThroughInteraction) {
    std::vector<Command> cmds{cmd::Correct{"s", cmd::Axis::X, Signal{"b"}}, cmd::Interact{"a", "s"}};
    apply_rule(cmds, "etilde-x", 0);
    ASSERT_EQ(cmds.size(), 3u);
    EXPECT_EQ(cmds[0], (Command{cmd::Interact{"a", "s"}}));
    EXPECT_EQ(cmds[1], (Command{cmd::Correct{"a", cmd::Axis::X, Signal{"b"}}}));
    EXPECT_EQ(cmds[2], (Command{cmd::Correct{"s", cmd::Axis::Z, Signal{"b"}}}));

    std::vector<Command> z{cmd::Correct{"s", cmd::Axis::Z, Signal{"b"}}, cmd::Interact{"a", "s"}};
    apply_rule(z, "etilde-z", 0);
    EXPECT_EQ(z[1], (Command{cmd::Correct{"s", cmd::Axis::X, Signal{"b"}}}));
}

TEST(ApplyRule, CorrectionAbsorbedByMeasurement) {
    std::vector<Command> cmds{cmd::Correct{"a", cmd::Axis::X, Signal{"b"}}, cmd::Measure{"a", Plane::XY, 0.3, {}, {}}};
    apply_rule(cmds, "measure-x", 0);
    ASSERT_EQ(cmds.size(), 1u);
    EXPECT_TRUE(std::get<cmd::Measure>(cmds[0]).s.contains("b"));

    std::vector<Command> zz{cmd::Correct{"a", cmd::Axis::X, Signal{"b"}}, cmd::Measure{"a", Plane::XZ, 0.0, {}, {}}};
    apply_rule(zz, "measure-z-x", 0);
    ASSERT_EQ(zz.size(), 2u);
    EXPECT_TRUE(std::holds_alternative<cmd::Shift>(zz[1]));
}

TEST(ShiftSignals, ExposesOutcomeFlips) {
    Pattern p;
    p.systems = {"s"};
    p.ancillas = {"a", "b"};
    p.commands = {cmd::Prep{"a"}, cmd::Prep{"b"}, cmd::Interact{"a", "s"}, cmd::Interact{"b", "s"},
                  cmd::Measure{"a", Plane::XY, 0.4, {}, {}}, cmd::Measure{"b", Plane::XY, 0.7, {}, Signal{"a"}},
                  cmd::Correct{"s", cmd::Axis::X, Signal{"b"}}};
    Pattern q = shift_signals(p);
    const auto& mb = std::get<cmd::Measure>(q.commands[5]);
    EXPECT_TRUE(mb.t.empty());
    EXPECT_EQ(std::get<cmd::Correct>(q.commands.back()).signal, (Signal{"a", "b"}));
    EXPECT_LT(choi_distance(kraus_map(q), kraus_map(p)), 1e-9);
}

TEST(ShiftSignals, PreservesRandomPatternMaps) {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 40; ++i) {
        Pattern p = adqc::testing::random_wild_pattern(rng);
        Pattern q = shift_signals(p);
        for (const auto& c : q.commands) EXPECT_FALSE(std::holds_alternative<cmd::Shift>(c));
        EXPECT_LT(choi_distance(kraus_map(q), kraus_map(p)), 1e-9) << print_pattern(p);
    }
}

TEST(Standardize, JChainRealizesProduct) {
    auto d = is_strongly_deterministic(standardize(two_j(0.3, kPi / 3)).pattern);
    ASSERT_TRUE(d.deterministic);
    EXPECT_TRUE(equal_up_to_phase(*d.unitary, gates::j(-kPi / 3) * gates::j(-0.3)));
}
