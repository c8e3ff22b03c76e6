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

#include "adqc/sim.hpp"
#include "../support/oracles.hpp"

using namespace adqc;

namespace {

constexpr double kPi = std::numbers::pi;

Pattern bare_measurement() {
    Pattern p;
    p.systems = {"s"};
    p.ancillas = {"a"};
    p.commands = {cmd::Prep{"a"}, cmd::Interact{"a", "s"}, cmd::Measure{"a", Plane::XY, 0.0, {}, {}}};
    return p;
}

StateVector random_input(std::mt19937_64& rng, const std::vector<QubitId>& labels) {
    Matrix u = adqc::testing::random_unitary(std::size_t{1} << labels.size(), rng);
    return StateVector(labels, u.col(0));
}

}  // namespace

TEST(Run, ForcedBranchesMatchEnumeration) {
    std::mt19937_64 rng(3);
    Pattern p = ctrl_z_pattern();
    StateVector in = random_input(rng, p.systems);
    auto branches = enumerate_branches(p, in);
    ASSERT_EQ(branches.size(), 2u);
    double total = 0.0;
    for (const auto& b : branches) {
        total += b.probability;
        auto r = run(p, in, OutcomeSource::forced(b.bits));
        EXPECT_FALSE(r.impossible);
        EXPECT_EQ(r.bits, b.bits);
        EXPECT_LT((r.state.amplitudes() - b.state.amplitudes()).norm(), 1e-12);
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(Run, SampledOutcomesAreReproducible) {
    Pattern p = j_pattern(0.9);
    StateVector in = StateVector::basis({"s"}, {0});
    auto a = run(p, in, OutcomeSource::sampled(17));
    auto b = run(p, in, OutcomeSource::sampled(17));
    EXPECT_EQ(a.bits, b.bits);
    // States stay unnormalized: the squared norm is the branch probability.
    EXPECT_NEAR(a.state.squared_norm(), 0.5, 1e-12);
}

TEST(Run, ZeroProbabilityBranchIsImpossible) {
    // |+> measured in XY at angle 0 never yields 1.
    Pattern p;
    p.ancillas = {"a"};
    p.commands = {cmd::Prep{"a"}, cmd::Measure{"a", Plane::XY, 0.0, {}, {}}};
    auto r = run(p, StateVector{}, OutcomeSource::forced({1}));
    EXPECT_TRUE(r.impossible);
    EXPECT_THROW(run(p, StateVector{}, OutcomeSource::forced({})), Error);
}

TEST(Run, InputMustMatchSystems) {
    EXPECT_THROW(run(j_pattern(0.1), StateVector::basis({"t"}, {0}), OutcomeSource::sampled(1)), Error);
}

TEST(Kraus, GeneratorsAreDeterministic) {
    auto j = is_strongly_deterministic(j_pattern(0.7));
    ASSERT_TRUE(j.deterministic);
    EXPECT_TRUE(equal_up_to_phase(*j.unitary, gates::j(-0.7)));
    auto cz = is_strongly_deterministic(ctrl_z_pattern());
    ASSERT_TRUE(cz.deterministic);
    EXPECT_TRUE(equal_up_to_phase(*cz.unitary, gates::etilde()));
    EXPECT_NEAR(cz.min_overlap, 1.0, 1e-12);
}

TEST(Kraus, UncorrectedPatternIsNotDeterministic) {
    auto m = kraus_map(bare_measurement());
    EXPECT_LT(m.completeness_error(), 1e-12);
    auto d = is_strongly_deterministic(m);
    EXPECT_FALSE(d.deterministic);
    EXPECT_FALSE(d.unitary.has_value());
}

TEST(Kraus, BranchWeightsOfJPattern) {
    auto m = kraus_map(j_pattern(kPi / 5));
    ASSERT_EQ(m.branches.size(), 2u);
    for (const auto& b : m.branches) EXPECT_NEAR(b.weight, 0.5, 1e-12);
}

TEST(Kraus, CompositionMatchesComposedPattern) {
    Pattern p1 = j_pattern(0.3, "s", "a");
    Pattern p2 = j_pattern(1.2, "s", "b");
    double d = choi_distance(compose_maps(kraus_map(p2), kraus_map(p1)), kraus_map(compose(p2, p1)));
    EXPECT_LT(d, 1e-9);
    EXPECT_THROW(compose_maps(kraus_map(ctrl_z_pattern()), kraus_map(p1)), Error);
}

TEST(Kraus, TensorMatchesTensoredPattern) {
    Pattern p1 = j_pattern(0.3, "s", "a");
    Pattern p2 = bare_measurement();
    p2 = rename(p2, {{"s", "t"}, {"a", "b"}});
    double d = choi_distance(tensor_maps(kraus_map(p1), kraus_map(p2)), kraus_map(tensor(p1, p2)));
    EXPECT_LT(d, 1e-9);
}

TEST(Kraus, ApplyIsTracePreserving) {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 20; ++i) {
        Pattern p = adqc::testing::random_wild_pattern(rng);
        auto m = kraus_map(p);
        EXPECT_LT(m.completeness_error(), 1e-9);
        Matrix u = adqc::testing::random_unitary(m.dim(), rng);
        Matrix rho = u.col(0) * u.col(0).adjoint();
        EXPECT_NEAR(apply_cptp(m, rho).trace().real(), 1.0, 1e-9);
    }
}

TEST(Kraus, ChoiDistanceSeparatesDifferentMaps) {
    EXPECT_GT(choi_distance(kraus_map(j_pattern(0.2)), kraus_map(j_pattern(0.9))), 1e-3);
    EXPECT_LT(choi_distance(kraus_map(j_pattern(0.2)), kraus_map(j_pattern(0.2))), 1e-12);
}

TEST(Kraus, CapacityLimits) {
    Pattern p;
    for (std::size_t i = 0; i <= kMaxKrausSystems; ++i) p.systems.push_back("s" + std::to_string(i));
    EXPECT_THROW(kraus_map(p), CapacityError);
}
