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

#include "adqc/interaction.hpp"
#include "../support/oracles.hpp"

using namespace adqc;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kQ = kPi / 4;

Alphas random_alphas(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-kPi, kPi);
    return {u(rng), u(rng), u(rng)};
}

double max_diff(const Alphas& a, const Alphas& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < 3; ++i) d = std::max(d, std::abs(a[i] - b[i]));
    return d;
}

}  // namespace

TEST(CanonicalD, MatchesProductOfExponentials) {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 50; ++i) {
        Alphas a = random_alphas(rng);
        EXPECT_LT((canonical_D(a) - adqc::testing::d_from_exponentials(a)).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(EtildeSpec, FactorsTheInteraction) {
    InteractionSpec s = etilde_spec();
    EXPECT_NEAR(s.alphas[0], kQ, 1e-15);
    EXPECT_TRUE(equal_up_to_phase(s.matrix(), gates::etilde()));
}

TEST(Weyl, InvariantUnderLocalUnitaries) {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 100; ++i) {
        Alphas a = random_alphas(rng);
        Matrix k1 = gates::kron(adqc::testing::random_unitary(2, rng), adqc::testing::random_unitary(2, rng));
        Matrix k2 = gates::kron(adqc::testing::random_unitary(2, rng), adqc::testing::random_unitary(2, rng));
        Matrix u = k1 * canonical_D(a) * k2;
        Alphas w = weyl_coordinates(u);
        EXPECT_LT(max_diff(canonicalize_alphas(w), canonicalize_alphas(a)), 1e-7);
        auto [g1, g2] = adqc::testing::makhlin_invariants(u);
        auto [h1, h2] = adqc::testing::makhlin_invariants(canonical_D(a));
        EXPECT_LT(std::abs(g1 - h1), 1e-9);
        EXPECT_LT(std::abs(g2 - h2), 1e-9);
    }
}

TEST(Weyl, CanonicalRangeAndOrder) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 100; ++i) {
        Alphas c = canonicalize_alphas(random_alphas(rng));
        EXPECT_LE(c[0], kQ + 1e-12);
        EXPECT_GE(c[0], c[1] - 1e-12);
        EXPECT_GE(c[1], std::abs(c[2]) - 1e-12);
    }
    EXPECT_LT(max_diff(canonicalize_alphas({0, 0, kQ}), {kQ, 0, 0}), 1e-12);
    EXPECT_LT(max_diff(weyl_coordinates(gates::cz()), {kQ, 0, 0}), 1e-9);
    EXPECT_LT(max_diff(weyl_coordinates(gates::swap()), {kQ, kQ, kQ}), 1e-9);
}

TEST(Kraus, ContractionMatchesKroneckerOracle) {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(0.0, kPi);
    for (int i = 0; i < 50; ++i) {
        Matrix d = canonical_D(random_alphas(rng));
        AncillaParams p{u(rng), 2 * u(rng), u(rng), 2 * u(rng)};
        KrausPair k = kraus_from_ancilla(d, p);
        const Vector prep = ket_plus(p.gamma, p.delta);
        Matrix plus = adqc::testing::kraus_by_kron(d, prep, ket_plus(p.theta, p.phi));
        Matrix minus = adqc::testing::kraus_by_kron(d, prep, ket_minus(p.theta, p.phi));
        EXPECT_LT((k.plus - plus).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_LT((k.minus - minus).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_NEAR(k.p_plus + k.p_minus, 1.0, 1e-12);
    }
}

TEST(Kraus, FixedHeisenbergIsSpecialCase) {
    for (double phi : {0.0, 0.7, 2.5}) {
        auto fixed = heisenberg_fixed_coefficients(kQ, phi);
        auto general = heisenberg_coefficients(kQ, kQ, 0.0, phi);
        EXPECT_NEAR(fixed.p_plus, general.p_plus, 1e-12);
        EXPECT_LT(adqc::testing::phase_aligned_distance(heisenberg_matrix(fixed.a_plus, fixed.b_plus),
                                                        heisenberg_matrix(general.a_plus, general.b_plus)),
                  1e-9);
    }
}

TEST(Kraus, IsingClosedFormMatchesContraction) {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> u(0.0, kPi);
    for (int i = 0; i < 100; ++i) {
        const double ax = u(rng) / 4;
        // Measuring in the preparation basis meets the unitarity condition.
        const double gamma = u(rng), delta = 2 * u(rng);
        AncillaParams p{gamma, delta, gamma, delta};
        auto c = ising_coefficients(ax, p);
        KrausPair k = kraus_from_ancilla(canonical_D({ax, 0, 0}), p);
        EXPECT_NEAR(c.p_plus, k.p_plus, 1e-9);
        // Only the relative parity of n+ and n- is fixed by the closed form.
        double err = 1.0;
        for (int shift : {0, 1}) {
            err = std::min(err, std::max(adqc::testing::phase_aligned_distance(
                                             k.plus, ising_matrix(c.a_plus, c.b_plus, c.n_plus + shift)),
                                         adqc::testing::phase_aligned_distance(
                                             k.minus, ising_matrix(c.a_minus, c.b_minus, c.n_minus + shift))));
        }
        EXPECT_LT(err, 1e-9);
    }
}

TEST(Unitarity, FixedIsingWithYAncilla) {
    AncillaParams y{kPi / 2, kPi / 2, kPi / 2, kPi / 2};
    EXPECT_TRUE(check_unitarity({kQ, 0, 0}, y).ok);
    auto c = check_branch_correction(kraus_from_ancilla(canonical_D({kQ, 0, 0}), y));
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(c->label, "X");
}

TEST(Unitarity, FullInteractionFails) {
    auto r = check_unitarity({kPi / 8, kPi / 8, kPi / 8}, {kPi / 3, 0.4, kPi / 3, 0.4});
    EXPECT_FALSE(r.ok);
    EXPECT_FALSE(check_branch_correction(kraus_from_ancilla(canonical_D({kPi / 8, kPi / 8, kPi / 8}),
                                                            {kPi / 3, 0.4, kPi / 3, 0.4}))
                     .has_value());
}

TEST(Standardisation, FixedIsingFactorizes) {
    auto f = check_standardisation(canonical_D({kQ, 0, 0}), {0, 0, 1});
    ASSERT_TRUE(f.has_value());
    EXPECT_FALSE(f->ancilla.identity);
    EXPECT_NEAR(std::abs(f->ancilla.axis[0]), 1.0, 1e-9);
    EXPECT_NEAR(std::abs(f->system.axis[1]), 1.0, 1e-9);
    Matrix lhs = canonical_D({kQ, 0, 0}) * gates::kron(gates::identity(), gates::pauli(Pauli::Z)) *
                 canonical_D({kQ, 0, 0}).adjoint();
    EXPECT_LT((lhs - gates::kron(f->ancilla.matrix(), f->system.matrix())).cwiseAbs().maxCoeff(), 1e-9);

    auto x = check_standardisation(canonical_D({kQ, 0, 0}), {1, 0, 0});
    ASSERT_TRUE(x.has_value());
    EXPECT_TRUE(x->ancilla.identity);
}

TEST(Standardisation, MixedInteractionDoesNotFactorize) {
    EXPECT_FALSE(check_standardisation(canonical_D({0.3, 0.2, 0}), {0, 0, 1}).has_value());
}

TEST(Classify, CaseTable) {
    struct Row {
        Alphas a;
        InteractionCase kind;
        bool universal;
    };
    const Row rows[] = {
        {{kQ, kQ, 0}, InteractionCase::FixedHeisenberg, true},
        {{kQ, 0.3, 0}, InteractionCase::GeneralHeisenberg, false},
        {{kQ, 0, 0}, InteractionCase::FixedIsing, true},
        {{0.3, 0, 0}, InteractionCase::GeneralIsing, false},
        {{0.3, 0.2, 0}, InteractionCase::NotStandardisable, false},
        {{0, 0, 0}, InteractionCase::NoInteraction, false},
        {{0.3, 0.2, 0.1}, InteractionCase::NotUnitaryCapable, false},
        {{0, 0, -kQ}, InteractionCase::FixedIsing, true},
    };
    for (const auto& r : rows) {
        auto c = classify(r.a);
        EXPECT_EQ(c.kind, r.kind) << case_name(c.kind);
        EXPECT_EQ(c.universal, r.universal) << case_name(c.kind);
    }
    EXPECT_EQ(case_name(InteractionCase::FixedIsing), "Case3-fixed-Ising");
    EXPECT_GT(classify({0.3, 0.2, 0.1}).unitarity_obstruction, 1e-3);
}

TEST(Witness, PlaneResidualAndBloch) {
    EXPECT_LT(plane_residual({{1, 0, 0}, {0, 1, 0}, {-1, 0, 0}, {0.6, 0.8, 0}}), 1e-12);
    EXPECT_GT(plane_residual({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, 0, 0}}), 1e-3);
    Vector zero(2);
    zero << 1, 0;
    auto b = bloch_vector(zero);
    EXPECT_NEAR(b[2], 1.0, 1e-15);
    auto p = bloch_vector(ket_plus(kPi / 2, 0));
    EXPECT_NEAR(p[0], 1.0, 1e-15);
}

TEST(Witness, IsingStaysInPlaneAndJDoesNot) {
    EXPECT_LT(plane_confinement_witness({kPi / 8, 0, 0}, 50, 6, 3), 1e-9);
    EXPECT_GT(j_composition_witness(50, 3), 1e-3);
}
