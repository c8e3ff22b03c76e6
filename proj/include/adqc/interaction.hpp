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

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adqc/qcore.hpp"

namespace adqc {

/// (alpha_x, alpha_y, alpha_z) of the non-local part exp(-i (ax XX + ay YY + az ZZ)).
using Alphas = std::array<double, 3>;

/// Two-qubit interaction written as (Wa (x) Ws) D(alphas) (Va (x) Vs).
/// The ancilla is the first (most significant) qubit.
struct InteractionSpec {
    Alphas alphas{};
    Matrix wa = Matrix::Identity(2, 2);
    Matrix ws = Matrix::Identity(2, 2);
    Matrix va = Matrix::Identity(2, 2);
    Matrix vs = Matrix::Identity(2, 2);

    [[nodiscard]] Matrix matrix() const;
};

/// Factorization of the interaction (H (x) H) CZ with D(pi/4, 0, 0) as non-local part.
InteractionSpec etilde_spec();

/// D as sum_j exp(-i eta_j) |Phi_j><Phi_j| over the Bell basis with
/// eta = (ax - ay + az, -ax + ay + az, ax + ay - az, -ax - ay - az).
Matrix canonical_D(const Alphas& a);

/// Reduces coordinates into 0 <= a3 <= a2 <= a1 <= pi/4, returned as (a1, a2, a3).
/// Mirror images (the same point with the smallest coordinate negated) are
/// identified unless a1 = pi/4, where they are locally equivalent anyway.
Alphas canonicalize_alphas(const Alphas& a);

/// Canonical coordinates of a 4x4 unitary, read off the spectrum of
/// U_B^T U_B in the magic basis.
Alphas weyl_coordinates(const Matrix& u);

/// Preparation |+_{gamma,delta}> and measurement basis |+-_{theta,phi}> of the ancilla.
struct AncillaParams {
    double gamma = 0.0;
    double delta = 0.0;
    double theta = 0.0;
    double phi = 0.0;
};

struct KrausPair {
    Matrix plus;
    Matrix minus;
    double p_plus = 0.0;
    double p_minus = 0.0;
};

/// K(+-) = <+-_{theta,phi}|_a D |+_{gamma,delta}>_a acting on the system.
KrausPair kraus_from_ancilla(const Matrix& d, const AncillaParams& params);

/// Coefficients of the two-parameter interaction (alpha_z = 0, gamma = theta = pi/2):
/// K = [[a, -b], [-b*, -a*]] up to phases.
struct HeisenbergCoefficients {
    Complex a_plus, b_plus, a_minus, b_minus;
    double p_plus = 0.0;
    double p_minus = 0.0;
};
HeisenbergCoefficients heisenberg_coefficients(double ax, double ay, double delta, double phi);
/// The alpha_y = pi/4, delta = 0 specialisation.
HeisenbergCoefficients heisenberg_fixed_coefficients(double ax, double phi);
Matrix heisenberg_matrix(Complex a, Complex b);

/// Coefficients of the one-parameter interaction: K = A 1 + i (-1)^n B X.
struct IsingCoefficients {
    double a_plus = 0.0, b_plus = 0.0, a_minus = 0.0, b_minus = 0.0;
    /// Sign integers chosen so that the branch correction condition holds when possible.
    int n_plus = 0;
    int n_minus = 1;
    /// |A+ A- + (-1)^(n+ + n-) B+ B-| for the chosen signs.
    double correction_residual = 0.0;
    double p_plus = 0.0;
    double p_minus = 0.0;
};
IsingCoefficients ising_coefficients(double ax, const AncillaParams& params);
Matrix ising_matrix(double a, double b, int n);

struct UnitarityReport {
    bool ok = false;
    double t = 0.0;
    Complex r{0.0, 0.0};
    /// Largest |K^dag K - p 1| over both branches.
    double kraus_deviation = 0.0;
    /// sin(theta) cos(gamma) sin(phi) - cos(theta) sin(gamma) sin(delta), relevant for one nonzero alpha.
    double ising_condition = 0.0;
    /// Whether the analytic condition of the alpha pattern holds (true when none applies).
    bool analytic_ok = true;
};

UnitarityReport check_unitarity(const Alphas& alphas, const AncillaParams& params, double tol = kDefaultTol);

struct BranchCorrection {
    /// "I" when the branches already agree, "X", "Y", "Z", or "P" for a general axis.
    std::string label;
    /// Axis (a, b, c) of P = aX + bY + cZ; zero for the identity.
    std::array<double, 3> axis{};
};

/// Pauli P with U- = e^{i Delta} P U+, or nothing when none exists.
std::optional<BranchCorrection> check_branch_correction(const KrausPair& pair, double tol = kDefaultTol);

/// One factor of a product T (x) Q: either the identity or aX + bY + cZ.
struct PauliFactor {
    bool identity = true;
    std::array<double, 3> axis{};
    double scale = 1.0;
    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] Matrix matrix() const;
};

struct Factorization {
    PauliFactor ancilla;
    PauliFactor system;
};

/// Whether D (1 (x) P) D^dag = T_a (x) Q_s with each factor the identity or a
/// Pauli axis; returns the factors.
std::optional<Factorization> check_standardisation(const Matrix& d, const std::array<double, 3>& pauli_axis,
                                                   double tol = kDefaultTol);

enum class InteractionCase {
    FixedHeisenberg,    // (pi/4, pi/4, 0)
    GeneralHeisenberg,  // (pi/4, b, 0), 0 < b < pi/4
    FixedIsing,         // (pi/4, 0, 0)
    GeneralIsing,       // (a, 0, 0), 0 < a < pi/4
    NotStandardisable,  // (a, b, 0), 0 < b <= a < pi/4
    NoInteraction,      // (0, 0, 0)
    NotUnitaryCapable,  // all three nonzero
};

std::string case_name(InteractionCase c);

struct Classification {
    InteractionCase kind = InteractionCase::NoInteraction;
    bool universal = false;
    Alphas canonical{};
    std::vector<std::string> corrections;
    /// Distance of the nearest coordinate that was not snapped to 0 or pi/4
    /// from those values; negative when every coordinate snapped.
    double boundary_distance = -1.0;
    /// Largest amount by which a coordinate was snapped.
    double snap_error = 0.0;
    /// Smallest max(|t|, |r|) over a grid of ancilla preparations, and the
    /// residuals at the minimizing preparation.
    double unitarity_obstruction = 0.0;
    double probe_t = 0.0;
    double probe_r = 0.0;
};

Classification classify(const Alphas& alphas, double tol = kDefaultTol);

/// Largest distance of a set of points from their best-fit plane.
double plane_residual(const std::vector<std::array<double, 3>>& points);

std::array<double, 3> bloch_vector(const Vector& psi);

/// Applies random products of normalized Kraus operators of D(alphas) (with
/// parameters drawn so that every branch is unitary) to |0> and returns the
/// residual of the best plane through the Bloch images.
double plane_confinement_witness(const Alphas& alphas, std::size_t samples, std::size_t max_length,
                                 std::uint64_t seed);

/// Same residual for images of |0> under J(a) J(b) J(c) with random angles.
double j_composition_witness(std::size_t samples, std::uint64_t seed);

}  // namespace adqc
