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

#include "adqc/interaction.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <random>

namespace adqc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kQuarter = kPi / 4;
const Complex kI(0.0, 1.0);

Vector bell(int j) {
    Vector v = Vector::Zero(4);
    const double h = 1.0 / std::sqrt(2.0);
    switch (j) {
        case 0: v << h, 0, 0, h; break;
        case 1: v << -kI * h, 0, 0, kI * h; break;
        case 2: v << 0, h, h, 0; break;
        default: v << 0, -kI * h, kI * h, 0; break;
    }
    return v;
}

// Bell basis with phases chosen so that local unitaries become real orthogonal.
Matrix magic_basis() {
    const double h = 1.0 / std::sqrt(2.0);
    Matrix m(4, 4);
    m << h, kI * h, 0, 0,
         0, 0, kI * h, h,
         0, 0, kI * h, -h,
         h, -kI * h, 0, 0;
    return m;
}

}  // namespace

Matrix InteractionSpec::matrix() const {
    return gates::kron(wa, ws) * canonical_D(alphas) * gates::kron(va, vs);
}

InteractionSpec etilde_spec() {
    // CZ is exp(-i pi/4 ZZ) (S^dag (x) S^dag) up to phase, and H (x) H turns ZZ into XX.
    const Matrix v = gates::hadamard() * gates::phase(-kPi / 2);
    InteractionSpec s;
    s.alphas = {kQuarter, 0.0, 0.0};
    s.va = v;
    s.vs = v;
    return s;
}

Matrix canonical_D(const Alphas& a) {
    const double eta[4] = {a[0] - a[1] + a[2], -a[0] + a[1] + a[2], a[0] + a[1] - a[2], -a[0] - a[1] - a[2]};
    Matrix d = Matrix::Zero(4, 4);
    for (int j = 0; j < 4; ++j) {
        Vector b = bell(j);
        d += std::polar(1.0, -eta[j]) * (b * b.adjoint());
    }
    return d;
}

Alphas canonicalize_alphas(const Alphas& in) {
    Alphas a = in;
    for (double& x : a) {
        // Shifts by pi/2 are local; bring into (-pi/4, pi/4].
        x = std::remainder(x, kPi / 2);
        if (x <= -kQuarter + 1e-12) x += kPi / 2;
    }
    std::sort(a.begin(), a.end(), [](double x, double y) { return std::abs(x) > std::abs(y); });
    // Sign flips come in pairs; push any negative sign onto the smallest coordinate.
    if (a[0] < 0) {
        a[0] = -a[0];
        a[2] = -a[2];
    }
    if (a[1] < 0) {
        a[1] = -a[1];
        a[2] = -a[2];
    }
    a[2] = std::abs(a[2]);
    for (double& x : a) x = std::min(x, kQuarter);
    return a;
}

Alphas weyl_coordinates(const Matrix& u) {
    if (u.rows() != 4 || u.cols() != 4) throw Error("weyl_coordinates expects a 4x4 matrix");
    Matrix v = u / std::pow(u.determinant(), 0.25);
    const Matrix mb = magic_basis();
    const Matrix ub = mb.adjoint() * v * mb;
    const Matrix m = ub.transpose() * ub;
    Eigen::ComplexEigenSolver<Matrix> es(m);
    std::array<double, 4> eta{};
    for (int j = 0; j < 4; ++j) eta[static_cast<std::size_t>(j)] = -std::arg(es.eigenvalues()(j)) / 2;
    std::sort(eta.begin(), eta.end(), std::greater<>());
    // The eta sum is a multiple of pi; shift the largest ones down until it vanishes.
    double total = eta[0] + eta[1] + eta[2] + eta[3];
    int k = static_cast<int>(std::lround(total / kPi));
    for (int i = 0; i < k && i < 4; ++i) eta[static_cast<std::size_t>(i)] -= kPi;
    for (int i = 0; i < -k && i < 4; ++i) eta[static_cast<std::size_t>(3 - i)] += kPi;
    Alphas raw{(eta[0] + eta[2]) / 2, (eta[1] + eta[2]) / 2, (eta[0] + eta[1]) / 2};
    return canonicalize_alphas(raw);
}

KrausPair kraus_from_ancilla(const Matrix& d, const AncillaParams& params) {
    const Vector prep = ket_plus(params.gamma, params.delta);
    const Vector mp = ket_plus(params.theta, params.phi).conjugate();
    const Vector mm = ket_minus(params.theta, params.phi).conjugate();
    auto contract = [&](const Vector& bra) {
        Matrix k = Matrix::Zero(2, 2);
        for (int ao = 0; ao < 2; ++ao) {
            for (int ai = 0; ai < 2; ++ai) {
                k += bra(ao) * prep(ai) * d.block(2 * ao, 2 * ai, 2, 2);
            }
        }
        return k;
    };
    KrausPair out{contract(mp), contract(mm), 0.0, 0.0};
    out.p_plus = (out.plus.adjoint() * out.plus).trace().real() / 2;
    out.p_minus = (out.minus.adjoint() * out.minus).trace().real() / 2;
    return out;
}

HeisenbergCoefficients heisenberg_coefficients(double ax, double ay, double delta, double phi) {
    const double dm = (delta - phi) / 2;
    const double dp = (delta + phi) / 2;
    const double sx = std::sin(ax), cx = std::cos(ax), sy = std::sin(ay), cy = std::cos(ay);
    HeisenbergCoefficients h;
    h.a_minus = Complex(sx * sy * std::cos(dm), -cx * cy * std::sin(dm));
    h.b_minus = Complex(sx * cy * std::sin(dp), cx * sy * std::cos(dp));
    h.a_plus = Complex(sx * sy * std::sin(dm), cx * cy * std::cos(dm));
    h.b_plus = Complex(sx * cy * std::cos(dp), -cx * sy * std::sin(dp));
    const double shift = std::cos(2 * ax) * std::sin(delta) * std::sin(phi) + std::cos(2 * ay) * std::cos(delta) * std::cos(phi);
    h.p_plus = 0.5 * (1 + shift);
    h.p_minus = 0.5 * (1 - shift);
    return h;
}

HeisenbergCoefficients heisenberg_fixed_coefficients(double ax, double phi) {
    const double r = 1.0 / std::sqrt(2.0);
    HeisenbergCoefficients h;
    h.a_minus = r * Complex(std::sin(ax) * std::cos(phi / 2), std::cos(ax) * std::sin(phi / 2));
    h.b_minus = r * Complex(std::sin(ax) * std::sin(phi / 2), std::cos(ax) * std::cos(phi / 2));
    h.a_plus = -std::conj(h.b_minus);
    h.b_plus = std::conj(h.a_minus);
    h.p_plus = h.p_minus = 0.5;
    return h;
}

Matrix heisenberg_matrix(Complex a, Complex b) {
    Matrix k(2, 2);
    k << a, -b, -std::conj(b), -std::conj(a);
    return k;
}

IsingCoefficients ising_coefficients(double ax, const AncillaParams& p) {
    const double cc = std::cos(p.gamma) * std::cos(p.theta);
    const double ss = std::sin(p.gamma) * std::sin(p.theta);
    auto root = [](double x) { return std::sqrt(std::max(0.0, x)); };
    auto sq = [](double x) { return x * x; };
    const double ca = std::cos(ax) / std::sqrt(2.0);
    const double sa = std::sin(ax) / std::sqrt(2.0);
    // Half-angle forms keep the radicands accurate near zero.
    const double dm = ss * sq(std::sin((p.delta - p.phi) / 2));
    const double dp = ss * sq(std::sin((p.delta + p.phi) / 2));
    IsingCoefficients c;
    c.a_plus = ca * root(2 * sq(std::cos((p.gamma - p.theta) / 2)) - 2 * dm);
    c.a_minus = ca * root(2 * sq(std::sin((p.gamma - p.theta) / 2)) + 2 * dm);
    c.b_plus = sa * root(2 * sq(std::sin((p.gamma + p.theta) / 2)) - 2 * dp);
    c.b_minus = sa * root(2 * sq(std::cos((p.gamma + p.theta) / 2)) + 2 * dp);
    const double same = std::abs(c.a_plus * c.a_minus + c.b_plus * c.b_minus);
    const double opposite = std::abs(c.a_plus * c.a_minus - c.b_plus * c.b_minus);
    c.n_plus = 0;
    c.n_minus = opposite <= same ? 1 : 0;
    c.correction_residual = std::min(same, opposite);
    const double shift = ss * std::cos(p.delta) * std::cos(p.phi) +
                         std::cos(2 * ax) * (cc + ss * std::sin(p.delta) * std::sin(p.phi));
    c.p_plus = 0.5 * (1 + shift);
    c.p_minus = 0.5 * (1 - shift);
    return c;
}

Matrix ising_matrix(double a, double b, int n) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return a * Matrix::Identity(2, 2) + kI * sign * b * gates::pauli(Pauli::X);
}

UnitarityReport check_unitarity(const Alphas& al, const AncillaParams& p, double tol) {
    UnitarityReport out;
    const double s2x = std::sin(2 * al[0]), s2y = std::sin(2 * al[1]), s2z = std::sin(2 * al[2]);
    out.t = s2x * s2y * std::cos(p.gamma);
    out.r = std::sin(p.gamma) * s2z * Complex(s2y * std::cos(p.delta), -s2x * std::sin(p.delta));
    KrausPair k = kraus_from_ancilla(canonical_D(al), p);
    auto dev = [](const Matrix& m, double pr) {
        return (m.adjoint() * m - pr * Matrix::Identity(2, 2)).cwiseAbs().maxCoeff();
    };
    out.kraus_deviation = std::max(dev(k.plus, k.p_plus), dev(k.minus, k.p_minus));
    out.ising_condition = std::sin(p.theta) * std::cos(p.gamma) * std::sin(p.phi) -
                          std::cos(p.theta) * std::sin(p.gamma) * std::sin(p.delta);
    auto nz = [&](double x) { return std::abs(std::sin(2 * x)) > tol; };
    if (nz(al[0]) && !nz(al[1]) && !nz(al[2])) {
        out.analytic_ok = std::abs(out.ising_condition) <= tol;
    } else if (nz(al[0]) && nz(al[1]) && !nz(al[2])) {
        out.analytic_ok = std::abs(p.gamma - kPi / 2) <= tol && std::abs(p.theta - kPi / 2) <= tol;
    }
    out.ok = std::abs(out.t) <= tol && std::abs(out.r) <= tol && out.kraus_deviation <= tol && out.analytic_ok;
    return out;
}

std::optional<BranchCorrection> check_branch_correction(const KrausPair& pair, double tol) {
    if (pair.p_plus <= tol || pair.p_minus <= tol) return BranchCorrection{"I", {0, 0, 0}};
    const Matrix up = pair.plus / std::sqrt(pair.p_plus);
    const Matrix um = pair.minus / std::sqrt(pair.p_minus);
    const Matrix m = um * up.adjoint();
    if (!is_unitary(m, std::sqrt(tol))) return std::nullopt;
    const Complex tr = m.trace() / 2.0;
    if (std::abs(std::abs(tr) - 1.0) <= tol) return BranchCorrection{"I", {0, 0, 0}};
    if (std::abs(tr) > tol) return std::nullopt;
    Complex c[3];
    const Pauli axes[3] = {Pauli::X, Pauli::Y, Pauli::Z};
    std::size_t big = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        c[i] = (gates::pauli(axes[i]) * m).trace() / 2.0;
        if (std::abs(c[i]) > std::abs(c[big])) big = i;
    }
    const Complex phase = std::abs(c[big]) / c[big];
    BranchCorrection out;
    for (std::size_t i = 0; i < 3; ++i) {
        const Complex v = c[i] * phase;
        if (std::abs(v.imag()) > std::sqrt(tol)) return std::nullopt;
        out.axis[i] = v.real();
    }
    out.label = "P";
    for (std::size_t i = 0; i < 3; ++i) {
        if (std::abs(std::abs(out.axis[i]) - 1.0) <= std::sqrt(tol)) out.label = std::string(1, "XYZ"[i]);
    }
    return out;
}

std::string PauliFactor::to_string() const {
    std::string sign = scale < 0 ? "-" : "";
    if (identity) return sign + "I";
    for (std::size_t i = 0; i < 3; ++i) {
        if (std::abs(std::abs(axis[i]) - 1.0) <= 1e-9) return (axis[i] * scale < 0 ? "-" : "") + std::string(1, "XYZ"[i]);
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "%sP(%.6g,%.6g,%.6g)", sign.c_str(), axis[0], axis[1], axis[2]);
    return buf;
}

Matrix PauliFactor::matrix() const {
    if (identity) return scale * Matrix::Identity(2, 2);
    return scale * (axis[0] * gates::pauli(Pauli::X) + axis[1] * gates::pauli(Pauli::Y) + axis[2] * gates::pauli(Pauli::Z));
}

std::optional<Factorization> check_standardisation(const Matrix& d, const std::array<double, 3>& pa, double tol) {
    const Matrix p = pa[0] * gates::pauli(Pauli::X) + pa[1] * gates::pauli(Pauli::Y) + pa[2] * gates::pauli(Pauli::Z);
    const Matrix m = d * gates::kron(Matrix::Identity(2, 2), p) * d.adjoint();
    const Pauli basis[4] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
    Eigen::Matrix4d c;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const Complex v = (gates::kron(gates::pauli(basis[i]), gates::pauli(basis[j])) * m).trace() / 4.0;
            c(i, j) = v.real();
        }
    }
    Eigen::JacobiSVD<Eigen::Matrix4d> svd(c, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& s = svd.singularValues();
    if (s(1) > tol) return std::nullopt;
    Eigen::Vector4d u = svd.matrixU().col(0);
    Eigen::Vector4d v = svd.matrixV().col(0) * s(0);
    Eigen::Index big = 0;
    u.cwiseAbs().maxCoeff(&big);
    if (u(big) < 0) {
        u = -u;
        v = -v;
    }
    auto factor = [&](const Eigen::Vector4d& w, double norm) -> std::optional<PauliFactor> {
        PauliFactor f;
        const double vec = w.tail<3>().norm();
        if (vec <= tol * norm) {
            f.identity = true;
            f.scale = w(0);
            return f;
        }
        if (std::abs(w(0)) > tol * norm) return std::nullopt;
        f.identity = false;
        f.scale = 1.0;
        for (int i = 0; i < 3; ++i) f.axis[static_cast<std::size_t>(i)] = w(i + 1) / vec;
        f.scale = vec;
        return f;
    };
    auto t = factor(u, 1.0);
    auto q = factor(v, s(0));
    if (!t || !q) return std::nullopt;
    // Keep the ancilla factor unit-normalized and push the overall scale into the system factor.
    q->scale *= t->scale;
    t->scale = 1.0;
    return Factorization{*t, *q};
}

std::string case_name(InteractionCase c) {
    switch (c) {
        case InteractionCase::FixedHeisenberg: return "Case1-fixed-Heisenberg";
        case InteractionCase::GeneralHeisenberg: return "Case2-general-Heisenberg";
        case InteractionCase::FixedIsing: return "Case3-fixed-Ising";
        case InteractionCase::GeneralIsing: return "Case4-general-Ising";
        case InteractionCase::NotStandardisable: return "NotStandardisable";
        case InteractionCase::NoInteraction: return "NoInteraction";
        case InteractionCase::NotUnitaryCapable: return "NotUnitaryCapable";
    }
    return "?";
}

Classification classify(const Alphas& alphas, double tol) {
    Classification out;
    Alphas a = canonicalize_alphas(alphas);
    // Snap to the chamber boundaries 0 and pi/4.
    enum class Mark { Zero, Quarter, Inside };
    Mark mark[3];
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < 3; ++i) {
        const double dz = std::abs(a[i]);
        const double dq = std::abs(kQuarter - a[i]);
        if (dz <= tol) {
            mark[i] = Mark::Zero;
            out.snap_error = std::max(out.snap_error, dz);
            a[i] = 0.0;
        } else if (dq <= tol) {
            mark[i] = Mark::Quarter;
            out.snap_error = std::max(out.snap_error, dq);
            a[i] = kQuarter;
        } else {
            mark[i] = Mark::Inside;
            nearest = std::min(nearest, std::min(dz, dq));
        }
    }
    out.boundary_distance = std::isinf(nearest) ? -1.0 : nearest;
    out.canonical = a;
    if (mark[2] != Mark::Zero) {
        out.kind = InteractionCase::NotUnitaryCapable;
    } else if (mark[0] == Mark::Zero) {
        out.kind = InteractionCase::NoInteraction;
    } else if (mark[0] == Mark::Quarter && mark[1] == Mark::Quarter) {
        out.kind = InteractionCase::FixedHeisenberg;
        out.corrections = {"P(a,b,0)", "Z"};
    } else if (mark[0] == Mark::Quarter && mark[1] == Mark::Inside) {
        out.kind = InteractionCase::GeneralHeisenberg;
        out.corrections = {"X"};
    } else if (mark[0] == Mark::Quarter) {
        out.kind = InteractionCase::FixedIsing;
        out.corrections = {"X", "P(0,b,c)"};
    } else if (mark[1] == Mark::Zero) {
        out.kind = InteractionCase::GeneralIsing;
        out.corrections = {"X"};
    } else {
        out.kind = InteractionCase::NotStandardisable;
    }
    out.universal = out.kind == InteractionCase::FixedHeisenberg || out.kind == InteractionCase::FixedIsing;

    // Can any preparation make both unitarity residuals vanish?
    double best = std::numeric_limits<double>::infinity();
    const int steps = 32;
    for (int i = 0; i <= steps; ++i) {
        for (int j = 0; j < 2 * steps; ++j) {
            AncillaParams p{kPi * i / steps, kPi * j / steps, kPi / 2, 0.0};
            const double t = std::sin(2 * a[0]) * std::sin(2 * a[1]) * std::cos(p.gamma);
            const Complex r = std::sin(p.gamma) * std::sin(2 * a[2]) *
                              Complex(std::sin(2 * a[1]) * std::cos(p.delta), -std::sin(2 * a[0]) * std::sin(p.delta));
            const double worst = std::max(std::abs(t), std::abs(r));
            if (worst < best) {
                best = worst;
                out.probe_t = t;
                out.probe_r = std::abs(r);
            }
        }
    }
    out.unitarity_obstruction = best;
    return out;
}

std::array<double, 3> bloch_vector(const Vector& psi) {
    const Vector v = psi / psi.norm();
    const Complex c = std::conj(v(0)) * v(1);
    return {2 * c.real(), 2 * c.imag(), std::norm(v(0)) - std::norm(v(1))};
}

double plane_residual(const std::vector<std::array<double, 3>>& pts) {
    if (pts.size() < 4) return 0.0;
    Eigen::Vector3d mean = Eigen::Vector3d::Zero();
    for (const auto& p : pts) mean += Eigen::Vector3d(p[0], p[1], p[2]);
    mean /= static_cast<double>(pts.size());
    Eigen::MatrixXd centred(pts.size(), 3);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        centred.row(static_cast<Eigen::Index>(i)) = Eigen::Vector3d(pts[i][0], pts[i][1], pts[i][2]) - mean;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(centred, Eigen::ComputeThinV);
    const Eigen::Vector3d normal = svd.matrixV().col(2);
    return (centred * normal).cwiseAbs().maxCoeff();
}

double plane_confinement_witness(const Alphas& alphas, std::size_t samples, std::size_t max_length,
                                 std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ang(0.0, kPi);
    std::uniform_int_distribution<std::size_t> len(0, max_length);
    const Matrix d = canonical_D(alphas);
    Vector zero(2);
    zero << 1.0, 0.0;
    std::vector<std::array<double, 3>> pts;
    for (std::size_t s = 0; s < samples; ++s) {
        Vector psi = zero;
        const std::size_t n = len(rng);
        for (std::size_t k = 0; k < n; ++k) {
            // theta = gamma and phi = delta keep every branch unitary.
            const double g = ang(rng);
            const double dl = 2 * ang(rng);
            KrausPair kp = kraus_from_ancilla(d, {g, dl, g, dl});
            const bool plus = (rng() & 1U) == 0 || kp.p_minus <= 1e-12;
            const Matrix& kraus = plus ? kp.plus : kp.minus;
            psi = kraus * psi;
            psi /= psi.norm();
        }
        pts.push_back(bloch_vector(psi));
    }
    return plane_residual(pts);
}

double j_composition_witness(std::size_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ang(0.0, 2 * kPi);
    Vector zero(2);
    zero << 1.0, 0.0;
    std::vector<std::array<double, 3>> pts;
    for (std::size_t s = 0; s < samples; ++s) {
        Vector psi = gates::j(ang(rng)) * gates::j(ang(rng)) * gates::j(ang(rng)) * zero;
        pts.push_back(bloch_vector(psi));
    }
    return plane_residual(pts);
}

}  // namespace adqc
