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

#include "adqc/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace adqc {

namespace {

void check_capacity(std::size_t n) {
    if (n > kMaxQubits) {
        throw CapacityError("register of " + std::to_string(n) + " qubits exceeds the dense limit of " +
                            std::to_string(kMaxQubits));
    }
}

// Bit position (from the least significant end) of a slot.
inline std::size_t bit_of(std::size_t slot, std::size_t n) { return n - 1 - slot; }

}  // namespace

StateVector::StateVector(std::vector<QubitId> labels, Vector amplitudes)
    : labels_(std::move(labels)), amplitudes_(std::move(amplitudes)) {
    check_capacity(labels_.size());
    if (static_cast<std::size_t>(amplitudes_.size()) != (std::size_t{1} << labels_.size())) {
        throw Error("amplitude count does not match 2^" + std::to_string(labels_.size()));
    }
    std::set<QubitId> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) throw Error("duplicate qubit label in state");
}

StateVector StateVector::zeros(std::vector<QubitId> labels) {
    check_capacity(labels.size());
    Vector amp = Vector::Zero(Eigen::Index{1} << labels.size());
    amp(0) = 1.0;
    return {std::move(labels), std::move(amp)};
}

StateVector StateVector::basis(std::vector<QubitId> labels, const std::vector<int>& bits) {
    check_capacity(labels.size());
    if (bits.size() != labels.size()) throw Error("basis bit count does not match label count");
    std::size_t idx = 0;
    for (int b : bits) idx = (idx << 1) | static_cast<std::size_t>(b & 1);
    Vector amp = Vector::Zero(Eigen::Index{1} << labels.size());
    amp(static_cast<Eigen::Index>(idx)) = 1.0;
    return {std::move(labels), std::move(amp)};
}

StateVector StateVector::product(std::vector<QubitId> labels, const std::vector<Vector>& kets) {
    check_capacity(labels.size());
    if (kets.size() != labels.size()) throw Error("ket count does not match label count");
    Vector amp = Vector::Ones(1);
    for (const auto& k : kets) {
        Vector next(amp.size() * 2);
        for (Eigen::Index i = 0; i < amp.size(); ++i) {
            next(2 * i) = amp(i) * k(0);
            next(2 * i + 1) = amp(i) * k(1);
        }
        amp = std::move(next);
    }
    return {std::move(labels), std::move(amp)};
}

bool StateVector::contains(const QubitId& q) const {
    return std::find(labels_.begin(), labels_.end(), q) != labels_.end();
}

std::size_t StateVector::slot(const QubitId& q) const {
    auto it = std::find(labels_.begin(), labels_.end(), q);
    if (it == labels_.end()) throw UnknownQubitError("unknown qubit '" + q + "'");
    return static_cast<std::size_t>(it - labels_.begin());
}

void StateVector::append(const QubitId& q, const Vector& ket) {
    if (contains(q)) throw Error("qubit '" + q + "' already present");
    check_capacity(labels_.size() + 1);
    Vector next(amplitudes_.size() * 2);
    for (Eigen::Index i = 0; i < amplitudes_.size(); ++i) {
        next(2 * i) = amplitudes_(i) * ket(0);
        next(2 * i + 1) = amplitudes_(i) * ket(1);
    }
    amplitudes_ = std::move(next);
    labels_.push_back(q);
}

StateVector StateVector::reordered(const std::vector<QubitId>& order) const {
    if (order.size() != labels_.size()) throw Error("reorder: label sets differ");
    const std::size_t n = labels_.size();
    std::vector<std::size_t> src(n);
    for (std::size_t i = 0; i < n; ++i) src[i] = slot(order[i]);
    Vector out(amplitudes_.size());
    for (std::size_t idx = 0; idx < static_cast<std::size_t>(amplitudes_.size()); ++idx) {
        std::size_t old = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if ((idx >> bit_of(i, n)) & 1U) old |= std::size_t{1} << bit_of(src[i], n);
        }
        out(static_cast<Eigen::Index>(idx)) = amplitudes_(static_cast<Eigen::Index>(old));
    }
    return {order, std::move(out)};
}

char pauli_char(Pauli p) {
    switch (p) {
        case Pauli::I: return 'I';
        case Pauli::X: return 'X';
        case Pauli::Y: return 'Y';
        case Pauli::Z: return 'Z';
    }
    return '?';
}

Pauli pauli_from_char(char c) {
    switch (c) {
        case 'I': return Pauli::I;
        case 'X': return Pauli::X;
        case 'Y': return Pauli::Y;
        case 'Z': return Pauli::Z;
        default: throw Error(std::string("not a Pauli letter: ") + c);
    }
}

namespace {

// Single-qubit product a*b = phase * c.
std::pair<Complex, Pauli> pauli_product(Pauli a, Pauli b) {
    if (a == Pauli::I) return {1.0, b};
    if (b == Pauli::I) return {1.0, a};
    if (a == b) return {1.0, Pauli::I};
    const Complex i(0.0, 1.0);
    auto idx = [](Pauli p) { return static_cast<int>(p); };  // X=1, Y=2, Z=3
    int x = idx(a);
    int y = idx(b);
    Pauli c = static_cast<Pauli>(6 - x - y);
    bool cyclic = (y - x + 3) % 3 == 1;
    return {cyclic ? i : -i, c};
}

}  // namespace

Pauli PauliString::at(const QubitId& q) const {
    auto it = ops.find(q);
    return it == ops.end() ? Pauli::I : it->second;
}

void PauliString::set(const QubitId& q, Pauli p) {
    if (p == Pauli::I) {
        ops.erase(q);
    } else {
        ops[q] = p;
    }
}

void PauliString::multiply_on(const QubitId& q, Pauli p) {
    auto [ph, r] = pauli_product(p, at(q));
    phase *= ph;
    set(q, r);
}

std::vector<QubitId> PauliString::support() const {
    std::vector<QubitId> out;
    for (const auto& [q, p] : ops) {
        if (p != Pauli::I) out.push_back(q);
    }
    return out;
}

std::string PauliString::to_string() const {
    std::string s;
    if (std::abs(phase - Complex(1, 0)) < 1e-12) {
        s = "+";
    } else if (std::abs(phase - Complex(-1, 0)) < 1e-12) {
        s = "-";
    } else if (std::abs(phase - Complex(0, 1)) < 1e-12) {
        s = "+i";
    } else if (std::abs(phase - Complex(0, -1)) < 1e-12) {
        s = "-i";
    } else {
        s = "?";
    }
    for (const auto& [q, p] : ops) {
        s += ' ';
        s += pauli_char(p);
        s += "(" + q + ")";
    }
    return s;
}

PauliString operator*(const PauliString& lhs, const PauliString& rhs) {
    PauliString out = rhs;
    out.phase = lhs.phase * rhs.phase;
    for (const auto& [q, p] : lhs.ops) out.multiply_on(q, p);
    return out;
}

bool operator==(const PauliString& lhs, const PauliString& rhs) {
    return lhs.ops == rhs.ops && std::abs(lhs.phase - rhs.phase) < 1e-12;
}

namespace gates {

Matrix identity(std::size_t qubits) {
    const Eigen::Index d = Eigen::Index{1} << qubits;
    return Matrix::Identity(d, d);
}

Matrix pauli(Pauli p) {
    Matrix m(2, 2);
    const Complex i(0.0, 1.0);
    switch (p) {
        case Pauli::I: m << 1, 0, 0, 1; break;
        case Pauli::X: m << 0, 1, 1, 0; break;
        case Pauli::Y: m << 0, -i, i, 0; break;
        case Pauli::Z: m << 1, 0, 0, -1; break;
    }
    return m;
}

Matrix hadamard() {
    Matrix m(2, 2);
    m << 1, 1, 1, -1;
    return m / std::sqrt(2.0);
}

Matrix phase(double alpha) {
    Matrix m = Matrix::Identity(2, 2);
    m(1, 1) = std::polar(1.0, alpha);
    return m;
}

Matrix cz() {
    Matrix m = Matrix::Identity(4, 4);
    m(3, 3) = -1.0;
    return m;
}

Matrix swap() {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
    return m;
}

Matrix etilde() { return kron(hadamard(), hadamard()) * cz(); }

Matrix j(double alpha) {
    const Complex e = std::polar(1.0, alpha);
    Matrix m(2, 2);
    m << 1, e, 1, -e;
    return m / std::sqrt(2.0);
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index k = 0; k < a.cols(); ++k) {
            out.block(i * b.rows(), k * b.cols(), b.rows(), b.cols()) = a(i, k) * b;
        }
    }
    return out;
}

}  // namespace gates

Vector ket_plus(double theta, double phi) {
    Vector v(2);
    v << std::cos(theta / 2), std::polar(1.0, phi) * std::sin(theta / 2);
    return v;
}

Vector ket_minus(double theta, double phi) {
    Vector v(2);
    v << std::sin(theta / 2), -std::polar(1.0, phi) * std::cos(theta / 2);
    return v;
}

void apply_gate_inplace(StateVector& state, const Matrix& gate, const std::vector<QubitId>& targets) {
    const std::size_t k = targets.size();
    const std::size_t n = state.num_qubits();
    if (gate.rows() != gate.cols() || static_cast<std::size_t>(gate.rows()) != (std::size_t{1} << k)) {
        throw Error("gate arity does not match " + std::to_string(k) + " targets");
    }
    std::vector<std::size_t> bits(k);
    std::size_t mask = 0;
    for (std::size_t t = 0; t < k; ++t) {
        bits[t] = bit_of(state.slot(targets[t]), n);
        if (mask & (std::size_t{1} << bits[t])) throw Error("repeated gate target '" + targets[t] + "'");
        mask |= std::size_t{1} << bits[t];
    }
    const std::size_t dim = std::size_t{1} << k;
    std::vector<std::size_t> offsets(dim, 0);
    for (std::size_t sub = 0; sub < dim; ++sub) {
        for (std::size_t t = 0; t < k; ++t) {
            if ((sub >> (k - 1 - t)) & 1U) offsets[sub] |= std::size_t{1} << bits[t];
        }
    }
    Vector& amp = state.amplitudes();
    Vector local(static_cast<Eigen::Index>(dim));
    const std::size_t total = std::size_t{1} << n;
    for (std::size_t base = 0; base < total; ++base) {
        if (base & mask) continue;
        for (std::size_t sub = 0; sub < dim; ++sub) local(static_cast<Eigen::Index>(sub)) = amp(static_cast<Eigen::Index>(base | offsets[sub]));
        Vector res = gate * local;
        for (std::size_t sub = 0; sub < dim; ++sub) amp(static_cast<Eigen::Index>(base | offsets[sub])) = res(static_cast<Eigen::Index>(sub));
    }
}

StateVector apply_gate(const StateVector& state, const Matrix& gate, const std::vector<QubitId>& targets) {
    StateVector out = state;
    apply_gate_inplace(out, gate, targets);
    return out;
}

std::pair<StateVector, double> project_and_remove(const StateVector& state, const QubitId& qubit, const Vector& bra) {
    const std::size_t n = state.num_qubits();
    const std::size_t s = state.slot(qubit);
    const std::size_t b = bit_of(s, n);
    const std::size_t low = (std::size_t{1} << b) - 1;
    const Vector& amp = state.amplitudes();
    Vector out(Eigen::Index{1} << (n - 1));
    for (std::size_t idx = 0; idx < static_cast<std::size_t>(out.size()); ++idx) {
        const std::size_t hi = (idx & ~low) << 1;
        const std::size_t i0 = hi | (idx & low);
        const std::size_t i1 = i0 | (std::size_t{1} << b);
        out(static_cast<Eigen::Index>(idx)) = bra(0) * amp(static_cast<Eigen::Index>(i0)) + bra(1) * amp(static_cast<Eigen::Index>(i1));
    }
    std::vector<QubitId> labels = state.labels();
    labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(s));
    const double before = state.squared_norm();
    const double after = out.squaredNorm();
    const double weight = before > 0 ? after / before : 0.0;
    return {StateVector(std::move(labels), std::move(out)), weight};
}

Matrix pauli_string_to_operator(const PauliString& p, const std::vector<QubitId>& qubit_labels) {
    for (const auto& [q, op] : p.ops) {
        if (std::find(qubit_labels.begin(), qubit_labels.end(), q) == qubit_labels.end()) {
            throw UnknownQubitError("Pauli string acts on unhoused qubit '" + q + "'");
        }
    }
    Matrix m = Matrix::Identity(1, 1);
    for (const auto& q : qubit_labels) m = gates::kron(m, gates::pauli(p.at(q)));
    return p.phase * m;
}

bool is_unitary(const Matrix& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return ((m.adjoint() * m) - Matrix::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() <= tol;
}

double phase_insensitive_overlap(const Matrix& a, const Matrix& b) {
    const double na = a.norm();
    const double nb = b.norm();
    if (na == 0.0 || nb == 0.0) return (na == 0.0 && nb == 0.0) ? 1.0 : 0.0;
    return std::abs((a.adjoint() * b).trace()) / (na * nb);
}

bool equal_up_to_phase(const Matrix& a, const Matrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return phase_insensitive_overlap(a, b) >= 1.0 - tol;
}

Matrix fix_global_phase(const Matrix& m, double tol) {
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (std::abs(m(r, c)) > tol) return m * (std::abs(m(r, c)) / m(r, c));
        }
    }
    return m;
}

double normalize_angle(double a) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double r = std::fmod(a, two_pi);
    if (r < 0) r += two_pi;
    if (r >= two_pi) r -= two_pi;
    return r + 0.0;  // no negative zero
}

}  // namespace adqc
