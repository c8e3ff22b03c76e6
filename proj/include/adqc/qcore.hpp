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

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace adqc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using QubitId = std::string;

inline constexpr double kDefaultTol = 1e-9;
inline constexpr std::size_t kMaxQubits = 20;

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CapacityError : public Error {
public:
    using Error::Error;
};

class UnknownQubitError : public Error {
public:
    using Error::Error;
};

/// Dense pure state over an ordered list of qubit labels.
///
/// Amplitude index convention: the first label is the most significant bit.
/// States are left unnormalized during branch evolution so that the squared
/// norm carries the probability of the branch taken so far.
class StateVector {
public:
    StateVector() : amplitudes_(Vector::Ones(1)) {}
    StateVector(std::vector<QubitId> labels, Vector amplitudes);

    /// |0...0> over the given labels.
    static StateVector zeros(std::vector<QubitId> labels);
    /// Computational basis state |bits> (bits[0] belongs to labels[0]).
    static StateVector basis(std::vector<QubitId> labels, const std::vector<int>& bits);
    /// Product state of single-qubit kets, one per label.
    static StateVector product(std::vector<QubitId> labels, const std::vector<Vector>& kets);

    [[nodiscard]] const std::vector<QubitId>& labels() const { return labels_; }
    [[nodiscard]] const Vector& amplitudes() const { return amplitudes_; }
    [[nodiscard]] Vector& amplitudes() { return amplitudes_; }
    [[nodiscard]] std::size_t num_qubits() const { return labels_.size(); }
    [[nodiscard]] double norm() const { return amplitudes_.norm(); }
    [[nodiscard]] double squared_norm() const { return amplitudes_.squaredNorm(); }

    [[nodiscard]] bool contains(const QubitId& q) const;
    /// Slot of a qubit in the label list; throws UnknownQubitError.
    [[nodiscard]] std::size_t slot(const QubitId& q) const;

    /// Appends a fresh qubit in the given single-qubit state as the least significant slot.
    void append(const QubitId& q, const Vector& ket);

    /// Permutes slots so that labels() == order (same label set required).
    [[nodiscard]] StateVector reordered(const std::vector<QubitId>& order) const;

private:
    std::vector<QubitId> labels_;
    Vector amplitudes_;
};

enum class Pauli { I, X, Y, Z };

char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

/// Tensor product of single-qubit Paulis with a phase in {+1, -1, +i, -i}.
struct PauliString {
    std::map<QubitId, Pauli> ops;
    Complex phase{1.0, 0.0};

    [[nodiscard]] Pauli at(const QubitId& q) const;
    void set(const QubitId& q, Pauli p);
    /// Left-multiplies this string by a single-qubit Pauli on q, tracking phase.
    void multiply_on(const QubitId& q, Pauli p);
    [[nodiscard]] std::vector<QubitId> support() const;
    [[nodiscard]] std::string to_string() const;

    friend PauliString operator*(const PauliString& lhs, const PauliString& rhs);
    friend bool operator==(const PauliString& lhs, const PauliString& rhs);
};

namespace gates {
Matrix identity(std::size_t qubits = 1);
Matrix pauli(Pauli p);
Matrix hadamard();
Matrix phase(double alpha);
Matrix cz();
Matrix swap();
/// The ancilla-driven interaction (H (x) H) CZ.
Matrix etilde();
/// J(alpha) = 1/sqrt2 [[1, e^{i alpha}], [1, -e^{i alpha}]].
Matrix j(double alpha);
Matrix kron(const Matrix& a, const Matrix& b);
}  // namespace gates

/// |+_{theta,phi}> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
Vector ket_plus(double theta, double phi);
/// |-_{theta,phi}> = sin(theta/2)|0> - e^{i phi} cos(theta/2)|1>.
Vector ket_minus(double theta, double phi);

/// Applies `gate` on the ordered target slots. Throws on unknown qubit or arity mismatch.
StateVector apply_gate(const StateVector& state, const Matrix& gate, const std::vector<QubitId>& targets);
void apply_gate_inplace(StateVector& state, const Matrix& gate, const std::vector<QubitId>& targets);

/// Contracts `qubit` with the covector `bra` (given by its coefficients, i.e.
/// already conjugated) and removes the slot. The weight is the squared norm
/// ratio after/before, i.e. the probability of this outcome.
std::pair<StateVector, double> project_and_remove(const StateVector& state, const QubitId& qubit, const Vector& bra);

/// Dense operator of a Pauli string over `qubit_labels` (first label = most significant).
Matrix pauli_string_to_operator(const PauliString& p, const std::vector<QubitId>& qubit_labels);

bool is_unitary(const Matrix& m, double tol = kDefaultTol);

/// |tr(A^dag B)| / (|A| |B|); equals 1 iff A and B agree up to a global phase.
double phase_insensitive_overlap(const Matrix& a, const Matrix& b);
bool equal_up_to_phase(const Matrix& a, const Matrix& b, double tol = kDefaultTol);

/// Removes the global phase so that the first entry with modulus above tol is real positive.
Matrix fix_global_phase(const Matrix& m, double tol = kDefaultTol);

/// Maps an angle into [0, 2 pi).
double normalize_angle(double a);

}  // namespace adqc
