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

#include "adqc/sim.hpp"

#include <cmath>
#include <functional>

namespace adqc {

OutcomeSource OutcomeSource::sampled(std::uint64_t seed) {
    OutcomeSource s;
    s.rng_.seed(seed);
    return s;
}

OutcomeSource OutcomeSource::forced(std::vector<int> bits) {
    OutcomeSource s;
    s.forced_ = true;
    s.bits_ = std::move(bits);
    return s;
}

int OutcomeSource::next(double p0) {
    if (forced_) {
        if (pos_ >= bits_.size()) throw Error("forced branch has fewer bits than measurements");
        return bits_[pos_++] & 1;
    }
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return u(rng_) < p0 ? 0 : 1;
}

namespace {

// Applies every non-measurement command; measurements are delegated to `on_measure`.
class Machine {
public:
    explicit Machine(const Pattern& p) : p_(p) {}

    struct Frame {
        StateVector state;
        OutcomeMap outcomes;
        std::vector<int> bits;
    };

    // Runs commands from index i; at each measurement asks `choose` for the
    // outcome set to explore, and calls `done` for each completed branch.
    void explore(std::size_t i, Frame f, const std::function<std::vector<int>(const Frame&, double)>& choose,
                 const std::function<void(Frame&&)>& done) const {
        for (; i < p_.commands.size(); ++i) {
            const Command& c = p_.commands[i];
            if (const auto* m = std::get_if<cmd::Measure>(&c)) {
                if (m->t.evaluate(f.outcomes)) apply_gate_inplace(f.state, gates::pauli(Pauli::Z), {m->q});
                if (m->s.evaluate(f.outcomes)) apply_gate_inplace(f.state, gates::pauli(Pauli::X), {m->q});
                auto [theta, phi] = plane_angles(m->plane, m->angle);
                Vector bra0 = ket_plus(theta, phi).conjugate();
                Vector bra1 = ket_minus(theta, phi).conjugate();
                auto zero = project_and_remove(f.state, m->q, bra0);
                std::vector<int> picks = choose(f, zero.second);
                for (int b : picks) {
                    Frame g{b == 0 ? zero.first : project_and_remove(f.state, m->q, bra1).first, f.outcomes, f.bits};
                    g.outcomes[m->q] = b;
                    g.bits.push_back(b);
                    explore(i + 1, std::move(g), choose, done);
                }
                return;
            }
            step(c, f);
        }
        done(std::move(f));
    }

private:
    static void step(const Command& c, Frame& f) {
        if (const auto* prep = std::get_if<cmd::Prep>(&c)) {
            f.state.append(prep->q, ket_plus(prep->theta, prep->phi));
        } else if (const auto* e = std::get_if<cmd::Interact>(&c)) {
            apply_gate_inplace(f.state, gates::etilde(), {e->ancilla, e->system});
        } else if (const auto* x = std::get_if<cmd::Correct>(&c)) {
            if (x->signal.evaluate(f.outcomes)) {
                apply_gate_inplace(f.state, gates::pauli(x->axis == cmd::Axis::X ? Pauli::X : Pauli::Z), {x->q});
            }
        } else if (const auto* sh = std::get_if<cmd::Shift>(&c)) {
            auto it = f.outcomes.find(sh->q);
            if (it == f.outcomes.end()) throw Error("shift of unmeasured qubit '" + sh->q + "'");
            it->second ^= sh->signal.evaluate(f.outcomes);
        } else if (const auto* lc = std::get_if<cmd::LocalClifford>(&c)) {
            apply_gate_inplace(f.state, lc->kind == cmd::CliffordKind::H ? gates::hadamard() : gates::phase(lc->angle),
                               {lc->q});
        }
    }

    const Pattern& p_;
};

void check_input(const Pattern& p, const StateVector& input) {
    if (input.num_qubits() != p.systems.size()) throw Error("input state does not match the pattern's systems");
    for (const auto& s : p.systems) {
        if (!input.contains(s)) throw Error("input state lacks system qubit '" + s + "'");
    }
}

}  // namespace

RunResult run(const Pattern& p, const StateVector& input, OutcomeSource source) {
    check_input(p, input);
    RunResult out;
    Machine m(p);
    auto choose = [&](const Machine::Frame&, double p0) { return std::vector<int>{source.next(p0)}; };
    auto done = [&](Machine::Frame&& f) {
        out.state = f.state.reordered(p.systems);
        out.outcomes = std::move(f.outcomes);
        out.bits = std::move(f.bits);
    };
    m.explore(0, {input, {}, {}}, choose, done);
    out.impossible = out.state.squared_norm() <= 1e-300 && input.squared_norm() > 0;
    return out;
}

std::vector<Branch> enumerate_branches(const Pattern& p, const StateVector& input) {
    check_input(p, input);
    if (p.ancillas.size() > kMaxBranchAncillas) {
        throw CapacityError("branch enumeration supports at most " + std::to_string(kMaxBranchAncillas) + " ancillas");
    }
    std::vector<Branch> out;
    const double norm0 = input.squared_norm();
    Machine m(p);
    auto choose = [](const Machine::Frame&, double) { return std::vector<int>{0, 1}; };
    auto done = [&](Machine::Frame&& f) {
        double prob = norm0 > 0 ? f.state.squared_norm() / norm0 : 0.0;
        out.push_back({std::move(f.bits), f.state.reordered(p.systems), prob});
    };
    m.explore(0, {input, {}, {}}, choose, done);
    return out;
}

double CptpMap::completeness_error() const {
    Matrix sum = Matrix::Zero(static_cast<Eigen::Index>(dim()), static_cast<Eigen::Index>(dim()));
    for (const auto& b : branches) sum += b.op.adjoint() * b.op;
    return (sum - Matrix::Identity(sum.rows(), sum.cols())).cwiseAbs().maxCoeff();
}

CptpMap kraus_map(const Pattern& p) {
    const std::size_t n = p.systems.size();
    if (n > kMaxKrausSystems || p.ancillas.size() > kMaxKrausAncillas) {
        throw CapacityError("Kraus extraction supports at most " + std::to_string(kMaxKrausSystems) + " systems and " +
                            std::to_string(kMaxKrausAncillas) + " ancillas");
    }
    std::vector<QubitId> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("#ref" + std::to_string(i));
    std::vector<QubitId> refs = labels;
    labels.insert(labels.end(), p.systems.begin(), p.systems.end());
    const std::size_t d = std::size_t{1} << n;
    Vector amp = Vector::Zero(static_cast<Eigen::Index>(d * d));
    for (std::size_t k = 0; k < d; ++k) amp(static_cast<Eigen::Index>(k * d + k)) = 1.0;
    StateVector input(labels, std::move(amp));

    CptpMap out;
    out.num_qubits = n;
    Machine m(p);
    auto choose = [](const Machine::Frame&, double) { return std::vector<int>{0, 1}; };
    auto done = [&](Machine::Frame&& f) {
        StateVector st = f.state.reordered(labels);
        Matrix k(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
        for (std::size_t col = 0; col < d; ++col) {
            for (std::size_t row = 0; row < d; ++row) {
                k(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) =
                    st.amplitudes()(static_cast<Eigen::Index>(col * d + row));
            }
        }
        double w = (k.adjoint() * k).trace().real() / static_cast<double>(d);
        out.branches.push_back({std::move(f.bits), std::move(k), w});
    };
    m.explore(0, {input, {}, {}}, choose, done);
    return out;
}

Matrix choi(const CptpMap& m) {
    const auto d = static_cast<Eigen::Index>(m.dim());
    Matrix j = Matrix::Zero(d * d, d * d);
    for (const auto& b : m.branches) {
        Vector v(d * d);
        for (Eigen::Index c = 0; c < d; ++c) {
            for (Eigen::Index r = 0; r < d; ++r) v(c * d + r) = b.op(r, c);
        }
        j += v * v.adjoint();
    }
    return j;
}

double choi_distance(const CptpMap& a, const CptpMap& b) {
    if (a.num_qubits != b.num_qubits) throw Error("Choi comparison of maps on different dimensions");
    return (choi(a) - choi(b)).cwiseAbs().maxCoeff();
}

CptpMap compose_maps(const CptpMap& second, const CptpMap& first) {
    if (second.num_qubits != first.num_qubits) throw Error("composition of maps on different dimensions");
    CptpMap out;
    out.num_qubits = first.num_qubits;
    for (const auto& b1 : first.branches) {
        for (const auto& b2 : second.branches) {
            BranchMap b;
            b.bits = b1.bits;
            b.bits.insert(b.bits.end(), b2.bits.begin(), b2.bits.end());
            b.op = b2.op * b1.op;
            b.weight = (b.op.adjoint() * b.op).trace().real() / static_cast<double>(out.dim());
            out.branches.push_back(std::move(b));
        }
    }
    return out;
}

CptpMap tensor_maps(const CptpMap& a, const CptpMap& b) {
    CptpMap out;
    out.num_qubits = a.num_qubits + b.num_qubits;
    for (const auto& x : a.branches) {
        for (const auto& y : b.branches) {
            BranchMap m;
            m.bits = x.bits;
            m.bits.insert(m.bits.end(), y.bits.begin(), y.bits.end());
            m.op = gates::kron(x.op, y.op);
            m.weight = x.weight * y.weight;
            out.branches.push_back(std::move(m));
        }
    }
    return out;
}

Matrix apply_cptp(const CptpMap& m, const Matrix& rho) {
    const auto d = static_cast<Eigen::Index>(m.dim());
    if (rho.rows() != d || rho.cols() != d) throw Error("density matrix dimension does not match the map");
    Matrix out = Matrix::Zero(d, d);
    for (const auto& b : m.branches) out += b.op * rho * b.op.adjoint();
    return out;
}

DeterminismResult is_strongly_deterministic(const CptpMap& m, double tol) {
    DeterminismResult out;
    const BranchMap* ref = nullptr;
    for (const auto& b : m.branches) {
        if (b.weight <= tol) continue;
        if (!ref) {
            ref = &b;
            continue;
        }
        out.min_overlap = std::min(out.min_overlap, phase_insensitive_overlap(ref->op, b.op));
    }
    if (!ref) return out;
    out.deterministic = out.min_overlap >= 1.0 - tol;
    if (out.deterministic) {
        const double scale = std::sqrt(static_cast<double>(m.dim())) / ref->op.norm();
        out.unitary = fix_global_phase(ref->op * scale, tol);
    }
    return out;
}

DeterminismResult is_strongly_deterministic(const Pattern& p, double tol) {
    return is_strongly_deterministic(kraus_map(p), tol);
}

}  // namespace adqc
