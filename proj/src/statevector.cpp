// Copyright 2026 The qgo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qgo/statevector.hpp"

#include "qgo/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qgo {

namespace {

void check_qubit_count(unsigned n, unsigned max_qubits) {
    if (n < 1) {
        throw std::invalid_argument("a state needs at least one qubit");
    }
    if (n > max_qubits) {
        throw CapacityError(std::to_string(n) +
                            " qubits exceeds the configured maximum of " +
                            std::to_string(max_qubits));
    }
}

} // namespace

StateVector::StateVector(unsigned num_qubits, unsigned max_qubits)
    : num_qubits_(num_qubits) {
    check_qubit_count(num_qubits, std::min(max_qubits, 63U));
    amplitudes_.assign(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
    amplitudes_[0] = 1.0;
}

StateVector::StateVector(unsigned num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    check_qubit_count(num_qubits, kMaxQubits);
    if (amplitudes_.size() != (std::size_t{1} << num_qubits)) {
        throw std::invalid_argument(
            "expected " + std::to_string(std::size_t{1} << num_qubits) +
            " amplitudes, got " + std::to_string(amplitudes_.size()));
    }
}

double StateVector::norm_squared() const {
    double s = 0.0;
    for (const Complex &a : amplitudes_) {
        s += std::norm(a);
    }
    return s;
}

void StateVector::normalize() {
    const double norm = std::sqrt(norm_squared());
    if (norm == 0.0) {
        throw std::domain_error("cannot normalize the zero vector");
    }
    const double inv = 1.0 / norm;
    for (Complex &a : amplitudes_) {
        a *= inv;
    }
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amplitudes_.size());
    std::transform(amplitudes_.begin(), amplitudes_.end(), p.begin(),
                   [](const Complex &a) { return std::norm(a); });
    return p;
}

void StateVector::apply_global_phase(Complex phase) {
    for (Complex &a : amplitudes_) {
        a *= phase;
    }
}

std::string_view gate_name(GateKind kind) {
    switch (kind) {
    case GateKind::H:
        return "h";
    case GateKind::RX:
        return "rx";
    case GateKind::RY:
        return "ry";
    case GateKind::RZ:
        return "rz";
    case GateKind::CX:
        return "cx";
    }
    return "?";
}

Mat2 hadamard_matrix() {
    const double r = 1.0 / std::sqrt(2.0);
    return {r, r, r, -r};
}

Mat2 rx_matrix(double angle) {
    const double c = std::cos(angle / 2), s = std::sin(angle / 2);
    return {Complex(c, 0), Complex(0, -s), Complex(0, -s), Complex(c, 0)};
}

Mat2 ry_matrix(double angle) {
    const double c = std::cos(angle / 2), s = std::sin(angle / 2);
    return {Complex(c, 0), Complex(-s, 0), Complex(s, 0), Complex(c, 0)};
}

Mat2 rz_matrix(double angle) {
    const double c = std::cos(angle / 2), s = std::sin(angle / 2);
    return {Complex(c, -s), Complex(0, 0), Complex(0, 0), Complex(c, s)};
}

Mat2 matmul(const Mat2 &a, const Mat2 &b) {
    return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
            a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
}

void validate_gate(const Gate &gate, unsigned num_qubits) {
    if (gate.target >= num_qubits) {
        throw std::invalid_argument("gate target " +
                                    std::to_string(gate.target) +
                                    " out of range for " +
                                    std::to_string(num_qubits) + " qubits");
    }
    if (gate.kind == GateKind::CX) {
        if (gate.control >= num_qubits) {
            throw std::invalid_argument(
                "gate control " + std::to_string(gate.control) +
                " out of range for " + std::to_string(num_qubits) + " qubits");
        }
        if (gate.control == gate.target) {
            throw std::invalid_argument("CX control and target coincide");
        }
    }
    if (!std::isfinite(gate.angle)) {
        throw std::invalid_argument("gate angle must be finite");
    }
}

void apply_single_qubit(StateVector &state, unsigned target, const Mat2 &m) {
    if (target >= state.num_qubits()) {
        throw std::invalid_argument("target qubit out of range");
    }
    kernels::active().apply_single(state.amplitudes().data(), state.dimension(),
                                   target, m);
}

void apply_gate(StateVector &state, const Gate &gate) {
    validate_gate(gate, state.num_qubits());
    const auto &k = kernels::active();
    Complex *psi = state.amplitudes().data();
    const std::size_t dim = state.dimension();
    switch (gate.kind) {
    case GateKind::H:
        k.apply_single(psi, dim, gate.target, hadamard_matrix());
        break;
    case GateKind::RX:
        k.apply_single(psi, dim, gate.target, rx_matrix(gate.angle));
        break;
    case GateKind::RY:
        k.apply_single(psi, dim, gate.target, ry_matrix(gate.angle));
        break;
    case GateKind::RZ:
        k.apply_single(psi, dim, gate.target, rz_matrix(gate.angle));
        break;
    case GateKind::CX:
        k.apply_cx(psi, dim, gate.control, gate.target);
        break;
    }
}

void apply_diagonal(StateVector &state, std::span<const Complex> phases) {
    if (phases.size() != state.dimension()) {
        throw std::invalid_argument("diagonal length does not match state");
    }
    kernels::active().apply_diagonal(state.amplitudes().data(), phases.data(),
                                     state.dimension());
}

StateVector init_plus_state(unsigned num_qubits, unsigned max_qubits) {
    StateVector state(num_qubits, max_qubits);
    const double amp = std::pow(2.0, -0.5 * num_qubits);
    std::fill(state.amplitudes().begin(), state.amplitudes().end(),
              Complex(amp, 0.0));
    return state;
}

double expectation_diagonal(const StateVector &state,
                            std::span<const double> energies) {
    if (energies.size() != state.dimension()) {
        throw std::invalid_argument("energy table length does not match state");
    }
    double e = 0.0;
    for (std::size_t b = 0; b < energies.size(); ++b) {
        e += std::norm(state[b]) * energies[b];
    }
    return e;
}

double expectation_problem_energy(const StateVector &state,
                                  const IsingInstance &instance) {
    if (instance.size() != state.num_qubits()) {
        throw std::invalid_argument(
            "instance has " + std::to_string(instance.size()) +
            " spins but the state has " + std::to_string(state.num_qubits()) +
            " qubits");
    }
    return expectation_diagonal(state, diagonal_energies(instance));
}

std::vector<std::uint64_t> sample_bitstrings(const StateVector &state,
                                             std::size_t shots, Rng &rng) {
    if (shots == 0) {
        throw std::invalid_argument("shots must be at least 1");
    }
    std::vector<double> cumulative = state.probabilities();
    std::partial_sum(cumulative.begin(), cumulative.end(), cumulative.begin());
    const double total = cumulative.back();
    std::uniform_real_distribution<double> uniform(0.0, total);
    const auto last = static_cast<std::uint64_t>(cumulative.size() - 1);
    std::vector<std::uint64_t> out(shots);
    for (auto &b : out) {
        const double u = uniform(rng);
        const auto it =
            std::upper_bound(cumulative.begin(), cumulative.end(), u);
        b = std::min(static_cast<std::uint64_t>(it - cumulative.begin()), last);
    }
    return out;
}

double fidelity(const StateVector &a, const StateVector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("fidelity of states with different sizes");
    }
    Complex overlap{0.0, 0.0};
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        overlap += std::conj(a[i]) * b[i];
    }
    return std::min(1.0, std::norm(overlap));
}

} // namespace qgo
