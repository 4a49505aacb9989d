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

/**
 * @file
 * Dense statevector simulation for the annealing gate set {H, RX, RY, RZ,
 * CX}, problem-energy expectation values and Born-rule sampling.
 *
 * Rotations use the half-angle convention RX(t) = exp(-i t X / 2), and
 * likewise for RY and RZ.
 */

#pragma once

#include "qgo/ising.hpp"
#include "qgo/kernels.hpp"
#include "qgo/rng.hpp"

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace qgo {

using Complex = std::complex<double>;
using kernels::Mat2;

class StateVector {
  public:
    /// |0...0> on n qubits.
    explicit StateVector(unsigned num_qubits,
                         unsigned max_qubits = kMaxQubits);
    StateVector(unsigned num_qubits, std::vector<Complex> amplitudes);

    unsigned num_qubits() const { return num_qubits_; }
    std::size_t dimension() const { return amplitudes_.size(); }

    std::span<const Complex> amplitudes() const { return amplitudes_; }
    std::span<Complex> amplitudes() { return amplitudes_; }
    const Complex &operator[](std::size_t b) const { return amplitudes_[b]; }

    double norm_squared() const;
    void normalize();
    std::vector<double> probabilities() const;

    /// Multiply every amplitude by a unit scalar.
    void apply_global_phase(Complex phase);

  private:
    unsigned num_qubits_;
    std::vector<Complex> amplitudes_;
};

enum class GateKind { H, RX, RY, RZ, CX };

std::string_view gate_name(GateKind kind);

struct Gate {
    GateKind kind = GateKind::H;
    unsigned target = 0;
    unsigned control = 0;  ///< CX only
    double angle = 0.0;    ///< rotations only

    static Gate h(unsigned q) { return {GateKind::H, q, 0, 0.0}; }
    static Gate rx(unsigned q, double t) { return {GateKind::RX, q, 0, t}; }
    static Gate ry(unsigned q, double t) { return {GateKind::RY, q, 0, t}; }
    static Gate rz(unsigned q, double t) { return {GateKind::RZ, q, 0, t}; }
    static Gate cx(unsigned c, unsigned t) { return {GateKind::CX, t, c, 0.0}; }

    friend bool operator==(const Gate &, const Gate &) = default;
};

Mat2 hadamard_matrix();
Mat2 rx_matrix(double angle);
Mat2 ry_matrix(double angle);
Mat2 rz_matrix(double angle);

/// Product a * b (apply b first).
Mat2 matmul(const Mat2 &a, const Mat2 &b);

/// Throws std::invalid_argument for indices out of range, control == target
/// or a non-finite angle.
void validate_gate(const Gate &gate, unsigned num_qubits);

void apply_gate(StateVector &state, const Gate &gate);
void apply_single_qubit(StateVector &state, unsigned target, const Mat2 &m);

/// psi[b] <- psi[b] * phases[b].
void apply_diagonal(StateVector &state, std::span<const Complex> phases);

/// Uniform superposition |+...+>.
StateVector init_plus_state(unsigned num_qubits,
                            unsigned max_qubits = kMaxQubits);

/// sum_b |psi_b|^2 energies[b].
double expectation_diagonal(const StateVector &state,
                            std::span<const double> energies);

/// <psi| H^z |psi> for the instance's problem Hamiltonian.
double expectation_problem_energy(const StateVector &state,
                                  const IsingInstance &instance);

/// i.i.d. Born-rule draws of basis indices.
std::vector<std::uint64_t> sample_bitstrings(const StateVector &state,
                                             std::size_t shots, Rng &rng);

/// |<a|b>|^2
double fidelity(const StateVector &a, const StateVector &b);

} // namespace qgo
