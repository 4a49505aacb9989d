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
 * Annealing schedules with a counterdiabatic y-field and their first-order
 * Trotterized circuits.
 *
 *     H(t) = A(t) H^z + B(t) H^x + sum_i C_i(t) H^y_i
 *     A(t) = a t / T,  B(t) = b (1 - t / T),  C_i(t) = c_i sin^2(pi t / T)
 *     H^x = -sum_i X_i,  H^y_i = -Y_i
 *
 * One Trotter step at t_k = k dt applies U_z, then U_x, then U_y.
 */

#pragma once

#include "qgo/ising.hpp"
#include "qgo/statevector.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace qgo {

struct AnnealSchedule {
    double a = 1.0;
    double b = 1.0;
    std::vector<double> c;
    double T = 1.0;
    double dt = 0.1;

    /// Trotter number M = T / dt; throws std::invalid_argument unless
    /// T > 0, dt > 0 and |M dt - T| <= 1e-9.
    unsigned steps() const;
    void validate() const;
};

struct ScheduleValues {
    double A = 0.0;
    double B = 0.0;
    std::vector<double> C;
};

ScheduleValues schedule_values(const AnnealSchedule &sched, double t);

/// Gates whose rotation angle magnitude falls below this are dropped.
inline constexpr double kPruneThreshold = 1e-12;

struct Circuit {
    unsigned num_qubits = 0;
    std::vector<Gate> gates;
    /// gates[step_offsets[k] .. step_offsets[k+1]) is Trotter step k; the
    /// Hadamard layer precedes step_offsets[0].
    std::vector<std::size_t> step_offsets;
};

Circuit build_trotter_circuit(const IsingInstance &instance,
                              const AnnealSchedule &sched,
                              bool prune = true);

/// Gate-by-gate execution from |0...0>.
StateVector run_circuit(const Circuit &circuit);

/// OpenQASM 3 text; angles are printed as shortest round-trip decimals.
std::string export_openqasm(const Circuit &circuit);

} // namespace qgo
