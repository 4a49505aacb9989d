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
 * Final annealed state psi(T) from |+...+>, either by the Trotterized
 * circuit (discrete engine) or by RK4 integration of the Schrodinger
 * equation (continuous engine).
 *
 * The discrete engine has two executions of the same product formula:
 * gate-by-gate through build_trotter_circuit, and a fused form that applies
 * U_z as one diagonal phase pass and RY*RX as one 2x2 pass per qubit. They
 * agree to rounding; trotter_evolve uses the fused form.
 */

#pragma once

#include "qgo/ising.hpp"
#include "qgo/schedule.hpp"
#include "qgo/statevector.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace qgo {

inline constexpr double kDefaultOdeStep = 1e-3;

struct OdeStats {
    std::size_t steps = 0;
    double step = 0.0;
    double norm_squared_before_renormalization = 1.0;
};

/// Binds an instance to its precomputed diagonal so repeated evolutions
/// with different schedules share the 2^n energy table.
class Evolver {
  public:
    explicit Evolver(IsingInstance instance);

    const IsingInstance &instance() const { return instance_; }
    std::span<const double> energies() const { return energies_; }

    StateVector trotter(const AnnealSchedule &sched) const;
    StateVector trotter_gates(const AnnealSchedule &sched) const;
    StateVector ode(const AnnealSchedule &sched,
                    double dt_int = kDefaultOdeStep,
                    OdeStats *stats = nullptr) const;

  private:
    void check_schedule(const AnnealSchedule &sched) const;

    IsingInstance instance_;
    std::vector<double> energies_;
};

StateVector trotter_evolve(const IsingInstance &instance,
                           const AnnealSchedule &sched);

StateVector ode_evolve(const IsingInstance &instance,
                       const AnnealSchedule &sched,
                       double dt_int = kDefaultOdeStep,
                       OdeStats *stats = nullptr);

} // namespace qgo
