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

#include "qgo/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qgo {

Evolver::Evolver(IsingInstance instance)
    : instance_(std::move(instance)), energies_(diagonal_energies(instance_)) {}

void Evolver::check_schedule(const AnnealSchedule &sched) const {
    if (sched.c.size() != instance_.size()) {
        throw std::invalid_argument(
            "schedule has " + std::to_string(sched.c.size()) +
            " CD coefficients but the instance has " +
            std::to_string(instance_.size()) + " spins");
    }
    sched.validate();
}

StateVector Evolver::trotter(const AnnealSchedule &sched) const {
    check_schedule(sched);
    const unsigned n = instance_.size();
    const unsigned steps = sched.steps();
    const double dt = sched.dt;

    StateVector state = init_plus_state(n);
    std::vector<Complex> phases(state.dimension());
    for (unsigned k = 0; k < steps; ++k) {
        const ScheduleValues v = schedule_values(sched, k * dt);

        if (v.A != 0.0) {
            const double theta = v.A * dt;
            for (std::size_t b = 0; b < phases.size(); ++b) {
                const double x = theta * energies_[b];
                phases[b] = Complex(std::cos(x), -std::sin(x));
            }
            apply_diagonal(state, phases);
        }

        const double x_angle = -2.0 * v.B * dt;
        const bool has_x = std::abs(x_angle) >= kPruneThreshold;
        const Mat2 rx = rx_matrix(x_angle);
        for (unsigned i = 0; i < n; ++i) {
            const double y_angle = -2.0 * v.C[i] * dt;
            const bool has_y = std::abs(y_angle) >= kPruneThreshold;
            if (has_x && has_y) {
                apply_single_qubit(state, i, matmul(ry_matrix(y_angle), rx));
            } else if (has_x) {
                apply_single_qubit(state, i, rx);
            } else if (has_y) {
                apply_single_qubit(state, i, ry_matrix(y_angle));
            }
        }
    }
    return state;
}

StateVector Evolver::trotter_gates(const AnnealSchedule &sched) const {
    return run_circuit(build_trotter_circuit(instance_, sched));
}

StateVector Evolver::ode(const AnnealSchedule &sched, double dt_int,
                         OdeStats *stats) const {
    check_schedule(sched);
    if (!(dt_int > 0.0) || !std::isfinite(dt_int)) {
        throw std::invalid_argument("integrator step must be positive");
    }
    if (dt_int > sched.dt + 1e-12) {
        throw std::invalid_argument(
            "integrator step " + std::to_string(dt_int) +
            " exceeds the Trotter step " + std::to_string(sched.dt));
    }
    const unsigned n = instance_.size();
    const std::size_t steps =
        static_cast<std::size_t>(std::ceil(sched.T / dt_int - 1e-9));
    const double h = sched.T / static_cast<double>(steps);

    StateVector state = init_plus_state(n);
    const std::size_t dim = state.dimension();
    std::vector<Complex> k1(dim), k2(dim), k3(dim), k4(dim), tmp(dim);
    const auto &kern = kernels::active();

    // out = -i H(t) psi
    auto derivative = [&](double t, const Complex *psi, Complex *out) {
        const ScheduleValues v = schedule_values(sched, std::min(t, sched.T));
        kern.diagonal_derivative(psi, energies_.data(), v.A, out, dim);
        for (unsigned i = 0; i < n; ++i) {
            if (v.B == 0.0 && v.C[i] == 0.0) {
                continue;
            }
            // -i (-B X - C_i Y) in the computational basis.
            kern.offdiagonal_accumulate(psi, out, dim, i,
                                        Complex(v.C[i], v.B),
                                        Complex(-v.C[i], v.B));
        }
    };

    Complex *psi = state.amplitudes().data();
    for (std::size_t s = 0; s < steps; ++s) {
        const double t = static_cast<double>(s) * h;
        derivative(t, psi, k1.data());
        kern.axpy(psi, k1.data(), h / 2, tmp.data(), dim);
        derivative(t + h / 2, tmp.data(), k2.data());
        kern.axpy(psi, k2.data(), h / 2, tmp.data(), dim);
        derivative(t + h / 2, tmp.data(), k3.data());
        kern.axpy(psi, k3.data(), h, tmp.data(), dim);
        derivative(t + h, tmp.data(), k4.data());
        kern.rk4_combine(psi, k1.data(), k2.data(), k3.data(), k4.data(),
                         h / 6, dim);
    }

    const double norm2 = state.norm_squared();
    state.normalize();
    if (stats != nullptr) {
        stats->steps = steps;
        stats->step = h;
        stats->norm_squared_before_renormalization = norm2;
    }
    return state;
}

StateVector trotter_evolve(const IsingInstance &instance,
                           const AnnealSchedule &sched) {
    return Evolver(instance).trotter(sched);
}

StateVector ode_evolve(const IsingInstance &instance,
                       const AnnealSchedule &sched, double dt_int,
                       OdeStats *stats) {
    return Evolver(instance).ode(sched, dt_int, stats);
}

} // namespace qgo
