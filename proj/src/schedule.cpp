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

#include "qgo/schedule.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qgo {

unsigned AnnealSchedule::steps() const {
    if (!(T > 0.0) || !std::isfinite(T)) {
        throw std::invalid_argument("annealing time T must be positive");
    }
    if (!(dt > 0.0) || !std::isfinite(dt)) {
        throw std::invalid_argument("Trotter step dt must be positive");
    }
    const double m = std::round(T / dt);
    if (m < 1.0 || std::abs(m * dt - T) > 1e-9) {
        throw std::invalid_argument("T = " + std::to_string(T) +
                                    " is not an integer multiple of dt = " +
                                    std::to_string(dt));
    }
    return static_cast<unsigned>(m);
}

void AnnealSchedule::validate() const {
    steps();
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw std::invalid_argument("schedule prefactors must be finite");
    }
    for (double ci : c) {
        if (!std::isfinite(ci)) {
            throw std::invalid_argument("CD coefficients must be finite");
        }
    }
}

ScheduleValues schedule_values(const AnnealSchedule &sched, double t) {
    if (!(t >= 0.0 && t <= sched.T)) {
        throw std::invalid_argument("schedule time " + std::to_string(t) +
                                    " outside [0, T]");
    }
    ScheduleValues v;
    const double s = t / sched.T;
    v.A = sched.a * s;
    v.B = sched.b * (1.0 - s);
    // sin(pi) is not exactly zero in floating point; pin the endpoints.
    double envelope = 0.0;
    if (t > 0.0 && t < sched.T) {
        const double sn = std::sin(std::numbers::pi * s);
        envelope = sn * sn;
    }
    v.C.resize(sched.c.size());
    for (std::size_t i = 0; i < sched.c.size(); ++i) {
        v.C[i] = sched.c[i] * envelope;
    }
    return v;
}

Circuit build_trotter_circuit(const IsingInstance &instance,
                              const AnnealSchedule &sched, bool prune) {
    const unsigned n = instance.size();
    if (sched.c.size() != n) {
        throw std::invalid_argument(
            "schedule has " + std::to_string(sched.c.size()) +
            " CD coefficients but the instance has " + std::to_string(n) +
            " spins");
    }
    sched.validate();
    const unsigned steps = sched.steps();
    const double dt = sched.dt;

    Circuit circuit;
    circuit.num_qubits = n;
    auto push_rotation = [&](Gate g) {
        if (!prune || std::abs(g.angle) >= kPruneThreshold) {
            circuit.gates.push_back(g);
        }
    };

    for (unsigned q = 0; q < n; ++q) {
        circuit.gates.push_back(Gate::h(q));
    }
    for (unsigned k = 0; k < steps; ++k) {
        circuit.step_offsets.push_back(circuit.gates.size());
        const ScheduleValues v = schedule_values(sched, k * dt);

        // U_z: exp(-i A dt H^z); each coupling is CX RZ CX.
        for (const Coupling &c : instance.couplings()) {
            const double angle = -2.0 * v.A * c.value * dt;
            if (prune && std::abs(angle) < kPruneThreshold) {
                continue;
            }
            circuit.gates.push_back(Gate::cx(c.i, c.j));
            circuit.gates.push_back(Gate::rz(c.j, angle));
            circuit.gates.push_back(Gate::cx(c.i, c.j));
        }
        const auto h = instance.fields();
        for (unsigned i = 0; i < n; ++i) {
            push_rotation(Gate::rz(i, -2.0 * v.A * h[i] * dt));
        }
        // U_x: exp(-i B dt H^x)
        for (unsigned i = 0; i < n; ++i) {
            push_rotation(Gate::rx(i, -2.0 * v.B * dt));
        }
        // U_y: exp(-i sum_i C_i dt H^y_i)
        for (unsigned i = 0; i < n; ++i) {
            push_rotation(Gate::ry(i, -2.0 * v.C[i] * dt));
        }
    }
    circuit.step_offsets.push_back(circuit.gates.size());
    return circuit;
}

StateVector run_circuit(const Circuit &circuit) {
    StateVector state(circuit.num_qubits);
    for (const Gate &g : circuit.gates) {
        apply_gate(state, g);
    }
    return state;
}

namespace {

std::string format_angle(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

} // namespace

std::string export_openqasm(const Circuit &circuit) {
    std::string out = "OPENQASM 3.0;\ninclude \"stdgates.inc\";\n";
    out += "qubit[" + std::to_string(circuit.num_qubits) + "] q;\n";
    for (const Gate &g : circuit.gates) {
        const std::string target = "q[" + std::to_string(g.target) + "]";
        switch (g.kind) {
        case GateKind::H:
            out += "h " + target + ";\n";
            break;
        case GateKind::RX:
        case GateKind::RY:
        case GateKind::RZ:
            out += std::string(gate_name(g.kind)) + "(" +
                   format_angle(g.angle) + ") " + target + ";\n";
            break;
        case GateKind::CX:
            out += "cx q[" + std::to_string(g.control) + "], " + target +
                   ";\n";
            break;
        }
    }
    return out;
}

} // namespace qgo
