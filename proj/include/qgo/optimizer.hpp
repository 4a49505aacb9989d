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
 * Greedy sign determination of the counterdiabatic coefficients.
 *
 * Starting from c = 0, every round estimates the forward difference
 *
 *     g_j = (E(c + delta_c e_j) - E(c)) / delta_c,   E(c) = <psi(T)|H^z|psi(T)>
 *
 * for each unset component j, fixes the component with the largest |g_j| to
 * -c_opt sgn(g_j) and repeats until every component is set. The returned
 * spin configuration is sgn(c).
 *
 * Energies are either exact expectations (shots = 0) or means of the
 * classical energy over Born-rule samples. Each evaluation draws from its
 * own substream derived from (seed, round, component), so results do not
 * depend on evaluation order.
 */

#pragma once

#include "qgo/evolution.hpp"
#include "qgo/ising.hpp"
#include "qgo/schedule.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qgo {

enum class Engine { Trotter, Ode };

struct QgoConfig {
    double delta_c = 0.1;
    double c_opt = 1.0;
    double b_opt = 1.0;
    double T = 1.0;
    double dt = 0.1;
    std::uint64_t shots = 0;  ///< 0 = exact expectation
    Engine engine = Engine::Trotter;
    std::uint64_t seed = 0;
    double ode_dt = kDefaultOdeStep;
    /// Reuse the baseline's sample stream for the forward evaluations
    /// (common random numbers). Off by default.
    bool shared_noise = false;

    void validate() const;
};

struct EnergyEstimate {
    double energy = 0.0;
    std::uint64_t shots_used = 0;
};

struct GradientRecord {
    std::size_t iteration = 0;
    std::size_t component = 0;
    double g = 0.0;
    double baseline_energy = 0.0;
    double forward_energy = 0.0;
    /// Forward evaluation, plus the baseline when it was computed here.
    std::uint64_t shots_used = 0;
};

struct QgoResult {
    SpinConfig signs;
    std::vector<double> final_c;
    std::vector<GradientRecord> trace;
    std::size_t total_energy_evaluations = 0;
    std::uint64_t total_shots = 0;
    std::vector<std::string> warnings;
};

/// Gradients below this magnitude count as exactly zero for sgn().
inline constexpr double kZeroGradient = 1e-15;

/// Energy estimation bound to one instance; owns the 2^n energy table.
class EnergyEstimator {
  public:
    EnergyEstimator(const IsingInstance &instance, const QgoConfig &config);

    const IsingInstance &instance() const { return evolver_.instance(); }
    const QgoConfig &config() const { return config_; }

    AnnealSchedule schedule(std::span<const double> c) const;
    StateVector evolve(const AnnealSchedule &sched) const;

    /// Exact (shots = 0) or sampled energy of psi(T); `stream` seeds the
    /// sampler.
    EnergyEstimate estimate(const AnnealSchedule &sched,
                            std::uint64_t stream) const;
    EnergyEstimate estimate(std::span<const double> c,
                            std::uint64_t stream) const {
        return estimate(schedule(c), stream);
    }

    /// Substream for an evaluation; component 0 is the baseline, j + 1 the
    /// forward step of component j.
    std::uint64_t stream_for(std::size_t iteration,
                             std::size_t slot) const;

  private:
    Evolver evolver_;
    QgoConfig config_;
};

EnergyEstimate estimate_energy(const IsingInstance &instance,
                               const AnnealSchedule &sched,
                               const QgoConfig &config,
                               std::uint64_t stream = 0);

/// Forward difference for unset component j. Throws ContractViolation if
/// c[j] != 0. When `baseline` is supplied it is used as E(c).
GradientRecord gradient_component(const EnergyEstimator &estimator,
                                  std::span<const double> c, std::size_t j,
                                  std::optional<EnergyEstimate> baseline =
                                      std::nullopt,
                                  std::size_t iteration = 0);

GradientRecord gradient_component(const IsingInstance &instance,
                                  std::span<const double> c, std::size_t j,
                                  const QgoConfig &config);

QgoResult qgo_run(const IsingInstance &instance, const QgoConfig &config);

/// How a d-AQC run counts as a success.
enum class DaqcSuccess {
    /// One Born-rule measurement of psi(T) lands in the ground set; the
    /// expected success rate is the ground-state probability.
    SingleShot,
    /// The most probable (noiseless) or most frequent (shots) basis state is
    /// in the ground set.
    Modal,
};

struct DaqcResult {
    double ground_probability = 0.0;  ///< exact, or empirical with shots
    SpinConfig measured_config;       ///< the single-shot outcome
    SpinConfig modal_config;
    bool success = false;
    std::uint64_t shots_used = 0;
    StateVector final_state{1};
};

/// Annealing without the CD term (c = 0). The measurement stream is seeded
/// from config.seed. Modal ties go to the smallest basis index.
DaqcResult daqc_run(const IsingInstance &instance, const QgoConfig &config,
                    const GroundState *ground = nullptr,
                    DaqcSuccess rule = DaqcSuccess::SingleShot);

struct LandscapePoint {
    double c_value = 0.0;
    double energy = 0.0;
};

/// E(c) over `steps` evenly spaced values of c[i] in [lo, hi].
std::vector<LandscapePoint> energy_landscape(const IsingInstance &instance,
                                             std::span<const double> c,
                                             std::size_t i, double lo,
                                             double hi, std::size_t steps,
                                             const QgoConfig &config);

} // namespace qgo
