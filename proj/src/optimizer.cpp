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

#include "qgo/optimizer.hpp"

#include "qgo/errors.hpp"
#include "qgo/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qgo {

namespace {

constexpr std::uint64_t kDaqcStream = hash_string("d-aqc");
constexpr std::uint64_t kLandscapeStream = hash_string("landscape");

} // namespace

void QgoConfig::validate() const {
    if (!(delta_c > 0.0) || !std::isfinite(delta_c)) {
        throw std::invalid_argument("delta_c must be positive");
    }
    if (!(c_opt > 0.0) || !std::isfinite(c_opt)) {
        throw std::invalid_argument("c_opt must be positive");
    }
    if (!std::isfinite(b_opt)) {
        throw std::invalid_argument("b_opt must be finite");
    }
    if (!(ode_dt > 0.0)) {
        throw std::invalid_argument("ode_dt must be positive");
    }
    AnnealSchedule probe;
    probe.T = T;
    probe.dt = dt;
    probe.steps();
}

EnergyEstimator::EnergyEstimator(const IsingInstance &instance,
                                 const QgoConfig &config)
    : evolver_(instance), config_(config) {
    config_.validate();
}

AnnealSchedule EnergyEstimator::schedule(std::span<const double> c) const {
    AnnealSchedule s;
    s.a = 1.0;
    s.b = config_.b_opt;
    s.c.assign(c.begin(), c.end());
    s.T = config_.T;
    s.dt = config_.dt;
    return s;
}

StateVector EnergyEstimator::evolve(const AnnealSchedule &sched) const {
    if (config_.engine == Engine::Ode) {
        return evolver_.ode(sched, std::min(config_.ode_dt, sched.dt));
    }
    return evolver_.trotter(sched);
}

EnergyEstimate EnergyEstimator::estimate(const AnnealSchedule &sched,
                                         std::uint64_t stream) const {
    const StateVector psi = evolve(sched);
    const auto energies = evolver_.energies();
    if (config_.shots == 0) {
        return {expectation_diagonal(psi, energies), 0};
    }
    Rng rng(stream);
    auto samples =
        sample_bitstrings(psi, static_cast<std::size_t>(config_.shots), rng);
    // Weighting each distinct outcome by its count keeps a single-outcome
    // estimate exact.
    std::sort(samples.begin(), samples.end());
    double sum = 0.0;
    for (auto it = samples.begin(); it != samples.end();) {
        const auto end = std::upper_bound(it, samples.end(), *it);
        sum += energies[*it] * static_cast<double>(end - it);
        it = end;
    }
    return {sum / static_cast<double>(samples.size()), config_.shots};
}

std::uint64_t EnergyEstimator::stream_for(std::size_t iteration,
                                          std::size_t slot) const {
    if (config_.shared_noise) {
        slot = 0;
    }
    return derive_seed({config_.seed, iteration, slot});
}

EnergyEstimate estimate_energy(const IsingInstance &instance,
                               const AnnealSchedule &sched,
                               const QgoConfig &config, std::uint64_t stream) {
    if (sched.c.size() != instance.size()) {
        throw std::invalid_argument("schedule and instance sizes differ");
    }
    QgoConfig cfg = config;
    cfg.T = sched.T;
    cfg.dt = sched.dt;
    cfg.b_opt = sched.b;
    const EnergyEstimator est(instance, cfg);
    return est.estimate(sched, stream);
}

GradientRecord gradient_component(const EnergyEstimator &estimator,
                                  std::span<const double> c, std::size_t j,
                                  std::optional<EnergyEstimate> baseline,
                                  std::size_t iteration) {
    const std::size_t n = estimator.instance().size();
    if (c.size() != n) {
        throw std::invalid_argument("coefficient vector has wrong length");
    }
    if (j >= n) {
        throw std::invalid_argument("component index out of range");
    }
    if (c[j] != 0.0) {
        throw ContractViolation("component " + std::to_string(j) +
                                " is already set (c_j = " +
                                std::to_string(c[j]) + ")");
    }
    GradientRecord rec;
    rec.iteration = iteration;
    rec.component = j;
    if (!baseline) {
        baseline = estimator.estimate(c, estimator.stream_for(iteration, 0));
        rec.shots_used += baseline->shots_used;
    }
    std::vector<double> forward(c.begin(), c.end());
    const double delta_c = estimator.config().delta_c;
    forward[j] = delta_c;
    const EnergyEstimate f =
        estimator.estimate(forward, estimator.stream_for(iteration, j + 1));
    rec.baseline_energy = baseline->energy;
    rec.forward_energy = f.energy;
    rec.shots_used += f.shots_used;
    rec.g = (rec.forward_energy - rec.baseline_energy) / delta_c;
    return rec;
}

GradientRecord gradient_component(const IsingInstance &instance,
                                  std::span<const double> c, std::size_t j,
                                  const QgoConfig &config) {
    return gradient_component(EnergyEstimator(instance, config), c, j);
}

QgoResult qgo_run(const IsingInstance &instance, const QgoConfig &config) {
    const EnergyEstimator est(instance, config);
    const std::size_t n = instance.size();
    std::vector<double> c(n, 0.0);
    QgoResult result;

    for (std::size_t iteration = 0; iteration < n; ++iteration) {
        const EnergyEstimate baseline =
            est.estimate(c, est.stream_for(iteration, 0));
        ++result.total_energy_evaluations;
        result.total_shots += baseline.shots_used;

        std::optional<GradientRecord> best;
        for (std::size_t j = 0; j < n; ++j) {
            if (c[j] != 0.0) {
                continue;
            }
            GradientRecord rec =
                gradient_component(est, c, j, baseline, iteration);
            ++result.total_energy_evaluations;
            result.total_shots += rec.shots_used;
            // Strict comparison: the smallest index wins ties.
            if (!best || std::abs(rec.g) > std::abs(best->g)) {
                best = rec;
            }
            result.trace.push_back(rec);
        }

        const std::size_t i = best->component;
        if (std::abs(best->g) < kZeroGradient) {
            c[i] = config.c_opt;
            result.warnings.push_back(
                "iteration " + std::to_string(iteration) +
                ": zero gradient for component " + std::to_string(i) +
                ", assigned +c_opt");
        } else {
            c[i] = best->g > 0.0 ? -config.c_opt : config.c_opt;
        }
    }

    std::vector<int> spins(n);
    for (std::size_t i = 0; i < n; ++i) {
        spins[i] = c[i] > 0.0 ? 1 : -1;
    }
    result.signs = SpinConfig(std::move(spins));
    result.final_c = std::move(c);
    return result;
}

DaqcResult daqc_run(const IsingInstance &instance, const QgoConfig &config,
                    const GroundState *ground, DaqcSuccess rule) {
    const EnergyEstimator est(instance, config);
    const unsigned n = instance.size();
    std::optional<GroundState> own;
    if (ground == nullptr) {
        own = brute_force_ground_state(instance);
        ground = &*own;
    }
    if (ground->config.size() != n) {
        throw std::invalid_argument("ground state does not match instance");
    }

    const std::vector<double> zero(n, 0.0);
    DaqcResult result;
    result.final_state = est.evolve(est.schedule(zero));

    Rng rng(derive_seed({config.seed, kDaqcStream}));
    const std::size_t draws =
        config.shots == 0 ? 1 : static_cast<std::size_t>(config.shots);
    const auto samples = sample_bitstrings(result.final_state, draws, rng);
    const std::uint64_t measured = samples.front();

    std::vector<double> weights;
    if (config.shots == 0) {
        weights = result.final_state.probabilities();
    } else {
        weights.assign(result.final_state.dimension(), 0.0);
        for (std::uint64_t b : samples) {
            weights[b] += 1.0;
        }
        for (double &w : weights) {
            w /= static_cast<double>(draws);
        }
        result.shots_used = config.shots;
    }

    for (std::uint64_t b : ground->ground_set) {
        result.ground_probability += weights[b];
    }
    const auto modal = static_cast<std::uint64_t>(
        std::max_element(weights.begin(), weights.end()) - weights.begin());
    result.modal_config = SpinConfig::from_basis(modal, n);
    result.measured_config = SpinConfig::from_basis(measured, n);
    result.success = rule == DaqcSuccess::Modal ? ground->contains(modal)
                                                : ground->contains(measured);
    return result;
}

std::vector<LandscapePoint> energy_landscape(const IsingInstance &instance,
                                             std::span<const double> c,
                                             std::size_t i, double lo,
                                             double hi, std::size_t steps,
                                             const QgoConfig &config) {
    if (!(lo < hi)) {
        throw std::invalid_argument("landscape range needs lo < hi");
    }
    if (steps < 2) {
        throw std::invalid_argument("landscape needs at least two steps");
    }
    if (c.size() != instance.size() || i >= c.size()) {
        throw std::invalid_argument("landscape component out of range");
    }
    const EnergyEstimator est(instance, config);
    std::vector<double> point(c.begin(), c.end());
    std::vector<LandscapePoint> out;
    out.reserve(steps);
    for (std::size_t k = 0; k < steps; ++k) {
        const double v =
            k + 1 == steps
                ? hi
                : lo + (hi - lo) * static_cast<double>(k) /
                           static_cast<double>(steps - 1);
        point[i] = v;
        const EnergyEstimate e = est.estimate(
            point, derive_seed({config.seed, kLandscapeStream, k}));
        out.push_back({v, e.energy});
    }
    return out;
}

} // namespace qgo
