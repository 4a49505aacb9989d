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
 * Batch success-probability experiments over random SK instances.
 *
 * A configuration spans a grid of cells (algorithm, n, T, delta_c, shots).
 * For each n the same `instances` SK instances are drawn from
 * (master_seed, n, index) and shared by every cell, so arms of a comparison
 * see identical problems. Measurement noise is drawn from a separate stream
 * keyed by the full cell and the instance index.
 *
 * Per-instance records can be appended to a JSON-lines checkpoint as they
 * complete; a rerun with the same checkpoint skips finished records.
 * Aggregation always folds records in instance order.
 */

#pragma once

#include "qgo/calibration.hpp"
#include "qgo/ising.hpp"

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace qgo {

enum class Algorithm { DQgo, VQgo, DAqc };

std::string_view algorithm_name(Algorithm a);
/// Accepts "d-qgo", "v-qgo", "d-aqc".
Algorithm parse_algorithm(std::string_view name);

/// A fixed differential interval, or std::nullopt for "c_opt".
using DeltaC = std::optional<double>;

std::string delta_c_label(const DeltaC &dc);

struct ExperimentConfig {
    std::vector<Algorithm> algorithms{Algorithm::DQgo};
    std::vector<unsigned> sizes;
    std::vector<double> T{1.0};
    double dt = 0.1;
    std::vector<DeltaC> delta_c{std::nullopt};
    std::uint64_t shots = 0;
    std::size_t instances = 100;
    std::uint64_t master_seed = 0;
    std::filesystem::path output_dir = "results";

    /// Directory for cached calibrations; empty = calibrate in memory.
    std::filesystem::path calibration_cache;
    double calibration_T = 1.0;
    double calibration_dt = 0.1;
    unsigned workers = 0;
    double ode_dt = 1e-3;
    bool shared_noise = false;
    /// Fixed (b_opt, c_opt) per size, bypassing calibration.
    std::map<unsigned, std::pair<double, double>> calibration_override;

    void validate() const;
};

/// Keys mirror the field names; "algorithm", "T" and "delta_c" take a single
/// value or a list. "calibration_override" maps a size to
/// {"b_opt": .., "c_opt": ..}. Unknown keys are rejected.
ExperimentConfig experiment_config_from_json(const nlohmann::json &j);
nlohmann::json experiment_config_to_json(const ExperimentConfig &c);
ExperimentConfig read_experiment_config(const std::filesystem::path &path);

/// Default T grid for annealing-time sweeps.
std::vector<double> default_time_grid();

struct Cell {
    Algorithm algorithm = Algorithm::DQgo;
    unsigned n = 0;
    double T = 1.0;
    DeltaC delta_c;
    std::uint64_t shots = 0;

    friend bool operator==(const Cell &, const Cell &) = default;
};

std::uint64_t instance_seed(std::uint64_t master_seed, unsigned n,
                            std::size_t index);
std::uint64_t noise_seed(std::uint64_t master_seed, const Cell &cell,
                         double delta_c_value, std::size_t index);

struct InstanceRecord {
    std::size_t index = 0;
    std::uint64_t instance_seed = 0;
    std::uint64_t noise_seed = 0;
    double ground_energy = 0.0;
    std::size_t degeneracy = 1;
    std::string returned_config;
    double returned_energy = 0.0;
    bool success = false;
    std::uint64_t shots_used = 0;
    /// d-AQC only: probability of the ground set in psi(T).
    std::optional<double> ground_probability;
    double wall_seconds = 0.0;
};

/// Parameters shared by every instance of a cell.
struct CellParameters {
    double b_opt = 0.0;
    double c_opt = 0.0;
    double delta_c = 0.0;  ///< resolved interval; unused by d-AQC
};

/// One algorithm run on one instance, with success checked against
/// `ground`.
InstanceRecord run_instance(const IsingInstance &instance,
                            const GroundState &ground, const Cell &cell,
                            const CellParameters &params,
                            const ExperimentConfig &config,
                            std::uint64_t noise_seed);

/// Calibration for size n: the override if present, else the cache or a
/// fresh calibration.
CalibrationResult calibration_for(const ExperimentConfig &config, unsigned n);

struct CellReport {
    Cell cell;
    double delta_c_value = 0.0;
    double b_opt = 0.0;
    double c_opt = 0.0;
    std::vector<InstanceRecord> records;  ///< ordered by index

    std::size_t successes() const;
    double sp() const;
};

struct SpReport {
    std::uint64_t master_seed = 0;
    std::vector<CellReport> cells;
    std::map<unsigned, CalibrationResult> calibrations;

    const CellReport *find(const Cell &cell) const;
};

struct RunOptions {
    /// JSON-lines file of finished records; empty disables checkpointing.
    std::filesystem::path checkpoint;
    std::function<void(const CellReport &)> on_cell_done;
};

/// Cells in grid order algorithm > n > T > delta_c. d-AQC ignores delta_c
/// and gets a single cell per (n, T).
std::vector<Cell> expand_cells(const ExperimentConfig &config);

SpReport run_sp_experiment(const ExperimentConfig &config,
                           const RunOptions &options = {});

struct DeltaCPair {
    Algorithm algorithm = Algorithm::DQgo;
    unsigned n = 0;
    double T = 1.0;
    std::uint64_t shots = 0;
    double sp_first = 0.0;
    double sp_second = 0.0;

    double difference() const { return sp_first - sp_second; }
};

struct DeltaCComparison {
    DeltaC first;
    DeltaC second;
    SpReport report;
    std::vector<DeltaCPair> pairs;
};

/// Runs the config under exactly two intervals on the same instance set.
DeltaCComparison run_delta_c_comparison(const ExperimentConfig &config,
                                        DeltaC first = 0.1,
                                        DeltaC second = std::nullopt,
                                        const RunOptions &options = {});

/// run_sp_experiment over config.T (default_time_grid() when empty) with dt
/// held fixed.
SpReport run_time_sweep(const ExperimentConfig &config,
                        const RunOptions &options = {});

enum class PlotKind { SpVsSize, SpVsTime, SpVsDeltaC };

std::string results_csv(const SpReport &report);
std::string instances_csv(const SpReport &report);
std::string timings_csv(const SpReport &report);
std::string plot_csv(const SpReport &report, PlotKind kind);
nlohmann::json manifest_json(const ExperimentConfig &config,
                             const SpReport &report);

/// Writes results.csv, instances.csv, timings.csv, manifest.json and
/// plot_<kind>.csv into config.output_dir.
void emit_outputs(const ExperimentConfig &config, const SpReport &report,
                  PlotKind kind);

} // namespace qgo
