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
 * Per-size calibration of the transverse-field prefactor b and the CD
 * magnitude c on the fully connected ferromagnet.
 *
 * The ferromagnet is used in its mean-field normalization, J_ij = 2 / n
 * (H = -(1/n)(sum_i s_i)^2 up to a constant), so its energy scale is
 * extensive like the SK instances the parameters are later applied to.
 * With unit couplings the optimal b grows linearly with n and leaves the
 * search range from n = 8 on.
 *
 * The objective is the final probability of the two ground states
 * (all up, all down) after Trotterized annealing with uniform c_i = c. The
 * search is an exhaustive coarse grid followed by a fine grid around the
 * coarse optimum. Ties go to smaller c, then smaller b.
 */

#pragma once

#include "qgo/evolution.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace qgo {

struct CalibrationGrid {
    double b_lo = 0.1;
    double b_hi = 3.0;
    double c_lo = 0.1;
    double c_hi = 3.0;
    double coarse_step = 0.05;
    double fine_step = 0.01;  ///< <= 0 disables refinement

    void validate() const;
    std::uint64_t hash() const;

    static CalibrationGrid single_point(double b, double c);

    friend bool operator==(const CalibrationGrid &,
                           const CalibrationGrid &) = default;
};

/// Values lo, lo + step, ... <= hi, rounded to 12 decimals.
std::vector<double> grid_axis(double lo, double hi, double step);

struct CalibrationPoint {
    double b = 0.0;
    double c = 0.0;
    double objective = 0.0;
};

struct CalibrationResult {
    unsigned n = 0;
    double T = 1.0;
    double dt = 0.1;
    double b_opt = 0.0;
    double c_opt = 0.0;
    double objective = 0.0;
    CalibrationGrid grid;
    /// Every point evaluated, coarse then fine. Empty when loaded from cache.
    std::vector<CalibrationPoint> evaluated;
};

/// ferromagnetic_instance(n) scaled to J_ij = 2 / n.
IsingInstance calibration_ferromagnet(unsigned n);

/// P(all up) + P(all down); `ferromagnet` must wrap calibration_ferromagnet.
double calibration_objective(const Evolver &ferromagnet, double b, double c,
                             double T, double dt);

CalibrationResult calibrate(unsigned n, double T = 1.0, double dt = 0.1,
                            const CalibrationGrid &grid = {},
                            unsigned workers = 0);

void to_json(nlohmann::json &j, const CalibrationGrid &g);
void from_json(const nlohmann::json &j, CalibrationGrid &g);
nlohmann::json calibration_to_json(const CalibrationResult &r);

/// Objective over every evaluated point, as CSV with header n,b,c,objective.
std::string calibration_curve_csv(const CalibrationResult &r);
CalibrationResult calibration_from_json(const nlohmann::json &j);

/// On-disk cache keyed by (n, T, dt, grid hash).
class CalibrationCache {
  public:
    explicit CalibrationCache(std::filesystem::path dir);

    std::filesystem::path path_for(unsigned n, double T, double dt,
                                   const CalibrationGrid &grid) const;
    std::optional<CalibrationResult> load(unsigned n, double T, double dt,
                                          const CalibrationGrid &grid) const;
    void store(const CalibrationResult &result) const;
    CalibrationResult get_or_calibrate(unsigned n, double T, double dt,
                                       const CalibrationGrid &grid,
                                       unsigned workers = 0) const;

  private:
    std::filesystem::path dir_;
};

} // namespace qgo
