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

#include "qgo/calibration.hpp"

#include "qgo/errors.hpp"
#include "qgo/io.hpp"
#include "qgo/parallel.hpp"
#include "qgo/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qgo {

using nlohmann::json;

namespace {

double round12(double v) { return std::round(v * 1e12) / 1e12; }

// Higher objective wins; exact ties prefer smaller c, then smaller b.
bool better(const CalibrationPoint &a, const CalibrationPoint &b) {
    if (a.objective != b.objective) {
        return a.objective > b.objective;
    }
    if (a.c != b.c) {
        return a.c < b.c;
    }
    return a.b < b.b;
}

std::vector<CalibrationPoint> evaluate_grid(const Evolver &ferro,
                                            const std::vector<double> &bs,
                                            const std::vector<double> &cs,
                                            double T, double dt,
                                            unsigned workers) {
    std::vector<CalibrationPoint> points(bs.size() * cs.size());
    parallel_for(points.size(), workers, [&](std::size_t k) {
        const double b = bs[k / cs.size()];
        const double c = cs[k % cs.size()];
        points[k] = {b, c, calibration_objective(ferro, b, c, T, dt)};
    });
    return points;
}

} // namespace

void CalibrationGrid::validate() const {
    const bool finite = std::isfinite(b_lo) && std::isfinite(b_hi) &&
                        std::isfinite(c_lo) && std::isfinite(c_hi) &&
                        std::isfinite(coarse_step) && std::isfinite(fine_step);
    if (!finite || b_lo > b_hi || c_lo > c_hi || !(coarse_step > 0.0)) {
        throw std::invalid_argument("calibration grid is empty");
    }
}

std::uint64_t CalibrationGrid::hash() const {
    return derive_seed({hash_double(b_lo), hash_double(b_hi),
                        hash_double(c_lo), hash_double(c_hi),
                        hash_double(coarse_step), hash_double(fine_step)});
}

CalibrationGrid CalibrationGrid::single_point(double b, double c) {
    return {b, b, c, c, 1.0, 0.0};
}

std::vector<double> grid_axis(double lo, double hi, double step) {
    if (lo > hi || !(step > 0.0)) {
        throw std::invalid_argument("empty grid axis");
    }
    const auto count =
        static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> axis(count);
    for (std::size_t k = 0; k < count; ++k) {
        axis[k] = round12(lo + static_cast<double>(k) * step);
    }
    return axis;
}

IsingInstance calibration_ferromagnet(unsigned n) {
    return ferromagnetic_instance(n).scaled(2.0 / n);
}

double calibration_objective(const Evolver &ferromagnet, double b, double c,
                             double T, double dt) {
    const unsigned n = ferromagnet.instance().size();
    AnnealSchedule sched;
    sched.a = 1.0;
    sched.b = b;
    sched.c.assign(n, c);
    sched.T = T;
    sched.dt = dt;
    const StateVector psi = ferromagnet.trotter(sched);
    const std::size_t all_down = psi.dimension() - 1;
    return std::norm(psi[0]) + std::norm(psi[all_down]);
}

CalibrationResult calibrate(unsigned n, double T, double dt,
                            const CalibrationGrid &grid, unsigned workers) {
    grid.validate();
    const Evolver ferro(calibration_ferromagnet(n));

    CalibrationResult result;
    result.n = n;
    result.T = T;
    result.dt = dt;
    result.grid = grid;

    result.evaluated =
        evaluate_grid(ferro, grid_axis(grid.b_lo, grid.b_hi, grid.coarse_step),
                      grid_axis(grid.c_lo, grid.c_hi, grid.coarse_step), T, dt,
                      workers);
    CalibrationPoint best = result.evaluated.front();
    for (const CalibrationPoint &p : result.evaluated) {
        if (better(p, best)) {
            best = p;
        }
    }

    if (grid.fine_step > 0.0) {
        const double r = grid.coarse_step;
        const auto fine = evaluate_grid(
            ferro,
            grid_axis(std::max(grid.b_lo, round12(best.b - r)),
                      std::min(grid.b_hi, round12(best.b + r)),
                      grid.fine_step),
            grid_axis(std::max(grid.c_lo, round12(best.c - r)),
                      std::min(grid.c_hi, round12(best.c + r)),
                      grid.fine_step),
            T, dt, workers);
        for (const CalibrationPoint &p : fine) {
            if (better(p, best)) {
                best = p;
            }
        }
        result.evaluated.insert(result.evaluated.end(), fine.begin(),
                                fine.end());
    }

    result.b_opt = best.b;
    result.c_opt = best.c;
    result.objective = best.objective;
    return result;
}

void to_json(json &j, const CalibrationGrid &g) {
    j = json{{"b_lo", g.b_lo},
             {"b_hi", g.b_hi},
             {"c_lo", g.c_lo},
             {"c_hi", g.c_hi},
             {"coarse_step", g.coarse_step},
             {"fine_step", g.fine_step}};
}

void from_json(const json &j, CalibrationGrid &g) {
    reject_unknown_keys(
        j, {"b_lo", "b_hi", "c_lo", "c_hi", "coarse_step", "fine_step"},
        "calibration grid");
    CalibrationGrid d;
    g.b_lo = j.value("b_lo", d.b_lo);
    g.b_hi = j.value("b_hi", d.b_hi);
    g.c_lo = j.value("c_lo", d.c_lo);
    g.c_hi = j.value("c_hi", d.c_hi);
    g.coarse_step = j.value("coarse_step", d.coarse_step);
    g.fine_step = j.value("fine_step", d.fine_step);
}

std::string calibration_curve_csv(const CalibrationResult &r) {
    std::string csv = "n,b,c,objective\n";
    for (const CalibrationPoint &p : r.evaluated) {
        csv += std::to_string(r.n) + ',' + format_double(p.b) + ',' +
               format_double(p.c) + ',' + format_double(p.objective) + '\n';
    }
    return csv;
}

json calibration_to_json(const CalibrationResult &r) {
    return json{{"n", r.n},
                {"T", r.T},
                {"dt", r.dt},
                {"b_opt", r.b_opt},
                {"c_opt", r.c_opt},
                {"objective", r.objective},
                {"grid", r.grid}};
}

CalibrationResult calibration_from_json(const json &j) {
    reject_unknown_keys(j, {"n", "T", "dt", "b_opt", "c_opt", "objective",
                            "grid"},
                        "calibration file");
    CalibrationResult r;
    try {
        r.n = j.at("n").get<unsigned>();
        r.T = j.at("T").get<double>();
        r.dt = j.at("dt").get<double>();
        r.b_opt = j.at("b_opt").get<double>();
        r.c_opt = j.at("c_opt").get<double>();
        r.objective = j.at("objective").get<double>();
        r.grid = j.at("grid").get<CalibrationGrid>();
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("malformed calibration: ") +
                                    e.what());
    }
    return r;
}

CalibrationCache::CalibrationCache(std::filesystem::path dir)
    : dir_(std::move(dir)) {}

std::filesystem::path
CalibrationCache::path_for(unsigned n, double T, double dt,
                           const CalibrationGrid &grid) const {
    char name[128];
    std::snprintf(name, sizeof(name), "calibration_n%u_T%s_dt%s_%016llx.json",
                  n, format_double(T).c_str(), format_double(dt).c_str(),
                  static_cast<unsigned long long>(grid.hash()));
    return dir_ / name;
}

std::optional<CalibrationResult>
CalibrationCache::load(unsigned n, double T, double dt,
                       const CalibrationGrid &grid) const {
    const auto path = path_for(n, T, dt, grid);
    if (!std::filesystem::exists(path)) {
        return std::nullopt;
    }
    CalibrationResult r = calibration_from_json(read_json_file(path));
    if (r.n != n || r.T != T || r.dt != dt || !(r.grid == grid)) {
        return std::nullopt;
    }
    return r;
}

void CalibrationCache::store(const CalibrationResult &result) const {
    write_text_file(path_for(result.n, result.T, result.dt, result.grid),
                    calibration_to_json(result).dump(2) + "\n");
}

CalibrationResult CalibrationCache::get_or_calibrate(unsigned n, double T,
                                                     double dt,
                                                     const CalibrationGrid &grid,
                                                     unsigned workers) const {
    if (auto cached = load(n, T, dt, grid)) {
        return *cached;
    }
    CalibrationResult r = calibrate(n, T, dt, grid, workers);
    store(r);
    return r;
}

} // namespace qgo
