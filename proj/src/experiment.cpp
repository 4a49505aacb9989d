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

#include "qgo/experiment.hpp"

#include "qgo/errors.hpp"
#include "qgo/io.hpp"
#include "qgo/optimizer.hpp"
#include "qgo/parallel.hpp"
#include "qgo/rng.hpp"
#include "qgo/schedule.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#ifndef QGO_VERSION
#define QGO_VERSION "unknown"
#endif

namespace qgo {

using nlohmann::json;

namespace {

constexpr std::uint64_t kInstanceStream = hash_string("instance");
constexpr std::uint64_t kNoiseStream = hash_string("noise");

struct Problem {
    IsingInstance instance;
    GroundState ground;
    std::uint64_t seed;
};

template <class T> std::vector<T> one_or_many(const json &j) {
    if (j.is_array()) {
        return j.get<std::vector<T>>();
    }
    return {j.get<T>()};
}

DeltaC parse_delta_c(const json &j) {
    if (j.is_string()) {
        if (j.get<std::string>() != "c_opt") {
            throw std::invalid_argument("delta_c must be a number or \"c_opt\"");
        }
        return std::nullopt;
    }
    return j.get<double>();
}

json delta_c_to_json(const DeltaC &dc) {
    return dc ? json(*dc) : json("c_opt");
}

std::string cell_key(std::uint64_t master_seed, const Cell &cell) {
    std::ostringstream os;
    os << master_seed << '|' << algorithm_name(cell.algorithm) << '|' << cell.n
       << '|' << format_double(cell.T) << '|' << delta_c_label(cell.delta_c)
       << '|' << cell.shots;
    return os.str();
}

json record_to_json(const InstanceRecord &r) {
    json j{{"index", r.index},
           {"instance_seed", r.instance_seed},
           {"noise_seed", r.noise_seed},
           {"ground_energy", r.ground_energy},
           {"degeneracy", r.degeneracy},
           {"returned_config", r.returned_config},
           {"returned_energy", r.returned_energy},
           {"success", r.success},
           {"shots_used", r.shots_used},
           {"wall_seconds", r.wall_seconds}};
    j["ground_probability"] =
        r.ground_probability ? json(*r.ground_probability) : json(nullptr);
    return j;
}

InstanceRecord record_from_json(const json &j) {
    InstanceRecord r;
    r.index = j.at("index").get<std::size_t>();
    r.instance_seed = j.at("instance_seed").get<std::uint64_t>();
    r.noise_seed = j.at("noise_seed").get<std::uint64_t>();
    r.ground_energy = j.at("ground_energy").get<double>();
    r.degeneracy = j.at("degeneracy").get<std::size_t>();
    r.returned_config = j.at("returned_config").get<std::string>();
    r.returned_energy = j.at("returned_energy").get<double>();
    r.success = j.at("success").get<bool>();
    r.shots_used = j.at("shots_used").get<std::uint64_t>();
    r.wall_seconds = j.at("wall_seconds").get<double>();
    if (!j.at("ground_probability").is_null()) {
        r.ground_probability = j.at("ground_probability").get<double>();
    }
    return r;
}

class Checkpoint {
  public:
    explicit Checkpoint(std::filesystem::path path) : path_(std::move(path)) {
        if (path_.empty()) {
            return;
        }
        if (std::filesystem::exists(path_)) {
            std::ifstream in(path_);
            std::string line;
            while (std::getline(in, line)) {
                // A torn final line from an interrupted write is skipped.
                try {
                    const json j = json::parse(line);
                    done_[j.at("key").get<std::string>()] =
                        record_from_json(j.at("record"));
                } catch (const std::exception &) {
                    continue;
                }
            }
        }
        if (path_.has_parent_path()) {
            std::filesystem::create_directories(path_.parent_path());
        }
        out_.open(path_, std::ios::app);
        if (!out_) {
            throw IoError("cannot open checkpoint " + path_.string());
        }
    }

    std::optional<InstanceRecord> find(const std::string &key) const {
        const auto it = done_.find(key);
        if (it == done_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    void append(const std::string &key, const InstanceRecord &r) {
        if (path_.empty()) {
            return;
        }
        const std::string line =
            json{{"key", key}, {"record", record_to_json(r)}}.dump();
        std::lock_guard lock(mutex_);
        out_ << line << '\n';
        out_.flush();
        if (!out_) {
            throw IoError("error while writing " + path_.string());
        }
    }

  private:
    std::filesystem::path path_;
    std::unordered_map<std::string, InstanceRecord> done_;
    std::ofstream out_;
    std::mutex mutex_;
};

std::string csv_cell_prefix(const CellReport &c) {
    std::ostringstream os;
    os << algorithm_name(c.cell.algorithm) << ',' << c.cell.n << ','
       << format_double(c.cell.T) << ',';
    if (c.cell.algorithm != Algorithm::DAqc) {
        os << format_double(c.delta_c_value);
    }
    os << ',' << c.cell.shots;
    return os.str();
}

} // namespace

InstanceRecord run_instance(const IsingInstance &instance,
                            const GroundState &ground, const Cell &cell,
                            const CellParameters &params,
                            const ExperimentConfig &config,
                            std::uint64_t noise_seed) {
    const auto start = std::chrono::steady_clock::now();
    QgoConfig q;
    q.delta_c = params.delta_c > 0.0 ? params.delta_c : params.c_opt;
    q.c_opt = params.c_opt;
    q.b_opt = params.b_opt;
    q.T = cell.T;
    q.dt = config.dt;
    q.shots = cell.shots;
    q.engine =
        cell.algorithm == Algorithm::VQgo ? Engine::Ode : Engine::Trotter;
    q.seed = noise_seed;
    q.ode_dt = config.ode_dt;
    q.shared_noise = config.shared_noise;

    InstanceRecord r;
    r.instance_seed = instance.seed().value_or(0);
    r.noise_seed = noise_seed;
    r.ground_energy = ground.energy;
    r.degeneracy = ground.degeneracy;

    SpinConfig returned;
    if (cell.algorithm == Algorithm::DAqc) {
        const DaqcResult d = daqc_run(instance, q, &ground);
        returned = d.measured_config;
        r.shots_used = d.shots_used;
        r.ground_probability = d.ground_probability;
    } else {
        const QgoResult res = qgo_run(instance, q);
        returned = res.signs;
        r.shots_used = res.total_shots;
    }
    r.returned_config = returned.to_string();
    r.returned_energy = classical_energy(instance, returned);
    r.success = ground.contains(returned);
    r.wall_seconds = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return r;
}

CalibrationResult calibration_for(const ExperimentConfig &config, unsigned n) {
    if (const auto it = config.calibration_override.find(n);
        it != config.calibration_override.end()) {
        const auto [b, c] = it->second;
        CalibrationResult r;
        r.n = n;
        r.T = config.calibration_T;
        r.dt = config.calibration_dt;
        r.b_opt = b;
        r.c_opt = c;
        r.grid = CalibrationGrid::single_point(b, c);
        r.objective = n >= 2 ? calibration_objective(
                                   Evolver(calibration_ferromagnet(n)), b, c,
                                   config.calibration_T, config.calibration_dt)
                             : 0.0;
        return r;
    }
    if (n < 2) {
        throw std::invalid_argument(
            "calibration needs n >= 2; give calibration_override for n = " +
            std::to_string(n));
    }
    if (!config.calibration_cache.empty()) {
        return CalibrationCache(config.calibration_cache)
            .get_or_calibrate(n, config.calibration_T, config.calibration_dt,
                              {}, config.workers);
    }
    return calibrate(n, config.calibration_T, config.calibration_dt, {},
                     config.workers);
}

std::string_view algorithm_name(Algorithm a) {
    switch (a) {
    case Algorithm::DQgo:
        return "d-qgo";
    case Algorithm::VQgo:
        return "v-qgo";
    case Algorithm::DAqc:
        return "d-aqc";
    }
    return "?";
}

Algorithm parse_algorithm(std::string_view name) {
    for (Algorithm a : {Algorithm::DQgo, Algorithm::VQgo, Algorithm::DAqc}) {
        if (algorithm_name(a) == name) {
            return a;
        }
    }
    throw std::invalid_argument("unknown algorithm \"" + std::string(name) +
                                "\" (expected d-qgo, v-qgo or d-aqc)");
}

std::string delta_c_label(const DeltaC &dc) {
    return dc ? format_double(*dc) : "c_opt";
}

void ExperimentConfig::validate() const {
    if (algorithms.empty()) {
        throw std::invalid_argument("no algorithm selected");
    }
    if (sizes.empty()) {
        throw std::invalid_argument("no system sizes given");
    }
    for (unsigned n : sizes) {
        if (n == 0) {
            throw std::invalid_argument("system size must be at least 1");
        }
        if (n > kMaxQubits) {
            throw CapacityError("n = " + std::to_string(n) +
                                " exceeds the engine capacity of " +
                                std::to_string(kMaxQubits) + " qubits");
        }
    }
    if (instances < 1) {
        throw std::invalid_argument("instances must be at least 1");
    }
    if (T.empty()) {
        throw std::invalid_argument("no annealing times given");
    }
    for (double t : T) {
        AnnealSchedule probe;
        probe.T = t;
        probe.dt = dt;
        probe.steps();
    }
    if (delta_c.empty()) {
        throw std::invalid_argument("no delta_c given");
    }
    for (const DeltaC &dc : delta_c) {
        if (dc && !(*dc > 0.0 && std::isfinite(*dc))) {
            throw std::invalid_argument("delta_c must be positive");
        }
    }
    if (!(ode_dt > 0.0)) {
        throw std::invalid_argument("ode_dt must be positive");
    }
    for (const auto &[n, bc] : calibration_override) {
        if (!std::isfinite(bc.first) || !(bc.second > 0.0) ||
            !std::isfinite(bc.second)) {
            throw std::invalid_argument("calibration_override for n = " +
                                        std::to_string(n) +
                                        " needs finite b_opt and c_opt > 0");
        }
    }
}

ExperimentConfig experiment_config_from_json(const json &j) {
    reject_unknown_keys(j,
                        {"algorithm", "sizes", "T", "dt", "delta_c", "shots",
                         "instances", "master_seed", "output_dir",
                         "calibration_cache", "calibration_T",
                         "calibration_dt", "workers", "ode_dt",
                         "shared_noise", "calibration_override"},
                        "experiment config");
    ExperimentConfig c;
    try {
        if (j.contains("algorithm")) {
            c.algorithms.clear();
            for (const auto &name :
                 one_or_many<std::string>(j.at("algorithm"))) {
                c.algorithms.push_back(parse_algorithm(name));
            }
        }
        c.sizes = one_or_many<unsigned>(j.at("sizes"));
        if (j.contains("T")) {
            c.T = one_or_many<double>(j.at("T"));
        }
        c.dt = j.value("dt", c.dt);
        if (j.contains("delta_c")) {
            c.delta_c.clear();
            const json &dc = j.at("delta_c");
            if (dc.is_array()) {
                for (const json &v : dc) {
                    c.delta_c.push_back(parse_delta_c(v));
                }
            } else {
                c.delta_c.push_back(parse_delta_c(dc));
            }
        }
        c.shots = j.value("shots", c.shots);
        c.instances = j.value("instances", c.instances);
        c.master_seed = j.value("master_seed", c.master_seed);
        c.output_dir = j.value("output_dir", c.output_dir.string());
        c.calibration_cache =
            j.value("calibration_cache", c.calibration_cache.string());
        c.calibration_T = j.value("calibration_T", c.calibration_T);
        c.calibration_dt = j.value("calibration_dt", c.calibration_dt);
        c.workers = j.value("workers", c.workers);
        c.ode_dt = j.value("ode_dt", c.ode_dt);
        c.shared_noise = j.value("shared_noise", c.shared_noise);
        if (j.contains("calibration_override")) {
            for (const auto &item : j.at("calibration_override").items()) {
                reject_unknown_keys(item.value(), {"b_opt", "c_opt"},
                                    "calibration_override");
                std::size_t used = 0;
                const unsigned long n = std::stoul(item.key(), &used);
                if (used != item.key().size()) {
                    throw std::invalid_argument(
                        "calibration_override keys must be sizes");
                }
                c.calibration_override[static_cast<unsigned>(n)] = {
                    item.value().at("b_opt").get<double>(),
                    item.value().at("c_opt").get<double>()};
            }
        }
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("malformed experiment config: ") +
                                    e.what());
    }
    c.validate();
    return c;
}

json experiment_config_to_json(const ExperimentConfig &c) {
    json algorithms = json::array();
    for (Algorithm a : c.algorithms) {
        algorithms.push_back(algorithm_name(a));
    }
    json delta_c = json::array();
    for (const DeltaC &dc : c.delta_c) {
        delta_c.push_back(delta_c_to_json(dc));
    }
    json overrides = json::object();
    for (const auto &[n, bc] : c.calibration_override) {
        overrides[std::to_string(n)] = {{"b_opt", bc.first},
                                        {"c_opt", bc.second}};
    }
    return json{{"algorithm", algorithms},
                {"sizes", c.sizes},
                {"T", c.T},
                {"dt", c.dt},
                {"delta_c", delta_c},
                {"shots", c.shots},
                {"instances", c.instances},
                {"master_seed", c.master_seed},
                {"output_dir", c.output_dir.string()},
                {"calibration_cache", c.calibration_cache.string()},
                {"calibration_T", c.calibration_T},
                {"calibration_dt", c.calibration_dt},
                {"workers", c.workers},
                {"ode_dt", c.ode_dt},
                {"shared_noise", c.shared_noise},
                {"calibration_override", overrides}};
}

ExperimentConfig read_experiment_config(const std::filesystem::path &path) {
    try {
        return experiment_config_from_json(read_json_file(path));
    } catch (const std::invalid_argument &e) {
        throw std::invalid_argument(path.string() + ": " + e.what());
    }
}

std::vector<double> default_time_grid() { return {1.0, 2.0, 5.0, 10.0}; }

std::uint64_t instance_seed(std::uint64_t master_seed, unsigned n,
                            std::size_t index) {
    return derive_seed({master_seed, kInstanceStream, n, index});
}

std::uint64_t noise_seed(std::uint64_t master_seed, const Cell &cell,
                         double delta_c_value, std::size_t index) {
    return derive_seed({master_seed, kNoiseStream,
                        hash_string(algorithm_name(cell.algorithm)), cell.n,
                        hash_double(cell.T), hash_double(delta_c_value),
                        cell.shots, index});
}

std::size_t CellReport::successes() const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(),
                      [](const InstanceRecord &r) { return r.success; }));
}

double CellReport::sp() const {
    if (records.empty()) {
        return 0.0;
    }
    return static_cast<double>(successes()) /
           static_cast<double>(records.size());
}

const CellReport *SpReport::find(const Cell &cell) const {
    for (const CellReport &c : cells) {
        if (c.cell == cell) {
            return &c;
        }
    }
    return nullptr;
}

std::vector<Cell> expand_cells(const ExperimentConfig &config) {
    std::vector<Cell> cells;
    for (Algorithm a : config.algorithms) {
        for (unsigned n : config.sizes) {
            for (double t : config.T) {
                if (a == Algorithm::DAqc) {
                    cells.push_back({a, n, t, std::nullopt, config.shots});
                    continue;
                }
                for (const DeltaC &dc : config.delta_c) {
                    cells.push_back({a, n, t, dc, config.shots});
                }
            }
        }
    }
    std::vector<Cell> unique;
    for (const Cell &c : cells) {
        if (std::find(unique.begin(), unique.end(), c) == unique.end()) {
            unique.push_back(c);
        }
    }
    return unique;
}

SpReport run_sp_experiment(const ExperimentConfig &config,
                           const RunOptions &options) {
    config.validate();
    SpReport report;
    report.master_seed = config.master_seed;
    Checkpoint checkpoint(options.checkpoint);
    const std::vector<Cell> cells = expand_cells(config);

    std::map<unsigned, std::vector<Problem>> problems;
    for (unsigned n : config.sizes) {
        if (problems.count(n) != 0) {
            continue;
        }
        report.calibrations.emplace(n, calibration_for(config, n));
        std::vector<std::optional<Problem>> slots(config.instances);
        parallel_for(config.instances, config.workers, [&](std::size_t k) {
            const std::uint64_t seed = instance_seed(config.master_seed, n, k);
            IsingInstance inst = sample_sk_instance(n, seed);
            GroundState ground = brute_force_ground_state(inst);
            slots[k].emplace(Problem{std::move(inst), std::move(ground), seed});
        });
        auto &list = problems[n];
        for (auto &s : slots) {
            list.push_back(std::move(*s));
        }
    }

    for (const Cell &cell : cells) {
        const CalibrationResult &cal = report.calibrations.at(cell.n);
        CellReport cr;
        cr.cell = cell;
        cr.b_opt = cal.b_opt;
        cr.c_opt = cal.c_opt;
        if (cell.algorithm != Algorithm::DAqc) {
            cr.delta_c_value = cell.delta_c.value_or(cal.c_opt);
        }
        const CellParameters params{cr.b_opt, cr.c_opt, cr.delta_c_value};
        cr.records.resize(config.instances);
        const std::string prefix = cell_key(config.master_seed, cell);
        const auto &list = problems.at(cell.n);

        parallel_for(config.instances, config.workers, [&](std::size_t k) {
            const std::string key = prefix + '|' + std::to_string(k);
            const std::uint64_t seed =
                noise_seed(config.master_seed, cell, cr.delta_c_value, k);
            if (auto done = checkpoint.find(key);
                done && done->instance_seed == list[k].seed &&
                done->noise_seed == seed) {
                cr.records[k] = *done;
                return;
            }
            InstanceRecord r =
                run_instance(list[k].instance, list[k].ground, cell, params,
                             config, seed);
            r.index = k;
            checkpoint.append(key, r);
            cr.records[k] = std::move(r);
        });

        if (options.on_cell_done) {
            options.on_cell_done(cr);
        }
        report.cells.push_back(std::move(cr));
    }
    return report;
}

DeltaCComparison run_delta_c_comparison(const ExperimentConfig &config,
                                        DeltaC first, DeltaC second,
                                        const RunOptions &options) {
    ExperimentConfig cfg = config;
    cfg.delta_c = {first, second};
    DeltaCComparison out;
    out.first = first;
    out.second = second;
    out.report = run_sp_experiment(cfg, options);
    for (const CellReport &c : out.report.cells) {
        if (c.cell.algorithm == Algorithm::DAqc || c.cell.delta_c != first) {
            continue;
        }
        Cell other = c.cell;
        other.delta_c = second;
        const CellReport *o = out.report.find(other);
        out.pairs.push_back({c.cell.algorithm, c.cell.n, c.cell.T,
                             c.cell.shots, c.sp(), o->sp()});
    }
    return out;
}

SpReport run_time_sweep(const ExperimentConfig &config,
                        const RunOptions &options) {
    ExperimentConfig cfg = config;
    if (cfg.T.empty()) {
        cfg.T = default_time_grid();
    }
    return run_sp_experiment(cfg, options);
}

std::string results_csv(const SpReport &report) {
    std::ostringstream os;
    os << "algorithm,n,T,delta_c,shots,instances,successes,sp\n";
    for (const CellReport &c : report.cells) {
        os << csv_cell_prefix(c) << ',' << c.records.size() << ','
           << c.successes() << ',' << format_double(c.sp()) << '\n';
    }
    return os.str();
}

std::string instances_csv(const SpReport &report) {
    std::ostringstream os;
    os << "algorithm,n,T,delta_c,shots,index,instance_seed,noise_seed,"
          "ground_energy,degeneracy,returned_config,returned_energy,success,"
          "shots_used,ground_probability\n";
    for (const CellReport &c : report.cells) {
        const std::string prefix = csv_cell_prefix(c);
        for (const InstanceRecord &r : c.records) {
            os << prefix << ',' << r.index << ',' << r.instance_seed << ','
               << r.noise_seed << ',' << format_double(r.ground_energy) << ','
               << r.degeneracy << ',' << r.returned_config << ','
               << format_double(r.returned_energy) << ','
               << (r.success ? 1 : 0) << ',' << r.shots_used << ',';
            if (r.ground_probability) {
                os << format_double(*r.ground_probability);
            }
            os << '\n';
        }
    }
    return os.str();
}

std::string timings_csv(const SpReport &report) {
    std::ostringstream os;
    os << "algorithm,n,T,delta_c,shots,index,wall_seconds\n";
    for (const CellReport &c : report.cells) {
        const std::string prefix = csv_cell_prefix(c);
        for (const InstanceRecord &r : c.records) {
            os << prefix << ',' << r.index << ','
               << format_double(r.wall_seconds) << '\n';
        }
    }
    return os.str();
}

std::string plot_csv(const SpReport &report, PlotKind kind) {
    std::ostringstream os;
    os << "figure,series,x,y\n";
    const char *figure = kind == PlotKind::SpVsSize ? "sp_vs_n"
                         : kind == PlotKind::SpVsTime ? "sp_vs_T"
                                                      : "sp_vs_delta_c";
    for (const CellReport &c : report.cells) {
        const std::string alg(algorithm_name(c.cell.algorithm));
        const std::string dc = c.cell.algorithm == Algorithm::DAqc
                                   ? ""
                                   : " dc=" + delta_c_label(c.cell.delta_c);
        const std::string shots = " shots=" + std::to_string(c.cell.shots);
        std::string series;
        std::string x;
        switch (kind) {
        case PlotKind::SpVsSize:
            series = alg + " T=" + format_double(c.cell.T) + dc + shots;
            x = std::to_string(c.cell.n);
            break;
        case PlotKind::SpVsTime:
            series = alg + " n=" + std::to_string(c.cell.n) + dc + shots;
            x = format_double(c.cell.T);
            break;
        case PlotKind::SpVsDeltaC:
            if (c.cell.algorithm == Algorithm::DAqc) {
                continue;
            }
            series = alg + " n=" + std::to_string(c.cell.n) +
                     " T=" + format_double(c.cell.T) + shots;
            x = format_double(c.delta_c_value);
            break;
        }
        os << figure << ',' << series << ',' << x << ','
           << format_double(c.sp()) << '\n';
    }
    return os.str();
}

json manifest_json(const ExperimentConfig &config, const SpReport &report) {
    json calibrations = json::object();
    for (const auto &[n, cal] : report.calibrations) {
        calibrations[std::to_string(n)] = calibration_to_json(cal);
    }
    json seeds = json::object();
    for (unsigned n : config.sizes) {
        json list = json::array();
        for (std::size_t k = 0; k < config.instances; ++k) {
            list.push_back(instance_seed(config.master_seed, n, k));
        }
        seeds[std::to_string(n)] = std::move(list);
    }
    json cells = json::array();
    for (const CellReport &c : report.cells) {
        cells.push_back({{"algorithm", algorithm_name(c.cell.algorithm)},
                         {"n", c.cell.n},
                         {"T", c.cell.T},
                         {"delta_c", delta_c_to_json(c.cell.delta_c)},
                         {"delta_c_value", c.delta_c_value},
                         {"shots", c.cell.shots},
                         {"b_opt", c.b_opt},
                         {"c_opt", c.c_opt},
                         {"instances", c.records.size()},
                         {"successes", c.successes()},
                         {"sp", c.sp()}});
    }
    return json{{"version", QGO_VERSION},
                {"config", experiment_config_to_json(config)},
                {"master_seed", report.master_seed},
                {"calibrations", calibrations},
                {"instance_seeds", seeds},
                {"cells", cells}};
}

void emit_outputs(const ExperimentConfig &config, const SpReport &report,
                  PlotKind kind) {
    const std::filesystem::path &dir = config.output_dir;
    const char *plot = kind == PlotKind::SpVsSize ? "plot_sp_vs_n.csv"
                       : kind == PlotKind::SpVsTime ? "plot_sp_vs_T.csv"
                                                    : "plot_sp_vs_delta_c.csv";
    write_text_file(dir / "results.csv", results_csv(report));
    write_text_file(dir / "instances.csv", instances_csv(report));
    write_text_file(dir / "timings.csv", timings_csv(report));
    write_text_file(dir / plot, plot_csv(report, kind));
    write_text_file(dir / "manifest.json",
                    manifest_json(config, report).dump(2) + "\n");
}

} // namespace qgo
