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

// Command-line front end: calibration, instance generation, batch
// experiments, energy landscapes and circuit export.

#include "qgo/calibration.hpp"
#include "qgo/errors.hpp"
#include "qgo/experiment.hpp"
#include "qgo/io.hpp"
#include "qgo/optimizer.hpp"
#include "qgo/schedule.hpp"

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

namespace {

using namespace qgo;

constexpr int kExitContract = 1;
constexpr int kExitIo = 2;

void progress(const CellReport &c) {
    std::cerr << algorithm_name(c.cell.algorithm) << " n=" << c.cell.n
              << " T=" << format_double(c.cell.T);
    if (c.cell.algorithm != Algorithm::DAqc) {
        std::cerr << " delta_c=" << format_double(c.delta_c_value);
    }
    std::cerr << " shots=" << c.cell.shots << "  SP=" << c.successes() << "/"
              << c.records.size() << " = " << format_double(c.sp()) << "\n";
}

RunOptions run_options(const ExperimentConfig &cfg, bool checkpoint) {
    RunOptions opt;
    if (checkpoint) {
        opt.checkpoint = cfg.output_dir / "records.jsonl";
    }
    opt.on_cell_done = progress;
    return opt;
}

struct CalibrateArgs {
    std::vector<unsigned> n;
    double T = 1.0;
    double dt = 0.1;
    std::string cache;
    std::string curve;
    unsigned workers = 0;
};

int cmd_calibrate(const CalibrateArgs &a) {
    nlohmann::json out = nlohmann::json::array();
    for (unsigned n : a.n) {
        CalibrationResult r;
        if (!a.cache.empty() && a.curve.empty()) {
            r = CalibrationCache(a.cache).get_or_calibrate(n, a.T, a.dt, {},
                                                           a.workers);
        } else {
            r = calibrate(n, a.T, a.dt, {}, a.workers);
            if (!a.cache.empty()) {
                CalibrationCache(a.cache).store(r);
            }
        }
        if (!a.curve.empty()) {
            std::filesystem::path path = a.curve;
            if (a.n.size() > 1) {
                path.replace_filename(path.stem().string() + "_n" +
                                      std::to_string(n) +
                                      path.extension().string());
            }
            write_text_file(path, calibration_curve_csv(r));
        }
        out.push_back(calibration_to_json(r));
    }
    std::cout << (out.size() == 1 ? out[0] : out).dump(2) << "\n";
    return 0;
}

struct GenArgs {
    unsigned n = 0;
    std::size_t count = 0;
    std::uint64_t seed = 0;
    std::string out;
};

int cmd_gen_instances(const GenArgs &a) {
    if (a.n > kMaxQubits) {
        throw CapacityError("n = " + std::to_string(a.n) +
                            " exceeds the engine capacity");
    }
    for (std::size_t k = 0; k < a.count; ++k) {
        const IsingInstance inst =
            sample_sk_instance(a.n, instance_seed(a.seed, a.n, k));
        char name[64];
        std::snprintf(name, sizeof(name), "sk_n%u_%04zu.json", a.n, k);
        write_instance_file(std::filesystem::path(a.out) / name, inst);
    }
    std::cerr << "wrote " << a.count << " instances to " << a.out << "\n";
    return 0;
}

int cmd_run(const std::string &config_path, bool checkpoint) {
    const ExperimentConfig cfg = read_experiment_config(config_path);
    const SpReport report =
        run_sp_experiment(cfg, run_options(cfg, checkpoint));
    emit_outputs(cfg, report, PlotKind::SpVsSize);
    std::cout << results_csv(report);
    return 0;
}

int cmd_sweep(const std::string &config_path, bool checkpoint) {
    const ExperimentConfig cfg = read_experiment_config(config_path);
    const SpReport report = run_time_sweep(cfg, run_options(cfg, checkpoint));
    emit_outputs(cfg, report, PlotKind::SpVsTime);
    std::cout << results_csv(report);
    return 0;
}

DeltaC parse_delta_c_arg(const std::string &s) {
    if (s == "c_opt") {
        return std::nullopt;
    }
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size() || !(v > 0.0)) {
        throw std::invalid_argument("delta_c must be positive or c_opt");
    }
    return v;
}

int cmd_compare(const std::string &config_path, const std::string &first,
                const std::string &second, bool checkpoint) {
    const ExperimentConfig cfg = read_experiment_config(config_path);
    const DeltaCComparison cmp =
        run_delta_c_comparison(cfg, parse_delta_c_arg(first),
                               parse_delta_c_arg(second),
                               run_options(cfg, checkpoint));
    emit_outputs(cfg, cmp.report, PlotKind::SpVsDeltaC);
    std::cout << "algorithm,n,T,shots,sp_" << delta_c_label(cmp.first)
              << ",sp_" << delta_c_label(cmp.second) << ",difference\n";
    for (const DeltaCPair &p : cmp.pairs) {
        std::cout << algorithm_name(p.algorithm) << ',' << p.n << ','
                  << format_double(p.T) << ',' << p.shots << ','
                  << format_double(p.sp_first) << ','
                  << format_double(p.sp_second) << ','
                  << format_double(p.difference()) << '\n';
    }
    return 0;
}

struct LandscapeArgs {
    std::string instance;
    std::size_t qubit = 0;
    double lo = -2.0;
    double hi = 2.0;
    std::size_t steps = 81;
    std::vector<double> c;
    double b = 0.0;
    double T = 1.0;
    double dt = 0.1;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    bool engine_ode = false;
};

int cmd_landscape(const LandscapeArgs &a) {
    const IsingInstance inst = read_instance_file(a.instance);
    std::vector<double> c = a.c;
    if (c.empty()) {
        c.assign(inst.size(), 0.0);
    }
    QgoConfig cfg;
    cfg.T = a.T;
    cfg.dt = a.dt;
    cfg.shots = a.shots;
    cfg.seed = a.seed;
    cfg.engine = a.engine_ode ? Engine::Ode : Engine::Trotter;
    if (a.b > 0.0) {
        cfg.b_opt = a.b;
    } else {
        cfg.b_opt = calibrate(inst.size(), a.T, a.dt).b_opt;
    }
    const auto points =
        energy_landscape(inst, c, a.qubit, a.lo, a.hi, a.steps, cfg);
    std::cout << "c,energy\n";
    for (const LandscapePoint &p : points) {
        std::cout << format_double(p.c_value) << ','
                  << format_double(p.energy) << '\n';
    }
    return 0;
}

int cmd_export_qasm(const std::string &instance, const std::string &schedule,
                    const std::string &out) {
    const IsingInstance inst = read_instance_file(instance);
    const AnnealSchedule sched = read_schedule_file(schedule);
    write_text_file(out, export_openqasm(build_trotter_circuit(inst, sched)));
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Counterdiabatic greedy optimization on a statevector "
                 "simulator"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(QGO_VERSION));

    CalibrateArgs cal;
    auto *calibrate_cmd =
        app.add_subcommand("calibrate", "Calibrate b and c on the ferromagnet");
    calibrate_cmd->add_option("--n", cal.n, "System size(s)")
        ->required()
        ->check(CLI::Range(1U, kMaxQubits));
    calibrate_cmd->add_option("--T", cal.T, "Annealing time")
        ->capture_default_str();
    calibrate_cmd->add_option("--dt", cal.dt, "Trotter step")
        ->capture_default_str();
    calibrate_cmd->add_option("--cache", cal.cache, "Calibration cache dir");
    calibrate_cmd->add_option("--curve", cal.curve,
                              "Write every evaluated grid point to this CSV");
    calibrate_cmd->add_option("--workers", cal.workers, "Threads (0 = all)");

    GenArgs gen;
    auto *gen_cmd =
        app.add_subcommand("gen-instances", "Write random SK instances");
    gen_cmd->add_option("--n", gen.n, "System size")
        ->required()
        ->check(CLI::PositiveNumber);
    gen_cmd->add_option("--count", gen.count, "Number of instances")
        ->required();
    gen_cmd->add_option("--seed", gen.seed, "Master seed")->required();
    gen_cmd->add_option("--out", gen.out, "Output directory")->required();

    std::string config_path;
    bool no_checkpoint = false;
    auto *run_cmd = app.add_subcommand("run", "Success-probability experiment");
    run_cmd->add_option("--config", config_path, "Experiment JSON")
        ->required()
        ->check(CLI::ExistingFile);
    run_cmd->add_flag("--no-checkpoint", no_checkpoint,
                      "Do not read or write records.jsonl");

    auto *sweep_cmd = app.add_subcommand("sweep", "Annealing-time sweep");
    sweep_cmd->add_option("--config", config_path, "Experiment JSON")
        ->required()
        ->check(CLI::ExistingFile);
    sweep_cmd->add_flag("--no-checkpoint", no_checkpoint,
                        "Do not read or write records.jsonl");

    std::string first = "0.1";
    std::string second = "c_opt";
    auto *compare_cmd = app.add_subcommand(
        "compare", "Paired runs under two differential intervals");
    compare_cmd->add_option("--config", config_path, "Experiment JSON")
        ->required()
        ->check(CLI::ExistingFile);
    compare_cmd->add_option("--first", first, "First delta_c (or c_opt)")
        ->capture_default_str();
    compare_cmd->add_option("--second", second, "Second delta_c (or c_opt)")
        ->capture_default_str();
    compare_cmd->add_flag("--no-checkpoint", no_checkpoint,
                          "Do not read or write records.jsonl");

    LandscapeArgs land;
    auto *landscape_cmd =
        app.add_subcommand("landscape", "Energy as a function of one c_i");
    landscape_cmd->add_option("--instance", land.instance, "Instance JSON")
        ->required()
        ->check(CLI::ExistingFile);
    landscape_cmd->add_option("--qubit", land.qubit, "Component i")
        ->required();
    landscape_cmd->add_option("--lo", land.lo)->capture_default_str();
    landscape_cmd->add_option("--hi", land.hi)->capture_default_str();
    landscape_cmd->add_option("--steps", land.steps)->capture_default_str();
    landscape_cmd->add_option("--c", land.c,
                              "Base coefficient vector (default zeros)");
    landscape_cmd->add_option("--b", land.b,
                              "Transverse prefactor (default: calibrated)");
    landscape_cmd->add_option("--T", land.T)->capture_default_str();
    landscape_cmd->add_option("--dt", land.dt)->capture_default_str();
    landscape_cmd->add_option("--shots", land.shots, "0 = exact")
        ->capture_default_str();
    landscape_cmd->add_option("--seed", land.seed)->capture_default_str();
    landscape_cmd->add_flag("--ode", land.engine_ode,
                            "Use the ODE engine instead of Trotter steps");

    std::string instance_path;
    std::string schedule_path;
    std::string out_path;
    auto *qasm_cmd =
        app.add_subcommand("export-qasm", "Write the circuit as OpenQASM 3");
    qasm_cmd->add_option("--instance", instance_path, "Instance JSON")
        ->required()
        ->check(CLI::ExistingFile);
    qasm_cmd->add_option("--schedule", schedule_path, "Schedule JSON")
        ->required()
        ->check(CLI::ExistingFile);
    qasm_cmd->add_option("--out", out_path, "Output file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*calibrate_cmd) {
            return cmd_calibrate(cal);
        }
        if (*gen_cmd) {
            return cmd_gen_instances(gen);
        }
        if (*run_cmd) {
            return cmd_run(config_path, !no_checkpoint);
        }
        if (*sweep_cmd) {
            return cmd_sweep(config_path, !no_checkpoint);
        }
        if (*compare_cmd) {
            return cmd_compare(config_path, first, second, !no_checkpoint);
        }
        if (*landscape_cmd) {
            return cmd_landscape(land);
        }
        if (*qasm_cmd) {
            return cmd_export_qasm(instance_path, schedule_path, out_path);
        }
    } catch (const IoError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitContract;
    }
    return kExitContract;
}
