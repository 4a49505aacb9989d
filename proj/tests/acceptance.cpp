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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// writes the supporting data under --out. Every experiment uses the same
// master seed, fixed before any result was seen.

#include "qgo/calibration.hpp"
#include "qgo/evolution.hpp"
#include "qgo/experiment.hpp"
#include "qgo/io.hpp"
#include "qgo/optimizer.hpp"
#include "qgo/rng.hpp"
#include "qgo/statevector.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

namespace {

using namespace qgo;
namespace fs = std::filesystem;

constexpr std::uint64_t kMasterSeed = 2026;

struct Outcome {
    bool pass = false;
    std::string detail;
};

class Stopwatch {
  public:
    double seconds() const {
        return std::chrono::duration<double>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_ =
        std::chrono::steady_clock::now();
};

std::string fmt(double v, int digits = 3) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

class Acceptance {
  public:
    explicit Acceptance(fs::path out) : out_(std::move(out)) {
        fs::create_directories(out_);
    }

    ExperimentConfig base(std::vector<unsigned> sizes, std::size_t instances,
                          const std::string &name) const {
        ExperimentConfig c;
        c.sizes = std::move(sizes);
        c.instances = instances;
        c.master_seed = kMasterSeed;
        c.output_dir = out_ / name;
        c.calibration_cache = out_ / "calibration";
        return c;
    }

    double sp(const SpReport &r, Algorithm a, unsigned n, double T, DeltaC dc,
              std::uint64_t shots) const {
        if (a == Algorithm::DAqc) {
            dc = std::nullopt;
        }
        const CellReport *c = r.find({a, n, T, dc, shots});
        if (c == nullptr) {
            throw std::logic_error("missing cell");
        }
        return c->sp();
    }

    Outcome criterion1() {
        auto cfg = base({2}, 50, "c1_shots");
        cfg.shots = 10000;
        Stopwatch w;
        const SpReport hi = run_sp_experiment(cfg);
        const double seconds = w.seconds();
        emit_outputs(cfg, hi, PlotKind::SpVsSize);
        cfg.shots = 2000;
        cfg.output_dir = out_ / "c1_shots_2000";
        const SpReport lo = run_sp_experiment(cfg);
        emit_outputs(cfg, lo, PlotKind::SpVsSize);
        const double a = sp(hi, Algorithm::DQgo, 2, 1.0, std::nullopt, 10000);
        const double b = sp(lo, Algorithm::DQgo, 2, 1.0, std::nullopt, 2000);
        const bool pass = a >= 0.94 && seconds < 120.0 && std::abs(a - b) <= 0.02;
        return {pass, "SP(shots=10000)=" + fmt(a) + " in " + fmt(seconds, 1) +
                          " s, SP(shots=2000)=" + fmt(b)};
    }

    Outcome criterion2() {
        auto cfg = base({4, 8, 12}, 100, "c2_sizes");
        cfg.algorithms = {Algorithm::DQgo, Algorithm::VQgo};
        cfg.T = {1.0};
        const SpReport qgo = run_sp_experiment(cfg);
        auto daqc_cfg = cfg;
        daqc_cfg.algorithms = {Algorithm::DAqc};
        daqc_cfg.T = {10.0};
        const SpReport daqc = run_sp_experiment(daqc_cfg);
        SpReport all = qgo;
        all.cells.insert(all.cells.end(), daqc.cells.begin(), daqc.cells.end());
        emit_outputs(cfg, all, PlotKind::SpVsSize);

        bool pass = true;
        std::string detail;
        for (unsigned n : cfg.sizes) {
            const double d = sp(qgo, Algorithm::DQgo, n, 1.0, std::nullopt, 0);
            const double v = sp(qgo, Algorithm::VQgo, n, 1.0, std::nullopt, 0);
            const double a = sp(daqc, Algorithm::DAqc, n, 10.0, std::nullopt, 0);
            pass = pass && d > a && std::abs(d - v) <= 0.07;
            detail += "n=" + std::to_string(n) + ": d-QGO " + fmt(d) +
                      ", v-QGO " + fmt(v) + ", d-AQC(T=10) " + fmt(a) + "; ";
        }
        return {pass, detail};
    }

    Outcome criterion3() {
        auto cfg = base({4, 8}, 100, "c3_delta_c");
        const DeltaCComparison cmp =
            run_delta_c_comparison(cfg, 0.1, std::nullopt);
        emit_outputs(cfg, cmp.report, PlotKind::SpVsDeltaC);
        bool pass = true;
        std::string detail;
        for (const DeltaCPair &p : cmp.pairs) {
            pass = pass && std::abs(p.difference()) <= 0.05;
            detail += "n=" + std::to_string(p.n) + ": SP(0.1) " +
                      fmt(p.sp_first) + ", SP(c_opt) " + fmt(p.sp_second) +
                      "; ";
        }
        return {pass, detail};
    }

    Outcome criterion4() {
        auto cfg = base({2}, 50, "c4_time");
        cfg.algorithms = {Algorithm::DQgo, Algorithm::DAqc};
        cfg.T = default_time_grid();
        const SpReport r = run_time_sweep(cfg);
        emit_outputs(cfg, r, PlotKind::SpVsTime);
        const double a10 = sp(r, Algorithm::DAqc, 2, 10.0, std::nullopt, 0);
        const double a1 = sp(r, Algorithm::DAqc, 2, 1.0, std::nullopt, 0);
        const double q1 = sp(r, Algorithm::DQgo, 2, 1.0, std::nullopt, 0);
        const double q10 = sp(r, Algorithm::DQgo, 2, 10.0, std::nullopt, 0);
        return {a10 > a1 && q1 >= q10 - 0.02,
                "d-AQC T=10 " + fmt(a10) + " vs T=1 " + fmt(a1) +
                    "; d-QGO T=1 " + fmt(q1) + " vs T=10 " + fmt(q10)};
    }

    Outcome criterion5() {
        auto cfg = base({2}, 50, "c5_shot_economy");
        cfg.shots = 2000;
        const DeltaCComparison cmp =
            run_delta_c_comparison(cfg, std::nullopt, 0.1);
        emit_outputs(cfg, cmp.report, PlotKind::SpVsDeltaC);
        const DeltaCPair &p = cmp.pairs.at(0);
        return {p.sp_first >= p.sp_second,
                "SP(c_opt)=" + fmt(p.sp_first) + ", SP(0.1)=" +
                    fmt(p.sp_second)};
    }

    Outcome criterion6() {
        const std::map<unsigned, double> targets{{2, 1.523}, {4, 1.56}};
        bool pass = true;
        std::string detail;
        for (const auto &[n, target] : targets) {
            const CalibrationResult r = calibrate(n);
            CalibrationCache(out_ / "calibration").store(r);
            write_text_file(out_ / ("calibration_curve_n" + std::to_string(n) +
                                    ".csv"),
                            calibration_curve_csv(r));
            const bool ok = std::abs(r.c_opt - target) <= 0.1;
            pass = pass && ok;
            detail += "n=" + std::to_string(n) + ": c_opt " + fmt(r.c_opt, 2) +
                      " (target " + fmt(target) + "), b_opt " +
                      fmt(r.b_opt, 2) + ", objective " + fmt(r.objective, 4) +
                      "; ";
        }
        return {pass, detail};
    }

    Outcome criterion7() {
        double worst_fine = 1.0;
        double worst_coarse = 1.0;
        for (unsigned n : {2U, 3U, 4U}) {
            const CalibrationResult cal =
                CalibrationCache(out_ / "calibration").get_or_calibrate(n, 1.0, 0.1, {});
            Rng rng(derive_seed({kMasterSeed, hash_string("engines"), n}));
            std::bernoulli_distribution coin;
            for (std::size_t k = 0; k < 10; ++k) {
                const Evolver ev(sample_sk_instance(n, rng()));
                AnnealSchedule s;
                s.b = cal.b_opt;
                s.T = 1.0;
                for (unsigned i = 0; i < n; ++i) {
                    s.c.push_back(coin(rng) ? cal.c_opt : -cal.c_opt);
                }
                s.dt = 0.01;
                const StateVector exact = ev.ode(s, 1e-3);
                worst_fine = std::min(worst_fine, fidelity(ev.trotter(s), exact));
                s.dt = 0.1;
                worst_coarse =
                    std::min(worst_coarse, fidelity(ev.trotter(s), exact));
            }
        }
        return {worst_fine >= 0.999 && worst_coarse >= 0.99,
                "min fidelity " + fmt(worst_fine, 6) + " at dt=0.01, " +
                    fmt(worst_coarse, 6) + " at dt=0.1"};
    }

    Outcome criterion8() {
        const CalibrationResult cal =
            CalibrationCache(out_ / "calibration").get_or_calibrate(4, 1.0, 0.1, {});
        Rng rng(derive_seed({kMasterSeed, hash_string("gradients")}));
        std::uniform_int_distribution<int> pick(-1, 1);
        std::size_t agree = 0;
        double worst = 0.0;
        std::ostringstream csv;
        csv << "pair,component,forward,central,relative_error\n";
        for (std::size_t k = 0; k < 100; ++k) {
            const IsingInstance inst = sample_sk_instance(4, rng());
            const std::size_t j = k % 4;
            std::vector<double> c(4, 0.0);
            for (std::size_t i = 0; i < 4; ++i) {
                if (i != j) {
                    c[i] = pick(rng) * cal.c_opt;
                }
            }
            QgoConfig cfg;
            cfg.b_opt = cal.b_opt;
            cfg.c_opt = cal.c_opt;
            cfg.delta_c = 1e-4;
            const EnergyEstimator est(inst, cfg);
            const double forward = gradient_component(est, c, j).g;
            const double h = 1e-5;
            auto plus = c;
            auto minus = c;
            plus[j] += h;
            minus[j] -= h;
            const double central =
                (est.estimate(plus, 0).energy - est.estimate(minus, 0).energy) /
                (2 * h);
            const double rel = std::abs(forward - central) / std::abs(central);
            worst = std::max(worst, rel);
            if ((forward > 0) == (central > 0) && rel <= 0.01) {
                ++agree;
            }
            csv << k << ',' << j << ',' << format_double(forward) << ','
                << format_double(central) << ',' << format_double(rel) << '\n';
        }
        write_text_file(out_ / "gradient_oracle.csv", csv.str());
        return {agree == 100, std::to_string(agree) +
                                  "/100 pairs agree, worst relative error " +
                                  fmt(worst * 100, 4) + "%"};
    }

    Outcome criterion9() {
        Stopwatch w;
        std::vector<std::string> failures;

        // Norm preservation over long random circuits and full evolutions.
        Rng rng(derive_seed({kMasterSeed, hash_string("invariants")}));
        std::uniform_real_distribution<double> angle(-4.0, 4.0);
        double worst_norm = 0.0;
        for (unsigned n : {2U, 5U, 8U}) {
            StateVector s = init_plus_state(n);
            std::uniform_int_distribution<unsigned> q(0, n - 1);
            for (int k = 0; k < 10000; ++k) {
                const unsigned t = q(rng);
                switch (k % 5) {
                case 0:
                    apply_gate(s, Gate::rx(t, angle(rng)));
                    break;
                case 1:
                    apply_gate(s, Gate::ry(t, angle(rng)));
                    break;
                case 2:
                    apply_gate(s, Gate::rz(t, angle(rng)));
                    break;
                case 3:
                    apply_gate(s, Gate::h(t));
                    break;
                default:
                    apply_gate(s, Gate::cx(t, (t + 1) % n));
                }
            }
            worst_norm = std::max(worst_norm, std::abs(s.norm_squared() - 1));
            AnnealSchedule sched;
            sched.c.assign(n, 1.5);
            sched.T = 10.0;
            const Evolver ev(sample_sk_instance(n, rng()));
            worst_norm = std::max(
                worst_norm, std::abs(ev.trotter(sched).norm_squared() - 1));
        }
        if (worst_norm > 1e-9) {
            failures.push_back("norm drift " + std::to_string(worst_norm));
        }

        // Evaluation-count identity.
        for (unsigned n = 1; n <= 8; ++n) {
            QgoConfig cfg;
            cfg.c_opt = 1.5;
            cfg.delta_c = 1.5;
            const QgoResult r = qgo_run(sample_sk_instance(n, rng()), cfg);
            if (r.total_energy_evaluations != n + n * (n + 1) / 2) {
                failures.push_back("evaluation count at n=" +
                                   std::to_string(n));
            }
        }

        // Success accounting against an independent enumeration, and
        // end-to-end determinism.
        auto cfg = base({3, 5}, 40, "c9_invariants");
        cfg.algorithms = {Algorithm::DQgo, Algorithm::DAqc};
        cfg.shots = 500;
        const SpReport a = run_sp_experiment(cfg);
        const SpReport b = run_sp_experiment(cfg);
        if (results_csv(a) != results_csv(b) ||
            instances_csv(a) != instances_csv(b)) {
            failures.push_back("rerun not identical");
        }
        emit_outputs(cfg, a, PlotKind::SpVsSize);
        for (const CellReport &c : a.cells) {
            std::size_t wins = 0;
            for (const InstanceRecord &r : c.records) {
                const IsingInstance inst =
                    sample_sk_instance(c.cell.n, r.instance_seed);
                double best = INFINITY;
                for (std::uint64_t x = 0; x < (1ULL << c.cell.n); ++x) {
                    best = std::min(best, classical_energy(
                                              inst, SpinConfig::from_basis(
                                                        x, c.cell.n)));
                }
                const bool win = std::abs(r.returned_energy - best) <= 1e-9;
                if (win != r.success) {
                    failures.push_back("success flag mismatch");
                }
                wins += win ? 1 : 0;
            }
            if (wins != c.successes()) {
                failures.push_back("success count mismatch");
            }
        }

        const double seconds = w.seconds();
        if (seconds >= 300.0) {
            failures.push_back("took " + fmt(seconds, 1) + " s");
        }
        std::string detail = failures.empty() ? "all invariants hold"
                                              : failures.front();
        detail += " (" + fmt(seconds, 1) + " s)";
        return {failures.empty(), detail};
    }

  private:
    fs::path out_;
};

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"qgo acceptance checks"};
    std::string out = "acceptance";
    std::set<int> only;
    std::string expected_file;
    app.add_option("--out", out, "Directory for supporting data");
    app.add_option("--expected-failures", expected_file,
                   "File listing criteria known to fail, one id per line")
        ->check(CLI::ExistingFile);
    app.add_option("--only", only, "Run only these criteria")
        ->check(CLI::Range(1, 9));
    CLI11_PARSE(app, argc, argv);

    // Known failures still print FAIL; they only stop failing the exit code.
    std::set<int> expected;
    if (!expected_file.empty()) {
        std::istringstream in(read_text_file(expected_file));
        for (std::string line; std::getline(in, line);) {
            if (line.empty() || line[0] == '#') {
                continue;
            }
            if (line.find_first_not_of(" \t\r") == std::string::npos) {
                continue;
            }
            expected.insert(std::stoi(line));
        }
    }

    Acceptance acc(out);
    using Check = Outcome (Acceptance::*)();
    const std::vector<Check> checks{
        &Acceptance::criterion6, &Acceptance::criterion1,
        &Acceptance::criterion2, &Acceptance::criterion3,
        &Acceptance::criterion4, &Acceptance::criterion5,
        &Acceptance::criterion7, &Acceptance::criterion8,
        &Acceptance::criterion9};
    // Calibration runs first so later criteria reuse the cached values.
    const std::vector<int> ids{6, 1, 2, 3, 4, 5, 7, 8, 9};

    std::map<int, Outcome> results;
    for (std::size_t k = 0; k < checks.size(); ++k) {
        if (!only.empty() && only.count(ids[k]) == 0) {
            continue;
        }
        Stopwatch w;
        try {
            results[ids[k]] = (acc.*checks[k])();
        } catch (const std::exception &e) {
            results[ids[k]] = {false, std::string("error: ") + e.what()};
        }
        std::cerr << "criterion " << ids[k] << " done in " << fmt(w.seconds(), 1)
                  << " s\n";
    }

    std::ostringstream summary;
    bool ok = true;
    for (const auto &[id, r] : results) {
        const bool known = expected.count(id) != 0;
        summary << "criterion " << id << ": " << (r.pass ? "PASS" : "FAIL");
        if (known) {
            summary << (r.pass ? " (listed as expected failure)"
                               : " (expected failure)");
        }
        summary << " | " << r.detail << '\n';
        ok = ok && (r.pass || known);
    }
    std::cout << summary.str();
    write_text_file(fs::path(out) / "summary.txt", summary.str());
    return ok ? 0 : 1;
}
