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

#include "qgo/errors.hpp"
#include "qgo/io.hpp"
#include "qgo/ising.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

namespace {

using qgo::Coupling;
using qgo::IsingInstance;
using qgo::SpinConfig;

IsingInstance pair(double j, double h0 = 0.0, double h1 = 0.0) {
    return IsingInstance(2, {{0, 1, j}}, {h0, h1});
}

// Reversed summation order, written independently of the library.
double reference_energy(const IsingInstance &inst, const SpinConfig &s) {
    double e = 0.0;
    const auto h = inst.fields();
    for (std::size_t i = h.size(); i-- > 0;) {
        e -= h[i] * s[i];
    }
    const auto cs = inst.couplings();
    for (std::size_t k = cs.size(); k-- > 0;) {
        e -= cs[k].value * s[cs[k].i] * s[cs[k].j];
    }
    return e;
}

SpinConfig random_config(unsigned n, qgo::Rng &rng) {
    std::bernoulli_distribution coin;
    std::vector<int> s(n);
    for (int &v : s) {
        v = coin(rng) ? 1 : -1;
    }
    return SpinConfig(s);
}

TEST(IsingInstance, NormalizesAndValidates) {
    const IsingInstance inst(3, {{2, 1, 0.5}, {0, 2, 1.0}}, {0, 0, 0});
    ASSERT_EQ(inst.couplings().size(), 2U);
    EXPECT_EQ(inst.couplings()[0], (Coupling{0, 2, 1.0}));
    EXPECT_EQ(inst.couplings()[1], (Coupling{1, 2, 0.5}));
    EXPECT_THROW(IsingInstance(2, {{0, 0, 1.0}}, {0, 0}),
                 std::invalid_argument);
    EXPECT_THROW(IsingInstance(2, {{0, 2, 1.0}}, {0, 0}),
                 std::invalid_argument);
    EXPECT_THROW(IsingInstance(2, {{0, 1, 1.0}, {1, 0, 2.0}}, {0, 0}),
                 std::invalid_argument);
    EXPECT_THROW(IsingInstance(2, {{0, 1, NAN}}, {0, 0}),
                 std::invalid_argument);
    EXPECT_THROW(IsingInstance(2, {}, {0}), std::invalid_argument);
    EXPECT_THROW(IsingInstance(0, {}, {}), std::invalid_argument);
    EXPECT_THROW(IsingInstance(1, {}, {INFINITY}), std::invalid_argument);
}

TEST(SpinConfig, BasisBijection) {
    for (std::uint64_t b = 0; b < 16; ++b) {
        const SpinConfig s = SpinConfig::from_basis(b, 4);
        EXPECT_EQ(s.basis_index(), b);
        for (unsigned i = 0; i < 4; ++i) {
            EXPECT_EQ(s[i], 1 - 2 * static_cast<int>((b >> i) & 1U));
        }
    }
    EXPECT_EQ(SpinConfig::from_basis(0b10, 3).to_string(), "+-+");
    EXPECT_EQ(SpinConfig({1, -1}).flipped(), SpinConfig({-1, 1}));
    EXPECT_THROW(SpinConfig({1, 0}), std::invalid_argument);
}

TEST(ClassicalEnergy, Examples) {
    EXPECT_DOUBLE_EQ(qgo::classical_energy(pair(1.0), SpinConfig({1, 1})),
                     -1.0);
    EXPECT_DOUBLE_EQ(
        qgo::classical_energy(pair(1.0, 0.5, 0.0), SpinConfig({1, 1})), -1.5);
    EXPECT_THROW(qgo::classical_energy(pair(1.0), SpinConfig({1})),
                 std::invalid_argument);
}

TEST(ClassicalEnergy, MatchesReversedSummation) {
    qgo::Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        const auto inst = qgo::sample_sk_instance(3 + t % 4, 100 + t);
        for (int k = 0; k < 10; ++k) {
            const SpinConfig s = random_config(inst.size(), rng);
            EXPECT_NEAR(qgo::classical_energy(inst, s),
                        reference_energy(inst, s), 1e-12);
        }
    }
}

TEST(ClassicalEnergy, DiagonalTableAgrees) {
    const auto inst = qgo::sample_sk_instance(5, 8);
    const auto table = qgo::diagonal_energies(inst);
    ASSERT_EQ(table.size(), 32U);
    for (std::uint64_t b = 0; b < 32; ++b) {
        EXPECT_EQ(table[b],
                  qgo::classical_energy(inst, SpinConfig::from_basis(b, 5)));
    }
}

TEST(ClassicalEnergy, SpinFlipSymmetryWithoutFields) {
    qgo::Rng rng(4);
    for (int t = 0; t < 10; ++t) {
        const auto sk = qgo::sample_sk_instance(6, t);
        const IsingInstance inst(
            6, {sk.couplings().begin(), sk.couplings().end()},
            std::vector<double>(6, 0.0));
        for (int k = 0; k < 20; ++k) {
            const SpinConfig s = random_config(6, rng);
            EXPECT_DOUBLE_EQ(qgo::classical_energy(inst, s),
                             qgo::classical_energy(inst, s.flipped()));
        }
    }
}

TEST(BruteForce, FerroPairIsDegenerate) {
    const auto g = qgo::brute_force_ground_state(pair(1.0));
    EXPECT_DOUBLE_EQ(g.energy, -1.0);
    EXPECT_EQ(g.degeneracy, 2U);
    EXPECT_EQ(g.ground_set, (std::vector<std::uint64_t>{0, 3}));
    EXPECT_TRUE(g.contains(SpinConfig({1, 1})));
    EXPECT_TRUE(g.contains(SpinConfig({-1, -1})));
    EXPECT_FALSE(g.contains(SpinConfig({1, -1})));
}

TEST(BruteForce, FieldBreaksDegeneracy) {
    const auto inst = pair(1.0, 0.5, 0.0);
    const auto g = qgo::brute_force_ground_state(inst);
    EXPECT_EQ(g.config, SpinConfig({1, 1}));
    EXPECT_DOUBLE_EQ(g.energy, -1.5);
    EXPECT_EQ(g.degeneracy, 1U);
    // Enumerate by hand.
    double best = 1e9;
    for (int a : {1, -1}) {
        for (int b : {1, -1}) {
            best = std::min(best, -1.0 * a * b - 0.5 * a);
        }
    }
    EXPECT_DOUBLE_EQ(g.energy, best);
}

TEST(BruteForce, SingleSpin) {
    const auto g =
        qgo::brute_force_ground_state(IsingInstance(1, {}, {1.0}));
    EXPECT_EQ(g.config, SpinConfig({1}));
    EXPECT_DOUBLE_EQ(g.energy, -1.0);
}

TEST(BruteForce, CapacityLimit) {
    EXPECT_THROW(qgo::brute_force_ground_state(
                     IsingInstance(25, {}, std::vector<double>(25, 0.0))),
                 qgo::CapacityError);
}

TEST(BruteForce, NoRandomConfigBeatsGround) {
    qgo::Rng rng(11);
    for (int t = 0; t < 20; ++t) {
        const auto inst = qgo::sample_sk_instance(2 + t % 9, 500 + t);
        const auto g = qgo::brute_force_ground_state(inst);
        EXPECT_GE(g.degeneracy, 1U);
        for (auto b : g.ground_set) {
            EXPECT_NEAR(
                qgo::classical_energy(
                    inst, SpinConfig::from_basis(b, inst.size())),
                g.energy, qgo::kGroundTieTolerance);
        }
        for (int k = 0; k < 100; ++k) {
            EXPECT_LE(g.energy,
                      qgo::classical_energy(inst,
                                            random_config(inst.size(), rng)));
        }
    }
}

TEST(SampleSk, Shape) {
    const auto inst = qgo::sample_sk_instance(2, 5);
    EXPECT_EQ(inst.couplings().size(), 1U);
    EXPECT_EQ(inst.fields().size(), 2U);
    EXPECT_EQ(qgo::sample_sk_instance(6, 1).couplings().size(), 15U);
    EXPECT_EQ(inst.seed(), std::optional<std::uint64_t>(5));
    EXPECT_THROW(qgo::sample_sk_instance(0, 1), std::invalid_argument);
}

TEST(SampleSk, DeterministicPerSeed) {
    EXPECT_EQ(qgo::sample_sk_instance(5, 42), qgo::sample_sk_instance(5, 42));
    EXPECT_FALSE(qgo::sample_sk_instance(5, 42) ==
                 qgo::sample_sk_instance(5, 43));
}

TEST(SampleSk, GaussianMoments) {
    double sum = 0.0;
    double sumsq = 0.0;
    double hsum = 0.0;
    double hsumsq = 0.0;
    std::size_t count = 0;
    std::size_t hcount = 0;
    for (std::uint64_t seed = 0; count < 100000; ++seed) {
        const auto inst = qgo::sample_sk_instance(4, seed);
        for (const auto &c : inst.couplings()) {
            sum += c.value;
            sumsq += c.value * c.value;
            ++count;
        }
        for (double h : inst.fields()) {
            hsum += h;
            hsumsq += h * h;
            ++hcount;
        }
    }
    const double mean = sum / static_cast<double>(count);
    const double var = sumsq / static_cast<double>(count) - mean * mean;
    EXPECT_NEAR(mean, 0.0, 0.01);
    EXPECT_NEAR(var, 0.25, 0.01);
    const double hmean = hsum / static_cast<double>(hcount);
    EXPECT_NEAR(hmean, 0.0, 0.01);
    EXPECT_NEAR(hsumsq / static_cast<double>(hcount) - hmean * hmean, 0.25,
                0.01);
}

TEST(Ferromagnet, Examples) {
    const auto f2 = qgo::ferromagnetic_instance(2);
    ASSERT_EQ(f2.couplings().size(), 1U);
    EXPECT_EQ(f2.couplings()[0], (Coupling{0, 1, 1.0}));
    EXPECT_EQ(std::vector<double>(f2.fields().begin(), f2.fields().end()),
              (std::vector<double>{0.0, 0.0}));

    const auto f4 = qgo::ferromagnetic_instance(4);
    EXPECT_EQ(f4.couplings().size(), 6U);
    for (const auto &c : f4.couplings()) {
        EXPECT_EQ(c.value, 1.0);
    }
    for (unsigned n : {2U, 4U, 7U}) {
        const auto g = qgo::brute_force_ground_state(
            qgo::ferromagnetic_instance(n));
        EXPECT_EQ(g.ground_set,
                  (std::vector<std::uint64_t>{0, (1ULL << n) - 1}));
        EXPECT_DOUBLE_EQ(g.energy, -static_cast<double>(n * (n - 1)) / 2.0);
    }
    EXPECT_THROW(qgo::ferromagnetic_instance(1), std::invalid_argument);
}

TEST(InstanceFile, RoundTripIsBitExact) {
    const auto dir = std::filesystem::path(::testing::TempDir()) / "qgo_inst";
    for (unsigned n : {1U, 2U, 7U}) {
        const auto inst = qgo::sample_sk_instance(n, 1234 + n);
        const auto path = dir / ("i" + std::to_string(n) + ".json");
        qgo::write_instance_file(path, inst);
        EXPECT_EQ(qgo::read_instance_file(path), inst);
    }
    const IsingInstance no_seed(2, {{0, 1, 0.1}}, {1.0 / 3.0, -0.0});
    qgo::write_instance_file(dir / "ns.json", no_seed);
    const auto back = qgo::read_instance_file(dir / "ns.json");
    EXPECT_EQ(back, no_seed);
    EXPECT_FALSE(back.seed().has_value());
}

TEST(InstanceFile, ShapeAndRejections) {
    const auto j = qgo::instance_to_json(
        IsingInstance(3, {{1, 2, 0.5}, {0, 1, 0.25}}, {1, 2, 3}, 9));
    EXPECT_EQ(j.dump(),
              R"({"couplings":[[0,1,0.25],[1,2,0.5]],"fields":[1.0,2.0,3.0],"n":3,"seed":9})");
    auto bad = j;
    bad["extra"] = 1;
    EXPECT_THROW(qgo::instance_from_json(bad), std::invalid_argument);
    auto bad2 = j;
    bad2["couplings"] = nlohmann::json::array({nlohmann::json::array({0, 1})});
    EXPECT_THROW(qgo::instance_from_json(bad2), std::invalid_argument);
    auto bad3 = j;
    bad3.erase("fields");
    EXPECT_THROW(qgo::instance_from_json(bad3), std::invalid_argument);
    EXPECT_THROW(qgo::read_instance_file("/nonexistent/qgo/x.json"),
                 qgo::IoError);
}

} // namespace
