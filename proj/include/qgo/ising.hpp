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
 * Ising problem Hamiltonians
 *
 *     H^z = -sum_{i<j} J_ij s_i s_j - sum_i h_i s_i
 *
 * their classical energies, Sherrington-Kirkpatrick instance generation and
 * the exhaustive ground-state oracle.
 *
 * Spin/basis convention (global to the library): basis index b encodes
 * qubit i in bit i, and s_i = 1 - 2 * bit_i, so |0> is spin up.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qgo {

inline constexpr unsigned kMaxQubits = 24;

struct Coupling {
    unsigned i = 0;
    unsigned j = 0;
    double value = 0.0;

    friend bool operator==(const Coupling &, const Coupling &) = default;
};

/// Immutable problem instance. Couplings are kept sorted by (i, j) with
/// i < j and no duplicates.
class IsingInstance {
  public:
    IsingInstance(unsigned n, std::vector<Coupling> couplings,
                  std::vector<double> fields,
                  std::optional<std::uint64_t> seed = std::nullopt);

    unsigned size() const { return n_; }
    std::span<const Coupling> couplings() const { return couplings_; }
    std::span<const double> fields() const { return fields_; }
    std::optional<std::uint64_t> seed() const { return seed_; }

    /// Same topology with every J and h multiplied by `factor`.
    IsingInstance scaled(double factor) const;

    friend bool operator==(const IsingInstance &,
                           const IsingInstance &) = default;

  private:
    unsigned n_;
    std::vector<Coupling> couplings_;
    std::vector<double> fields_;
    std::optional<std::uint64_t> seed_;
};

/// Vector of +1/-1 spins, bijective with a basis index.
class SpinConfig {
  public:
    SpinConfig() = default;
    explicit SpinConfig(std::vector<int> spins);

    static SpinConfig from_basis(std::uint64_t index, unsigned n);

    std::uint64_t basis_index() const;
    std::size_t size() const { return spins_.size(); }
    int operator[](std::size_t i) const { return spins_[i]; }
    std::span<const int> spins() const { return spins_; }

    SpinConfig flipped() const;

    /// "+-+..." with qubit 0 first.
    std::string to_string() const;

    friend bool operator==(const SpinConfig &, const SpinConfig &) = default;

  private:
    std::vector<int> spins_;
};

double classical_energy(const IsingInstance &instance,
                        const SpinConfig &config);

/// classical_energy of every basis state, indexed by basis index.
std::vector<double> diagonal_energies(const IsingInstance &instance);

struct GroundState {
    SpinConfig config;  ///< lowest basis index among the ground set
    double energy = 0.0;
    std::size_t degeneracy = 0;
    std::vector<std::uint64_t> ground_set;  ///< basis indices, ascending

    bool contains(std::uint64_t basis_index) const;
    bool contains(const SpinConfig &config) const;
};

inline constexpr double kGroundTieTolerance = 1e-9;

GroundState brute_force_ground_state(const IsingInstance &instance);

/// SK couplings and local fields, all i.i.d. N(0, 1/n).
IsingInstance sample_sk_instance(unsigned n, std::uint64_t seed);

/// Fully connected J_ij = 1, h = 0.
IsingInstance ferromagnetic_instance(unsigned n);

} // namespace qgo
