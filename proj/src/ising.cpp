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

#include "qgo/ising.hpp"

#include "qgo/errors.hpp"
#include "qgo/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace qgo {

namespace {

void require_size(unsigned n, unsigned minimum) {
    if (n < minimum) {
        throw std::invalid_argument("instance size must be at least " +
                                    std::to_string(minimum) + ", got " +
                                    std::to_string(n));
    }
}

// Summation order is shared with classical_energy so the diagonal table and
// the per-config energy agree bit for bit.
double energy_of_index(const IsingInstance &instance, std::uint64_t b) {
    double e = 0.0;
    for (const Coupling &c : instance.couplings()) {
        const int si = ((b >> c.i) & 1U) != 0 ? -1 : 1;
        const int sj = ((b >> c.j) & 1U) != 0 ? -1 : 1;
        e -= c.value * static_cast<double>(si * sj);
    }
    const auto h = instance.fields();
    for (unsigned i = 0; i < instance.size(); ++i) {
        const int si = ((b >> i) & 1U) != 0 ? -1 : 1;
        e -= h[i] * static_cast<double>(si);
    }
    return e;
}

} // namespace

IsingInstance::IsingInstance(unsigned n, std::vector<Coupling> couplings,
                             std::vector<double> fields,
                             std::optional<std::uint64_t> seed)
    : n_(n), couplings_(std::move(couplings)), fields_(std::move(fields)),
      seed_(seed) {
    require_size(n_, 1);
    if (fields_.size() != n_) {
        throw std::invalid_argument("expected " + std::to_string(n_) +
                                    " fields, got " +
                                    std::to_string(fields_.size()));
    }
    for (double h : fields_) {
        if (!std::isfinite(h)) {
            throw std::invalid_argument("field values must be finite");
        }
    }
    for (Coupling &c : couplings_) {
        if (c.i > c.j) {
            std::swap(c.i, c.j);
        }
        if (c.i == c.j || c.j >= n_) {
            throw std::invalid_argument(
                "coupling (" + std::to_string(c.i) + ", " +
                std::to_string(c.j) + ") is not a valid pair for n = " +
                std::to_string(n_));
        }
        if (!std::isfinite(c.value)) {
            throw std::invalid_argument("coupling values must be finite");
        }
    }
    std::sort(couplings_.begin(), couplings_.end(),
              [](const Coupling &a, const Coupling &b) {
                  return a.i != b.i ? a.i < b.i : a.j < b.j;
              });
    const auto dup = std::adjacent_find(
        couplings_.begin(), couplings_.end(),
        [](const Coupling &a, const Coupling &b) {
            return a.i == b.i && a.j == b.j;
        });
    if (dup != couplings_.end()) {
        throw std::invalid_argument("duplicate coupling (" +
                                    std::to_string(dup->i) + ", " +
                                    std::to_string(dup->j) + ")");
    }
}

IsingInstance IsingInstance::scaled(double factor) const {
    std::vector<Coupling> cs = couplings_;
    for (Coupling &c : cs) {
        c.value *= factor;
    }
    std::vector<double> hs = fields_;
    for (double &h : hs) {
        h *= factor;
    }
    return IsingInstance(n_, std::move(cs), std::move(hs), seed_);
}

SpinConfig::SpinConfig(std::vector<int> spins) : spins_(std::move(spins)) {
    for (int s : spins_) {
        if (s != 1 && s != -1) {
            throw std::invalid_argument("spin entries must be +1 or -1");
        }
    }
}

SpinConfig SpinConfig::from_basis(std::uint64_t index, unsigned n) {
    std::vector<int> s(n);
    for (unsigned i = 0; i < n; ++i) {
        s[i] = ((index >> i) & 1U) != 0 ? -1 : 1;
    }
    return SpinConfig(std::move(s));
}

std::uint64_t SpinConfig::basis_index() const {
    std::uint64_t b = 0;
    for (std::size_t i = 0; i < spins_.size(); ++i) {
        if (spins_[i] < 0) {
            b |= std::uint64_t{1} << i;
        }
    }
    return b;
}

SpinConfig SpinConfig::flipped() const {
    std::vector<int> s = spins_;
    for (int &v : s) {
        v = -v;
    }
    return SpinConfig(std::move(s));
}

std::string SpinConfig::to_string() const {
    std::string out;
    out.reserve(spins_.size());
    for (int s : spins_) {
        out.push_back(s > 0 ? '+' : '-');
    }
    return out;
}

double classical_energy(const IsingInstance &instance,
                        const SpinConfig &config) {
    if (config.size() != instance.size()) {
        throw std::invalid_argument(
            "spin configuration has length " + std::to_string(config.size()) +
            " but the instance has " + std::to_string(instance.size()) +
            " spins");
    }
    double e = 0.0;
    for (const Coupling &c : instance.couplings()) {
        e -= c.value * static_cast<double>(config[c.i] * config[c.j]);
    }
    const auto h = instance.fields();
    for (unsigned i = 0; i < instance.size(); ++i) {
        e -= h[i] * static_cast<double>(config[i]);
    }
    return e;
}

std::vector<double> diagonal_energies(const IsingInstance &instance) {
    if (instance.size() > kMaxQubits) {
        throw CapacityError("diagonal table for n = " +
                            std::to_string(instance.size()) +
                            " exceeds the engine limit of " +
                            std::to_string(kMaxQubits) + " qubits");
    }
    const std::uint64_t dim = std::uint64_t{1} << instance.size();
    std::vector<double> table(dim);
    for (std::uint64_t b = 0; b < dim; ++b) {
        table[b] = energy_of_index(instance, b);
    }
    return table;
}

bool GroundState::contains(std::uint64_t basis_index) const {
    return std::binary_search(ground_set.begin(), ground_set.end(),
                              basis_index);
}

bool GroundState::contains(const SpinConfig &c) const {
    return c.size() == config.size() && contains(c.basis_index());
}

GroundState brute_force_ground_state(const IsingInstance &instance) {
    const unsigned n = instance.size();
    if (n > kMaxQubits) {
        throw CapacityError("brute-force enumeration limited to " +
                            std::to_string(kMaxQubits) + " spins, got " +
                            std::to_string(n));
    }
    const std::uint64_t dim = std::uint64_t{1} << n;
    double best = std::numeric_limits<double>::infinity();
    for (std::uint64_t b = 0; b < dim; ++b) {
        best = std::min(best, energy_of_index(instance, b));
    }
    GroundState gs;
    gs.energy = best;
    for (std::uint64_t b = 0; b < dim; ++b) {
        if (energy_of_index(instance, b) <= best + kGroundTieTolerance) {
            gs.ground_set.push_back(b);
        }
    }
    gs.degeneracy = gs.ground_set.size();
    gs.config = SpinConfig::from_basis(gs.ground_set.front(), n);
    return gs;
}

IsingInstance sample_sk_instance(unsigned n, std::uint64_t seed) {
    require_size(n, 1);
    Rng rng(seed);
    std::normal_distribution<double> gauss(0.0, std::sqrt(1.0 / n));
    std::vector<Coupling> couplings;
    couplings.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = i + 1; j < n; ++j) {
            couplings.push_back({i, j, gauss(rng)});
        }
    }
    std::vector<double> fields(n);
    for (double &h : fields) {
        h = gauss(rng);
    }
    return IsingInstance(n, std::move(couplings), std::move(fields), seed);
}

IsingInstance ferromagnetic_instance(unsigned n) {
    require_size(n, 2);
    std::vector<Coupling> couplings;
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = i + 1; j < n; ++j) {
            couplings.push_back({i, j, 1.0});
        }
    }
    return IsingInstance(n, std::move(couplings), std::vector<double>(n, 0.0));
}

} // namespace qgo
