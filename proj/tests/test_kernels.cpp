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

#include "qgo/kernels.hpp"
#include "qgo/evolution.hpp"
#include "qgo/rng.hpp"

#include <cstring>
#include <random>
#include <vector>

#include <gtest/gtest.h>

namespace {

using qgo::kernels::Complex;
using qgo::kernels::KernelTable;
using qgo::kernels::Mat2;

std::vector<Complex> random_vector(std::size_t dim, std::uint64_t seed) {
    qgo::Rng rng(seed);
    std::normal_distribution<double> g;
    std::vector<Complex> v(dim);
    for (Complex &z : v) {
        z = {g(rng), g(rng)};
    }
    return v;
}

Mat2 random_matrix(std::uint64_t seed) {
    const auto v = random_vector(4, seed);
    return {v[0], v[1], v[2], v[3]};
}

bool bit_equal(const std::vector<Complex> &a, const std::vector<Complex> &b) {
    return a.size() == b.size() &&
           std::memcmp(a.data(), b.data(), a.size() * sizeof(Complex)) == 0;
}

class KernelEquivalence : public ::testing::TestWithParam<unsigned> {
  protected:
    void SetUp() override {
        simd_ = qgo::kernels::avx2_table();
        if (simd_ == nullptr) {
            GTEST_SKIP() << "AVX2 kernels unavailable on this machine";
        }
    }
    const KernelTable &ref_ = qgo::kernels::scalar_table();
    const KernelTable *simd_ = nullptr;
};

TEST_P(KernelEquivalence, ApplySingleEveryTarget) {
    const unsigned n = GetParam();
    const std::size_t dim = std::size_t{1} << n;
    for (unsigned t = 0; t < n; ++t) {
        const Mat2 m = random_matrix(100 + t);
        auto a = random_vector(dim, n * 31 + t);
        auto b = a;
        ref_.apply_single(a.data(), dim, t, m);
        simd_->apply_single(b.data(), dim, t, m);
        EXPECT_TRUE(bit_equal(a, b)) << "target " << t;
    }
}

TEST_P(KernelEquivalence, ApplyDiagonal) {
    const std::size_t dim = std::size_t{1} << GetParam();
    auto a = random_vector(dim, 1);
    auto b = a;
    const auto phases = random_vector(dim, 2);
    ref_.apply_diagonal(a.data(), phases.data(), dim);
    simd_->apply_diagonal(b.data(), phases.data(), dim);
    EXPECT_TRUE(bit_equal(a, b));
}

TEST_P(KernelEquivalence, ApplyCx) {
    const unsigned n = GetParam();
    const std::size_t dim = std::size_t{1} << n;
    for (unsigned c = 0; c < n; ++c) {
        for (unsigned t = 0; t < n; ++t) {
            if (c == t) {
                continue;
            }
            auto a = random_vector(dim, c * 7 + t);
            auto b = a;
            ref_.apply_cx(a.data(), dim, c, t);
            simd_->apply_cx(b.data(), dim, c, t);
            EXPECT_TRUE(bit_equal(a, b));
        }
    }
}

TEST_P(KernelEquivalence, DiagonalDerivative) {
    const std::size_t dim = std::size_t{1} << GetParam();
    const auto psi = random_vector(dim, 3);
    std::vector<double> diag(dim);
    qgo::Rng rng(4);
    std::normal_distribution<double> g;
    for (double &d : diag) {
        d = g(rng);
    }
    std::vector<Complex> a(dim), b(dim);
    ref_.diagonal_derivative(psi.data(), diag.data(), 0.37, a.data(), dim);
    simd_->diagonal_derivative(psi.data(), diag.data(), 0.37, b.data(), dim);
    EXPECT_TRUE(bit_equal(a, b));
}

TEST_P(KernelEquivalence, OffdiagonalAccumulate) {
    const unsigned n = GetParam();
    const std::size_t dim = std::size_t{1} << n;
    const auto psi = random_vector(dim, 5);
    for (unsigned t = 0; t < n; ++t) {
        auto a = random_vector(dim, 6 + t);
        auto b = a;
        const Complex up(0.3, -1.2);
        const Complex lo(-0.3, -1.2);
        ref_.offdiagonal_accumulate(psi.data(), a.data(), dim, t, up, lo);
        simd_->offdiagonal_accumulate(psi.data(), b.data(), dim, t, up, lo);
        EXPECT_TRUE(bit_equal(a, b)) << "target " << t;
    }
}

TEST_P(KernelEquivalence, AxpyAndRk4Combine) {
    const std::size_t dim = std::size_t{1} << GetParam();
    const auto x = random_vector(dim, 7);
    const auto k1 = random_vector(dim, 8);
    const auto k2 = random_vector(dim, 9);
    const auto k3 = random_vector(dim, 10);
    const auto k4 = random_vector(dim, 11);
    std::vector<Complex> a(dim), b(dim);
    ref_.axpy(x.data(), k1.data(), 0.0125, a.data(), dim);
    simd_->axpy(x.data(), k1.data(), 0.0125, b.data(), dim);
    EXPECT_TRUE(bit_equal(a, b));

    auto pa = x;
    auto pb = x;
    ref_.rk4_combine(pa.data(), k1.data(), k2.data(), k3.data(), k4.data(),
                     1e-3 / 6.0, dim);
    simd_->rk4_combine(pb.data(), k1.data(), k2.data(), k3.data(), k4.data(),
                       1e-3 / 6.0, dim);
    EXPECT_TRUE(bit_equal(pa, pb));
}

INSTANTIATE_TEST_SUITE_P(Sizes, KernelEquivalence,
                         ::testing::Values(1U, 2U, 3U, 5U, 8U, 11U));

TEST(KernelDispatch, ScalarAlwaysAvailable) {
    EXPECT_EQ(qgo::kernels::scalar_table().backend,
              qgo::kernels::Backend::Scalar);
    EXPECT_FALSE(qgo::kernels::scalar_table().name.empty());
}

TEST(KernelDispatch, SelectSwitchesActiveTable) {
    const auto before = qgo::kernels::active().backend;
    ASSERT_TRUE(qgo::kernels::select(qgo::kernels::Backend::Scalar));
    EXPECT_EQ(qgo::kernels::active().backend, qgo::kernels::Backend::Scalar);
    const bool has_simd = qgo::kernels::avx2_table() != nullptr;
    EXPECT_EQ(qgo::kernels::select(qgo::kernels::Backend::Avx2), has_simd);
    qgo::kernels::select(before);
}

// Whole evolutions must not depend on the backend.
TEST(KernelDispatch, EvolutionsAreBackendIndependent) {
    if (qgo::kernels::avx2_table() == nullptr) {
        GTEST_SKIP() << "AVX2 kernels unavailable on this machine";
    }
    const auto before = qgo::kernels::active().backend;
    const qgo::Evolver ev(qgo::sample_sk_instance(5, 77));
    qgo::AnnealSchedule s;
    s.b = 1.1;
    s.c = {1.5, -1.5, 0.0, 1.5, 0.0};
    s.T = 0.5;
    s.dt = 0.1;

    qgo::kernels::select(qgo::kernels::Backend::Scalar);
    const auto t_ref = ev.trotter(s);
    const auto g_ref = ev.trotter_gates(s);
    const auto o_ref = ev.ode(s, 1e-2);
    qgo::kernels::select(qgo::kernels::Backend::Avx2);
    const auto t_simd = ev.trotter(s);
    const auto g_simd = ev.trotter_gates(s);
    const auto o_simd = ev.ode(s, 1e-2);
    qgo::kernels::select(before);

    auto same = [](const qgo::StateVector &a, const qgo::StateVector &b) {
        return std::memcmp(a.amplitudes().data(), b.amplitudes().data(),
                           a.dimension() * sizeof(Complex)) == 0;
    };
    EXPECT_TRUE(same(t_ref, t_simd));
    EXPECT_TRUE(same(g_ref, g_simd));
    EXPECT_TRUE(same(o_ref, o_simd));
}

} // namespace
