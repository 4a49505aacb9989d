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
 * Amplitude kernels behind the statevector engine.
 *
 * Every kernel exists as a scalar reference implementation and, on x86-64,
 * an AVX2 variant. The variants perform the same IEEE operations in the
 * same order per amplitude (no FMA contraction), so their outputs are
 * bit-identical to the scalar reference; the test suite checks this.
 *
 * The active table is chosen once at first use from CPUID. Setting the
 * environment variable QGO_KERNELS=scalar forces the reference path.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

namespace qgo::kernels {

using Complex = std::complex<double>;

/// Row-major 2x2 complex matrix {m00, m01, m10, m11}.
struct Mat2 {
    Complex m00, m01, m10, m11;
};

enum class Backend { Scalar, Avx2 };

struct KernelTable {
    Backend backend;
    std::string_view name;

    /// psi <- (I ⊗ m ⊗ I) psi on qubit `target`.
    void (*apply_single)(Complex *psi, std::size_t dim, unsigned target,
                         const Mat2 &m);

    /// psi[b] <- psi[b] * phases[b].
    void (*apply_diagonal)(Complex *psi, const Complex *phases,
                           std::size_t dim);

    /// Controlled-NOT; a pure permutation of amplitudes.
    void (*apply_cx)(Complex *psi, std::size_t dim, unsigned control,
                     unsigned target);

    /// out[b] <- -i * scale * diag[b] * psi[b].
    void (*diagonal_derivative)(const Complex *psi, const double *diag,
                                double scale, Complex *out, std::size_t dim);

    /// For every pair (b, b|bit) with the bit clear in b:
    ///   out[b]     += upper * psi[b|bit]
    ///   out[b|bit] += lower * psi[b]
    void (*offdiagonal_accumulate)(const Complex *psi, Complex *out,
                                   std::size_t dim, unsigned target,
                                   Complex upper, Complex lower);

    /// out[b] <- x[b] + s * k[b].
    void (*axpy)(const Complex *x, const Complex *k, double s, Complex *out,
                 std::size_t dim);

    /// psi[b] <- psi[b] + h6 * (k1[b] + 2 k2[b] + 2 k3[b] + k4[b]).
    void (*rk4_combine)(Complex *psi, const Complex *k1, const Complex *k2,
                        const Complex *k3, const Complex *k4, double h6,
                        std::size_t dim);
};

const KernelTable &scalar_table();

/// The AVX2 table, or nullptr when it is not compiled in or the CPU lacks
/// AVX2.
const KernelTable *avx2_table();

/// Table used by the engine.
const KernelTable &active();

/// Pin the engine to a backend; returns false if it is unavailable.
bool select(Backend backend);

} // namespace qgo::kernels
