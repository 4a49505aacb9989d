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

#include "kernels_impl.hpp"

#include <utility>

namespace qgo::kernels::detail {

namespace {

// Explicit real arithmetic instead of std::complex operator* so the
// operation order matches the SIMD variants exactly (and avoids __muldc3).
struct C {
    double re, im;
};

inline C load(const Complex &z) { return {z.real(), z.imag()}; }

inline C mul(C x, C m) {
    return {x.re * m.re - x.im * m.im, x.im * m.re + x.re * m.im};
}

inline C add(C a, C b) { return {a.re + b.re, a.im + b.im}; }

inline void store(Complex &z, C v) { z = Complex(v.re, v.im); }

void apply_single(Complex *psi, std::size_t dim, unsigned target,
                  const Mat2 &m) {
    const std::size_t stride = std::size_t{1} << target;
    const C m00 = load(m.m00), m01 = load(m.m01), m10 = load(m.m10),
            m11 = load(m.m11);
    for (std::size_t block = 0; block < dim; block += 2 * stride) {
        for (std::size_t k = block; k < block + stride; ++k) {
            const C a0 = load(psi[k]);
            const C a1 = load(psi[k + stride]);
            store(psi[k], add(mul(a0, m00), mul(a1, m01)));
            store(psi[k + stride], add(mul(a0, m10), mul(a1, m11)));
        }
    }
}

void apply_diagonal(Complex *psi, const Complex *phases, std::size_t dim) {
    for (std::size_t b = 0; b < dim; ++b) {
        store(psi[b], mul(load(psi[b]), load(phases[b])));
    }
}

void apply_cx(Complex *psi, std::size_t dim, unsigned control,
              unsigned target) {
    const std::size_t cbit = std::size_t{1} << control;
    const std::size_t tbit = std::size_t{1} << target;
    for (std::size_t b = 0; b < dim; ++b) {
        if ((b & cbit) != 0 && (b & tbit) == 0) {
            std::swap(psi[b], psi[b | tbit]);
        }
    }
}

void diagonal_derivative(const Complex *psi, const double *diag, double scale,
                         Complex *out, std::size_t dim) {
    for (std::size_t b = 0; b < dim; ++b) {
        const double d = scale * diag[b];
        const C x = load(psi[b]);
        // -i * d * (re + i im) = d*im - i d*re
        store(out[b], C{x.im * d, -(x.re * d)});
    }
}

void offdiagonal_accumulate(const Complex *psi, Complex *out, std::size_t dim,
                            unsigned target, Complex upper, Complex lower) {
    const std::size_t stride = std::size_t{1} << target;
    const C u = load(upper), l = load(lower);
    for (std::size_t block = 0; block < dim; block += 2 * stride) {
        for (std::size_t k = block; k < block + stride; ++k) {
            const C a0 = load(psi[k]);
            const C a1 = load(psi[k + stride]);
            store(out[k], add(load(out[k]), mul(a1, u)));
            store(out[k + stride], add(load(out[k + stride]), mul(a0, l)));
        }
    }
}

void axpy(const Complex *x, const Complex *k, double s, Complex *out,
          std::size_t dim) {
    for (std::size_t b = 0; b < dim; ++b) {
        const C xv = load(x[b]), kv = load(k[b]);
        store(out[b], C{xv.re + kv.re * s, xv.im + kv.im * s});
    }
}

void rk4_combine(Complex *psi, const Complex *k1, const Complex *k2,
                 const Complex *k3, const Complex *k4, double h6,
                 std::size_t dim) {
    for (std::size_t b = 0; b < dim; ++b) {
        const C a = load(k1[b]), bb = load(k2[b]), c = load(k3[b]),
                d = load(k4[b]), p = load(psi[b]);
        const double re = ((a.re + (bb.re + bb.re)) + (c.re + c.re)) + d.re;
        const double im = ((a.im + (bb.im + bb.im)) + (c.im + c.im)) + d.im;
        store(psi[b], C{p.re + re * h6, p.im + im * h6});
    }
}

} // namespace

const KernelTable kScalarTable{
    Backend::Scalar,      "scalar",     &apply_single,
    &apply_diagonal,      &apply_cx,    &diagonal_derivative,
    &offdiagonal_accumulate, &axpy,     &rk4_combine,
};

void scalar_apply_cx(Complex *psi, std::size_t dim, unsigned control,
                     unsigned target) {
    apply_cx(psi, dim, control, target);
}

} // namespace qgo::kernels::detail
