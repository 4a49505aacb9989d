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

// Compiled with -mavx2 -ffp-contract=off. One __m256d holds two complex
// doubles laid out as [re0, im0, re1, im1]. Each lane computes exactly the
// expression tree of the scalar kernel so results are bit-identical.

#include "kernels_impl.hpp"

#include <immintrin.h>

namespace qgo::kernels::detail {

namespace {

inline double *raw(Complex *p) { return reinterpret_cast<double *>(p); }
inline const double *raw(const Complex *p) {
    return reinterpret_cast<const double *>(p);
}

// [xr*mr - xi*mi, xi*mr + xr*mi] per complex lane.
inline __m256d cmul(__m256d x, __m256d m) {
    const __m256d mr = _mm256_movedup_pd(m);
    const __m256d mi = _mm256_permute_pd(m, 0xF);
    const __m256d xs = _mm256_permute_pd(x, 0x5);
    return _mm256_addsub_pd(_mm256_mul_pd(x, mr), _mm256_mul_pd(xs, mi));
}

inline __m256d splat(Complex z) {
    return _mm256_setr_pd(z.real(), z.imag(), z.real(), z.imag());
}

inline __m256d pair(Complex lo, Complex hi) {
    return _mm256_setr_pd(lo.real(), lo.imag(), hi.real(), hi.imag());
}

void apply_single(Complex *psi, std::size_t dim, unsigned target,
                  const Mat2 &m) {
    double *p = raw(psi);
    if (target == 0) {
        const __m256d ca = pair(m.m00, m.m10);
        const __m256d cb = pair(m.m01, m.m11);
        for (std::size_t k = 0; k < dim; k += 2) {
            const __m256d v = _mm256_loadu_pd(p + 2 * k);
            const __m256d lo = _mm256_permute2f128_pd(v, v, 0x00);
            const __m256d hi = _mm256_permute2f128_pd(v, v, 0x11);
            _mm256_storeu_pd(p + 2 * k,
                             _mm256_add_pd(cmul(lo, ca), cmul(hi, cb)));
        }
        return;
    }
    const std::size_t stride = std::size_t{1} << target;
    const __m256d m00 = splat(m.m00), m01 = splat(m.m01), m10 = splat(m.m10),
                  m11 = splat(m.m11);
    for (std::size_t block = 0; block < dim; block += 2 * stride) {
        for (std::size_t k = block; k < block + stride; k += 2) {
            double *p0 = p + 2 * k;
            double *p1 = p + 2 * (k + stride);
            const __m256d a0 = _mm256_loadu_pd(p0);
            const __m256d a1 = _mm256_loadu_pd(p1);
            _mm256_storeu_pd(p0, _mm256_add_pd(cmul(a0, m00), cmul(a1, m01)));
            _mm256_storeu_pd(p1, _mm256_add_pd(cmul(a0, m10), cmul(a1, m11)));
        }
    }
}

void apply_diagonal(Complex *psi, const Complex *phases, std::size_t dim) {
    double *p = raw(psi);
    const double *ph = raw(phases);
    for (std::size_t b = 0; b < dim; b += 2) {
        const __m256d x = _mm256_loadu_pd(p + 2 * b);
        const __m256d m = _mm256_loadu_pd(ph + 2 * b);
        _mm256_storeu_pd(p + 2 * b, cmul(x, m));
    }
}

void diagonal_derivative(const Complex *psi, const double *diag, double scale,
                         Complex *out, std::size_t dim) {
    const double *p = raw(psi);
    double *o = raw(out);
    const __m128d s = _mm_set1_pd(scale);
    const __m256d negate_imag = _mm256_setr_pd(0.0, -0.0, 0.0, -0.0);
    for (std::size_t b = 0; b < dim; b += 2) {
        const __m128d d2 = _mm_mul_pd(s, _mm_loadu_pd(diag + b));
        const __m256d d = _mm256_permute4x64_pd(_mm256_castpd128_pd256(d2),
                                                0x50);
        const __m256d x = _mm256_loadu_pd(p + 2 * b);
        const __m256d prod = _mm256_permute_pd(_mm256_mul_pd(x, d), 0x5);
        _mm256_storeu_pd(o + 2 * b, _mm256_xor_pd(prod, negate_imag));
    }
}

void offdiagonal_accumulate(const Complex *psi, Complex *out, std::size_t dim,
                            unsigned target, Complex upper, Complex lower) {
    const double *p = raw(psi);
    double *o = raw(out);
    if (target == 0) {
        const __m256d coeff = pair(upper, lower);
        for (std::size_t k = 0; k < dim; k += 2) {
            const __m256d v = _mm256_loadu_pd(p + 2 * k);
            const __m256d swapped = _mm256_permute2f128_pd(v, v, 0x01);
            const __m256d acc = _mm256_loadu_pd(o + 2 * k);
            _mm256_storeu_pd(o + 2 * k,
                             _mm256_add_pd(acc, cmul(swapped, coeff)));
        }
        return;
    }
    const std::size_t stride = std::size_t{1} << target;
    const __m256d u = splat(upper), l = splat(lower);
    for (std::size_t block = 0; block < dim; block += 2 * stride) {
        for (std::size_t k = block; k < block + stride; k += 2) {
            const __m256d a0 = _mm256_loadu_pd(p + 2 * k);
            const __m256d a1 = _mm256_loadu_pd(p + 2 * (k + stride));
            double *o0 = o + 2 * k;
            double *o1 = o + 2 * (k + stride);
            _mm256_storeu_pd(o0, _mm256_add_pd(_mm256_loadu_pd(o0),
                                               cmul(a1, u)));
            _mm256_storeu_pd(o1, _mm256_add_pd(_mm256_loadu_pd(o1),
                                               cmul(a0, l)));
        }
    }
}

void axpy(const Complex *x, const Complex *k, double s, Complex *out,
          std::size_t dim) {
    const double *xp = raw(x);
    const double *kp = raw(k);
    double *op = raw(out);
    const __m256d sv = _mm256_set1_pd(s);
    for (std::size_t i = 0; i < 2 * dim; i += 4) {
        const __m256d r = _mm256_add_pd(
            _mm256_loadu_pd(xp + i), _mm256_mul_pd(_mm256_loadu_pd(kp + i), sv));
        _mm256_storeu_pd(op + i, r);
    }
}

void rk4_combine(Complex *psi, const Complex *k1, const Complex *k2,
                 const Complex *k3, const Complex *k4, double h6,
                 std::size_t dim) {
    double *p = raw(psi);
    const double *a = raw(k1), *b = raw(k2), *c = raw(k3), *d = raw(k4);
    const __m256d hv = _mm256_set1_pd(h6);
    for (std::size_t i = 0; i < 2 * dim; i += 4) {
        const __m256d bv = _mm256_loadu_pd(b + i);
        const __m256d cv = _mm256_loadu_pd(c + i);
        __m256d sum = _mm256_add_pd(_mm256_loadu_pd(a + i),
                                    _mm256_add_pd(bv, bv));
        sum = _mm256_add_pd(sum, _mm256_add_pd(cv, cv));
        sum = _mm256_add_pd(sum, _mm256_loadu_pd(d + i));
        _mm256_storeu_pd(p + i, _mm256_add_pd(_mm256_loadu_pd(p + i),
                                              _mm256_mul_pd(sum, hv)));
    }
}

} // namespace

const KernelTable kAvx2Table{
    Backend::Avx2,           "avx2",   &apply_single,
    &apply_diagonal,         &scalar_apply_cx, &diagonal_derivative,
    &offdiagonal_accumulate, &axpy,    &rk4_combine,
};

} // namespace qgo::kernels::detail
