// Copyright 2026 The sublocal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <immintrin.h>

#include "kernels_internal.hpp"

namespace sublocal::kernels {
namespace {

// Two complex numbers per 256-bit register: [re0, im0, re1, im1].

inline __m256d cmul_lanes(__m256d ar, __m256d ai, __m256d x) {
  // (ar + i ai) * (xr + i xi) for both lanes via fmaddsub.
  const __m256d xswap = _mm256_permute_pd(x, 0b0101);
  return _mm256_fmaddsub_pd(ar, x, _mm256_mul_pd(ai, xswap));
}

void axpy_avx2(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  const double* xd = reinterpret_cast<const double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(yv, cmul_lanes(ar, ai, xv)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

cplx dotc_avx2(std::size_t n, const cplx* x, const cplx* y) {
  const double* xd = reinterpret_cast<const double*>(x);
  const double* yd = reinterpret_cast<const double*>(y);
  __m256d acc_re = _mm256_setzero_pd();  // [xr*yr, xi*yi, ...]
  __m256d acc_im = _mm256_setzero_pd();  // [xr*yi, xi*yr, ...]
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
    const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
    acc_re = _mm256_fmadd_pd(xv, yv, acc_re);
    acc_im = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0b0101), acc_im);
  }
  alignas(32) double re_lanes[4];
  alignas(32) double im_lanes[4];
  _mm256_store_pd(re_lanes, acc_re);
  _mm256_store_pd(im_lanes, acc_im);
  double re = (re_lanes[0] + re_lanes[1]) + (re_lanes[2] + re_lanes[3]);
  double im = (im_lanes[0] - im_lanes[1]) + (im_lanes[2] - im_lanes[3]);
  for (; i < n; ++i) {
    re += x[i].real() * y[i].real() + x[i].imag() * y[i].imag();
    im += x[i].real() * y[i].imag() - x[i].imag() * y[i].real();
  }
  return {re, im};
}

void gemm_avx2(std::size_t m, std::size_t n, std::size_t k, const cplx* a,
               const cplx* b, cplx* c) {
  for (std::size_t i = 0; i < m; ++i) {
    cplx* crow = c + i * n;
    for (std::size_t p = 0; p < k; ++p) {
      const cplx aip = a[i * k + p];
      if (aip == cplx{}) continue;
      axpy_avx2(n, aip, b + p * n, crow);
    }
  }
}

}  // namespace

const KernelTable& avx2_kernels() {
  static const KernelTable table{"avx2", &axpy_avx2, &dotc_avx2, &gemm_avx2};
  return table;
}

}  // namespace sublocal::kernels
