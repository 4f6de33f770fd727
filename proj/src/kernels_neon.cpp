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

#include <arm_neon.h>

#include "kernels_internal.hpp"

namespace sublocal::kernels {
namespace {

// One complex number per 128-bit register: [re, im].

void axpy_neon(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
  const double* xd = reinterpret_cast<const double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  const float64x2_t sign_ai = {-alpha.imag(), alpha.imag()};
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t xv = vld1q_f64(xd + 2 * i);
    const float64x2_t xswap = vextq_f64(xv, xv, 1);
    float64x2_t yv = vld1q_f64(yd + 2 * i);
    yv = vfmaq_n_f64(yv, xv, alpha.real());
    yv = vfmaq_f64(yv, xswap, sign_ai);
    vst1q_f64(yd + 2 * i, yv);
  }
}

cplx dotc_neon(std::size_t n, const cplx* x, const cplx* y) {
  const double* xd = reinterpret_cast<const double*>(x);
  const double* yd = reinterpret_cast<const double*>(y);
  float64x2_t acc_re = vdupq_n_f64(0.0);  // [xr*yr, xi*yi]
  float64x2_t acc_im = vdupq_n_f64(0.0);  // [xr*yi, xi*yr]
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t xv = vld1q_f64(xd + 2 * i);
    const float64x2_t yv = vld1q_f64(yd + 2 * i);
    acc_re = vfmaq_f64(acc_re, xv, yv);
    acc_im = vfmaq_f64(acc_im, xv, vextq_f64(yv, yv, 1));
  }
  return {vgetq_lane_f64(acc_re, 0) + vgetq_lane_f64(acc_re, 1),
          vgetq_lane_f64(acc_im, 0) - vgetq_lane_f64(acc_im, 1)};
}

void gemm_neon(std::size_t m, std::size_t n, std::size_t k, const cplx* a,
               const cplx* b, cplx* c) {
  for (std::size_t i = 0; i < m; ++i) {
    cplx* crow = c + i * n;
    for (std::size_t p = 0; p < k; ++p) {
      const cplx aip = a[i * k + p];
      if (aip == cplx{}) continue;
      axpy_neon(n, aip, b + p * n, crow);
    }
  }
}

}  // namespace

const KernelTable& neon_kernels() {
  static const KernelTable table{"neon", &axpy_neon, &dotc_neon, &gemm_neon};
  return table;
}

}  // namespace sublocal::kernels
