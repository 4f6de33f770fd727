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

#include "sublocal/kernels.hpp"

namespace sublocal::kernels {
namespace {

void axpy_scalar(std::size_t n, cplx alpha, const cplx* x, cplx* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

cplx dotc_scalar(std::size_t n, const cplx* x, const cplx* y) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    re += xr * yr + xi * yi;
    im += xr * yi - xi * yr;
  }
  return {re, im};
}

void gemm_scalar(std::size_t m, std::size_t n, std::size_t k, const cplx* a,
                 const cplx* b, cplx* c) {
  for (std::size_t i = 0; i < m; ++i) {
    cplx* crow = c + i * n;
    for (std::size_t p = 0; p < k; ++p) {
      const cplx aip = a[i * k + p];
      if (aip == cplx{}) continue;
      axpy_scalar(n, aip, b + p * n, crow);
    }
  }
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", &axpy_scalar, &dotc_scalar,
                                 &gemm_scalar};
  return table;
}

}  // namespace sublocal::kernels
