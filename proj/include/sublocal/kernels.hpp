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

#pragma once

// Complex double-precision inner loops used by the dense matrix layer.
//
// Every kernel has a portable scalar reference implementation. SIMD variants
// (AVX2+FMA on x86-64, NEON on AArch64) are compiled when the toolchain
// supports them and picked at runtime from CPU feature detection. Setting the
// environment variable SUBLOCAL_KERNELS=scalar forces the reference path.
//
// All buffers hold interleaved std::complex<double> values and may not alias
// unless stated otherwise.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace sublocal::kernels {

using cplx = std::complex<double>;

struct KernelTable {
  std::string_view name;

  // y[i] += alpha * x[i], i < n.
  void (*axpy)(std::size_t n, cplx alpha, const cplx* x, cplx* y);

  // sum_i conj(x[i]) * y[i].
  cplx (*dotc)(std::size_t n, const cplx* x, const cplx* y);

  // C += A * B with A (m x k), B (k x n), C (m x n), all row-major.
  void (*gemm)(std::size_t m, std::size_t n, std::size_t k, const cplx* a,
               const cplx* b, cplx* c);
};

const KernelTable& scalar_kernels();

/// Kernel table chosen for this process; resolved once on first use.
const KernelTable& active_kernels();

/// Every variant that is both compiled in and runnable on this CPU, scalar
/// reference first.
std::span<const KernelTable* const> available_kernels();

}  // namespace sublocal::kernels
