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

#include "sublocal/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sublocal/errors.hpp"

namespace sublocal {

SubspaceSplit::SubspaceSplit(std::size_t dim1, std::size_t dim2)
    : dim1_(dim1), dim2_(dim2) {
  if (dim1 < 1 || dim2 < 1) {
    throw DomainError("subspace dimensions must be at least 1 (got " +
                      std::to_string(dim1) + ", " + std::to_string(dim2) + ")");
  }
}

std::size_t SubspaceSplit::dim(int which) const {
  if (which == 1) return dim1_;
  if (which == 2) return dim2_;
  throw DomainError("subspace index must be 1 or 2");
}

std::size_t SubspaceSplit::offset(int which) const {
  if (which == 1) return 0;
  if (which == 2) return dim1_;
  throw DomainError("subspace index must be 1 or 2");
}

Space::Space(std::size_t dim) : dim_(dim) {
  if (dim < 1) throw DomainError("space dimension must be at least 1");
}

Space::Space(SubspaceSplit split) : dim_(split.total()), split_(split) {}

const SubspaceSplit& Space::require_split() const {
  if (!split_) throw DomainError("space carries no subspace split");
  return *split_;
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::size_t Rng::uniform_int(std::size_t lo, std::size_t hi) {
  if (hi < lo) throw DomainError("uniform_int: empty range");
  const double u = uniform();
  const std::size_t span = hi - lo + 1;
  const auto k = static_cast<std::size_t>(u * static_cast<double>(span));
  return lo + std::min(k, span - 1);
}

double Rng::normal() {
  // 1 - u keeps the logarithm argument in (0, 1].
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

cplx Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

ComplexMatrix projector(const SubspaceSplit& split, int which) {
  ComplexMatrix p(split.total(), split.total());
  const std::size_t off = split.offset(which);
  for (std::size_t i = 0; i < split.dim(which); ++i) p(off + i, off + i) = 1.0;
  return p;
}

ComplexMatrix random_ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
  ComplexMatrix g(rows, cols);
  for (cplx& z : g.data()) z = rng.complex_normal();
  return g;
}

ComplexMatrix random_isometry(std::size_t rows, std::size_t cols, Rng& rng) {
  if (cols > rows) throw DomainError("random_isometry: cols exceed rows");
  ComplexMatrix g = random_ginibre(rows, cols, rng);
  std::vector<std::vector<cplx>> q;
  q.reserve(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<cplx> v = g.col(j);
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : q) {
        const cplx c = inner(b, v);
        for (std::size_t i = 0; i < rows; ++i) v[i] -= c * b[i];
      }
    }
    const double nv = norm(v);
    if (nv < 1e-12) throw InternalError("random_isometry: degenerate draw");
    for (cplx& z : v) z /= nv;
    q.push_back(std::move(v));
  }
  ComplexMatrix out(rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) out(i, j) = q[j][i];
  return out;
}

ComplexMatrix random_unitary(std::size_t dim, Rng& rng) {
  if (dim < 1) throw DomainError("random_unitary: dimension must be positive");
  return random_isometry(dim, dim, rng);
}

ComplexMatrix random_unitary(std::size_t dim, Seed seed) {
  Rng rng(seed);
  return random_unitary(dim, rng);
}

ComplexMatrix random_density(std::size_t dim, std::size_t rank, Rng& rng) {
  if (rank < 1 || rank > dim) {
    throw DomainError("random_density: rank " + std::to_string(rank) +
                      " outside [1, " + std::to_string(dim) + "]");
  }
  const ComplexMatrix g = random_ginibre(dim, rank, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho = hermitian_part(rho);
  rho *= 1.0 / rho.trace().real();
  return rho;
}

ComplexMatrix random_density(std::size_t dim, std::size_t rank, Seed seed) {
  Rng rng(seed);
  return random_density(dim, rank, rng);
}

ComplexMatrix random_hermitian(std::size_t dim, Rng& rng) {
  return hermitian_part(random_ginibre(dim, dim, rng));
}

}  // namespace sublocal
