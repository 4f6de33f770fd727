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

// Orthogonal-sum structure of the source and target spaces, plus the seeded
// random generators used to produce test instances.
//
// A split H = H_1 (+) H_2 is coordinate aligned: basis indices
// 0 .. dim1-1 span subspace 1 and dim1 .. dim1+dim2-1 span subspace 2.
//
// Random streams: std::mt19937_64 seeded with the raw 64-bit seed; uniforms
// take the top 53 bits of each draw; normals come from the Box-Muller
// transform (cosine branch only, two uniforms per normal). Complex Gaussians
// have independent N(0, 1/2) real and imaginary parts. Because none of this
// depends on the standard library's distribution classes, a seed produces
// the same stream on every platform.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>

#include "sublocal/matrix.hpp"

namespace sublocal {

class SubspaceSplit {
 public:
  /// Both dimensions must be at least 1 (DomainError otherwise).
  SubspaceSplit(std::size_t dim1, std::size_t dim2);

  std::size_t dim1() const { return dim1_; }
  std::size_t dim2() const { return dim2_; }
  std::size_t total() const { return dim1_ + dim2_; }
  std::size_t dim(int which) const;
  /// First basis index of subspace `which` (1 or 2).
  std::size_t offset(int which) const;

  friend bool operator==(const SubspaceSplit&, const SubspaceSplit&) = default;

 private:
  std::size_t dim1_;
  std::size_t dim2_;
};

struct ChannelShape {
  SubspaceSplit source;
  SubspaceSplit target;

  friend bool operator==(const ChannelShape&, const ChannelShape&) = default;
};

/// A finite-dimensional space, optionally carrying a two-subspace split.
/// Restrictions of a channel to one subspace produce unsplit spaces.
class Space {
 public:
  explicit Space(std::size_t dim);
  Space(SubspaceSplit split);  // NOLINT(google-explicit-constructor)

  std::size_t dim() const { return dim_; }
  bool is_split() const { return split_.has_value(); }
  const std::optional<SubspaceSplit>& split() const { return split_; }
  /// DomainError when the space carries no split.
  const SubspaceSplit& require_split() const;

  friend bool operator==(const Space&, const Space&) = default;

 private:
  std::size_t dim_;
  std::optional<SubspaceSplit> split_;
};

struct Seed {
  std::uint64_t value = 0;
};

class Rng {
 public:
  explicit Rng(Seed seed) : engine_(seed.value) {}

  /// Uniform on [0, 1).
  double uniform();
  /// Uniform integer on [lo, hi].
  std::size_t uniform_int(std::size_t lo, std::size_t hi);
  double normal();
  cplx complex_normal();

 private:
  std::mt19937_64 engine_;
};

ComplexMatrix projector(const SubspaceSplit& split, int which);

/// Ginibre matrix: i.i.d. complex Gaussian entries.
ComplexMatrix random_ginibre(std::size_t rows, std::size_t cols, Rng& rng);

/// Orthonormalized columns of a Ginibre matrix (rows >= cols).
ComplexMatrix random_isometry(std::size_t rows, std::size_t cols, Rng& rng);

/// Haar-distributed unitary: Gram-Schmidt QR of a Ginibre matrix, which
/// already fixes the R diagonal to be positive.
ComplexMatrix random_unitary(std::size_t dim, Seed seed);
ComplexMatrix random_unitary(std::size_t dim, Rng& rng);

/// Wishart density G G^dagger / tr(G G^dagger) with G of size dim x rank.
/// DomainError unless 1 <= rank <= dim.
ComplexMatrix random_density(std::size_t dim, std::size_t rank, Seed seed);
ComplexMatrix random_density(std::size_t dim, std::size_t rank, Rng& rng);

/// (G + G^dagger)/2 for a Ginibre G.
ComplexMatrix random_hermitian(std::size_t dim, Rng& rng);

}  // namespace sublocal
