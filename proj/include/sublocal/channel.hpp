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

// Completely positive maps in Kraus and Choi form.
//
// Choi convention: entry [(t*dS + s), (t'*dS + s')] = <t| Phi(|s><s'|) |t'>,
// so the Choi matrix of {V_k} is sum_k vec(V_k) vec(V_k)^dagger with
// row-major vec.

#include <cstddef>
#include <vector>

#include "sublocal/matrix.hpp"
#include "sublocal/spaces.hpp"

namespace sublocal {

class KrausChannel {
 public:
  /// Every operator must be target.dim() x source.dim(); the list must be
  /// nonempty. Trace preservation is not enforced here.
  KrausChannel(Space source, Space target, std::vector<ComplexMatrix> kraus);
  KrausChannel(const ChannelShape& shape, std::vector<ComplexMatrix> kraus);

  const Space& source() const { return source_; }
  const Space& target() const { return target_; }
  /// ShapeError if either side carries no split.
  ChannelShape shape() const;

  const std::vector<ComplexMatrix>& kraus() const { return kraus_; }
  std::size_t count() const { return kraus_.size(); }

 private:
  Space source_;
  Space target_;
  std::vector<ComplexMatrix> kraus_;
};

class ChoiMatrix {
 public:
  ChoiMatrix(Space source, Space target, ComplexMatrix matrix);

  const Space& source() const { return source_; }
  const Space& target() const { return target_; }
  ChannelShape shape() const;
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  Space source_;
  Space target_;
  ComplexMatrix matrix_;
};

/// Relative eigenvalue cutoff used when reading Kraus operators off a Choi
/// matrix: components with lambda <= kKrausRankCutoff * lambda_max are noise.
inline constexpr double kKrausRankCutoff = 1e-10;

ComplexMatrix apply(const KrausChannel& ch, const ComplexMatrix& q);

ChoiMatrix choi_from_kraus(const KrausChannel& ch);

/// Canonical Kraus form: V_i = sqrt(lambda_i) unvec(u_i) in descending
/// eigenvalue order, each scaled by a phase making its largest-magnitude
/// entry real positive. DomainError when the Choi is not PSD within tol.
KrausChannel kraus_from_choi(const ChoiMatrix& c, Tolerance tol = {});

/// Canonical representative of the same map.
KrausChannel canonicalize(const KrausChannel& ch, Tolerance tol = {});

/// ||sum V^dagger V - I||_F.
double tp_residual(const KrausChannel& ch);
bool is_tp(const KrausChannel& ch, Tolerance tol = {});
bool is_cp(const ChoiMatrix& c, Tolerance tol = {});

struct ChannelReport {
  bool tp = false;
  double tp_residual = 0.0;
  bool cp = false;
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
};

ChannelReport verify_channel(const KrausChannel& ch, Tolerance tol = {});

/// b after a: Kraus set {B_j A_i}. With `canonical` the result is pruned to
/// a linearly independent family through the Choi matrix.
KrausChannel compose(const KrausChannel& b, const KrausChannel& a,
                     bool canonical = false);

/// Kraus set {A_i (x) B_j}; the result spaces carry no split.
KrausChannel tensor(const KrausChannel& a, const KrausChannel& b);

/// Columns outside subspace `which` of the source are dropped.
KrausChannel restrict_source(const KrausChannel& ch, int which);
/// Rows outside subspace `which` of the target are dropped.
KrausChannel restrict_target(const KrausChannel& ch, int which);

/// Zero-extends a map between subspaces to the full split spaces: the
/// channel's source becomes subspace `source_which` of `source`, likewise
/// for the target.
KrausChannel embed(const KrausChannel& ch, const SubspaceSplit& source,
                   int source_which, const SubspaceSplit& target,
                   int target_which);

KrausChannel identity_channel(const Space& space);
KrausChannel unitary_channel(const Space& space, const ComplexMatrix& u);

/// Slices a random isometry dS -> dT*kraus_count into Kraus blocks.
/// DomainError if kraus_count is 0 or dT*kraus_count < dS.
KrausChannel random_channel(const Space& source, const Space& target,
                            std::size_t kraus_count, Rng& rng);
KrausChannel random_channel(const ChannelShape& shape, std::size_t kraus_count,
                            Seed seed);

/// Frobenius norm of the Choi difference.
double channel_distance(const KrausChannel& a, const KrausChannel& b);
double choi_distance(const ChoiMatrix& a, const ChoiMatrix& b);

}  // namespace sublocal
