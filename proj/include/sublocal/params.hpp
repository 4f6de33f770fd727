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

// Parameter bundles of the four subspace-local classes, their validation,
// and seeded random draws.

#include <cstddef>
#include <vector>

#include "sublocal/channel.hpp"
#include "sublocal/matrix.hpp"
#include "sublocal/spaces.hpp"

namespace sublocal {

/// Class C1. kraus1: V_n (dt1 x ds1), kraus2: W_m (dt2 x ds2).
/// Phi(Q) = sum V_n Q V_n^+ + sum W_m Q W_m^+ + V Q W^+ + W Q V^+ with
/// V = sum c1_n V_n and W = sum c2_m W_m, all zero-extended to H_S -> H_T.
struct LspParams {
  std::vector<ComplexMatrix> kraus1;
  std::vector<ComplexMatrix> kraus2;
  std::vector<cplx> c1;
  std::vector<cplx> c2;
};

/// Class C2. rho1 on t1, rho2 on t2; cmat is rank(rho1) x ds1 and dmat is
/// rank(rho2) x ds2, both indexed against the eigenvectors of the rho's in
/// descending eigenvalue order.
struct SwapParams {
  ComplexMatrix rho1;
  ComplexMatrix rho2;
  ComplexMatrix cmat;
  ComplexMatrix dmat;
};

/// Classes C3 and C4. For C3, rho lives on t2 and inner maps s2 -> t2; for
/// C4, rho lives on t1 and inner maps s1 -> t1.
struct AbsorbParams {
  ComplexMatrix rho;
  KrausChannel inner;
};

enum class AbsorbVariant { C3, C4 };

/// Eigenvalue cutoff (relative to the largest) defining rank(rho).
inline constexpr double kDensityRankCutoff = 1e-10;

/// Positive part of the spectrum of a density: columns sqrt(lambda_n) u_n,
/// descending. This is the matrix R with R R^+ = rho.
ComplexMatrix density_factor(const ComplexMatrix& rho, Tolerance tol = {});

/// V = sum c1_n V_n and W = sum c2_m W_m, unextended.
ComplexMatrix lsp_v(const LspParams& p);
ComplexMatrix lsp_w(const LspParams& p);

/// DomainError describing the first violated invariant.
void validate(const LspParams& p, const ChannelShape& shape, Tolerance tol = {});
void validate(const SwapParams& p, const ChannelShape& shape,
              Tolerance tol = {});
void validate(const AbsorbParams& p, const ChannelShape& shape,
              AbsorbVariant variant, Tolerance tol = {});

/// Canonical Kraus family of a random channel per subspace (so the family is
/// linearly independent) with coefficient vectors of norm uniform in [0, 1].
LspParams random_lsp_params(const ChannelShape& shape, Rng& rng);
SwapParams random_swap_params(const ChannelShape& shape, Rng& rng);
AbsorbParams random_absorb_params(const ChannelShape& shape,
                                  AbsorbVariant variant, Rng& rng);

}  // namespace sublocal
