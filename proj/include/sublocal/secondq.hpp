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

// Truncated second quantization. F01(H) for a d-dimensional H is the
// (d+1)-dimensional space with the vacuum at index 0 and the single-particle
// copy of basis vector j at index j+1. Products F01(H_1) (x) F01(H_2) use
// index f1*(d2+1) + f2.

#include <cstddef>

#include "sublocal/channel.hpp"
#include "sublocal/params.hpp"

namespace sublocal {

struct EmbeddingSet {
  ChannelShape shape;
  ComplexMatrix m_s;   // F01(s1)F01(s2) x dS
  ComplexMatrix m_t;   // F01(t1)F01(t2) x dT
  ComplexMatrix m_s1;  // (ds1+1) x ds1
  ComplexMatrix m_s2;
  ComplexMatrix m_t1;
  ComplexMatrix m_t2;
};

/// (d+1) x d isometry onto the single-particle sector.
ComplexMatrix f01_embedding(std::size_t d);
/// F01 of a d-dimensional space, split as vacuum (+) single particle.
Space f01_space(std::size_t d);
/// Isometry H_1 (+) H_2 -> F01(H_1) (x) F01(H_2) onto the one-particle sector.
ComplexMatrix product_embedding(const SubspaceSplit& split);
/// Projector onto the n-particle sector (n = 0 or 1) of F01(H_1) (x) F01(H_2).
ComplexMatrix sector_projector(const SubspaceSplit& split, int n);

EmbeddingSet build_embeddings(const ChannelShape& shape);

struct ProductChannelPair {
  KrausChannel phi1;  // F01(s1) -> F01(t1)
  KrausChannel phi2;  // F01(s2) -> F01(t2)
};

/// phi1 (x) phi2 on the F01 product spaces.
KrausChannel tensor(const ProductChannelPair& pair);

/// Kraus {M_T^+ V_k M_S}: compression of a channel on the F01 products to
/// the single-particle sectors.
KrausChannel one_restriction(const KrausChannel& full, const EmbeddingSet& emb);

/// ||P_n (sum_k V_k^+ Q_n V_k) P_n||_F where P_n projects the source onto
/// its n-particle sector and Q_n = I - (target n-particle projector). It
/// vanishes iff every Kraus operator maps n-particle states into n-particle
/// states; for n = 1 and a TP `full` it equals the trace-preservation
/// residual of the 1-restriction.
double respects_residual(const KrausChannel& full, const ChannelShape& shape,
                         int n);
/// respects_residual <= eps * sqrt(dimension of the source sector).
bool respects_n_states(const KrausChannel& full, const ChannelShape& shape,
                       int n, Tolerance tol = {});

ProductChannelPair lift_lsp(const LspParams& p, const ChannelShape& shape,
                            Tolerance tol = {});
ProductChannelPair lift_c2(const SwapParams& p, const ChannelShape& shape,
                           Tolerance tol = {});
ProductChannelPair lift_c34(const AbsorbParams& p, const ChannelShape& shape,
                            AbsorbVariant variant, Tolerance tol = {});

/// Sector behaviour of one F01 factor: weights of the vacuum image in the
/// vacuum and one-particle sectors, and the mean over particle states.
struct FactorSectors {
  double vacuum_to_vacuum = 0.0;
  double vacuum_to_particle = 0.0;
  double particle_to_vacuum = 0.0;
  double particle_to_particle = 0.0;
};

FactorSectors factor_sectors(const KrausChannel& factor);

/// Which of the four sector patterns of a factor pair with a 1-respecting
/// tensor holds: 1 = both factors keep particles (vacuum to vacuum),
/// 2 = both exchange vacuum and particle, 3 = factor 1 empties and factor 2
/// refills from vacuum while keeping particles, 4 = the mirror of 3.
/// Returns 0 when no pattern matches within tol, -1 when several do.
int sector_case(const ProductChannelPair& pair, Tolerance tol = {});

}  // namespace sublocal
