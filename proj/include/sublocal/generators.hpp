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

// First-quantized generators of the four subspace-local classes and the
// two-step decomposition of an LSP channel.

#include "sublocal/channel.hpp"
#include "sublocal/params.hpp"

namespace sublocal {

/// Class C1: sum V_n Q V_n^+ + sum W_m Q W_m^+ + V Q W^+ + W Q V^+.
KrausChannel make_lsp(const LspParams& p, const ChannelShape& shape,
                      Tolerance tol = {});

/// Class C2: rho1 Tr(P_s2 Q) + rho2 Tr(P_s1 Q) plus the coherence between
/// the s2 -> t1 and s1 -> t2 transfers weighted by C and D.
KrausChannel make_c2(const SwapParams& p, const ChannelShape& shape,
                     Tolerance tol = {});

/// Class C3: rho Tr(P_s1 Q) + inner(P_s2 Q P_s2), everything landing in t2.
KrausChannel make_c3(const AbsorbParams& p, const ChannelShape& shape,
                     Tolerance tol = {});
/// Class C4: rho Tr(P_s2 Q) + inner(P_s1 Q P_s1), everything landing in t1.
KrausChannel make_c4(const AbsorbParams& p, const ChannelShape& shape,
                     Tolerance tol = {});
KrausChannel make_absorb(const AbsorbParams& p, const ChannelShape& shape,
                         AbsorbVariant variant, Tolerance tol = {});

struct LspDecomposition {
  KrausChannel phi_a;  // (s1 (+) s2) -> (t1 (+) s2), identity on s2
  KrausChannel phi_b;  // (t1 (+) s2) -> (t1 (+) t2), identity on t1
};

/// make_lsp(p) == compose(phi_b, phi_a).
LspDecomposition decompose_lsp(const LspParams& p, const ChannelShape& shape,
                               Tolerance tol = {});

}  // namespace sublocal
