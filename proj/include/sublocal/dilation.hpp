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

// Unitary dilation of LSP channels on equal source and target splits.
//
// Index convention on H_S (x) H_a1 (x) H_a2: (s * dim_a1 + a1) * dim_a2 + a2.
// V1 acts on H_S (x) H_a1 with index s * dim_a1 + a1, V2 on H_S (x) H_a2
// with index s * dim_a2 + a2.

#include <cstddef>
#include <vector>

#include "sublocal/channel.hpp"
#include "sublocal/params.hpp"

namespace sublocal {

struct DilationResult {
  SubspaceSplit split;
  std::size_t dim_a1 = 0;
  std::size_t dim_a2 = 0;
  std::vector<cplx> a1;
  std::vector<cplx> a2;
  ComplexMatrix v1;
  ComplexMatrix v2;
  ComplexMatrix u;
  /// Choi distance between the dilated channel and its target channel.
  double reproduction_distance = 0.0;
};

/// Ancillas of dimension N and M (the Kraus counts) prepared in their first
/// basis vector. The dilated channel is make_lsp of p with c1 and c2
/// replaced by the first basis vectors, so it is LSP with the coherence
/// carried by V_1 and W_1.
DilationResult dilate_lsp(const LspParams& p, const SubspaceSplit& split,
                          Tolerance tol = {});

/// Reproduces make_lsp(p) itself: the ancilla states carry the coefficient
/// vectors, a1[n] = conj(c1_n) and a2[m] = conj(c2_m), with one extra ancilla
/// level holding the remaining norm whenever ||c|| < 1.
DilationResult dilate_lsp_exact(const LspParams& p, const SubspaceSplit& split,
                                Tolerance tol = {});

/// Q -> Tr_{a1,a2}(U (Q (x) a1 a1^+ (x) a2 a2^+) U^+).
KrausChannel dilated_channel(const DilationResult& d);

/// max of ||V1 V1^+ - P_s1 (x) I||_F, ||V1^+ V1 - P_s1 (x) I||_F and the
/// same for V2.
double block_unitarity_residual(const DilationResult& d);
double unitarity_residual(const ComplexMatrix& u);

/// LspParams with c1 = e_1 and c2 = e_1: the channel dilate_lsp realizes.
LspParams absorbed_params(const LspParams& p);

}  // namespace sublocal
