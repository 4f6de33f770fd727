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

// Membership tests for the subspace-local classes: transfer signature,
// subspace preservation, and the extract -> rebuild -> compare classifier.

#include <array>
#include <string>
#include <variant>

#include "sublocal/channel.hpp"
#include "sublocal/params.hpp"

namespace sublocal {

enum class SLTag { C1, C2, C3, C4, NotSL };

const char* to_string(SLTag tag);
/// Accepts "C1".."C4", "NotSL" (case-insensitive); DomainError otherwise.
SLTag parse_tag(const std::string& name);

struct TransferSignature {
  /// w[i][j]: mean weight moved from source subspace i+1 into target
  /// subspace j+1 over the basis states of subspace i+1.
  std::array<std::array<double, 2>, 2> w{};
  /// Max over all matrix units E_ss' and both j of
  /// |Tr(P_tj Phi(E_ss')) - ideal| for the patterns of C1, C2, C3, C4.
  std::array<double, 4> deviation{};
};

/// DomainError unless ch is TP within tol.
TransferSignature transfer_signature(const KrausChannel& ch, Tolerance tol = {});

/// max |Tr(P_t1 Phi(E_ss')) - Tr(P_s1 E_ss')| over all source matrix units.
double sp_residual(const KrausChannel& ch);
bool is_sp(const KrausChannel& ch, Tolerance tol = {});

struct ClassifierTolerances {
  double kernel = 1e-9;     // TP/CP precheck and parameter validation base
  double signature = 1e-7;  // signature match, norm-product bound
  double leakage = 1e-8;    // relative to the Choi spectral radius
  double rebuild = 1e-8;    // Choi distance of the rebuilt channel
};

struct SLDiagnostics {
  TransferSignature signature;
  double block_leakage = 0.0;     // Frobenius mass outside the class blocks
  double cross_sigma_ratio = 0.0; // sigma_2 / sigma_1 of the (realigned) cross block
  double range_residual = 0.0;
  double norm_product = 0.0;      // ||c1||^2 ||c2||^2 (C1) or ||C|| ||D|| (C2)
  double rebuild_distance = -1.0; // negative when no rebuild was attempted
  std::string note;
};

using SLParams = std::variant<std::monostate, LspParams, SwapParams, AbsorbParams>;

struct SLClass {
  SLTag tag = SLTag::NotSL;
  SLParams params;
  SLDiagnostics diagnostics;
};

/// DomainError when ch is not a channel within tolerances.kernel.
SLClass classify(const KrausChannel& ch, const ClassifierTolerances& tol = {});

/// Channel built from the parameters of a classification (tag != NotSL).
KrausChannel rebuild(const SLClass& cls, const ChannelShape& shape,
                     Tolerance tol = {});

/// Class of outer o inner (inner applied first). DomainError on NotSL.
SLTag compose_class(SLTag outer, SLTag inner);

}  // namespace sublocal
