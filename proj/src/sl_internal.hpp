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

// Helpers shared by the lifted and first-quantized generators.

#include <vector>

#include "sublocal/channel.hpp"

namespace sublocal::detail {

/// Coefficient vectors and contractions accepted by validation may exceed
/// norm 1 by up to eps; they are scaled back so the assembled Choi matrix is
/// PSD up to rounding only.
std::vector<cplx> clamp_to_unit_ball(std::vector<cplx> c);
ComplexMatrix clamp_to_contraction(ComplexMatrix m);

/// kraus_from_choi after an explicit PSD check; failure is an InternalError
/// because every caller builds the Choi from validated parameters.
KrausChannel checked_kraus(const ChoiMatrix& c, Tolerance tol, const char* what);

/// Matrix unit |r><c| of size rows x cols.
ComplexMatrix unit(std::size_t rows, std::size_t cols, std::size_t r,
                   std::size_t c);

}  // namespace sublocal::detail
