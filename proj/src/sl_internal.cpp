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

#include "sl_internal.hpp"

#include <string>

#include "sublocal/errors.hpp"

namespace sublocal::detail {

std::vector<cplx> clamp_to_unit_ball(std::vector<cplx> c) {
  const double n = norm(c);
  if (n > 1.0) {
    for (cplx& z : c) z /= n;
  }
  return c;
}

ComplexMatrix clamp_to_contraction(ComplexMatrix m) {
  const double n = m.empty() ? 0.0 : operator_norm(m);
  if (n > 1.0) m *= 1.0 / n;
  return m;
}

KrausChannel checked_kraus(const ChoiMatrix& c, Tolerance tol, const char* what) {
  if (!is_cp(c, tol)) {
    throw InternalError(std::string(what) +
                        ": assembled Choi matrix is not positive semidefinite");
  }
  return kraus_from_choi(c, tol);
}

ComplexMatrix unit(std::size_t rows, std::size_t cols, std::size_t r,
                   std::size_t c) {
  ComplexMatrix m(rows, cols);
  m(r, c) = 1.0;
  return m;
}

}  // namespace sublocal::detail
