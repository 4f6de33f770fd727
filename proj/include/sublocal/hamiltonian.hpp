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

// A particle S on H_s1 (+) H_s2 interacting with a particle T on
// H_t1 (+) H_t2 through H = h1 on (s1, t1) + h2 on (s2, t2). The induced
// channel sends rho_S to Tr_S(exp(-itH) rho_S (x) rho_T exp(itH)).

#include "sublocal/channel.hpp"

namespace sublocal {

/// H on H_S (x) H_T with index s * dT + t. h1 is indexed k * dt1 + n over
/// s1 (x) t1, h2 likewise over s2 (x) t2.
ComplexMatrix interaction_hamiltonian(const ComplexMatrix& h1,
                                      const ComplexMatrix& h2,
                                      const ChannelShape& shape,
                                      Tolerance tol = {});

/// DomainError if h1, h2 are not Hermitian or rho_t is not a density
/// supported on t1.
KrausChannel hamiltonian_demo(const ComplexMatrix& h1, const ComplexMatrix& h2,
                              const ComplexMatrix& rho_t, double t,
                              const ChannelShape& shape, Tolerance tol = {});

}  // namespace sublocal
