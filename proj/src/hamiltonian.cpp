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

#include "sublocal/hamiltonian.hpp"

#include <cmath>

#include "sublocal/errors.hpp"

namespace sublocal {

ComplexMatrix interaction_hamiltonian(const ComplexMatrix& h1,
                                      const ComplexMatrix& h2,
                                      const ChannelShape& shape, Tolerance tol) {
  const auto& s = shape.source;
  const auto& t = shape.target;
  const std::size_t n1 = s.dim1() * t.dim1();
  const std::size_t n2 = s.dim2() * t.dim2();
  if (h1.rows() != n1 || h1.cols() != n1 || h2.rows() != n2 || h2.cols() != n2) {
    throw ShapeError("interaction Hamiltonian blocks do not match the shape");
  }
  if (!is_hermitian(h1, tol) || !is_hermitian(h2, tol)) {
    throw DomainError("interaction Hamiltonian blocks must be Hermitian");
  }
  const std::size_t dt = t.total();
  ComplexMatrix h(s.total() * dt, s.total() * dt);
  const auto place = [&](const ComplexMatrix& blk, int which) {
    const std::size_t ds_w = s.dim(which);
    const std::size_t dt_w = t.dim(which);
    for (std::size_t a = 0; a < ds_w * dt_w; ++a)
      for (std::size_t b = 0; b < ds_w * dt_w; ++b) {
        const std::size_t ra = (s.offset(which) + a / dt_w) * dt + t.offset(which) + a % dt_w;
        const std::size_t rb = (s.offset(which) + b / dt_w) * dt + t.offset(which) + b % dt_w;
        h(ra, rb) += blk(a, b);
      }
  };
  place(h1, 1);
  place(h2, 2);
  return h;
}

KrausChannel hamiltonian_demo(const ComplexMatrix& h1, const ComplexMatrix& h2,
                              const ComplexMatrix& rho_t, double t,
                              const ChannelShape& shape, Tolerance tol) {
  const std::size_t ds = shape.source.total();
  const std::size_t dt = shape.target.total();
  if (rho_t.rows() != dt || rho_t.cols() != dt) {
    throw ShapeError("rho_T does not match the target dimension");
  }
  if (!is_psd(rho_t, tol) || std::abs(rho_t.trace() - 1.0) > tol.eps()) {
    throw DomainError("rho_T is not a density matrix");
  }
  const ComplexMatrix p1 = projector(shape.target, 1);
  if ((p1 * rho_t * p1 - rho_t).frobenius_norm() > tol.eps()) {
    throw DomainError("rho_T must be supported on the first target subspace");
  }
  const ComplexMatrix u =
      expm_hermitian(interaction_hamiltonian(h1, h2, shape, tol), t, tol);
  const ComplexMatrix ud = u.adjoint();

  ComplexMatrix choi(ds * dt, ds * dt);
  for (std::size_t s = 0; s < ds; ++s) {
    for (std::size_t sp = 0; sp < ds; ++sp) {
      ComplexMatrix e(ds, ds);
      e(s, sp) = 1.0;
      const ComplexMatrix out =
          partial_trace(u * kron(e, rho_t) * ud, ds, dt, Factor::A);
      for (std::size_t a = 0; a < dt; ++a)
        for (std::size_t b = 0; b < dt; ++b) choi(a * ds + s, b * ds + sp) = out(a, b);
    }
  }
  return kraus_from_choi(
      ChoiMatrix(Space(shape.source), Space(shape.target), hermitian_part(choi)), tol);
}

}  // namespace sublocal
