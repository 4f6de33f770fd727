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

#include "sublocal/dilation.hpp"

#include <cmath>
#include <string>

#include "sublocal/errors.hpp"
#include "sublocal/generators.hpp"

namespace sublocal {

namespace {

// Unitary on H_sub (x) C^anc (index k * anc + a) sending |k>|0> to
// sum_n K_n|k> (x) |n>. Kraus operators beyond anc are not allowed; levels
// n >= kraus.size() receive nothing.
ComplexMatrix block_unitary(const std::vector<ComplexMatrix>& kraus,
                            std::size_t anc, Tolerance tol) {
  const std::size_t d = kraus.front().cols();
  ComplexMatrix iso(d * anc, d);
  for (std::size_t n = 0; n < kraus.size(); ++n)
    for (std::size_t t = 0; t < d; ++t)
      for (std::size_t k = 0; k < d; ++k) iso(t * anc + n, k) = kraus[n](t, k);
  ComplexMatrix full;
  try {
    full = complete_isometry(iso, tol);
  } catch (const DomainError& e) {
    throw InternalError(std::string("dilation: Kraus isometry rejected: ") + e.what());
  }
  // Input columns go to k*anc + 0, completion columns fill the rest in order.
  ComplexMatrix out(d * anc, d * anc);
  std::size_t next = d;
  for (std::size_t k = 0; k < d; ++k) {
    for (std::size_t a = 0; a < anc; ++a) {
      const std::size_t src = a == 0 ? k : next++;
      for (std::size_t r = 0; r < d * anc; ++r) out(r, k * anc + a) = full(r, src);
    }
  }
  return out;
}

// Zero-extends a block on subspace `which` (x) ancilla to H_S (x) ancilla.
ComplexMatrix extend(const ComplexMatrix& block, const SubspaceSplit& split,
                     int which, std::size_t anc) {
  ComplexMatrix out(split.total() * anc, split.total() * anc);
  const std::size_t off = split.offset(which) * anc;
  out.set_block(off, off, block);
  return out;
}

// Ancilla rotation R with R e_0 = a, applied on the input side:
// B (I (x) R^+).
ComplexMatrix rotate_input(const ComplexMatrix& b, std::size_t sys,
                           const std::vector<cplx>& a, Tolerance tol) {
  const ComplexMatrix r = complete_isometry(ComplexMatrix::column(a), tol);
  return b * kron(ComplexMatrix::identity(sys), r.adjoint());
}

ComplexMatrix assemble_u(const ComplexMatrix& v1, const ComplexMatrix& v2,
                         std::size_t ds, std::size_t n, std::size_t m) {
  ComplexMatrix u = kron(v1, ComplexMatrix::identity(m));
  for (std::size_t s = 0; s < ds; ++s)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t sp = 0; sp < ds; ++sp)
        for (std::size_t bp = 0; bp < m; ++bp) {
          const cplx z = v2(s * m + b, sp * m + bp);
          if (z == cplx(0.0)) continue;
          for (std::size_t a = 0; a < n; ++a)
            u((s * n + a) * m + b, (sp * n + a) * m + bp) += z;
        }
  return u;
}

std::vector<cplx> first_basis(std::size_t n) {
  std::vector<cplx> e(n);
  e[0] = 1.0;
  return e;
}

// a[n] = conj(coeff_n), padded by sqrt(1 - |coeff|^2) on an extra level
// when needed.
std::vector<cplx> ancilla_state(const std::vector<cplx>& coeff, Tolerance tol) {
  std::vector<cplx> a;
  for (const cplx& z : coeff) a.push_back(std::conj(z));
  const double n2 = std::norm(norm(a));
  if (n2 < 1.0 - tol.eps()) a.push_back(std::sqrt(1.0 - n2));
  const double nn = norm(a);
  for (cplx& z : a) z /= nn;
  return a;
}

DilationResult build(const LspParams& p, const SubspaceSplit& split,
                     std::vector<cplx> a1, std::vector<cplx> a2,
                     const LspParams& target, Tolerance tol) {
  validate(p, {split, split}, tol);
  const std::size_t n = a1.size();
  const std::size_t m = a2.size();
  ComplexMatrix v1 = extend(block_unitary(p.kraus1, n, tol), split, 1, n);
  ComplexMatrix v2 = extend(block_unitary(p.kraus2, m, tol), split, 2, m);
  v1 = rotate_input(v1, split.total(), a1, tol);
  v2 = rotate_input(v2, split.total(), a2, tol);

  DilationResult d{split, n, m, std::move(a1), std::move(a2), v1, v2,
                   assemble_u(v1, v2, split.total(), n, m), 0.0};
  const double bu = block_unitarity_residual(d);
  const double uu = unitarity_residual(d.u);
  if (bu > tol.eps() || uu > tol.eps()) {
    throw InternalError("dilation: unitarity check failed (block " +
                        std::to_string(bu) + ", joint " + std::to_string(uu) + ")");
  }
  d.reproduction_distance =
      channel_distance(dilated_channel(d), make_lsp(target, {split, split}, tol));
  return d;
}

void require_kraus_fit(const LspParams& p, const SubspaceSplit& split) {
  for (const auto& k : p.kraus1)
    if (k.rows() != split.dim1() || k.cols() != split.dim1())
      throw DomainError("dilation needs identical source and target splits");
  for (const auto& k : p.kraus2)
    if (k.rows() != split.dim2() || k.cols() != split.dim2())
      throw DomainError("dilation needs identical source and target splits");
}

}  // namespace

LspParams absorbed_params(const LspParams& p) {
  LspParams q = p;
  q.c1 = first_basis(p.kraus1.size());
  q.c2 = first_basis(p.kraus2.size());
  return q;
}

DilationResult dilate_lsp(const LspParams& p, const SubspaceSplit& split,
                          Tolerance tol) {
  require_kraus_fit(p, split);
  return build(p, split, first_basis(p.kraus1.size()),
               first_basis(p.kraus2.size()), absorbed_params(p), tol);
}

DilationResult dilate_lsp_exact(const LspParams& p, const SubspaceSplit& split,
                                Tolerance tol) {
  require_kraus_fit(p, split);
  validate(p, {split, split}, tol);
  return build(p, split, ancilla_state(p.c1, tol),
               ancilla_state(p.c2, tol), p, tol);
}

KrausChannel dilated_channel(const DilationResult& d) {
  const std::size_t ds = d.split.total();
  const std::size_t n = d.dim_a1;
  const std::size_t m = d.dim_a2;
  // U (I (x) a1 (x) a2), a (ds n m) x ds matrix.
  ComplexMatrix in(ds * n * m, ds);
  for (std::size_t s = 0; s < ds; ++s)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < m; ++b) in((s * n + a) * m + b, s) = d.a1[a] * d.a2[b];
  const ComplexMatrix w = d.u * in;
  std::vector<ComplexMatrix> kraus;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      ComplexMatrix k(ds, ds);
      for (std::size_t t = 0; t < ds; ++t)
        for (std::size_t s = 0; s < ds; ++s) k(t, s) = w((t * n + a) * m + b, s);
      kraus.push_back(std::move(k));
    }
  const Space space(d.split);
  return KrausChannel(space, space, std::move(kraus));
}

double block_unitarity_residual(const DilationResult& d) {
  const auto one = [&](const ComplexMatrix& v, int which, std::size_t anc) {
    const ComplexMatrix p =
        kron(projector(d.split, which), ComplexMatrix::identity(anc));
    return std::max((v * v.adjoint() - p).frobenius_norm(),
                    (v.adjoint() * v - p).frobenius_norm());
  };
  return std::max(one(d.v1, 1, d.dim_a1), one(d.v2, 2, d.dim_a2));
}

double unitarity_residual(const ComplexMatrix& u) {
  return (u.adjoint() * u - ComplexMatrix::identity(u.cols())).frobenius_norm();
}

}  // namespace sublocal
