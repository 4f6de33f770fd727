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

#include "sublocal/params.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sublocal/errors.hpp"

namespace sublocal {

namespace {

std::string dims(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

void require_dims(const ComplexMatrix& m, std::size_t r, std::size_t c,
                  const std::string& what) {
  if (m.rows() != r || m.cols() != c) {
    throw DomainError(what + " is " + dims(m.rows(), m.cols()) + ", expected " +
                      dims(r, c));
  }
}

void require_density(const ComplexMatrix& rho, std::size_t d,
                     const std::string& what, Tolerance tol) {
  require_dims(rho, d, d, what);
  if (!is_psd(rho, tol)) throw DomainError(what + " is not positive semidefinite");
  if (std::abs(rho.trace() - 1.0) > tol.eps() * std::sqrt(static_cast<double>(d))) {
    throw DomainError(what + " does not have unit trace");
  }
}

void require_tp_family(const std::vector<ComplexMatrix>& ks, std::size_t rows,
                       std::size_t cols, const std::string& what,
                       Tolerance tol) {
  if (ks.empty()) throw DomainError(what + " is empty");
  for (const auto& k : ks) require_dims(k, rows, cols, what + " operator");
  if (!is_tp(KrausChannel(Space(cols), Space(rows), ks), tol)) {
    throw DomainError(what + " is not trace preserving");
  }
  ComplexMatrix gram(ks.size(), ks.size());
  for (std::size_t i = 0; i < ks.size(); ++i)
    for (std::size_t j = 0; j < ks.size(); ++j)
      gram(i, j) = inner(ks[i].data(), ks[j].data());
  const auto ev = eigh(gram, tol).values;
  if (!(ev.back() > tol.eps() * ev.front())) {
    throw DomainError(what + " is not linearly independent");
  }
}

ComplexMatrix combine(const std::vector<ComplexMatrix>& ks,
                      const std::vector<cplx>& c) {
  ComplexMatrix out(ks.front().rows(), ks.front().cols());
  for (std::size_t i = 0; i < ks.size(); ++i) {
    ComplexMatrix term = ks[i];
    term *= c[i];
    out += term;
  }
  return out;
}

std::vector<ComplexMatrix> random_family(std::size_t dt, std::size_t ds,
                                         Rng& rng) {
  const std::size_t kmin = (ds + dt - 1) / dt;
  const std::size_t kmax = std::min(dt * ds, kmin + 2);
  const std::size_t k = rng.uniform_int(kmin, kmax);
  const KrausChannel ch = random_channel(Space(ds), Space(dt), k, rng);
  return canonicalize(ch).kraus();
}

std::vector<cplx> random_ball_vector(std::size_t n, Rng& rng) {
  std::vector<cplx> v(n);
  for (cplx& z : v) z = rng.complex_normal();
  const double scale = rng.uniform() / norm(v);
  for (cplx& z : v) z *= scale;
  return v;
}

ComplexMatrix random_contraction(std::size_t rows, std::size_t cols, Rng& rng) {
  ComplexMatrix m = random_ginibre(rows, cols, rng);
  m *= rng.uniform() / operator_norm(m);
  return m;
}

ComplexMatrix random_full_density(std::size_t d, Rng& rng) {
  return random_density(d, rng.uniform_int(1, d), rng);
}

}  // namespace

ComplexMatrix density_factor(const ComplexMatrix& rho, Tolerance tol) {
  const EigenSystem es = eigh(rho, tol);
  const double lmax = es.values.front();
  std::size_t n = 0;
  while (n < es.values.size() && es.values[n] > kDensityRankCutoff * lmax) ++n;
  ComplexMatrix r(rho.rows(), n);
  for (std::size_t j = 0; j < n; ++j) {
    const double s = std::sqrt(es.values[j]);
    for (std::size_t i = 0; i < rho.rows(); ++i) r(i, j) = s * es.vectors(i, j);
  }
  return r;
}

ComplexMatrix lsp_v(const LspParams& p) { return combine(p.kraus1, p.c1); }
ComplexMatrix lsp_w(const LspParams& p) { return combine(p.kraus2, p.c2); }

void validate(const LspParams& p, const ChannelShape& shape, Tolerance tol) {
  const auto& s = shape.source;
  const auto& t = shape.target;
  require_tp_family(p.kraus1, t.dim1(), s.dim1(), "LSP family V", tol);
  require_tp_family(p.kraus2, t.dim2(), s.dim2(), "LSP family W", tol);
  if (p.c1.size() != p.kraus1.size() || p.c2.size() != p.kraus2.size()) {
    throw DomainError("LSP coefficient vectors do not match the Kraus counts");
  }
  if (norm(p.c1) > 1.0 + tol.eps() || norm(p.c2) > 1.0 + tol.eps()) {
    throw DomainError("LSP coefficient vector norm exceeds 1");
  }
}

void validate(const SwapParams& p, const ChannelShape& shape, Tolerance tol) {
  const auto& s = shape.source;
  const auto& t = shape.target;
  require_density(p.rho1, t.dim1(), "rho1", tol);
  require_density(p.rho2, t.dim2(), "rho2", tol);
  const std::size_t n = density_factor(p.rho1, tol).cols();
  const std::size_t m = density_factor(p.rho2, tol).cols();
  require_dims(p.cmat, n, s.dim1(), "C");
  require_dims(p.dmat, m, s.dim2(), "D");
  if (operator_norm(p.cmat) > 1.0 + tol.eps() ||
      operator_norm(p.dmat) > 1.0 + tol.eps()) {
    throw DomainError("swap coherence matrix is not a contraction");
  }
}

void validate(const AbsorbParams& p, const ChannelShape& shape,
              AbsorbVariant variant, Tolerance tol) {
  const bool c3 = variant == AbsorbVariant::C3;
  const std::size_t keep_s = c3 ? shape.source.dim2() : shape.source.dim1();
  const std::size_t keep_t = c3 ? shape.target.dim2() : shape.target.dim1();
  require_density(p.rho, keep_t, "absorbing density", tol);
  if (p.inner.source().dim() != keep_s || p.inner.target().dim() != keep_t) {
    throw DomainError("inner channel is " +
                      dims(p.inner.target().dim(), p.inner.source().dim()) +
                      ", expected " + dims(keep_t, keep_s));
  }
  if (!is_tp(p.inner, tol)) {
    throw DomainError("inner channel is not trace preserving");
  }
}

LspParams random_lsp_params(const ChannelShape& shape, Rng& rng) {
  LspParams p;
  p.kraus1 = random_family(shape.target.dim1(), shape.source.dim1(), rng);
  p.kraus2 = random_family(shape.target.dim2(), shape.source.dim2(), rng);
  p.c1 = random_ball_vector(p.kraus1.size(), rng);
  p.c2 = random_ball_vector(p.kraus2.size(), rng);
  return p;
}

SwapParams random_swap_params(const ChannelShape& shape, Rng& rng) {
  SwapParams p;
  p.rho1 = random_full_density(shape.target.dim1(), rng);
  p.rho2 = random_full_density(shape.target.dim2(), rng);
  p.cmat = random_contraction(density_factor(p.rho1).cols(), shape.source.dim1(),
                              rng);
  p.dmat = random_contraction(density_factor(p.rho2).cols(), shape.source.dim2(),
                              rng);
  return p;
}

AbsorbParams random_absorb_params(const ChannelShape& shape,
                                  AbsorbVariant variant, Rng& rng) {
  const bool c3 = variant == AbsorbVariant::C3;
  const std::size_t ds = c3 ? shape.source.dim2() : shape.source.dim1();
  const std::size_t dt = c3 ? shape.target.dim2() : shape.target.dim1();
  ComplexMatrix rho = random_full_density(dt, rng);
  const std::size_t kmin = (ds + dt - 1) / dt;
  const std::size_t k = rng.uniform_int(kmin, kmin + 2);
  return {std::move(rho), random_channel(Space(ds), Space(dt), k, rng)};
}

}  // namespace sublocal
