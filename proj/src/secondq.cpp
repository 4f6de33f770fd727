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

#include "sublocal/secondq.hpp"

#include <cmath>
#include <string>

#include "sl_internal.hpp"
#include "sublocal/errors.hpp"

namespace sublocal {

namespace {

using detail::unit;

ChoiMatrix zero_choi(std::size_t ds, std::size_t dt) {
  return ChoiMatrix(f01_space(ds), f01_space(dt),
                    ComplexMatrix((ds + 1) * (dt + 1), (ds + 1) * (dt + 1)));
}

// LSP factor: sum Vn Q Vn^+ + E0 Q E0^+ + V Q E0^+ + E0 Q V^+,
// with E0 = |vac_t><vac_s| and everything lifted through M.
KrausChannel lsp_factor(const std::vector<ComplexMatrix>& family,
                        const std::vector<cplx>& c, std::size_t ds,
                        std::size_t dt, Tolerance tol) {
  const ComplexMatrix ms = f01_embedding(ds).adjoint();
  const ComplexMatrix mt = f01_embedding(dt);
  ComplexMatrix acc = zero_choi(ds, dt).matrix();
  ComplexMatrix v(dt + 1, ds + 1);
  for (std::size_t n = 0; n < family.size(); ++n) {
    const ComplexMatrix vn = mt * family[n] * ms;
    acc.add_outer(1.0, vn.data(), vn.data());
    ComplexMatrix term = vn;
    term *= c[n];
    v += term;
  }
  const ComplexMatrix e0 = unit(dt + 1, ds + 1, 0, 0);
  acc.add_outer(1.0, e0.data(), e0.data());
  acc.add_outer(1.0, v.data(), e0.data());
  acc.add_outer(1.0, e0.data(), v.data());
  return detail::checked_kraus(
      ChoiMatrix(f01_space(ds), f01_space(dt), std::move(acc)), tol, "lift_lsp");
}

// Swap factor: vacuum -> rho~, particles -> vacuum, with coherence
// sum_{n,k} cm(n,k) A_n Q B_k^+ + h.c., A_n = |r~_n><vac|, B_k = |vac><k~|.
KrausChannel swap_factor(const ComplexMatrix& rho, const ComplexMatrix& cm,
                         std::size_t ds, std::size_t dt, Tolerance tol) {
  const ComplexMatrix r = f01_embedding(dt) * density_factor(rho, tol);
  std::vector<ComplexMatrix> a;
  for (std::size_t n = 0; n < r.cols(); ++n) {
    ComplexMatrix an(dt + 1, ds + 1);
    for (std::size_t i = 0; i <= dt; ++i) an(i, 0) = r(i, n);
    a.push_back(std::move(an));
  }
  std::vector<ComplexMatrix> b;
  for (std::size_t k = 0; k < ds; ++k) b.push_back(unit(dt + 1, ds + 1, 0, k + 1));
  ComplexMatrix acc = zero_choi(ds, dt).matrix();
  for (const auto& an : a) acc.add_outer(1.0, an.data(), an.data());
  for (const auto& bk : b) acc.add_outer(1.0, bk.data(), bk.data());
  for (std::size_t n = 0; n < a.size(); ++n) {
    for (std::size_t k = 0; k < ds; ++k) {
      acc.add_outer(cm(n, k), a[n].data(), b[k].data());
      acc.add_outer(std::conj(cm(n, k)), b[k].data(), a[n].data());
    }
  }
  return detail::checked_kraus(
      ChoiMatrix(f01_space(ds), f01_space(dt), std::move(acc)), tol, "lift_c2");
}

KrausChannel trace_to_vacuum(std::size_t ds, std::size_t dt) {
  std::vector<ComplexMatrix> kraus;
  for (std::size_t b = 0; b <= ds; ++b) kraus.push_back(unit(dt + 1, ds + 1, 0, b));
  return KrausChannel(f01_space(ds), f01_space(dt), std::move(kraus));
}

// M Phi M^+ on particles plus rho~ <vac|Q|vac>.
KrausChannel refill_factor(const KrausChannel& inner, const ComplexMatrix& rho,
                           Tolerance tol) {
  const std::size_t ds = inner.source().dim();
  const std::size_t dt = inner.target().dim();
  const ComplexMatrix ms = f01_embedding(ds).adjoint();
  const ComplexMatrix mt = f01_embedding(dt);
  std::vector<ComplexMatrix> kraus;
  for (const auto& k : inner.kraus()) kraus.push_back(mt * k * ms);
  const ComplexMatrix r = mt * density_factor(rho, tol);
  for (std::size_t n = 0; n < r.cols(); ++n) {
    ComplexMatrix an(dt + 1, ds + 1);
    for (std::size_t i = 0; i <= dt; ++i) an(i, 0) = r(i, n);
    kraus.push_back(std::move(an));
  }
  return KrausChannel(f01_space(ds), f01_space(dt), std::move(kraus));
}

void require_f01_product(const KrausChannel& full, const ChannelShape& shape) {
  const std::size_t fs = (shape.source.dim1() + 1) * (shape.source.dim2() + 1);
  const std::size_t ft = (shape.target.dim1() + 1) * (shape.target.dim2() + 1);
  if (full.source().dim() != fs || full.target().dim() != ft) {
    throw ShapeError("channel acts on " + std::to_string(full.source().dim()) +
                     " -> " + std::to_string(full.target().dim()) +
                     " dimensions, F01 products need " + std::to_string(fs) +
                     " -> " + std::to_string(ft));
  }
}

double sector_weight(const KrausChannel& factor, std::size_t basis,
                     bool to_vacuum) {
  const std::size_t ds = factor.source().dim();
  const ComplexMatrix out = apply(factor, unit(ds, ds, basis, basis));
  const double vac = out(0, 0).real();
  return to_vacuum ? vac : out.trace().real() - vac;
}

}  // namespace

ComplexMatrix f01_embedding(std::size_t d) {
  ComplexMatrix m(d + 1, d);
  for (std::size_t j = 0; j < d; ++j) m(j + 1, j) = 1.0;
  return m;
}

Space f01_space(std::size_t d) { return Space(SubspaceSplit(1, d)); }

ComplexMatrix product_embedding(const SubspaceSplit& split) {
  const std::size_t d1 = split.dim1();
  const std::size_t d2 = split.dim2();
  ComplexMatrix m((d1 + 1) * (d2 + 1), split.total());
  for (std::size_t k = 0; k < d1; ++k) m((k + 1) * (d2 + 1), k) = 1.0;
  for (std::size_t l = 0; l < d2; ++l) m(l + 1, d1 + l) = 1.0;
  return m;
}

ComplexMatrix sector_projector(const SubspaceSplit& split, int n) {
  if (n == 0) {
    const std::size_t f = (split.dim1() + 1) * (split.dim2() + 1);
    return unit(f, f, 0, 0);
  }
  if (n == 1) {
    const ComplexMatrix m = product_embedding(split);
    return m * m.adjoint();
  }
  throw DomainError("particle number must be 0 or 1");
}

EmbeddingSet build_embeddings(const ChannelShape& shape) {
  return {shape,
          product_embedding(shape.source),
          product_embedding(shape.target),
          f01_embedding(shape.source.dim1()),
          f01_embedding(shape.source.dim2()),
          f01_embedding(shape.target.dim1()),
          f01_embedding(shape.target.dim2())};
}

KrausChannel tensor(const ProductChannelPair& pair) {
  return tensor(pair.phi1, pair.phi2);
}

KrausChannel one_restriction(const KrausChannel& full, const EmbeddingSet& emb) {
  require_f01_product(full, emb.shape);
  const ComplexMatrix mt_adj = emb.m_t.adjoint();
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(full.count());
  for (const auto& v : full.kraus()) kraus.push_back(mt_adj * v * emb.m_s);
  return KrausChannel(emb.shape, std::move(kraus));
}

double respects_residual(const KrausChannel& full, const ChannelShape& shape,
                         int n) {
  require_f01_product(full, shape);
  const ComplexMatrix ps = sector_projector(shape.source, n);
  ComplexMatrix qt = sector_projector(shape.target, n);
  qt *= -1.0;
  qt += ComplexMatrix::identity(qt.rows());
  ComplexMatrix x(ps.rows(), ps.cols());
  for (const auto& v : full.kraus()) x += v.adjoint() * qt * v;
  return (ps * x * ps).frobenius_norm();
}

bool respects_n_states(const KrausChannel& full, const ChannelShape& shape,
                       int n, Tolerance tol) {
  const double sector_dim = n == 0 ? 1.0 : static_cast<double>(shape.source.total());
  return respects_residual(full, shape, n) <= tol.eps() * std::sqrt(sector_dim);
}

ProductChannelPair lift_lsp(const LspParams& p, const ChannelShape& shape,
                            Tolerance tol) {
  validate(p, shape, tol);
  const auto c1 = detail::clamp_to_unit_ball(p.c1);
  const auto c2 = detail::clamp_to_unit_ball(p.c2);
  return {lsp_factor(p.kraus1, c1, shape.source.dim1(), shape.target.dim1(), tol),
          lsp_factor(p.kraus2, c2, shape.source.dim2(), shape.target.dim2(), tol)};
}

ProductChannelPair lift_c2(const SwapParams& p, const ChannelShape& shape,
                           Tolerance tol) {
  validate(p, shape, tol);
  const auto cm = detail::clamp_to_contraction(p.cmat);
  const auto dm = detail::clamp_to_contraction(p.dmat);
  return {swap_factor(p.rho1, cm, shape.source.dim1(), shape.target.dim1(), tol),
          swap_factor(p.rho2, dm, shape.source.dim2(), shape.target.dim2(), tol)};
}

ProductChannelPair lift_c34(const AbsorbParams& p, const ChannelShape& shape,
                            AbsorbVariant variant, Tolerance tol) {
  validate(p, shape, variant, tol);
  if (variant == AbsorbVariant::C3) {
    return {trace_to_vacuum(shape.source.dim1(), shape.target.dim1()),
            refill_factor(p.inner, p.rho, tol)};
  }
  return {refill_factor(p.inner, p.rho, tol),
          trace_to_vacuum(shape.source.dim2(), shape.target.dim2())};
}

FactorSectors factor_sectors(const KrausChannel& factor) {
  const std::size_t d = factor.source().dim() - 1;
  FactorSectors s;
  s.vacuum_to_vacuum = sector_weight(factor, 0, true);
  s.vacuum_to_particle = sector_weight(factor, 0, false);
  for (std::size_t b = 1; b <= d; ++b) {
    s.particle_to_vacuum += sector_weight(factor, b, true);
    s.particle_to_particle += sector_weight(factor, b, false);
  }
  s.particle_to_vacuum /= static_cast<double>(d);
  s.particle_to_particle /= static_cast<double>(d);
  return s;
}

int sector_case(const ProductChannelPair& pair, Tolerance tol) {
  const FactorSectors f1 = factor_sectors(pair.phi1);
  const FactorSectors f2 = factor_sectors(pair.phi2);
  const auto one = [&](double w) { return std::abs(w - 1.0) <= tol.eps(); };
  const auto keeps = [&](const FactorSectors& f) {
    return one(f.vacuum_to_vacuum) && one(f.particle_to_particle);
  };
  const auto swaps = [&](const FactorSectors& f) {
    return one(f.vacuum_to_particle) && one(f.particle_to_vacuum);
  };
  const auto empties = [&](const FactorSectors& f) {
    return one(f.vacuum_to_vacuum) && one(f.particle_to_vacuum);
  };
  const auto fills = [&](const FactorSectors& f) {
    return one(f.vacuum_to_particle) && one(f.particle_to_particle);
  };
  const bool cases[4] = {keeps(f1) && keeps(f2), swaps(f1) && swaps(f2),
                         empties(f1) && fills(f2), fills(f1) && empties(f2)};
  int found = 0;
  for (int i = 0; i < 4; ++i) {
    if (!cases[i]) continue;
    if (found != 0) return -1;
    found = i + 1;
  }
  return found;
}

}  // namespace sublocal
