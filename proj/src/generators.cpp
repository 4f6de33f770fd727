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

#include "sublocal/generators.hpp"

#include "sl_internal.hpp"
#include "sublocal/errors.hpp"

namespace sublocal {

namespace {

ComplexMatrix pad(const ComplexMatrix& block, const SubspaceSplit& target,
                  int tw, const SubspaceSplit& source, int sw) {
  ComplexMatrix m(target.total(), source.total());
  m.set_block(target.offset(tw), source.offset(sw), block);
  return m;
}

// Choi of sum_i A_i Q A_i^+ + sum_j B_j Q B_j^+ + A Q B^+ + B Q A^+ where
// A = sum a_i A_i and B = sum b_j B_j.
ComplexMatrix glued_choi(const std::vector<ComplexMatrix>& as,
                         const std::vector<cplx>& a,
                         const std::vector<ComplexMatrix>& bs,
                         const std::vector<cplx>& b) {
  const std::size_t n = as.front().size();
  ComplexMatrix acc(n, n);
  ComplexMatrix va(as.front().rows(), as.front().cols());
  ComplexMatrix vb(va.rows(), va.cols());
  for (std::size_t i = 0; i < as.size(); ++i) {
    acc.add_outer(1.0, as[i].data(), as[i].data());
    ComplexMatrix t = as[i];
    t *= a[i];
    va += t;
  }
  for (std::size_t j = 0; j < bs.size(); ++j) {
    acc.add_outer(1.0, bs[j].data(), bs[j].data());
    ComplexMatrix t = bs[j];
    t *= b[j];
    vb += t;
  }
  acc.add_outer(1.0, va.data(), vb.data());
  acc.add_outer(1.0, vb.data(), va.data());
  return acc;
}

std::vector<ComplexMatrix> padded(const std::vector<ComplexMatrix>& ks,
                                  const SubspaceSplit& target, int tw,
                                  const SubspaceSplit& source, int sw) {
  std::vector<ComplexMatrix> out;
  out.reserve(ks.size());
  for (const auto& k : ks) out.push_back(pad(k, target, tw, source, sw));
  return out;
}

}  // namespace

KrausChannel make_lsp(const LspParams& p, const ChannelShape& shape,
                      Tolerance tol) {
  validate(p, shape, tol);
  const auto& s = shape.source;
  const auto& t = shape.target;
  const ComplexMatrix c =
      glued_choi(padded(p.kraus1, t, 1, s, 1), detail::clamp_to_unit_ball(p.c1),
                 padded(p.kraus2, t, 2, s, 2), detail::clamp_to_unit_ball(p.c2));
  return detail::checked_kraus(ChoiMatrix(s, t, c), tol, "make_lsp");
}

KrausChannel make_c2(const SwapParams& p, const ChannelShape& shape,
                     Tolerance tol) {
  validate(p, shape, tol);
  const auto& s = shape.source;
  const auto& t = shape.target;
  const ComplexMatrix cm = detail::clamp_to_contraction(p.cmat);
  const ComplexMatrix dm = detail::clamp_to_contraction(p.dmat);
  const ComplexMatrix r1 = density_factor(p.rho1, tol);
  const ComplexMatrix r2 = density_factor(p.rho2, tol);

  // x[n][l] = |r1_n><s2,l| and y[m][k] = |r2_m><s1,k|, padded.
  const auto transfer = [&](const ComplexMatrix& r, int tw, std::size_t col,
                            std::size_t src) {
    ComplexMatrix m(t.total(), s.total());
    for (std::size_t i = 0; i < r.rows(); ++i) m(t.offset(tw) + i, src) = r(i, col);
    return m;
  };
  std::vector<std::vector<ComplexMatrix>> x(r1.cols()), y(r2.cols());
  for (std::size_t n = 0; n < r1.cols(); ++n)
    for (std::size_t l = 0; l < s.dim2(); ++l)
      x[n].push_back(transfer(r1, 1, n, s.offset(2) + l));
  for (std::size_t m = 0; m < r2.cols(); ++m)
    for (std::size_t k = 0; k < s.dim1(); ++k)
      y[m].push_back(transfer(r2, 2, m, s.offset(1) + k));

  const std::size_t dim = s.total() * t.total();
  ComplexMatrix acc(dim, dim);
  for (const auto& row : x)
    for (const auto& op : row) acc.add_outer(1.0, op.data(), op.data());
  for (const auto& row : y)
    for (const auto& op : row) acc.add_outer(1.0, op.data(), op.data());
  for (std::size_t n = 0; n < r1.cols(); ++n) {
    for (std::size_t k = 0; k < s.dim1(); ++k) {
      for (std::size_t m = 0; m < r2.cols(); ++m) {
        for (std::size_t l = 0; l < s.dim2(); ++l) {
          const cplx w = cm(n, k) * std::conj(dm(m, l));
          if (w == cplx(0.0)) continue;
          acc.add_outer(w, x[n][l].data(), y[m][k].data());
          acc.add_outer(std::conj(w), y[m][k].data(), x[n][l].data());
        }
      }
    }
  }
  return detail::checked_kraus(ChoiMatrix(s, t, acc), tol, "make_c2");
}

KrausChannel make_absorb(const AbsorbParams& p, const ChannelShape& shape,
                         AbsorbVariant variant, Tolerance tol) {
  validate(p, shape, variant, tol);
  const auto& s = shape.source;
  const auto& t = shape.target;
  const int keep = variant == AbsorbVariant::C3 ? 2 : 1;
  const int lost = 3 - keep;
  std::vector<ComplexMatrix> kraus =
      embed(p.inner, s, keep, t, keep).kraus();
  const ComplexMatrix r = density_factor(p.rho, tol);
  for (std::size_t n = 0; n < r.cols(); ++n) {
    for (std::size_t k = 0; k < s.dim(lost); ++k) {
      ComplexMatrix m(t.total(), s.total());
      for (std::size_t i = 0; i < r.rows(); ++i)
        m(t.offset(keep) + i, s.offset(lost) + k) = r(i, n);
      kraus.push_back(std::move(m));
    }
  }
  return canonicalize(KrausChannel(shape, std::move(kraus)), tol);
}

KrausChannel make_c3(const AbsorbParams& p, const ChannelShape& shape,
                     Tolerance tol) {
  return make_absorb(p, shape, AbsorbVariant::C3, tol);
}

KrausChannel make_c4(const AbsorbParams& p, const ChannelShape& shape,
                     Tolerance tol) {
  return make_absorb(p, shape, AbsorbVariant::C4, tol);
}

LspDecomposition decompose_lsp(const LspParams& p, const ChannelShape& shape,
                               Tolerance tol) {
  validate(p, shape, tol);
  const auto& s = shape.source;
  const auto& t = shape.target;
  const SubspaceSplit mid(t.dim1(), s.dim2());

  const ComplexMatrix j2 = pad(ComplexMatrix::identity(s.dim2()), mid, 2, s, 2);
  const ComplexMatrix ca =
      glued_choi(padded(p.kraus1, mid, 1, s, 1), detail::clamp_to_unit_ball(p.c1),
                 {j2}, {1.0});
  const ComplexMatrix j1 = pad(ComplexMatrix::identity(t.dim1()), t, 1, mid, 1);
  const ComplexMatrix cb =
      glued_choi({j1}, {1.0}, padded(p.kraus2, t, 2, mid, 2),
                 detail::clamp_to_unit_ball(p.c2));
  return {detail::checked_kraus(ChoiMatrix(s, mid, ca), tol, "decompose_lsp"),
          detail::checked_kraus(ChoiMatrix(mid, t, cb), tol, "decompose_lsp")};
}

}  // namespace sublocal
