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

#include "sublocal/classify.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <optional>

#include "sublocal/errors.hpp"
#include "sublocal/generators.hpp"

namespace sublocal {

namespace {

// Target subspace receiving each source subspace, per class pattern.
constexpr int kPattern[4][2] = {{1, 2}, {2, 1}, {2, 2}, {1, 1}};

// T_j[s, s'] = Tr(P_tj Phi(E_ss')) read off the Choi matrix.
std::array<ComplexMatrix, 2> transfer_blocks(const ChoiMatrix& choi) {
  const SubspaceSplit t = choi.target().require_split();
  const std::size_t ds = choi.source().dim();
  const ComplexMatrix& c = choi.matrix();
  std::array<ComplexMatrix, 2> out{ComplexMatrix(ds, ds), ComplexMatrix(ds, ds)};
  for (int j = 1; j <= 2; ++j) {
    for (std::size_t ti = 0; ti < t.dim(j); ++ti) {
      const std::size_t row = (t.offset(j) + ti) * ds;
      for (std::size_t s = 0; s < ds; ++s)
        for (std::size_t sp = 0; sp < ds; ++sp)
          out[j - 1](s, sp) += c(row + s, row + sp);
    }
  }
  return out;
}

int subspace_of(const SubspaceSplit& split, std::size_t index) {
  return index < split.dim1() ? 1 : 2;
}

TransferSignature signature_of(const ChoiMatrix& choi) {
  const SubspaceSplit s = choi.source().require_split();
  const auto blocks = transfer_blocks(choi);
  TransferSignature sig;
  for (int i = 1; i <= 2; ++i) {
    for (int j = 1; j <= 2; ++j) {
      double acc = 0.0;
      for (std::size_t b = 0; b < s.dim(i); ++b) {
        const std::size_t idx = s.offset(i) + b;
        acc += blocks[j - 1](idx, idx).real();
      }
      sig.w[i - 1][j - 1] = acc / static_cast<double>(s.dim(i));
    }
  }
  for (int p = 0; p < 4; ++p) {
    double dev = 0.0;
    for (int j = 1; j <= 2; ++j) {
      const ComplexMatrix& tj = blocks[j - 1];
      for (std::size_t a = 0; a < s.total(); ++a) {
        for (std::size_t b = 0; b < s.total(); ++b) {
          const bool hit = a == b && kPattern[p][subspace_of(s, a) - 1] == j;
          dev = std::max(dev, std::abs(tj(a, b) - (hit ? 1.0 : 0.0)));
        }
      }
    }
    sig.deviation[p] = dev;
  }
  return sig;
}

// Choi row/column indices (t*dS + s) with t in target subspace tw and s in
// source subspace sw, t-major.
std::vector<std::size_t> block_indices(const ChannelShape& shape, int tw, int sw) {
  std::vector<std::size_t> idx;
  const std::size_t ds = shape.source.total();
  for (std::size_t t = 0; t < shape.target.dim(tw); ++t)
    for (std::size_t s = 0; s < shape.source.dim(sw); ++s)
      idx.push_back((shape.target.offset(tw) + t) * ds + shape.source.offset(sw) + s);
  return idx;
}

double rows_mass(const ComplexMatrix& c, const std::vector<std::size_t>& rows) {
  double acc = 0.0;
  for (std::size_t r : rows)
    for (const cplx& z : c.row(r)) acc += std::norm(z);
  return std::sqrt(acc);
}

double spectral_radius(const ComplexMatrix& c) {
  const auto ev = eigh(c).values;
  return std::max(std::abs(ev.front()), std::abs(ev.back()));
}

// Rank-one factorization m = sqrt(s) u (sqrt(s) w)^+ of the dominant
// singular pair; the ratio sigma2/sigma1 goes to the diagnostics.
struct RankOne {
  double sigma = 0.0;
  double ratio = 0.0;
  std::vector<cplx> x;
  std::vector<cplx> y;
};

RankOne rank_one(const ComplexMatrix& m) {
  const SingularValues sv = svd(m);
  RankOne r;
  r.sigma = sv.values.empty() ? 0.0 : sv.values.front();
  r.ratio = sv.values.size() > 1 && r.sigma > 0.0 ? sv.values[1] / r.sigma : 0.0;
  const double root = std::sqrt(r.sigma);
  r.x = sv.u.col(0);
  r.y = sv.v.col(0);
  for (cplx& z : r.x) z *= root;
  for (cplx& z : r.y) z *= root;
  return r;
}

std::vector<cplx> matvec(const ComplexMatrix& a, const std::vector<cplx>& v) {
  return (a * ComplexMatrix::column(v)).col(0);
}

struct Extraction {
  std::optional<SLParams> params;
  std::string failure;
};

Extraction extract_lsp(const ChoiMatrix& choi, const ChannelShape& shape,
                       double lmax, const ClassifierTolerances& tol,
                       SLDiagnostics& diag) {
  const ComplexMatrix& c = choi.matrix();
  const auto i11 = block_indices(shape, 1, 1);
  const auto i22 = block_indices(shape, 2, 2);
  auto leak_rows = block_indices(shape, 1, 2);
  const auto i21 = block_indices(shape, 2, 1);
  leak_rows.insert(leak_rows.end(), i21.begin(), i21.end());
  diag.block_leakage = rows_mass(c, leak_rows);
  if (diag.block_leakage > tol.leakage * lmax) {
    return {std::nullopt, "weight outside the (t1,s1) and (t2,s2) blocks"};
  }
  const ComplexMatrix a1 = c.select(i11, i11);
  const ComplexMatrix a2 = c.select(i22, i22);
  const RankOne b = rank_one(c.select(i11, i22));
  diag.cross_sigma_ratio = b.ratio;
  const auto& s = shape.source;
  const auto& t = shape.target;

  LspParams p;
  p.kraus1 = kraus_from_choi(ChoiMatrix(Space(s.dim1()), Space(t.dim1()), a1)).kraus();
  p.kraus2 = kraus_from_choi(ChoiMatrix(Space(s.dim2()), Space(t.dim2()), a2)).kraus();
  p.c1.assign(p.kraus1.size(), 0.0);
  p.c2.assign(p.kraus2.size(), 0.0);

  if (b.sigma > tol.leakage * lmax) {
    if (b.ratio > tol.leakage) {
      return {std::nullopt, "cross block between locations is not rank one"};
    }
    const Tolerance cut(kKrausRankCutoff);
    const ComplexMatrix a1p = pinv(a1, cut);
    const ComplexMatrix a2p = pinv(a2, cut);
    auto out_of_range = [](const ComplexMatrix& a, const ComplexMatrix& ap,
                           const std::vector<cplx>& v) {
      std::vector<cplx> proj = matvec(a * ap, v);
      for (std::size_t i = 0; i < v.size(); ++i) proj[i] = v[i] - proj[i];
      return norm(proj);
    };
    diag.range_residual =
        std::max(out_of_range(a1, a1p, b.x), out_of_range(a2, a2p, b.y));
    if (diag.range_residual > tol.leakage * std::max(1.0, lmax)) {
      return {std::nullopt, "cross block leaves the range of the diagonal blocks"};
    }
    const double g1 = inner(b.x, matvec(a1p, b.x)).real();
    const double g2 = inner(b.y, matvec(a2p, b.y)).real();
    diag.norm_product = g1 * g2;
    if (diag.norm_product > 1.0 + tol.signature) {
      return {std::nullopt, "coherence exceeds the positivity bound"};
    }
    const double beta = std::sqrt(std::sqrt(g2 / g1));
    for (std::size_t n = 0; n < p.kraus1.size(); ++n) {
      const auto& v = p.kraus1[n];
      p.c1[n] = beta * inner(v.data(), b.x) / std::norm(v.frobenius_norm());
    }
    for (std::size_t m = 0; m < p.kraus2.size(); ++m) {
      const auto& w = p.kraus2[m];
      p.c2[m] = inner(w.data(), b.y) / (beta * std::norm(w.frobenius_norm()));
    }
  }
  return {SLParams(std::move(p)), {}};
}

// Rows of R^+ for R = density_factor(rho): <u_n| / sqrt(lambda_n).
ComplexMatrix factor_pinv(const ComplexMatrix& r) {
  ComplexMatrix out = r.adjoint();
  for (std::size_t n = 0; n < out.rows(); ++n) {
    double nn = 0.0;
    for (std::size_t i = 0; i < out.cols(); ++i) nn += std::norm(out(n, i));
    for (std::size_t i = 0; i < out.cols(); ++i) out(n, i) /= nn;
  }
  return out;
}

Extraction extract_swap(const ChoiMatrix& choi, const ChannelShape& shape,
                        double lmax, const ClassifierTolerances& tol,
                        SLDiagnostics& diag) {
  const ComplexMatrix& c = choi.matrix();
  const auto& s = shape.source;
  const auto& t = shape.target;
  const auto i12 = block_indices(shape, 1, 2);
  const auto i21 = block_indices(shape, 2, 1);
  auto leak_rows = block_indices(shape, 1, 1);
  const auto i22 = block_indices(shape, 2, 2);
  leak_rows.insert(leak_rows.end(), i22.begin(), i22.end());
  const double leak_limit = tol.leakage * lmax;

  const ComplexMatrix d1 = c.select(i12, i12);
  const ComplexMatrix d2 = c.select(i21, i21);
  ComplexMatrix rho1 = hermitian_part(partial_trace(d1, t.dim1(), s.dim2(), Factor::B));
  rho1 *= 1.0 / static_cast<double>(s.dim2());
  ComplexMatrix rho2 = hermitian_part(partial_trace(d2, t.dim2(), s.dim1(), Factor::B));
  rho2 *= 1.0 / static_cast<double>(s.dim1());
  const double diag_dev =
      std::hypot((d1 - kron(rho1, ComplexMatrix::identity(s.dim2()))).frobenius_norm(),
                 (d2 - kron(rho2, ComplexMatrix::identity(s.dim1()))).frobenius_norm());
  diag.block_leakage = std::hypot(rows_mass(c, leak_rows), diag_dev);
  if (diag.block_leakage > leak_limit) {
    return {std::nullopt, "diagonal blocks are not of the form rho (x) I"};
  }

  // Realign B[(t,l),(t',k)] into B'[(t,k),(t',l)] = vec(C~) vec(D~)^+.
  const ComplexMatrix b = c.select(i12, i21);
  ComplexMatrix br(t.dim1() * s.dim1(), t.dim2() * s.dim2());
  for (std::size_t ta = 0; ta < t.dim1(); ++ta)
    for (std::size_t l = 0; l < s.dim2(); ++l)
      for (std::size_t tb = 0; tb < t.dim2(); ++tb)
        for (std::size_t k = 0; k < s.dim1(); ++k)
          br(ta * s.dim1() + k, tb * s.dim2() + l) =
              b(ta * s.dim2() + l, tb * s.dim1() + k);
  const RankOne r1 = rank_one(br);
  diag.cross_sigma_ratio = r1.ratio;

  const ComplexMatrix f1 = density_factor(rho1);
  const ComplexMatrix f2 = density_factor(rho2);
  SwapParams p{rho1, rho2, ComplexMatrix(f1.cols(), s.dim1()),
               ComplexMatrix(f2.cols(), s.dim2())};
  if (r1.sigma > leak_limit) {
    if (r1.ratio > tol.leakage) {
      return {std::nullopt, "realigned cross block is not rank one"};
    }
    const ComplexMatrix ct = unvec(r1.x, t.dim1(), s.dim1());
    const ComplexMatrix dt = unvec(r1.y, t.dim2(), s.dim2());
    const ComplexMatrix cm = factor_pinv(f1) * ct;
    const ComplexMatrix dm = factor_pinv(f2) * dt;
    diag.range_residual = std::max((f1 * cm - ct).frobenius_norm(),
                                   (f2 * dm - dt).frobenius_norm());
    if (diag.range_residual > tol.leakage * std::max(1.0, lmax)) {
      return {std::nullopt, "coherence leaves the support of the densities"};
    }
    const double g1 = operator_norm(cm);
    const double g2 = operator_norm(dm);
    diag.norm_product = g1 * g2;
    if (diag.norm_product > 1.0 + tol.signature) {
      return {std::nullopt, "coherence exceeds the positivity bound"};
    }
    const double beta = std::sqrt(g2 / g1);
    p.cmat = beta * cm;
    p.dmat = (1.0 / beta) * dm;
  }
  return {SLParams(std::move(p)), {}};
}

Extraction extract_absorb(const KrausChannel& ch, const ChannelShape& shape,
                          AbsorbVariant variant) {
  const int keep = variant == AbsorbVariant::C3 ? 2 : 1;
  const int lost = 3 - keep;
  const std::size_t src = shape.source.offset(lost);
  const std::size_t ds = shape.source.total();
  ComplexMatrix e(ds, ds);
  e(src, src) = 1.0;
  const ComplexMatrix out = apply(ch, e);
  ComplexMatrix rho = hermitian_part(out.block(
      shape.target.offset(keep), shape.target.offset(keep),
      shape.target.dim(keep), shape.target.dim(keep)));
  KrausChannel inner = restrict_target(restrict_source(ch, keep), keep);
  return {SLParams(AbsorbParams{std::move(rho), std::move(inner)}), {}};
}

}  // namespace

const char* to_string(SLTag tag) {
  switch (tag) {
    case SLTag::C1: return "C1";
    case SLTag::C2: return "C2";
    case SLTag::C3: return "C3";
    case SLTag::C4: return "C4";
    case SLTag::NotSL: return "NotSL";
  }
  return "NotSL";
}

SLTag parse_tag(const std::string& name) {
  std::string low = name;
  std::transform(low.begin(), low.end(), low.begin(),
                 [](unsigned char ch) { return std::tolower(ch); });
  if (low == "c1") return SLTag::C1;
  if (low == "c2") return SLTag::C2;
  if (low == "c3") return SLTag::C3;
  if (low == "c4") return SLTag::C4;
  if (low == "notsl") return SLTag::NotSL;
  throw DomainError("unknown class tag '" + name + "'");
}

TransferSignature transfer_signature(const KrausChannel& ch, Tolerance tol) {
  if (!is_tp(ch, tol)) throw DomainError("transfer_signature: channel is not TP");
  return signature_of(choi_from_kraus(ch));
}

double sp_residual(const KrausChannel& ch) {
  const ChoiMatrix choi = choi_from_kraus(ch);
  const SubspaceSplit s = choi.source().require_split();
  const ComplexMatrix t1 = transfer_blocks(choi)[0];
  double dev = 0.0;
  for (std::size_t a = 0; a < s.total(); ++a)
    for (std::size_t b = 0; b < s.total(); ++b) {
      const double ideal = a == b && a < s.dim1() ? 1.0 : 0.0;
      dev = std::max(dev, std::abs(t1(a, b) - ideal));
    }
  return dev;
}

bool is_sp(const KrausChannel& ch, Tolerance tol) {
  return sp_residual(ch) <= tol.eps();
}

SLClass classify(const KrausChannel& ch, const ClassifierTolerances& tol) {
  const ChannelShape shape = ch.shape();
  const ChannelReport report = verify_channel(ch, Tolerance(tol.kernel));
  if (!report.tp || !report.cp) {
    throw DomainError("classify: input is not a channel (TP residual " +
                      std::to_string(report.tp_residual) + ")");
  }
  const ChoiMatrix choi = choi_from_kraus(ch);
  SLClass out;
  out.diagnostics.signature = signature_of(choi);

  int matched = -1;
  for (int p = 0; p < 4; ++p) {
    if (out.diagnostics.signature.deviation[p] > tol.signature) continue;
    if (matched >= 0) {
      out.diagnostics.note = "signature matches several classes";
      return out;
    }
    matched = p;
  }
  if (matched < 0) {
    out.diagnostics.note = "transfer signature matches no class";
    return out;
  }

  const double lmax = spectral_radius(choi.matrix());
  const auto tag = static_cast<SLTag>(matched);
  Extraction ex;
  switch (tag) {
    case SLTag::C1:
      ex = extract_lsp(choi, shape, lmax, tol, out.diagnostics);
      break;
    case SLTag::C2:
      ex = extract_swap(choi, shape, lmax, tol, out.diagnostics);
      break;
    case SLTag::C3:
      ex = extract_absorb(ch, shape, AbsorbVariant::C3);
      break;
    default:
      ex = extract_absorb(ch, shape, AbsorbVariant::C4);
      break;
  }
  if (!ex.params) {
    out.diagnostics.note = ex.failure;
    return out;
  }

  SLClass candidate{tag, std::move(*ex.params), out.diagnostics};
  try {
    const KrausChannel rebuilt = rebuild(candidate, shape, Tolerance(tol.signature));
    out.diagnostics.rebuild_distance = channel_distance(rebuilt, ch);
  } catch (const DomainError& e) {
    out.diagnostics.note = std::string("extracted parameters rejected: ") + e.what();
    return out;
  }
  if (out.diagnostics.rebuild_distance > tol.rebuild) {
    out.diagnostics.note = "rebuilt channel differs from the input";
    return out;
  }
  candidate.diagnostics = out.diagnostics;
  return candidate;
}

KrausChannel rebuild(const SLClass& cls, const ChannelShape& shape, Tolerance tol) {
  switch (cls.tag) {
    case SLTag::C1:
      return make_lsp(std::get<LspParams>(cls.params), shape, tol);
    case SLTag::C2:
      return make_c2(std::get<SwapParams>(cls.params), shape, tol);
    case SLTag::C3:
      return make_c3(std::get<AbsorbParams>(cls.params), shape, tol);
    case SLTag::C4:
      return make_c4(std::get<AbsorbParams>(cls.params), shape, tol);
    case SLTag::NotSL:
      break;
  }
  throw DomainError("rebuild: channel is not subspace local");
}

SLTag compose_class(SLTag outer, SLTag inner) {
  if (outer == SLTag::NotSL || inner == SLTag::NotSL) {
    throw DomainError("compose_class: NotSL has no composition rule");
  }
  switch (outer) {
    case SLTag::C1: return inner;
    case SLTag::C3: return SLTag::C3;
    case SLTag::C4: return SLTag::C4;
    default: break;
  }
  switch (inner) {
    case SLTag::C1: return SLTag::C2;
    case SLTag::C2: return SLTag::C1;
    case SLTag::C3: return SLTag::C4;
    default: return SLTag::C3;
  }
}

}  // namespace sublocal
