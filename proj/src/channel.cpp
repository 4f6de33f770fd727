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

#include "sublocal/channel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "sublocal/errors.hpp"

namespace sublocal {

namespace {

std::string dims(std::size_t r, std::size_t c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

ChannelShape shape_of(const Space& s, const Space& t) {
  if (!s.is_split() || !t.is_split()) {
    throw ShapeError("channel spaces carry no subspace split");
  }
  return {*s.split(), *t.split()};
}

std::vector<std::size_t> range(std::size_t lo, std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), lo);
  return v;
}

// Phase making the largest-magnitude entry real positive.
cplx canonical_phase(const ComplexMatrix& m) {
  std::size_t best = 0;
  double best_abs = -1.0;
  const auto d = m.data();
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double a = std::abs(d[i]);
    if (a > best_abs * (1.0 + 1e-12)) {
      best_abs = a;
      best = i;
    }
  }
  if (best_abs <= 0.0) return 1.0;
  return std::conj(d[best]) / best_abs;
}

}  // namespace

KrausChannel::KrausChannel(Space source, Space target,
                           std::vector<ComplexMatrix> kraus)
    : source_(std::move(source)),
      target_(std::move(target)),
      kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw ShapeError("Kraus list is empty");
  for (const auto& k : kraus_) {
    if (k.rows() != target_.dim() || k.cols() != source_.dim()) {
      throw ShapeError("Kraus operator is " + dims(k.rows(), k.cols()) +
                       ", expected " + dims(target_.dim(), source_.dim()));
    }
  }
}

KrausChannel::KrausChannel(const ChannelShape& shape,
                           std::vector<ComplexMatrix> kraus)
    : KrausChannel(Space(shape.source), Space(shape.target), std::move(kraus)) {}

ChannelShape KrausChannel::shape() const { return shape_of(source_, target_); }

ChoiMatrix::ChoiMatrix(Space source, Space target, ComplexMatrix matrix)
    : source_(std::move(source)),
      target_(std::move(target)),
      matrix_(std::move(matrix)) {
  const std::size_t n = source_.dim() * target_.dim();
  if (matrix_.rows() != n || matrix_.cols() != n) {
    throw ShapeError("Choi matrix is " + dims(matrix_.rows(), matrix_.cols()) +
                     ", expected " + dims(n, n));
  }
}

ChannelShape ChoiMatrix::shape() const { return shape_of(source_, target_); }

ComplexMatrix apply(const KrausChannel& ch, const ComplexMatrix& q) {
  const std::size_t ds = ch.source().dim();
  if (q.rows() != ds || q.cols() != ds) {
    throw ShapeError("apply: input is " + dims(q.rows(), q.cols()) +
                     ", channel source dimension " + std::to_string(ds));
  }
  ComplexMatrix out(ch.target().dim(), ch.target().dim());
  for (const auto& v : ch.kraus()) out += v * q * v.adjoint();
  return out;
}

ChoiMatrix choi_from_kraus(const KrausChannel& ch) {
  const std::size_t n = ch.source().dim() * ch.target().dim();
  ComplexMatrix c(n, n);
  for (const auto& v : ch.kraus()) c.add_outer(1.0, v.data(), v.data());
  return ChoiMatrix(ch.source(), ch.target(), std::move(c));
}

KrausChannel kraus_from_choi(const ChoiMatrix& c, Tolerance tol) {
  const EigenSystem es = eigh(c.matrix(), tol);
  const double lmax = es.values.empty() ? 0.0 : es.values.front();
  const double lmin = es.values.empty() ? 0.0 : es.values.back();
  if (lmin < -tol.eps() * std::max(1.0, lmax)) {
    throw DomainError("Choi matrix is not positive semidefinite (min eigenvalue " +
                      std::to_string(lmin) + ")");
  }
  const std::size_t ds = c.source().dim();
  const std::size_t dt = c.target().dim();
  std::vector<ComplexMatrix> kraus;
  for (std::size_t i = 0; i < es.values.size(); ++i) {
    const double lam = es.values[i];
    if (!(lam > kKrausRankCutoff * lmax)) break;
    ComplexMatrix v = unvec(es.vectors.col(i), dt, ds);
    v *= std::sqrt(lam) * canonical_phase(v);
    kraus.push_back(std::move(v));
  }
  if (kraus.empty()) kraus.emplace_back(dt, ds);
  return KrausChannel(c.source(), c.target(), std::move(kraus));
}

KrausChannel canonicalize(const KrausChannel& ch, Tolerance tol) {
  return kraus_from_choi(choi_from_kraus(ch), tol);
}

double tp_residual(const KrausChannel& ch) {
  ComplexMatrix s = ComplexMatrix::identity(ch.source().dim());
  s *= -1.0;
  for (const auto& v : ch.kraus()) s += v.adjoint() * v;
  return s.frobenius_norm();
}

bool is_tp(const KrausChannel& ch, Tolerance tol) {
  return tp_residual(ch) <=
         tol.eps() * std::sqrt(static_cast<double>(ch.source().dim()));
}

bool is_cp(const ChoiMatrix& c, Tolerance tol) { return is_psd(c.matrix(), tol); }

ChannelReport verify_channel(const KrausChannel& ch, Tolerance tol) {
  ChannelReport r;
  r.tp_residual = tp_residual(ch);
  r.tp = r.tp_residual <=
         tol.eps() * std::sqrt(static_cast<double>(ch.source().dim()));
  const ChoiMatrix c = choi_from_kraus(ch);
  const EigenSystem es = eigh(c.matrix(), tol);
  r.max_eigenvalue = es.values.front();
  r.min_eigenvalue = es.values.back();
  r.cp = is_hermitian(c.matrix(), tol) &&
         r.min_eigenvalue >= -tol.eps() * std::max(1.0, r.max_eigenvalue);
  return r;
}

KrausChannel compose(const KrausChannel& b, const KrausChannel& a,
                     bool canonical) {
  if (a.target().dim() != b.source().dim()) {
    throw ShapeError("compose: inner target dimension " +
                     std::to_string(a.target().dim()) +
                     " != outer source dimension " +
                     std::to_string(b.source().dim()));
  }
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(a.count() * b.count());
  for (const auto& bj : b.kraus())
    for (const auto& ai : a.kraus()) kraus.push_back(bj * ai);
  KrausChannel out(a.source(), b.target(), std::move(kraus));
  return canonical ? canonicalize(out) : out;
}

KrausChannel tensor(const KrausChannel& a, const KrausChannel& b) {
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(a.count() * b.count());
  for (const auto& ai : a.kraus())
    for (const auto& bj : b.kraus()) kraus.push_back(kron(ai, bj));
  return KrausChannel(Space(a.source().dim() * b.source().dim()),
                      Space(a.target().dim() * b.target().dim()),
                      std::move(kraus));
}

KrausChannel restrict_source(const KrausChannel& ch, int which) {
  const SubspaceSplit& s = ch.source().require_split();
  const auto cols = range(s.offset(which), s.dim(which));
  const auto rows = range(0, ch.target().dim());
  std::vector<ComplexMatrix> kraus;
  for (const auto& v : ch.kraus()) kraus.push_back(v.select(rows, cols));
  return KrausChannel(Space(s.dim(which)), ch.target(), std::move(kraus));
}

KrausChannel restrict_target(const KrausChannel& ch, int which) {
  const SubspaceSplit& t = ch.target().require_split();
  const auto rows = range(t.offset(which), t.dim(which));
  const auto cols = range(0, ch.source().dim());
  std::vector<ComplexMatrix> kraus;
  for (const auto& v : ch.kraus()) kraus.push_back(v.select(rows, cols));
  return KrausChannel(ch.source(), Space(t.dim(which)), std::move(kraus));
}

KrausChannel embed(const KrausChannel& ch, const SubspaceSplit& source,
                   int source_which, const SubspaceSplit& target,
                   int target_which) {
  if (ch.source().dim() != source.dim(source_which) ||
      ch.target().dim() != target.dim(target_which)) {
    throw ShapeError("embed: channel is " +
                     dims(ch.target().dim(), ch.source().dim()) +
                     ", subspaces are " +
                     dims(target.dim(target_which), source.dim(source_which)));
  }
  std::vector<ComplexMatrix> kraus;
  for (const auto& v : ch.kraus()) {
    ComplexMatrix k(target.total(), source.total());
    k.set_block(target.offset(target_which), source.offset(source_which), v);
    kraus.push_back(std::move(k));
  }
  return KrausChannel(Space(source), Space(target), std::move(kraus));
}

KrausChannel identity_channel(const Space& space) {
  return KrausChannel(space, space, {ComplexMatrix::identity(space.dim())});
}

KrausChannel unitary_channel(const Space& space, const ComplexMatrix& u) {
  return KrausChannel(space, space, {u});
}

KrausChannel random_channel(const Space& source, const Space& target,
                            std::size_t kraus_count, Rng& rng) {
  const std::size_t ds = source.dim();
  const std::size_t dt = target.dim();
  if (kraus_count < 1 || dt * kraus_count < ds) {
    throw DomainError("random_channel: " + std::to_string(kraus_count) +
                      " Kraus operators of size " + dims(dt, ds) +
                      " cannot form a channel");
  }
  const ComplexMatrix iso = random_isometry(dt * kraus_count, ds, rng);
  std::vector<ComplexMatrix> kraus;
  for (std::size_t j = 0; j < kraus_count; ++j)
    kraus.push_back(iso.block(j * dt, 0, dt, ds));
  return KrausChannel(source, target, std::move(kraus));
}

KrausChannel random_channel(const ChannelShape& shape, std::size_t kraus_count,
                            Seed seed) {
  Rng rng(seed);
  return random_channel(Space(shape.source), Space(shape.target), kraus_count,
                        rng);
}

double choi_distance(const ChoiMatrix& a, const ChoiMatrix& b) {
  if (a.source().dim() != b.source().dim() ||
      a.target().dim() != b.target().dim()) {
    throw ShapeError("channel_distance: channels act between different spaces");
  }
  return (a.matrix() - b.matrix()).frobenius_norm();
}

double channel_distance(const KrausChannel& a, const KrausChannel& b) {
  return choi_distance(choi_from_kraus(a), choi_from_kraus(b));
}

}  // namespace sublocal
