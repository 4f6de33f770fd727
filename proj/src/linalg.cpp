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

// Hermitian eigensolver and SVD are delegated to Eigen; everything else in
// this file is expressed through them.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "sublocal/errors.hpp"
#include "sublocal/matrix.hpp"

namespace sublocal {

namespace {

using EigenMat = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

EigenMat to_eigen(const ComplexMatrix& m) {
  EigenMat e(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  std::copy(m.data().begin(), m.data().end(), e.data());
  return e;
}

ComplexMatrix from_eigen(const EigenMat& e) {
  ComplexMatrix m(static_cast<std::size_t>(e.rows()), static_cast<std::size_t>(e.cols()));
  std::copy(e.data(), e.data() + e.size(), m.data().begin());
  return m;
}

}  // namespace

EigenSystem eigh(const ComplexMatrix& m, Tolerance tol) {
  if (!m.is_square()) throw ShapeError("eigh: matrix is not square");
  if (!is_hermitian(m, tol)) throw DomainError("eigh: matrix is not Hermitian");
  const std::size_t n = m.rows();
  EigenSystem out;
  if (n == 0) return out;

  Eigen::SelfAdjointEigenSolver<EigenMat> solver(to_eigen(hermitian_part(m)));
  if (solver.info() != Eigen::Success) {
    throw InternalError("eigh: eigensolver did not converge");
  }
  // Eigen returns ascending order.
  const auto& vals = solver.eigenvalues();
  const auto& vecs = solver.eigenvectors();
  out.values.resize(n);
  out.vectors = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto src = static_cast<Eigen::Index>(n - 1 - j);
    out.values[j] = vals(src);
    for (std::size_t i = 0; i < n; ++i) {
      out.vectors(i, j) = vecs(static_cast<Eigen::Index>(i), src);
    }
  }
  return out;
}

SingularValues svd(const ComplexMatrix& m) {
  SingularValues out;
  if (m.empty()) return out;
  Eigen::JacobiSVD<EigenMat> solver(to_eigen(m),
                                    Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = solver.singularValues();
  out.values.assign(s.data(), s.data() + s.size());
  out.u = from_eigen(solver.matrixU());
  out.v = from_eigen(solver.matrixV());
  return out;
}

double operator_norm(const ComplexMatrix& m) {
  if (m.empty()) return 0.0;
  return svd(m).values.front();
}

bool is_psd(const ComplexMatrix& m, Tolerance tol) {
  if (!m.is_square()) throw ShapeError("is_psd: matrix is not square");
  if (!is_hermitian(m, tol)) return false;
  if (m.rows() == 0) return true;
  const EigenSystem es = eigh(m, tol);
  return es.values.back() >= -tol.eps() * std::max(1.0, es.values.front());
}

ComplexMatrix pinv(const ComplexMatrix& m, Tolerance tol) {
  const EigenSystem es = eigh(m, tol);
  const std::size_t n = m.rows();
  ComplexMatrix out(n, n);
  if (n == 0 || es.values.front() <= 0.0) return out;
  const double cutoff = tol.eps() * es.values.front();
  for (std::size_t j = 0; j < n; ++j) {
    if (es.values[j] <= cutoff) break;
    const std::vector<cplx> u = es.vectors.col(j);
    out.add_outer(1.0 / es.values[j], u, u);
  }
  return out;
}

ComplexMatrix expm_hermitian(const ComplexMatrix& h, double t, Tolerance tol) {
  const EigenSystem es = eigh(h, tol);
  const std::size_t n = h.rows();
  // U diag(exp(-i t lambda)) U^dagger
  ComplexMatrix scaled = es.vectors;
  for (std::size_t j = 0; j < n; ++j) {
    const cplx phase = std::polar(1.0, -t * es.values[j]);
    for (std::size_t i = 0; i < n; ++i) scaled(i, j) *= phase;
  }
  return scaled * es.vectors.adjoint();
}

ComplexMatrix complete_isometry(const ComplexMatrix& cols, Tolerance tol) {
  const std::size_t d = cols.rows();
  const std::size_t r = cols.cols();
  if (r > d) throw DomainError("complete_isometry: more columns than rows");
  const ComplexMatrix gram = cols.adjoint() * cols;
  const double dev = (gram - ComplexMatrix::identity(r)).frobenius_norm();
  if (dev > tol.eps() * std::max(1.0, std::sqrt(static_cast<double>(r)))) {
    throw DomainError("complete_isometry: columns are not orthonormal (deviation " +
                      std::to_string(dev) + ")");
  }
  if (r == d) return cols;

  // Accepting e_j only when its residual is at least 1/(2 sqrt d) still
  // always yields d - r vectors: the residuals of all e_j against the final
  // span sum (squared) to d - k.
  const double accept = 0.5 / std::sqrt(static_cast<double>(d));
  std::vector<std::vector<cplx>> basis;
  basis.reserve(d);
  for (std::size_t j = 0; j < r; ++j) basis.push_back(cols.col(j));

  for (std::size_t j = 0; j < d && basis.size() < d; ++j) {
    std::vector<cplx> v(d);
    v[j] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : basis) {
        const cplx c = inner(q, v);
        for (std::size_t i = 0; i < d; ++i) v[i] -= c * q[i];
      }
    }
    const double nv = norm(v);
    if (nv < accept) continue;
    for (cplx& z : v) z /= nv;
    basis.push_back(std::move(v));
  }
  if (basis.size() != d) {
    throw InternalError("complete_isometry: Gram-Schmidt ran out of candidates");
  }

  ComplexMatrix full(d, d);
  full.set_block(0, 0, cols);
  for (std::size_t j = r; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) full(i, j) = basis[j][i];
  return full;
}

}  // namespace sublocal
