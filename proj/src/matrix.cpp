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

#include "sublocal/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sublocal/errors.hpp"
#include "sublocal/kernels.hpp"

namespace sublocal {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b,
                        const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError(std::string(what) + ": " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " vs " +
                     std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
}

}  // namespace

Tolerance::Tolerance(double eps) : eps_(eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw DomainError("tolerance must be a positive finite number");
  }
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<cplx> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) {
    throw ShapeError("matrix data has " + std::to_string(data_.size()) +
                     " entries, expected " + std::to_string(rows * cols));
  }
  for (const cplx& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw DomainError("matrix entries must be finite");
    }
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::zeros(std::size_t rows, std::size_t cols) {
  return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<cplx>> rows) {
  const std::size_t nr = rows.size();
  const std::size_t nc = nr ? rows.begin()->size() : 0;
  std::vector<cplx> data;
  data.reserve(nr * nc);
  for (const auto& r : rows) {
    if (r.size() != nc) throw ShapeError("from_rows: ragged rows");
    data.insert(data.end(), r.begin(), r.end());
  }
  return ComplexMatrix(nr, nc, std::move(data));
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

ComplexMatrix ComplexMatrix::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw ShapeError("basis: index out of range");
  ComplexMatrix m(dim, 1);
  m(index, 0) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::column(std::span<const cplx> entries) {
  return ComplexMatrix(entries.size(), 1,
                       std::vector<cplx>(entries.begin(), entries.end()));
}

std::vector<cplx> ComplexMatrix::col(std::size_t c) const {
  std::vector<cplx> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out = *this;
  for (cplx& z : out.data_) z = std::conj(z);
  return out;
}

ComplexMatrix ComplexMatrix::block(std::size_t r0, std::size_t c0,
                                   std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) {
    throw ShapeError("block: window exceeds matrix");
  }
  ComplexMatrix out(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>((r0 + r) * cols_ + c0),
                nc, out.data_.begin() + static_cast<std::ptrdiff_t>(r * nc));
  return out;
}

void ComplexMatrix::set_block(std::size_t r0, std::size_t c0,
                              const ComplexMatrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) {
    throw ShapeError("set_block: window exceeds matrix");
  }
  for (std::size_t r = 0; r < b.rows_; ++r)
    std::copy_n(b.data_.begin() + static_cast<std::ptrdiff_t>(r * b.cols_),
                b.cols_,
                data_.begin() + static_cast<std::ptrdiff_t>((r0 + r) * cols_ + c0));
}

ComplexMatrix ComplexMatrix::select(std::span<const std::size_t> ri,
                                    std::span<const std::size_t> ci) const {
  ComplexMatrix out(ri.size(), ci.size());
  for (std::size_t r = 0; r < ri.size(); ++r) {
    if (ri[r] >= rows_) throw ShapeError("select: row index out of range");
    for (std::size_t c = 0; c < ci.size(); ++c) {
      if (ci[c] >= cols_) throw ShapeError("select: column index out of range");
      out(r, c) = (*this)(ri[r], ci[c]);
    }
  }
  return out;
}

cplx ComplexMatrix::trace() const {
  if (!is_square()) throw ShapeError("trace: matrix is not square");
  cplx t{};
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const { return norm(data_); }

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const cplx& z : data_) m = std::max(m, std::abs(z));
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  require_same_shape(*this, o, "operator+=");
  kernels::active_kernels().axpy(data_.size(), 1.0, o.data_.data(), data_.data());
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  require_same_shape(*this, o, "operator-=");
  kernels::active_kernels().axpy(data_.size(), -1.0, o.data_.data(), data_.data());
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
  for (cplx& z : data_) z *= s;
  return *this;
}

void ComplexMatrix::add_outer(cplx alpha, std::span<const cplx> u,
                              std::span<const cplx> v) {
  if (u.size() != rows_ || v.size() != cols_) {
    throw ShapeError("add_outer: vector lengths do not match matrix");
  }
  std::vector<cplx> vconj(v.size());
  std::transform(v.begin(), v.end(), vconj.begin(),
                 [](cplx z) { return std::conj(z); });
  const auto& k = kernels::active_kernels();
  for (std::size_t r = 0; r < rows_; ++r) {
    const cplx coeff = alpha * u[r];
    if (coeff == cplx{}) continue;
    k.axpy(cols_, coeff, vconj.data(), data_.data() + r * cols_);
  }
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
  a += b;
  return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
  a -= b;
  return a;
}

ComplexMatrix operator*(cplx s, ComplexMatrix a) {
  a *= s;
  return a;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("matrix product: " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " times " +
                     std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  ComplexMatrix c(a.rows(), b.cols());
  kernels::active_kernels().gemm(a.rows(), b.cols(), a.cols(), a.data().data(),
                                 b.data().data(), c.data().data());
  return c;
}

cplx inner(std::span<const cplx> u, std::span<const cplx> v) {
  if (u.size() != v.size()) throw ShapeError("inner: length mismatch");
  return kernels::active_kernels().dotc(u.size(), u.data(), v.data());
}

double norm(std::span<const cplx> u) {
  return std::sqrt(kernels::active_kernels().dotc(u.size(), u.data(), u.data()).real());
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t br = b.rows(), bc = b.cols();
  ComplexMatrix out(a.rows() * br, a.cols() * bc);
  const auto& k = kernels::active_kernels();
  const std::size_t out_cols = out.cols();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx{}) continue;
      for (std::size_t p = 0; p < br; ++p) {
        cplx* dst = out.data().data() + (i * br + p) * out_cols + j * bc;
        k.axpy(bc, aij, b.data().data() + p * bc, dst);
      }
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a,
                            std::size_t dim_b, Factor which) {
  const std::size_t d = dim_a * dim_b;
  if (m.rows() != d || m.cols() != d) {
    throw ShapeError("partial_trace: matrix is " + std::to_string(m.rows()) +
                     "x" + std::to_string(m.cols()) + ", expected " +
                     std::to_string(d) + " square");
  }
  if (which == Factor::B) {
    ComplexMatrix out(dim_a, dim_a);
    for (std::size_t a = 0; a < dim_a; ++a)
      for (std::size_t a2 = 0; a2 < dim_a; ++a2) {
        cplx s{};
        for (std::size_t b = 0; b < dim_b; ++b) s += m(a * dim_b + b, a2 * dim_b + b);
        out(a, a2) = s;
      }
    return out;
  }
  ComplexMatrix out(dim_b, dim_b);
  for (std::size_t b = 0; b < dim_b; ++b)
    for (std::size_t b2 = 0; b2 < dim_b; ++b2) {
      cplx s{};
      for (std::size_t a = 0; a < dim_a; ++a) s += m(a * dim_b + b, a * dim_b + b2);
      out(b, b2) = s;
    }
  return out;
}

std::vector<cplx> vec(const ComplexMatrix& m) {
  return {m.data().begin(), m.data().end()};
}

ComplexMatrix unvec(std::span<const cplx> v, std::size_t rows,
                    std::size_t cols) {
  if (v.size() != rows * cols) {
    throw ShapeError("unvec: length " + std::to_string(v.size()) +
                     " does not match " + std::to_string(rows) + "x" +
                     std::to_string(cols));
  }
  return ComplexMatrix(rows, cols, std::vector<cplx>(v.begin(), v.end()));
}

bool is_hermitian(const ComplexMatrix& m, Tolerance tol) {
  if (!m.is_square()) return false;
  const double dev = (m - m.adjoint()).frobenius_norm();
  return dev <= tol.eps() * std::max(1.0, m.frobenius_norm());
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
  ComplexMatrix h = m + m.adjoint();
  h *= 0.5;
  return h;
}

}  // namespace sublocal
