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

// Dense complex matrices and the linear-algebra kernel the channel code is
// built on.
//
// Storage is row-major. vec() flattens row-major as well, so for an operator
// X: H_S -> H_T the entry X[t, s] lands at index t * dim(S) + s; Kronecker
// products use the matching (i_a * rows_b + i_b) ordering.

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace sublocal {

using cplx = std::complex<double>;

/// Numerical threshold used by the checks in this library. The meaning of
/// eps (absolute, relative to a norm, relative to the largest eigenvalue) is
/// stated by each function that takes one.
class Tolerance {
 public:
  static constexpr double kDefault = 1e-9;

  constexpr Tolerance() = default;
  explicit Tolerance(double eps);

  double eps() const { return eps_; }

 private:
  double eps_ = kDefault;
};

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  /// Throws ShapeError when data.size() != rows * cols and DomainError when
  /// an entry is NaN or infinite.
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> data);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<cplx>> rows);
  static ComplexMatrix diagonal(std::span<const cplx> diag);
  static ComplexMatrix diagonal(std::span<const double> diag);
  /// Column vector with a single 1 at `index`.
  static ComplexMatrix basis(std::size_t dim, std::size_t index);
  static ComplexMatrix column(std::span<const cplx> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<cplx> data() { return data_; }
  std::span<const cplx> data() const { return data_; }
  std::span<const cplx> row(std::size_t r) const {
    return std::span<const cplx>(data_).subspan(r * cols_, cols_);
  }
  std::vector<cplx> col(std::size_t c) const;

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;

  ComplexMatrix block(std::size_t r0, std::size_t c0, std::size_t nr,
                      std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& b);
  /// Gathers the rows `ri` and columns `ci` into a new matrix.
  ComplexMatrix select(std::span<const std::size_t> ri,
                       std::span<const std::size_t> ci) const;

  cplx trace() const;
  double frobenius_norm() const;
  double max_abs() const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(cplx s);

  /// this += alpha * u v^dagger for column vectors u (rows) and v (cols).
  void add_outer(cplx alpha, std::span<const cplx> u, std::span<const cplx> v);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

/// u^dagger v.
cplx inner(std::span<const cplx> u, std::span<const cplx> v);
double norm(std::span<const cplx> u);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

enum class Factor { A, B };

/// Traces out factor `which` of a (dimA*dimB)-square matrix laid out with the
/// kron convention (index a * dimB + b).
ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a,
                            std::size_t dim_b, Factor which);

std::vector<cplx> vec(const ComplexMatrix& m);
ComplexMatrix unvec(std::span<const cplx> v, std::size_t rows, std::size_t cols);

/// ||m - m^dagger||_F <= eps * max(1, ||m||_F).
bool is_hermitian(const ComplexMatrix& m, Tolerance tol = {});
ComplexMatrix hermitian_part(const ComplexMatrix& m);

struct EigenSystem {
  std::vector<double> values;  // descending
  ComplexMatrix vectors;       // orthonormal columns, same order as values
};

/// Hermitian eigendecomposition of (m + m^dagger)/2. DomainError when m is
/// not Hermitian within `tol` (see is_hermitian).
EigenSystem eigh(const ComplexMatrix& m, Tolerance tol = {});

struct SingularValues {
  std::vector<double> values;  // descending
  ComplexMatrix u;             // m = u diag(values) v^dagger, thin
  ComplexMatrix v;
};

SingularValues svd(const ComplexMatrix& m);
double operator_norm(const ComplexMatrix& m);

/// Hermitian within tol and lambda_min >= -eps * max(1, lambda_max).
/// ShapeError for non-square input.
bool is_psd(const ComplexMatrix& m, Tolerance tol = {});

/// Moore-Penrose pseudoinverse of a Hermitian PSD matrix; eigenvalues at or
/// below eps * lambda_max are treated as zero.
ComplexMatrix pinv(const ComplexMatrix& m, Tolerance tol = {});

/// exp(-i t h) for Hermitian h.
ComplexMatrix expm_hermitian(const ComplexMatrix& h, double t,
                             Tolerance tol = {});

/// Extends a d x r matrix with orthonormal columns to a d x d unitary. The
/// first r columns are copied verbatim; the rest come from Gram-Schmidt over
/// the canonical basis vectors taken in index order.
ComplexMatrix complete_isometry(const ComplexMatrix& cols, Tolerance tol = {});

}  // namespace sublocal
