// Copyright 2026 The troeq authors
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

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "troeq/errors.hpp"

namespace troeq {

using cdouble = std::complex<double>;

/// Dense complex matrix, row-major, double precision.
class CMatrix {
 public:
  CMatrix() : rows_(0), cols_(0) {}

  CMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, cdouble{0.0, 0.0}) {}

  CMatrix(std::size_t rows, std::size_t cols, std::vector<cdouble> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
      throw shape_error("CMatrix: entry count does not match rows*cols");
  }

  static CMatrix identity(std::size_t n) {
    CMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static CMatrix zero(std::size_t rows, std::size_t cols) {
    return CMatrix(rows, cols);
  }

  /// Matrix unit E_{i,j}.
  static CMatrix unit(std::size_t rows, std::size_t cols, std::size_t i,
                      std::size_t j) {
    CMatrix m(rows, cols);
    m(i, j) = 1.0;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  cdouble& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const cdouble& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  const std::vector<cdouble>& data() const { return data_; }
  std::vector<cdouble>& data() { return data_; }

  bool all_finite() const {
    for (const auto& z : data_)
      if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
  }

  CMatrix& operator+=(const CMatrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }

  CMatrix& operator-=(const CMatrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }

  CMatrix& operator*=(cdouble c) {
    for (auto& z : data_) z *= c;
    return *this;
  }

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(cdouble c, CMatrix a) { return a *= c; }
  friend CMatrix operator*(CMatrix a, cdouble c) { return a *= c; }

  friend CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    if (a.cols_ != b.rows_)
      throw shape_error("CMatrix: product dimension mismatch");
    CMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const cdouble aik = a(i, k);
        if (aik == cdouble{0.0, 0.0}) continue;
        const cdouble* brow = &b.data_[k * b.cols_];
        cdouble* crow = &c.data_[i * b.cols_];
        for (std::size_t j = 0; j < b.cols_; ++j) crow[j] += aik * brow[j];
      }
    }
    return c;
  }

  /// Conjugate transpose.
  CMatrix adjoint() const {
    CMatrix m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        m(j, i) = std::conj((*this)(i, j));
    return m;
  }

  cdouble trace() const {
    if (!square()) throw shape_error("CMatrix: trace of non-square matrix");
    cdouble t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  void require_same_shape(const CMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw shape_error("CMatrix: shape mismatch");
  }

 private:
  std::size_t rows_, cols_;
  std::vector<cdouble> data_;
};

/// Hilbert-Schmidt inner product <a,b> = trace(b* a), linear in the first
/// argument.
inline cdouble hs_inner(const CMatrix& a, const CMatrix& b) {
  a.require_same_shape(b);
  cdouble s = 0.0;
  const auto& da = a.data();
  const auto& db = b.data();
  for (std::size_t k = 0; k < da.size(); ++k) s += da[k] * std::conj(db[k]);
  return s;
}

inline double fro_norm(const CMatrix& a) {
  double s = 0.0;
  for (const auto& z : a.data()) s += std::norm(z);
  return std::sqrt(s);
}

inline double max_abs(const CMatrix& a) {
  double m = 0.0;
  for (const auto& z : a.data()) m = std::max(m, std::abs(z));
  return m;
}

inline double herm_defect(const CMatrix& a) {
  if (!a.square()) return 1.0 + fro_norm(a);
  return fro_norm(a - a.adjoint());
}

/// Kronecker product a (x) b.
inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const cdouble aij = a(i, j);
      if (aij == cdouble{0.0, 0.0}) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return c;
}

/// Unitarity defect max(||u*u - I||, ||u u* - I||) in Frobenius norm.
inline double unitary_defect(const CMatrix& u) {
  const CMatrix ua = u.adjoint();
  return std::max(fro_norm(ua * u - CMatrix::identity(u.cols())),
                  fro_norm(u * ua - CMatrix::identity(u.rows())));
}

}  // namespace troeq
