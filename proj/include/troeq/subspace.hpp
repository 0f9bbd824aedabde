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

#include <cstdint>
#include <utility>
#include <vector>

#include "troeq/hermeig.hpp"
#include "troeq/matrix.hpp"

namespace troeq {

/// Numerical tolerance and the seed for any randomized subroutine.
/// Rank decisions use the relative threshold eps*(1+scale) throughout, so all
/// span computations share a single consistent rank rule.
struct Tolerance {
  double eps = 1e-9;
  std::uint64_t seed = 0;

  double rank_gate(double scale) const { return eps * (1.0 + scale); }
};

struct Containment {
  bool inside = false;
  double residual = 0.0;
};

/// A linear subspace of complex d1 x d2 matrices, carried by an orthonormal
/// basis under the Hilbert-Schmidt inner product.
class MatSubspace {
 public:
  MatSubspace() = default;

  MatSubspace(std::size_t rows, std::size_t cols, Tolerance tol = {})
      : rows_(rows), cols_(cols), tol_(tol) {}

  /// Orthonormal basis of span(mats) by modified Gram-Schmidt with one
  /// re-orthogonalization pass.  Vectors whose residual after projection is
  /// at most eps*(1+||input||) are discarded.
  static MatSubspace span(std::size_t rows, std::size_t cols,
                          const std::vector<CMatrix>& mats,
                          Tolerance tol = {}) {
    MatSubspace s(rows, cols, tol);
    for (const auto& m : mats) s.grow(m);
    return s;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<CMatrix>& basis() const { return basis_; }
  const Tolerance& tol() const { return tol_; }

  void require_ambient(const CMatrix& m) const {
    if (m.rows() != rows_ || m.cols() != cols_)
      throw shape_error("MatSubspace: ambient dimension mismatch");
  }

  void require_ambient(const MatSubspace& o) const {
    if (o.rows_ != rows_ || o.cols_ != cols_)
      throw shape_error("MatSubspace: ambient dimension mismatch");
  }

  /// Adds m to the span if independent; returns true when the dimension grew.
  bool grow(const CMatrix& m) {
    require_ambient(m);
    if (!m.all_finite())
      throw domain_error("MatSubspace: non-finite entries");
    const double gate = tol_.rank_gate(fro_norm(m));
    CMatrix r = project_out(m);
    double nrm = fro_norm(r);
    if (nrm <= gate) return false;
    r *= cdouble{1.0 / nrm, 0.0};
    // one re-orthogonalization pass
    r = project_out(r);
    nrm = fro_norm(r);
    if (nrm <= tol_.rank_gate(1.0)) return false;
    r *= cdouble{1.0 / nrm, 0.0};
    basis_.push_back(std::move(r));
    return true;
  }

  /// Coefficients of the orthogonal projection of m onto the span.
  std::vector<cdouble> coords(const CMatrix& m) const {
    require_ambient(m);
    std::vector<cdouble> c(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i)
      c[i] = hs_inner(m, basis_[i]);
    return c;
  }

  CMatrix from_coords(const std::vector<cdouble>& c) const {
    if (c.size() != basis_.size())
      throw shape_error("MatSubspace: coordinate length mismatch");
    CMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      CMatrix t = basis_[i];
      t *= c[i];
      m += t;
    }
    return m;
  }

  CMatrix project(const CMatrix& m) const { return from_coords(coords(m)); }

  CMatrix project_out(const CMatrix& m) const {
    CMatrix r = m;
    for (const auto& b : basis_) {
      const cdouble c = hs_inner(r, b);
      CMatrix t = b;
      t *= c;
      r -= t;
    }
    return r;
  }

  /// HS-distance from m to the span, and the membership flag at
  /// eps*(1+||m||).
  Containment contains(const CMatrix& m) const {
    require_ambient(m);
    const double res = fro_norm(project_out(m));
    return {res <= tol_.rank_gate(fro_norm(m)), res};
  }

  /// Largest membership residual over the basis of `other`.
  double containment_residual(const MatSubspace& other) const {
    require_ambient(other);
    double worst = 0.0;
    for (const auto& b : other.basis_)
      worst = std::max(worst, contains(b).residual);
    return worst;
  }

  bool contains_space(const MatSubspace& other) const {
    require_ambient(other);
    for (const auto& b : other.basis_)
      if (!contains(b).inside) return false;
    return true;
  }

  /// Mutual containment residual; spaces are equal when it passes the gate.
  double equality_residual(const MatSubspace& other) const {
    return std::max(containment_residual(other),
                    other.containment_residual(*this));
  }

  bool equals_space(const MatSubspace& other) const {
    return contains_space(other) && other.contains_space(*this);
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<CMatrix> basis_;
  Tolerance tol_;
};

inline MatSubspace orthonormal_basis(const std::vector<CMatrix>& mats,
                                     Tolerance tol = {}) {
  if (mats.empty())
    throw shape_error("orthonormal_basis: ambient unknown for empty input");
  return MatSubspace::span(mats.front().rows(), mats.front().cols(), mats,
                           tol);
}

/// Orthonormal basis of span{x y : x in X, y in Y}.
inline MatSubspace product_span(const MatSubspace& x, const MatSubspace& y) {
  if (x.cols() != y.rows())
    throw shape_error("product_span: inner dimension mismatch");
  MatSubspace out(x.rows(), y.cols(), x.tol());
  for (const auto& bx : x.basis())
    for (const auto& by : y.basis()) out.grow(bx * by);
  return out;
}

/// {x* : x in X}.
inline MatSubspace adjoint_space(const MatSubspace& x) {
  MatSubspace out(x.cols(), x.rows(), x.tol());
  for (const auto& b : x.basis()) out.grow(b.adjoint());
  return out;
}

inline MatSubspace sum_span(const MatSubspace& x, const MatSubspace& y) {
  x.require_ambient(y);
  MatSubspace out = x;
  for (const auto& b : y.basis()) out.grow(b);
  return out;
}

/// Intersection of two subspaces: the nullspace of the stacked coefficient
/// matrix [X | -Y] is recovered through the Hermitian eigenproblem of its
/// Gram matrix.
inline MatSubspace intersect_span(const MatSubspace& x, const MatSubspace& y) {
  x.require_ambient(y);
  const std::size_t p = x.dim(), q = y.dim();
  MatSubspace out(x.rows(), x.cols(), x.tol());
  if (p == 0 || q == 0) return out;

  // gram of the columns (x_1..x_p, -y_1..-y_q); bases are orthonormal so the
  // diagonal blocks are identities and the cross block is pairwise inners.
  CMatrix g(p + q, p + q);
  for (std::size_t i = 0; i < p; ++i) g(i, i) = 1.0;
  for (std::size_t j = 0; j < q; ++j) g(p + j, p + j) = 1.0;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < q; ++j) {
      const cdouble v = -hs_inner(y.basis()[j], x.basis()[i]);
      g(i, p + j) = v;
      g(p + j, i) = std::conj(v);
    }
  const HermEig e = herm_eig(g);
  const double gate = x.tol().rank_gate(1.0);
  for (std::size_t k = 0; k < p + q; ++k) {
    if (e.eigenvalues[k] > gate) continue;
    CMatrix m(x.rows(), x.cols());
    for (std::size_t i = 0; i < p; ++i) {
      CMatrix t = x.basis()[i];
      t *= e.u(i, k);
      m += t;
    }
    out.grow(m);
  }
  return out;
}

/// M_k(S) realized inside the kd x kd matrices: spans of E_{ij} (x) b.
inline MatSubspace amplify_span(const MatSubspace& s, std::size_t k) {
  if (k == 0) throw domain_error("amplify: k must be positive");
  MatSubspace out(k * s.rows(), k * s.cols(), s.tol());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const CMatrix e = CMatrix::unit(k, k, i, j);
      for (const auto& b : s.basis()) out.grow(kron(e, b));
    }
  return out;
}

}  // namespace troeq
