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

#include <utility>
#include <vector>

#include "troeq/subspace.hpp"

namespace troeq {

/// Unital adjoint-closed matrix subspace of M_d.
class OperatorSystem {
 public:
  OperatorSystem() = default;

  /// Wraps a subspace after checking unitality and adjoint closure.
  explicit OperatorSystem(MatSubspace space) : space_(std::move(space)) {
    if (space_.rows() != space_.cols())
      throw shape_error("OperatorSystem: ambient must be square");
    if (!space_.contains(CMatrix::identity(space_.rows())).inside)
      throw domain_error("OperatorSystem: identity not in the space");
    for (const auto& b : space_.basis())
      if (!space_.contains(b.adjoint()).inside)
        throw domain_error("OperatorSystem: space not adjoint-closed");
  }

  /// The operator system generated by arbitrary matrices: adds the identity
  /// and closes under adjoints.
  static OperatorSystem hull(std::size_t d, const std::vector<CMatrix>& mats,
                             Tolerance tol = {}) {
    MatSubspace s(d, d, tol);
    s.grow(CMatrix::identity(d));
    for (const auto& m : mats) {
      s.grow(m);
      s.grow(m.adjoint());
    }
    return OperatorSystem(std::move(s));
  }

  const MatSubspace& space() const { return space_; }
  std::size_t ambient_dim() const { return space_.rows(); }
  std::size_t dim() const { return space_.dim(); }
  const Tolerance& tol() const { return space_.tol(); }

  /// Basis of the real space of Hermitian elements (same complex dimension).
  std::vector<CMatrix> hermitian_basis() const {
    MatSubspace h(space_.rows(), space_.cols(), space_.tol());
    std::vector<CMatrix> out;
    auto add = [&](CMatrix m) {
      if (h.grow(m)) out.push_back(std::move(m));
    };
    for (const auto& b : space_.basis()) {
      add((b + b.adjoint()) * cdouble{0.5, 0.0});
      add((b - b.adjoint()) * cdouble{0.0, -0.5});
    }
    return out;
  }

 private:
  MatSubspace space_;
};

/// M_k(S).
inline OperatorSystem amplify(const OperatorSystem& s, std::size_t k) {
  return OperatorSystem(amplify_span(s.space(), k));
}

/// Matrix *-algebra presented by a subspace basis.
class StarAlgebra {
 public:
  StarAlgebra() = default;

  explicit StarAlgebra(MatSubspace space, bool check = true)
      : space_(std::move(space)) {
    if (space_.rows() != space_.cols())
      throw shape_error("StarAlgebra: ambient must be square");
    unital_ = space_.contains(CMatrix::identity(space_.rows())).inside;
    if (check) {
      for (const auto& b : space_.basis())
        if (!space_.contains(b.adjoint()).inside)
          throw domain_error("StarAlgebra: space not adjoint-closed");
      if (!space_.contains_space(product_span(space_, space_)))
        throw domain_error("StarAlgebra: space not closed under products");
    }
  }

  const MatSubspace& space() const { return space_; }
  std::size_t ambient_dim() const { return space_.rows(); }
  std::size_t dim() const { return space_.dim(); }
  bool unital() const { return unital_; }
  const Tolerance& tol() const { return space_.tol(); }

 private:
  MatSubspace space_;
  bool unital_ = false;
};

}  // namespace troeq
