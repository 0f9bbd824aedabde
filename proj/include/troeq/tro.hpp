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

#include <string>
#include <utility>
#include <vector>

#include "troeq/cstar.hpp"
#include "troeq/report.hpp"
#include "troeq/systems.hpp"

namespace troeq {

/// Span of {a x b : a in A, x in X, b in B}.
inline MatSubspace conj_span(const MatSubspace& a, const MatSubspace& x,
                             const MatSubspace& b) {
  return product_span(product_span(a, x), b);
}

/// Ternary ring of operators: a matrix subspace with M M* M inside M.
class TRO {
 public:
  TRO() = default;

  explicit TRO(MatSubspace space, bool check = true)
      : space_(std::move(space)) {
    if (check) {
      const MatSubspace triple =
          conj_span(space_, adjoint_space(space_), space_);
      if (!space_.contains_space(triple))
        throw domain_error("TRO: not closed under the triple product");
    }
  }

  const MatSubspace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }
  const Tolerance& tol() const { return space_.tol(); }

  /// [M* M], the right-side linked algebra.
  MatSubspace right_algebra() const {
    return product_span(adjoint_space(space_), space_);
  }

  /// [M M*], the left-side linked algebra.
  MatSubspace left_algebra() const {
    return product_span(space_, adjoint_space(space_));
  }

  TRO adjoint() const { return TRO(adjoint_space(space_), false); }

 private:
  MatSubspace space_;
};

struct TroReport {
  VerificationReport report;
  MatSubspace right_algebra;  // [M* M]
  MatSubspace left_algebra;   // [M M*]
};

/// Checks the triple-product closure and the nondegeneracy flags
/// I in [M* M], I in [M M*]; reports both linked algebras.
inline TroReport verify_tro(const MatSubspace& m) {
  TroReport out;
  const MatSubspace madj = adjoint_space(m);
  const MatSubspace triple = conj_span(m, madj, m);
  const double gate = m.tol().rank_gate(1.0);
  out.report.add_residual("tro_closure", m.containment_residual(triple), gate,
                          "M M* M escapes the span of M");
  out.right_algebra = product_span(madj, m);
  out.left_algebra = product_span(m, madj);
  out.report.add_residual(
      "nondegenerate_right",
      out.right_algebra.contains(CMatrix::identity(m.cols())).residual, gate,
      "identity not in [M* M]");
  out.report.add_residual(
      "nondegenerate_left",
      out.left_algebra.contains(CMatrix::identity(m.rows())).residual, gate,
      "identity not in [M M*]");
  return out;
}

/// Full TRO-equivalence check: nondegeneracy, the inclusions
/// M* T M in S and M S M* in T, and the span equalities.
inline VerificationReport verify_tro_equivalence(const OperatorSystem& s,
                                                 const OperatorSystem& t,
                                                 const TRO& m) {
  const MatSubspace& ms = m.space();
  if (ms.cols() != s.ambient_dim() || ms.rows() != t.ambient_dim())
    throw shape_error("verify_tro_equivalence: TRO shape mismatch");
  VerificationReport rep = verify_tro(ms).report;
  const double gate = ms.tol().rank_gate(1.0);
  const MatSubspace madj = adjoint_space(ms);

  const MatSubspace mtm = conj_span(madj, t.space(), ms);
  const MatSubspace msm = conj_span(ms, s.space(), madj);
  rep.add_residual("inclusion_mtm", s.space().containment_residual(mtm), gate,
                   "M* T M escapes S");
  rep.add_residual("inclusion_msm", t.space().containment_residual(msm), gate,
                   "M S M* escapes T");
  rep.add_residual("equality_mtm", s.space().equality_residual(mtm), gate,
                   "[M* T M] differs from S");
  rep.add_residual("equality_msm", t.space().equality_residual(msm), gate,
                   "[M S M*] differs from T");
  return rep;
}

/// Promotes a nondegenerate operator space X with X* T X in S and
/// X S X* in T to the TRO M = [X C*(X* X)]; the result implements a
/// TRO-equivalence between S and T.
inline TRO promote_bihom(const MatSubspace& x, const OperatorSystem& s,
                         const OperatorSystem& t) {
  if (x.cols() != s.ambient_dim() || x.rows() != t.ambient_dim())
    throw shape_error("promote_bihom: carrier shape mismatch");
  const MatSubspace xadj = adjoint_space(x);
  const MatSubspace xx = product_span(xadj, x);
  const MatSubspace xxa = product_span(x, xadj);
  if (!xx.contains(CMatrix::identity(x.cols())).inside)
    throw precondition_error("promote_bihom: identity not in [X* X]");
  if (!xxa.contains(CMatrix::identity(x.rows())).inside)
    throw precondition_error("promote_bihom: identity not in [X X*]");
  if (!s.space().contains_space(conj_span(xadj, t.space(), x)))
    throw precondition_error("promote_bihom: X* T X escapes S");
  if (!t.space().contains_space(conj_span(x, s.space(), xadj)))
    throw precondition_error("promote_bihom: X S X* escapes T");

  const StarAlgebra a = generated_algebra(OperatorSystem(xx));
  return TRO(product_span(x, a.space()));
}

enum class QuasiUnitSide { Left, Right };

/// A finite family m_i in M with sum m_i m_i* = I (left) or
/// sum m_i* m_i = I (right); built as G^{-1/2}-corrections of a basis.
inline std::vector<CMatrix> quasi_unit(const TRO& m, QuasiUnitSide side) {
  const auto& basis = m.space().basis();
  if (basis.empty()) throw domain_error("quasi_unit: zero TRO");
  const std::size_t n =
      side == QuasiUnitSide::Left ? m.space().rows() : m.space().cols();
  CMatrix g(n, n);
  for (const auto& u : basis)
    g += side == QuasiUnitSide::Left ? u * u.adjoint() : u.adjoint() * u;
  const double floor = m.tol().eps * (1.0 + fro_norm(g));
  const HermEig eg = herm_eig(g);
  if (eg.eigenvalues.front() <= floor)
    throw domain_error("quasi_unit: side algebra is not unital");
  const CMatrix root = psd_inv_sqrt(g, floor);
  std::vector<CMatrix> out;
  out.reserve(basis.size());
  for (const auto& u : basis)
    out.push_back(side == QuasiUnitSide::Left ? root * u : u * root);
  return out;
}

/// Kraus family A_i of a unital completely positive map.
struct KrausFamily {
  std::vector<CMatrix> ops;

  void require_uniform_shape() const {
    if (ops.empty()) throw shape_error("KrausFamily: empty");
    for (const auto& a : ops)
      if (a.rows() != ops.front().rows() || a.cols() != ops.front().cols())
        throw shape_error("KrausFamily: mixed shapes");
  }
};

/// Checks sum A_i* A_i = I and A_i* T A_j in S for all i, j.
inline VerificationReport verify_cohomomorphism(const KrausFamily& k,
                                                const OperatorSystem& t,
                                                const OperatorSystem& s) {
  k.require_uniform_shape();
  const CMatrix& a0 = k.ops.front();
  if (a0.rows() != t.ambient_dim() || a0.cols() != s.ambient_dim())
    throw shape_error("verify_cohomomorphism: operator shape mismatch");
  VerificationReport rep;
  CMatrix sum(s.ambient_dim(), s.ambient_dim());
  for (const auto& a : k.ops) sum += a.adjoint() * a;
  const double gate = s.tol().rank_gate(1.0);
  rep.add_residual("kraus_unital",
                   fro_norm(sum - CMatrix::identity(s.ambient_dim())), gate,
                   "sum A_i* A_i differs from the identity");
  double worst = 0.0;
  std::string where;
  for (std::size_t i = 0; i < k.ops.size(); ++i)
    for (std::size_t j = 0; j < k.ops.size(); ++j)
      for (const auto& tb : t.space().basis()) {
        const double r =
            s.space().contains(k.ops[i].adjoint() * tb * k.ops[j]).residual;
        if (r > worst) {
          worst = r;
          where = "A_" + std::to_string(i) + "* T A_" + std::to_string(j) +
                  " escapes S";
        }
      }
  rep.add_residual("kraus_bimodule", worst, gate, where);
  return rep;
}

/// Finite families A_i, B_i in X with sum A_i* B_i = I and invertible B*B,
/// certifying the existence of a cohomomorphism T -> S.
struct KrausWitness {
  std::vector<CMatrix> a;
  std::vector<CMatrix> b;
  double identity_residual = 0.0;
  double lambda_min_bb = 0.0;  // invertibility certificate
};

inline KrausWitness kraus_witness_from_space(const MatSubspace& x,
                                             const OperatorSystem& t,
                                             const OperatorSystem& s) {
  if (x.cols() != s.ambient_dim() || x.rows() != t.ambient_dim())
    throw shape_error("kraus_witness_from_space: carrier shape mismatch");
  const MatSubspace xadj = adjoint_space(x);
  const MatSubspace xx = product_span(xadj, x);
  if (!xx.contains(CMatrix::identity(x.cols())).inside)
    throw precondition_error(
        "kraus_witness_from_space: identity not in [X* X]");
  if (!s.space().contains_space(conj_span(xadj, t.space(), x)))
    throw precondition_error("kraus_witness_from_space: X* T X escapes S");

  // minimal-norm coefficients c with sum_ij c_ij x_i* x_j = I
  const std::size_t p = x.dim();
  const std::size_t r = x.cols();
  std::vector<CMatrix> prods(p * p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j)
      prods[i * p + j] = x.basis()[i].adjoint() * x.basis()[j];
  CMatrix g(p * p, p * p);
  CMatrix rhs(p * p, 1);
  const CMatrix id = CMatrix::identity(r);
  for (std::size_t u = 0; u < p * p; ++u) {
    rhs(u, 0) = hs_inner(id, prods[u]);
    for (std::size_t v = 0; v < p * p; ++v) g(u, v) = hs_inner(prods[v], prods[u]);
  }
  const CMatrix pinv = [&] {
    const HermEig e = herm_eig(g);
    const double floor = x.tol().eps * (1.0 + e.eigenvalues.back());
    CMatrix d(p * p, p * p);
    for (std::size_t i = 0; i < p * p; ++i)
      d(i, i) = e.eigenvalues[i] > floor ? 1.0 / e.eigenvalues[i] : 0.0;
    return e.u * d * e.u.adjoint();
  }();
  const CMatrix c = pinv * rhs;

  KrausWitness w;
  CMatrix check(r, r);
  for (std::size_t i = 0; i < p; ++i) {
    w.a.push_back(x.basis()[i]);
    CMatrix bi(x.rows(), x.cols());
    for (std::size_t j = 0; j < p; ++j) {
      CMatrix tmp = x.basis()[j];
      tmp *= c(i * p + j, 0);
      bi += tmp;
    }
    check += x.basis()[i].adjoint() * bi;
    w.b.push_back(std::move(bi));
  }
  w.identity_residual = fro_norm(check - id);
  CMatrix bb(r, r);
  for (const auto& bi : w.b) bb += bi.adjoint() * bi;
  w.lambda_min_bb = lambda_min(bb);
  return w;
}

/// The finite factorization diagram: with a right quasi-unit (m_i)_{i<k},
/// phi(x) = [m_i x m_j*] lands in M_k(T) and psi([y_ij]) = sum m_i* y_ij m_j
/// recovers x exactly.
struct Factorization {
  CMatrix phi_image;  // block matrix through T
  CMatrix roundtrip;  // psi(phi(x))
  std::size_t k = 0;
};

inline Factorization factorization_maps(const TRO& m, const CMatrix& x) {
  if (x.rows() != m.space().cols() || x.cols() != m.space().cols())
    throw shape_error("factorization_maps: element must act on the S side");
  const std::vector<CMatrix> qu = quasi_unit(m, QuasiUnitSide::Right);
  const std::size_t k = qu.size();
  const std::size_t l = m.space().rows();
  Factorization f;
  f.k = k;
  f.phi_image = CMatrix(k * l, k * l);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const CMatrix block = qu[i] * x * qu[j].adjoint();
      for (std::size_t r = 0; r < l; ++r)
        for (std::size_t c = 0; c < l; ++c)
          f.phi_image(i * l + r, j * l + c) = block(r, c);
    }
  f.roundtrip = CMatrix(x.rows(), x.cols());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      CMatrix block(l, l);
      for (std::size_t r = 0; r < l; ++r)
        for (std::size_t c = 0; c < l; ++c)
          block(r, c) = f.phi_image(i * l + r, j * l + c);
      f.roundtrip += qu[i].adjoint() * block * qu[j];
    }
  return f;
}

/// Transitivity composition: for equivalences (S,T,M1) and (T,R,M2), the TRO
/// M3 = [M2 D M1] with D the *-algebra generated by M1 M1* and M2* M2
/// implements the equivalence (S,R).
inline TRO compose_tro(const TRO& m1, const TRO& m2) {
  if (m2.space().cols() != m1.space().rows())
    throw shape_error("compose_tro: middle ambients differ");
  const MatSubspace gen =
      sum_span(m1.left_algebra(), m2.right_algebra());
  const StarAlgebra d = generated_algebra(OperatorSystem(gen));
  return TRO(conj_span(m2.space(), d.space(), m1.space()));
}

}  // namespace troeq
