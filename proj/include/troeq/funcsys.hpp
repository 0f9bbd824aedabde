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
#include "troeq/tro.hpp"

namespace troeq {

/// Basis of Z(s) = {x in s : xy = yx for all y in C*(s)} plus the worst
/// commutator residual.  The generated algebra stands in for the envelope,
/// which is justified when s acts irreducibly; the certificate records that
/// assumption.
struct CentreCertificate {
  MatSubspace basis;
  // commutator residuals, one row per centre element over the algebra basis
  std::vector<std::vector<double>> commutator_residuals;
  double worst_commutator = 0.0;
  std::string assumption =
      "generated algebra used in place of the envelope (irreducible action)";
};

inline CentreCertificate centre_system(const OperatorSystem& s) {
  const StarAlgebra cs = generated_algebra(s);
  const auto& sb = s.space().basis();
  std::vector<std::vector<CMatrix>> cols(sb.size());
  for (std::size_t i = 0; i < sb.size(); ++i)
    for (const auto& y : cs.space().basis())
      cols[i].push_back(sb[i] * y - y * sb[i]);
  CentreCertificate cert;
  cert.basis = MatSubspace(s.ambient_dim(), s.ambient_dim(), s.tol());
  for (const auto& c : gram_nullspace(cols, s.tol().eps))
    cert.basis.grow(s.space().from_coords(c));
  for (const auto& z : cert.basis.basis()) {
    std::vector<double> row;
    for (const auto& y : cs.space().basis()) {
      row.push_back(fro_norm(z * y - y * z));
      cert.worst_commutator = std::max(cert.worst_commutator, row.back());
    }
    cert.commutator_residuals.push_back(std::move(row));
  }
  return cert;
}

/// Toeplitz system: span{S^j : |j| < n} of matrices constant along
/// diagonals; dimension 2n - 1.
inline OperatorSystem toeplitz_system(std::size_t n, Tolerance tol = {}) {
  if (n == 0) throw domain_error("toeplitz_system: n must be positive");
  std::vector<CMatrix> mats;
  for (int j = -int(n) + 1; j < int(n); ++j) {
    CMatrix m(n, n);
    for (int i = 0; i < int(n); ++i) {
      const int k = i - j;
      if (k >= 0 && k < int(n)) m(std::size_t(i), std::size_t(k)) = 1.0;
    }
    mats.push_back(std::move(m));
  }
  return OperatorSystem(MatSubspace::span(n, n, mats, tol));
}

/// The conjugation isomorphism theta(a) = sum_n m_n a m_n* built from a left
/// quasi-unit, with its inverse from a right quasi-unit.
struct ThetaIso {
  StarAlgebra cs, ct;       // generated algebras of s and t
  CMatrix coeff;            // ct-coordinates of theta on the cs basis
  double unital_residual = 0.0;
  double mult_residual = 0.0;       // commutative case only
  double roundtrip_residual = 0.0;  // phi(theta(a)) = a on the cs basis
  // centre-restricted mode
  MatSubspace centre_s, centre_t, centre_image;
  bool centre_mode = false;
};

/// Function-system isomorphism along an equivalence.  The commutative case asserts
/// multiplicativity and bijectivity of theta; the centre-restricted mode
/// asserts theta(Z(s)) = Z(t) as spans.
inline ThetaIso theta_iso(const TRO& m, const OperatorSystem& s,
                          const OperatorSystem& t, bool centre_mode = false) {
  if (!verify_tro_equivalence(s, t, m).pass())
    throw precondition_error("theta_iso: TRO-equivalence fails to verify");
  ThetaIso out;
  out.centre_mode = centre_mode;
  out.cs = generated_algebra(s);
  out.ct = generated_algebra(t);

  auto commutative = [&](const StarAlgebra& a) {
    for (const auto& x : a.space().basis())
      for (const auto& y : a.space().basis())
        if (fro_norm(x * y - y * x) > a.tol().rank_gate(1.0)) return false;
    return true;
  };
  if (!centre_mode && !(commutative(out.cs) && commutative(out.ct)))
    throw domain_error(
        "theta_iso: generated algebras are not commutative; use the "
        "centre-restricted mode");

  const std::vector<CMatrix> left = quasi_unit(m, QuasiUnitSide::Left);
  const std::vector<CMatrix> right = quasi_unit(m, QuasiUnitSide::Right);
  auto theta = [&](const CMatrix& a) {
    CMatrix out_m(m.space().rows(), m.space().rows());
    for (const auto& q : left) out_m += q * a * q.adjoint();
    return out_m;
  };
  auto phi = [&](const CMatrix& c) {
    CMatrix out_m(m.space().cols(), m.space().cols());
    for (const auto& q : right) out_m += q.adjoint() * c * q;
    return out_m;
  };

  const auto& csb = out.cs.space().basis();
  out.coeff = CMatrix(out.ct.dim(), out.cs.dim());
  for (std::size_t a = 0; a < csb.size(); ++a) {
    const CMatrix img = theta(csb[a]);
    const auto c = out.ct.space().coords(img);
    if (out.ct.space().contains(img).residual > out.ct.tol().rank_gate(1.0))
      throw domain_error("theta_iso: image escapes the target algebra");
    for (std::size_t b = 0; b < c.size(); ++b) out.coeff(b, a) = c[b];
  }

  out.unital_residual =
      fro_norm(theta(CMatrix::identity(s.ambient_dim())) -
               CMatrix::identity(t.ambient_dim()));
  if (!centre_mode) {
    for (const auto& x : csb)
      for (const auto& y : csb)
        out.mult_residual = std::max(
            out.mult_residual, fro_norm(theta(x * y) - theta(x) * theta(y)));
  }
  for (const auto& x : csb)
    out.roundtrip_residual =
        std::max(out.roundtrip_residual, fro_norm(phi(theta(x)) - x));

  if (centre_mode) {
    out.centre_s = centre_system(s).basis;
    out.centre_t = centre_system(t).basis;
    out.centre_image =
        MatSubspace(t.ambient_dim(), t.ambient_dim(), t.tol());
    for (const auto& z : out.centre_s.basis()) out.centre_image.grow(theta(z));
    if (!out.centre_t.contains_space(out.centre_image))
      throw domain_error("theta_iso: theta(Z(s)) escapes Z(t)");
    if (out.centre_image.dim() != out.centre_t.dim())
      throw domain_error("theta_iso: centre restriction is not onto");
  }
  return out;
}

/// Stable structure over a rigid system: T is carried onto M_k(S) by
/// phi(t) = [m_i* t m_j] for an orthonormalized family m_i* m_j = delta I.
struct RigidStable {
  std::size_t k = 0;
  std::vector<CMatrix> family;        // the m_i
  double relation_residual = 0.0;     // orthogonality and sum identities
  double bijection_residual = 0.0;    // psi(phi(t)) = t and phi(psi(x)) = x
  std::vector<std::pair<std::size_t, std::size_t>> multiplier_blocks;
};

inline RigidStable rigid_stable_structure(const OperatorSystem& s,
                                          const OperatorSystem& t,
                                          const TRO& m) {
  if (!is_rigid(s)) throw not_rigid("rigid_stable_structure: s is not rigid");
  if (!verify_tro_equivalence(s, t, m).pass())
    throw precondition_error(
        "rigid_stable_structure: TRO-equivalence fails to verify");
  const std::size_t ds = s.ambient_dim(), dt = t.ambient_dim();
  const MatSubspace mm = m.right_algebra();
  if (mm.dim() != 1) {
    std::string spectrum;
    for (const auto& b : mm.basis())
      spectrum += std::to_string(fro_norm(b)) + " ";
    throw domain_error(
        "rigid_stable_structure: [M* M] is not the scalars; basis norms: " +
        spectrum);
  }

  // Gram-Schmidt in M under the scalar pairing (x, y) -> y* x = c I
  auto pairing = [&](const CMatrix& x, const CMatrix& y) {
    return hs_inner(x, y) / double(ds);
  };
  std::vector<CMatrix> fam;
  for (const auto& u : m.space().basis()) {
    CMatrix v = u;
    for (const auto& w : fam) {
      CMatrix tmp = w;
      tmp *= pairing(u, w);
      v -= tmp;
    }
    const double nrm = std::sqrt(std::abs(pairing(v, v).real()));
    if (nrm <= m.tol().rank_gate(1.0)) continue;
    v *= cdouble{1.0 / nrm, 0.0};
    fam.push_back(std::move(v));
  }
  RigidStable out;
  out.k = fam.size();
  if (out.k != m.dim())
    throw domain_error("rigid_stable_structure: family size mismatch");

  // the displayed relations: m_i* m_j = delta_ij I and sum m_i m_i* = I
  CMatrix sum(dt, dt);
  for (std::size_t i = 0; i < out.k; ++i) {
    sum += fam[i] * fam[i].adjoint();
    for (std::size_t j = 0; j < out.k; ++j) {
      const CMatrix prod = fam[i].adjoint() * fam[j];
      const CMatrix want =
          i == j ? CMatrix::identity(ds) : CMatrix::zero(ds, ds);
      out.relation_residual =
          std::max(out.relation_residual, fro_norm(prod - want));
    }
  }
  out.relation_residual =
      std::max(out.relation_residual, fro_norm(sum - CMatrix::identity(dt)));

  // phi: T -> M_k(S), psi its inverse
  const OperatorSystem mks = amplify(s, out.k);
  if (t.dim() != out.k * out.k * s.dim())
    throw domain_error("rigid_stable_structure: dimension count fails");
  auto phi = [&](const CMatrix& x) {
    CMatrix big(out.k * ds, out.k * ds);
    for (std::size_t i = 0; i < out.k; ++i)
      for (std::size_t j = 0; j < out.k; ++j) {
        const CMatrix cell = fam[i].adjoint() * x * fam[j];
        for (std::size_t r = 0; r < ds; ++r)
          for (std::size_t c = 0; c < ds; ++c)
            big(i * ds + r, j * ds + c) = cell(r, c);
      }
    return big;
  };
  auto psi = [&](const CMatrix& big) {
    CMatrix x(dt, dt);
    for (std::size_t i = 0; i < out.k; ++i)
      for (std::size_t j = 0; j < out.k; ++j) {
        CMatrix cell(ds, ds);
        for (std::size_t r = 0; r < ds; ++r)
          for (std::size_t c = 0; c < ds; ++c)
            cell(r, c) = big(i * ds + r, j * ds + c);
        x += fam[i] * cell * fam[j].adjoint();
      }
    return x;
  };
  for (const auto& tb : t.space().basis()) {
    const CMatrix image = phi(tb);
    if (!mks.space().contains(image).inside)
      throw domain_error("rigid_stable_structure: phi escapes M_k(S)");
    out.bijection_residual =
        std::max(out.bijection_residual, fro_norm(psi(image) - tb));
  }
  for (const auto& xb : mks.space().basis())
    out.bijection_residual =
        std::max(out.bijection_residual, fro_norm(phi(psi(xb)) - xb));
  out.family = std::move(fam);

  out.multiplier_blocks = block_decompose(multiplier_algebra(t)).blocks;
  return out;
}

}  // namespace troeq
