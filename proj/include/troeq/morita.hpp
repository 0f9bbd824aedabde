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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "troeq/cstar.hpp"
#include "troeq/tro.hpp"

namespace troeq {

/// A C*-representation of an operator system: a unital hermiticity-
/// preserving map given by images of the basis, whose restriction to the
/// multiplier algebra is a *-homomorphism acting compatibly on the system.
class Representation {
 public:
  Representation() = default;

  Representation(OperatorSystem system, std::size_t hilbert_dim,
                 std::vector<CMatrix> images, bool validate_now = true)
      : system_(std::move(system)),
        h_(hilbert_dim),
        images_(std::move(images)),
        multiplier_(multiplier_algebra(system_)) {
    if (images_.size() != system_.dim())
      throw shape_error("Representation: one image per basis element");
    for (const auto& im : images_)
      if (im.rows() != h_ || im.cols() != h_)
        throw shape_error("Representation: image dimension mismatch");
    if (validate_now) {
      const VerificationReport rep = validate();
      if (!rep.pass())
        throw domain_error("Representation: invariants fail: " +
                           rep.entries[0].axiom);
    }
  }

  static Representation identity(const OperatorSystem& s) {
    return Representation(s, s.ambient_dim(),
                          std::vector<CMatrix>(s.space().basis().begin(),
                                               s.space().basis().end()));
  }

  const OperatorSystem& system() const { return system_; }
  std::size_t hilbert_dim() const { return h_; }
  const std::vector<CMatrix>& images() const { return images_; }
  const StarAlgebra& multiplier() const { return multiplier_; }

  /// phi(x) by coefficient expansion in the system basis.
  CMatrix apply(const CMatrix& x) const {
    const auto c = system_.space().coords(x);
    CMatrix out(h_, h_);
    for (std::size_t i = 0; i < c.size(); ++i) {
      CMatrix t = images_[i];
      t *= c[i];
      out += t;
    }
    return out;
  }

  VerificationReport validate() const {
    VerificationReport rep;
    const double gate = system_.tol().rank_gate(1.0);
    rep.add_residual("unital",
                     fro_norm(apply(CMatrix::identity(system_.ambient_dim())) -
                              CMatrix::identity(h_)),
                     gate, "phi(1) differs from the identity");
    double worst = 0.0;
    for (const auto& b : system_.space().basis())
      worst = std::max(worst,
                       fro_norm(apply(b.adjoint()) - apply(b).adjoint()));
    rep.add_residual("hermitian", worst, gate, "phi(x*) differs from phi(x)*");
    worst = 0.0;
    for (const auto& a : multiplier_.space().basis())
      for (const auto& b : multiplier_.space().basis())
        worst =
            std::max(worst, fro_norm(apply(a * b) - apply(a) * apply(b)));
    rep.add_residual("multiplier_homomorphism", worst, gate,
                     "pi is not multiplicative on A_S");
    worst = 0.0;
    for (const auto& a : multiplier_.space().basis())
      for (const auto& b : system_.space().basis()) {
        worst = std::max(worst, fro_norm(apply(a * b) - apply(a) * apply(b)));
        worst = std::max(worst, fro_norm(apply(b * a) - apply(b) * apply(a)));
      }
    rep.add_residual("bimodule", worst, gate,
                     "phi(a s) differs from pi(a) phi(s)");
    return rep;
  }

 private:
  OperatorSystem system_;
  std::size_t h_ = 0;
  std::vector<CMatrix> images_;
  StarAlgebra multiplier_;
};

/// Induction data: the representation of T on the Gram quotient of M (x) H,
/// together with the quotient isometry over the generator coordinates.
struct Induction {
  Representation rep;
  OperatorSystem target;
  CMatrix q;  // (dim M * h) x rank, generator coefficients of the o.n. basis
  std::vector<double> gram_eigenvalues;
  std::size_t gram_rank = 0;
};

namespace detail {

/// Matrix elements of psi(t) between the generators m_i (x) xi_j:
/// entry [(i,j),(k,l)] = phi(m_i* t m_k)(j, l).
inline CMatrix generator_matrix(const TRO& m, const Representation& rep,
                                const CMatrix& t) {
  const auto& mb = m.space().basis();
  const std::size_t p = mb.size(), h = rep.hilbert_dim();
  CMatrix out(p * h, p * h);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t k = 0; k < p; ++k) {
      const CMatrix block = rep.apply(mb[i].adjoint() * t * mb[k]);
      for (std::size_t j = 0; j < h; ++j)
        for (std::size_t l = 0; l < h; ++l)
          out(i * h + j, k * h + l) = block(j, l);
    }
  return out;
}

}  // namespace detail

/// Induces a representation of T = [M S M*] from a representation of S.
/// The Gram space of the generators m_i (x) xi_j is quotiented by its
/// kernel (threshold eps*(1+trace)) and psi is assembled from the defining
/// sesquilinear identity on the quotient coordinates.
inline Induction induce_rep(const TRO& m, const Representation& rep_s,
                            const OperatorSystem* target = nullptr) {
  const OperatorSystem& s = rep_s.system();
  if (m.space().cols() != s.ambient_dim())
    throw shape_error("induce_rep: TRO does not act on the system side");
  const Tolerance tol = s.tol();

  OperatorSystem t_sys =
      target ? *target
             : OperatorSystem(conj_span(m.space(), s.space(),
                                        adjoint_space(m.space())));
  if (target) {
    const MatSubspace computed =
        conj_span(m.space(), s.space(), adjoint_space(m.space()));
    if (!computed.equals_space(target->space()))
      throw domain_error("induce_rep: target differs from [M S M*]");
  }

  const CMatrix gram =
      detail::generator_matrix(m, rep_s, CMatrix::identity(m.space().rows()));
  const HermEig eg = herm_eig(gram, 1e-6);
  double trace = 0.0;
  for (double ev : eg.eigenvalues) trace += std::max(ev, 0.0);
  const double floor = tol.eps * (1.0 + trace);
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < eg.eigenvalues.size(); ++i)
    if (eg.eigenvalues[i] > floor) kept.push_back(i);
  const std::size_t rank = kept.size();
  if (rank == 0) throw domain_error("induce_rep: Gram space collapsed");

  const std::size_t n = gram.rows();
  CMatrix q(n, rank);
  for (std::size_t a = 0; a < rank; ++a) {
    const double scale = 1.0 / std::sqrt(eg.eigenvalues[kept[a]]);
    for (std::size_t i = 0; i < n; ++i)
      q(i, a) = eg.u(i, kept[a]) * scale;
  }

  std::vector<CMatrix> images;
  images.reserve(t_sys.dim());
  const CMatrix qadj = q.adjoint();
  for (const auto& tb : t_sys.space().basis())
    images.push_back(qadj * detail::generator_matrix(m, rep_s, tb) * q);

  Induction ind;
  ind.target = std::move(t_sys);
  ind.q = std::move(q);
  ind.gram_eigenvalues = eg.eigenvalues;
  ind.gram_rank = rank;
  ind.rep = Representation(ind.target, rank, std::move(images));

  // sampled positivity of psi at matrix levels 1 and 2
  Rng rng(tol.seed * 0x9e3779b97f4a7c15ULL + 0x1d0ceULL);
  const auto& tsp = ind.target.space();
  for (int level = 1; level <= 2; ++level) {
    for (int sample = 0; sample < 8; ++sample) {
      const std::size_t dt = tsp.rows();
      CMatrix big(level * dt, level * dt);
      std::vector<std::vector<CMatrix>> blocks(
          static_cast<std::size_t>(level),
          std::vector<CMatrix>(static_cast<std::size_t>(level)));
      for (int i = 0; i < level; ++i)
        for (int j = 0; j < level; ++j) {
          CMatrix e(dt, dt);
          for (const auto& b : tsp.basis()) {
            CMatrix tmp = b;
            tmp *= rng.cgauss() * cdouble{0.5, 0.0};
            e += tmp;
          }
          blocks[i][j] = e;
        }
      for (int i = 0; i < level; ++i)
        for (int j = i; j < level; ++j) {
          const CMatrix h =
              (blocks[i][j] + blocks[j][i].adjoint()) * cdouble{0.5, 0.0};
          blocks[i][j] = h;
          blocks[j][i] = h.adjoint();
        }
      for (int i = 0; i < level; ++i)
        for (int j = 0; j < level; ++j)
          for (std::size_t r = 0; r < dt; ++r)
            for (std::size_t c = 0; c < dt; ++c)
              big(i * dt + r, j * dt + c) = blocks[i][j](r, c);
      const double lm = lambda_min(big, 1e-6);
      if (lm < 0.0)
        for (int i = 0; i < level; ++i)
          blocks[i][i] += CMatrix::identity(dt) * cdouble{-lm, 0.0};
      // map through psi blockwise
      CMatrix out(level * ind.gram_rank, level * ind.gram_rank);
      for (int i = 0; i < level; ++i)
        for (int j = 0; j < level; ++j) {
          const CMatrix cell = ind.rep.apply(blocks[i][j]);
          for (std::size_t r = 0; r < ind.gram_rank; ++r)
            for (std::size_t c = 0; c < ind.gram_rank; ++c)
              out(i * ind.gram_rank + r, j * ind.gram_rank + c) = cell(r, c);
        }
      if (lambda_min(out, 1e-6) < -1e-7)
        throw domain_error("induce_rep: induced map failed a positivity sample");
    }
  }
  return ind;
}

struct Roundtrip {
  CMatrix u;        // unitary from the double-induced space onto H
  double residual;  // max over the S basis of ||U zeta(s) U* - phi(s)||
  double unitary_defect;
};

/// Double-induction round trip: induce through M, then through M*, and build
/// the canonical unitary U(x* (x) y (x) h) = phi(x* y) h intertwining the
/// double induction with the original representation.
inline Roundtrip roundtrip_unitary(const TRO& m, const Representation& rep_s) {
  const OperatorSystem& s = rep_s.system();
  const std::size_t h = rep_s.hilbert_dim();
  const Induction fwd = induce_rep(m, rep_s);
  const TRO madj = m.adjoint();
  const Induction back = induce_rep(madj, fwd.rep, &s);

  const auto& mb = m.space().basis();
  const std::size_t p = mb.size();
  const std::size_t rank_k = fwd.gram_rank;
  const std::size_t rank_l = back.gram_rank;

  // image of the L-generator m_i* (x) e_a under U, as a vector in C^h:
  // e_a = sum_(k,l) q[(k,l),a] m_k (x) xi_l and U sends it to
  // sum q[(k,l),a] phi(m_i* m_k) xi_l.
  std::vector<CMatrix> gen_image(p * rank_k, CMatrix(h, 1));
  for (std::size_t i = 0; i < p; ++i) {
    std::vector<CMatrix> phi_ik(p);
    for (std::size_t k = 0; k < p; ++k)
      phi_ik[k] = rep_s.apply(mb[i].adjoint() * mb[k]);
    for (std::size_t a = 0; a < rank_k; ++a) {
      CMatrix v(h, 1);
      for (std::size_t k = 0; k < p; ++k)
        for (std::size_t l = 0; l < h; ++l) {
          const cdouble c = fwd.q(k * h + l, a);
          if (c == cdouble{0, 0}) continue;
          for (std::size_t r = 0; r < h; ++r) v(r, 0) += c * phi_ik[k](r, l);
        }
      gen_image[i * rank_k + a] = std::move(v);
    }
  }

  CMatrix u(h, rank_l);
  for (std::size_t cidx = 0; cidx < rank_l; ++cidx)
    for (std::size_t g = 0; g < p * rank_k; ++g) {
      const cdouble c = back.q(g, cidx);
      if (c == cdouble{0, 0}) continue;
      for (std::size_t r = 0; r < h; ++r)
        u(r, cidx) += c * gen_image[g](r, 0);
    }

  Roundtrip out;
  out.unitary_defect = unitary_defect(u);
  double worst = 0.0;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const CMatrix lhs = u * back.rep.images()[i] * u.adjoint();
    const CMatrix rhs = rep_s.apply(s.space().basis()[i]);
    worst = std::max(worst, fro_norm(lhs - rhs));
  }
  out.residual = std::max(worst, out.unitary_defect);
  out.u = std::move(u);
  return out;
}

/// Transports an intertwiner t of (rep1, rep2) to the induced pair; the
/// result intertwines the inductions and its norm is bounded by ||t||.
inline CMatrix transport_intertwiner(const TRO& m, const CMatrix& t,
                                     const Representation& rep1,
                                     const Representation& rep2) {
  const OperatorSystem& s = rep1.system();
  if (!s.space().equals_space(rep2.system().space()))
    throw shape_error("transport_intertwiner: representations of different systems");
  if (t.rows() != rep2.hilbert_dim() || t.cols() != rep1.hilbert_dim())
    throw shape_error("transport_intertwiner: intertwiner shape mismatch");
  const double gate = s.tol().rank_gate(1.0 + fro_norm(t));
  for (const auto& b : s.space().basis())
    if (fro_norm(t * rep1.apply(b) - rep2.apply(b) * t) > gate)
      throw domain_error("transport_intertwiner: not an intertwiner");

  const Induction i1 = induce_rep(m, rep1);
  const Induction i2 = induce_rep(m, rep2, &i1.target);

  // generator action m_i (x) xi |-> m_i (x) t xi, then compress: the
  // quotient matrix is P2 Ttilde Q1 with P2 = diag(sqrt(lambda2)) U2*.
  const std::size_t p = m.space().dim();
  const std::size_t h1 = rep1.hilbert_dim(), h2 = rep2.hilbert_dim();
  CMatrix tgen(p * h2, p * h1);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t r = 0; r < h2; ++r)
      for (std::size_t c = 0; c < h1; ++c)
        tgen(i * h2 + r, i * h1 + c) = t(r, c);

  // P2 = (Gram2 Q2)^adjoint: Gram2 q_a = lambda_a^{1/2} u_a
  const CMatrix gram2 = detail::generator_matrix(m, rep2, CMatrix::identity(m.space().rows()));
  const CMatrix p2 = (gram2 * i2.q).adjoint();
  const CMatrix ttilde = p2 * tgen * i1.q;

  // verify the induced intertwining relation
  double worst = 0.0;
  for (std::size_t k = 0; k < i1.target.dim(); ++k)
    worst = std::max(worst, fro_norm(ttilde * i1.rep.images()[k] -
                                     i2.rep.images()[k] * ttilde));
  if (worst > 1e-7 * (1.0 + fro_norm(t)))
    throw domain_error("transport_intertwiner: induced map fails to intertwine");
  return ttilde;
}

/// [M J M*] for an A_S-bimodule J inside S.
inline MatSubspace transport_bimodule(const TRO& m, const OperatorSystem& s,
                                      const MatSubspace& j) {
  if (!s.space().contains_space(j))
    throw domain_error("transport_bimodule: J is not a subspace of S");
  const StarAlgebra a = multiplier_algebra(s);
  const MatSubspace aja = conj_span(a.space(), j, a.space());
  if (!j.contains_space(aja))
    throw domain_error("transport_bimodule: J is not an A_S-bimodule");
  return conj_span(m.space(), j, adjoint_space(m.space()));
}

/// Seeded random C*-representation of an operator system: a *-representation
/// of the generated algebra with random block multiplicities, conjugated by
/// a random unitary.
inline Representation random_representation(const OperatorSystem& s, Rng& rng,
                                            std::size_t max_mult = 2) {
  const StarAlgebra cs = generated_algebra(s);
  const BlockDecomposition bd = block_decompose(cs);
  const std::size_t nb = bd.blocks.size();
  std::vector<std::size_t> mult(nb);
  std::size_t h = 0;
  do {
    h = 0;
    for (std::size_t j = 0; j < nb; ++j) {
      mult[j] = rng.below(max_mult + 1);
      h += bd.blocks[j].first * mult[j];
    }
  } while (h == 0);

  // random unitary on C^h through Gram-Schmidt of a Gaussian matrix
  CMatrix v(h, h);
  for (auto& z : v.data()) z = rng.cgauss();
  for (std::size_t c = 0; c < h; ++c) {
    for (std::size_t prev = 0; prev < c; ++prev) {
      cdouble ip = 0.0;
      for (std::size_t r = 0; r < h; ++r)
        ip += v(r, c) * std::conj(v(r, prev));
      for (std::size_t r = 0; r < h; ++r) v(r, c) -= ip * v(r, prev);
    }
    double nrm = 0.0;
    for (std::size_t r = 0; r < h; ++r) nrm += std::norm(v(r, c));
    nrm = std::sqrt(nrm);
    for (std::size_t r = 0; r < h; ++r) v(r, c) /= nrm;
  }

  const CMatrix ua = bd.u.adjoint();
  std::vector<CMatrix> images;
  for (const auto& b : s.space().basis()) {
    const CMatrix conj = ua * b * bd.u;
    // slice each block component and re-expand with the chosen multiplicity
    CMatrix out(h, h);
    std::size_t off_in = 0, off_out = 0;
    for (std::size_t jb = 0; jb < nb; ++jb) {
      const auto [dj, mj] = bd.blocks[jb];
      for (std::size_t r = 0; r < dj; ++r)
        for (std::size_t c = 0; c < dj; ++c) {
          const cdouble val = conj(off_in + r * mj, off_in + c * mj);
          for (std::size_t tcopy = 0; tcopy < mult[jb]; ++tcopy)
            out(off_out + r * mult[jb] + tcopy,
                off_out + c * mult[jb] + tcopy) = val;
        }
      off_in += dj * mj;
      off_out += dj * mult[jb];
    }
    images.push_back(v * out * v.adjoint());
  }
  return Representation(s, h, std::move(images));
}

}  // namespace troeq
