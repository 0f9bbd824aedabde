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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "troeq/rng.hpp"
#include "troeq/systems.hpp"

namespace troeq {

// ---------------------------------------------------------------------------
// linear solves on coefficient vectors
// ---------------------------------------------------------------------------

/// Nullspace of the linear map c |-> sum_i c_i cols[i], where cols[i] is a
/// list of constraint blocks (same shapes across i).  Returns coefficient
/// vectors spanning the nullspace, computed from the Gram eigenproblem.
inline std::vector<std::vector<cdouble>> gram_nullspace(
    const std::vector<std::vector<CMatrix>>& cols, double eps) {
  const std::size_t n = cols.size();
  if (n == 0) return {};
  CMatrix g(n, n);
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      cdouble v = 0.0;
      for (std::size_t b = 0; b < cols[i].size(); ++b)
        v += hs_inner(cols[j][b], cols[i][b]);
      g(i, j) = std::conj(v);
      g(j, i) = v;
    }
    scale = std::max(scale, g(i, i).real());
  }
  const HermEig e = herm_eig(g);
  // Gram eigenvalues of true nulls sit at the machine-noise floor of the
  // assembly (linear in ||G||), not at eps^2, so gate against both.
  const double gate = std::max(eps * eps, 1e-13) * (1.0 + scale);
  std::vector<std::vector<cdouble>> out;
  for (std::size_t k = 0; k < n; ++k) {
    if (e.eigenvalues[k] > gate) continue;
    std::vector<cdouble> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = e.u(i, k);
    out.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// generated algebra, centre, multipliers
// ---------------------------------------------------------------------------

/// Smallest unital *-algebra containing the operator system: iterates
/// A <- span(A u A.s) until the dimension stabilizes.  Single right
/// multiplications suffice because s is unital and self-adjoint, so every
/// word in the generators is reached.
inline StarAlgebra generated_algebra(const OperatorSystem& s) {
  MatSubspace a = s.space();
  const std::size_t cap = s.ambient_dim() * s.ambient_dim();
  for (std::size_t round = 0; round <= cap; ++round) {
    const std::size_t before = a.dim();
    std::vector<CMatrix> products;
    for (const auto& x : a.basis())
      for (const auto& y : s.space().basis()) products.push_back(x * y);
    for (auto& p : products) a.grow(p);
    if (a.dim() == before) break;
  }
  return StarAlgebra(std::move(a));
}

/// Centre {z in a : zb = bz for all b}, solved as a linear system on the
/// coefficients of a's basis.
inline StarAlgebra center(const StarAlgebra& a) {
  const auto& basis = a.space().basis();
  std::vector<std::vector<CMatrix>> cols(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (const auto& b : basis) cols[i].push_back(basis[i] * b - b * basis[i]);
  MatSubspace z(a.ambient_dim(), a.ambient_dim(), a.tol());
  for (const auto& c : gram_nullspace(cols, a.tol().eps))
    z.grow(a.space().from_coords(c));
  return StarAlgebra(std::move(z));
}

/// Largest complex-linear subspace {x in a : x s subset s}.
inline MatSubspace left_stabilizer(const MatSubspace& a,
                                   const MatSubspace& s) {
  std::vector<std::vector<CMatrix>> cols(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (const auto& b : s.basis()) {
      const CMatrix p = a.basis()[i] * b;
      cols[i].push_back(p - s.project(p));
    }
  MatSubspace out(a.rows(), a.cols(), a.tol());
  for (const auto& c : gram_nullspace(cols, a.tol().eps))
    out.grow(a.from_coords(c));
  return out;
}

/// Multiplier algebra A_s = {a in C*(s) : a.s subset s and a*.s subset s},
/// computed inside the generated algebra.  For irreducibly acting systems
/// the generated algebra is the C*-envelope, which justifies the ambient.
inline StarAlgebra multiplier_algebra(const OperatorSystem& s) {
  const StarAlgebra cs = generated_algebra(s);
  const MatSubspace l = left_stabilizer(cs.space(), s.space());
  const MatSubspace m = intersect_span(l, adjoint_space(l));
  return StarAlgebra(m);
}

inline bool is_rigid(const OperatorSystem& s) {
  return multiplier_algebra(s).dim() == 1;
}

// ---------------------------------------------------------------------------
// Wedderburn block decomposition
// ---------------------------------------------------------------------------

struct BlockDecomposition {
  CMatrix u;  // unitary; u* a u is supported on the declared pattern
  std::vector<std::pair<std::size_t, std::size_t>> blocks;  // (d_j, m_j)

  std::size_t total_dim() const {
    std::size_t t = 0;
    for (auto [d, m] : blocks) t += d * m;
    return t;
  }
  std::size_t algebra_dim() const {
    std::size_t t = 0;
    for (auto [d, m] : blocks) t += d * d;
    return t;
  }
};

/// Subspace of matrices supported on the pattern (+)_j M_{d_j} (x) I_{m_j}.
inline MatSubspace block_pattern_span(
    const std::vector<std::pair<std::size_t, std::size_t>>& blocks,
    Tolerance tol = {}) {
  std::size_t d = 0;
  for (auto [dj, mj] : blocks) d += dj * mj;
  MatSubspace out(d, d, tol);
  std::size_t off = 0;
  for (auto [dj, mj] : blocks) {
    for (std::size_t r = 0; r < dj; ++r)
      for (std::size_t c = 0; c < dj; ++c) {
        CMatrix e(d, d);
        for (std::size_t t = 0; t < mj; ++t)
          e(off + r * mj + t, off + c * mj + t) = 1.0;
        out.grow(e);
      }
    off += dj * mj;
  }
  return out;
}

/// Worst residual of u* b u against the declared pattern over the basis of a.
inline double block_pattern_residual(const StarAlgebra& a,
                                     const BlockDecomposition& bd) {
  const MatSubspace pattern = block_pattern_span(bd.blocks, a.tol());
  const CMatrix ua = bd.u.adjoint();
  double worst = 0.0;
  for (const auto& b : a.space().basis())
    worst = std::max(worst, pattern.contains(ua * b * bd.u).residual);
  return worst;
}

namespace detail {

inline std::vector<CMatrix> hermitian_basis_of(const MatSubspace& sp) {
  MatSubspace h(sp.rows(), sp.cols(), sp.tol());
  std::vector<CMatrix> out;
  auto add = [&](CMatrix m) {
    if (h.grow(m)) out.push_back(std::move(m));
  };
  for (const auto& b : sp.basis()) {
    add((b + b.adjoint()) * cdouble{0.5, 0.0});
    add((b - b.adjoint()) * cdouble{0.0, -0.5});
  }
  return out;
}

inline CMatrix random_hermitian_element(const std::vector<CMatrix>& herm,
                                        Rng& rng) {
  CMatrix h(herm.front().rows(), herm.front().cols());
  for (const auto& b : herm) {
    CMatrix t = b;
    t *= cdouble{rng.gauss(), 0.0};
    h += t;
  }
  return h;
}

/// Clusters the (ascending) spectrum at relative gap 1e-7 and returns the
/// eigenvector column ranges.
inline std::vector<std::pair<std::size_t, std::size_t>> spectral_clusters(
    const std::vector<double>& eig) {
  double spread = 1.0;
  if (!eig.empty()) spread += eig.back() - eig.front();
  const double gap = 1e-7 * spread;
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  std::size_t start = 0;
  for (std::size_t i = 1; i <= eig.size(); ++i) {
    if (i == eig.size() || eig[i] - eig[i - 1] > gap) {
      ranges.emplace_back(start, i);
      start = i;
    }
  }
  return ranges;
}

/// Columns [lo, hi) of u as a d x (hi-lo) isometry.
inline CMatrix column_slice(const CMatrix& u, std::size_t lo, std::size_t hi) {
  CMatrix v(u.rows(), hi - lo);
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = lo; j < hi; ++j) v(i, j - lo) = u(i, j);
  return v;
}

/// Decomposes a unital *-algebra given by an orthonormal basis on C^s.
/// Returns the change-of-basis unitary and the (d_j, m_j) list.
inline std::pair<CMatrix, std::vector<std::pair<std::size_t, std::size_t>>>
wedderburn_rec(const MatSubspace& alg, Rng& rng, int depth = 0) {
  const std::size_t s = alg.rows();
  const Tolerance tol = alg.tol();
  if (depth > 64) throw limit_error("block_decompose: recursion overflow");

  MatSubspace zspan(s, s, tol);
  {
    std::vector<std::vector<CMatrix>> cols(alg.dim());
    for (std::size_t i = 0; i < alg.dim(); ++i)
      for (const auto& b : alg.basis())
        cols[i].push_back(alg.basis()[i] * b - b * alg.basis()[i]);
    for (const auto& c : gram_nullspace(cols, tol.eps))
      zspan.grow(alg.from_coords(c));
  }

  if (zspan.dim() <= 1) {
    // single factor M_k (x) I_m
    const std::size_t dim = alg.dim();
    const std::size_t k = static_cast<std::size_t>(std::lround(std::sqrt(double(dim))));
    if (k * k != dim)
      throw domain_error("block_decompose: factor dimension is not a square");
    if (s % k != 0)
      throw domain_error("block_decompose: block size does not divide space");
    const std::size_t m = s / k;
    if (k == 1)
      return {CMatrix::identity(s), {{1, m}}};

    const auto herm = hermitian_basis_of(alg);
    for (int attempt = 0; attempt < 24; ++attempt) {
      const CMatrix h = random_hermitian_element(herm, rng);
      const HermEig e = herm_eig(h, 1e-6);
      const auto ranges = spectral_clusters(e.eigenvalues);
      if (ranges.size() != k) continue;
      bool ok = true;
      std::vector<CMatrix> proj;
      for (auto [lo, hi] : ranges) {
        if (hi - lo != m) {
          ok = false;
          break;
        }
        const CMatrix v = column_slice(e.u, lo, hi);
        const CMatrix q = v * v.adjoint();
        if (!alg.contains(q).inside) {
          ok = false;
          break;
        }
        proj.push_back(q);
      }
      if (!ok) continue;

      // partial isometries q_1 A q_j, each a one-dimensional corner; the
      // largest-norm generator keeps the polar step away from the floor
      std::vector<CMatrix> link(k);  // link[j] : range q_j -> range q_1
      link[0] = proj[0];
      for (std::size_t j = 1; j < k && ok; ++j) {
        MatSubspace corner(s, s, tol);
        CMatrix pick;
        double pick_norm = 0.0;
        for (const auto& b : alg.basis()) {
          const CMatrix c = proj[0] * b * proj[j];
          corner.grow(c);
          const double nrm = fro_norm(c);
          if (nrm > pick_norm) {
            pick_norm = nrm;
            pick = c;
          }
        }
        if (corner.dim() != 1) {
          ok = false;
          break;
        }
        const CMatrix gram = pick.adjoint() * pick;
        link[j] = pick * psd_inv_sqrt(gram, tol.eps * (1.0 + fro_norm(gram)));
      }
      if (!ok) continue;

      // orthonormal basis of range q_1
      const HermEig pe = herm_eig(proj[0], 1e-6);
      CMatrix w(s, s);
      std::size_t colw = 0;
      std::vector<std::size_t> onecols;
      for (std::size_t c = 0; c < s; ++c)
        if (pe.eigenvalues[c] > 0.5) onecols.push_back(c);
      if (onecols.size() != m) continue;
      for (std::size_t i = 0; i < k; ++i) {
        const CMatrix lift = link[i].adjoint();
        for (std::size_t t = 0; t < m; ++t) {
          CMatrix xi(s, 1);
          for (std::size_t r = 0; r < s; ++r) xi(r, 0) = pe.u(r, onecols[t]);
          const CMatrix col = lift * xi;
          for (std::size_t r = 0; r < s; ++r) w(r, colw) = col(r, 0);
          ++colw;
        }
      }
      if (unitary_defect(w) > 1e-7 * (1.0 + double(s))) continue;
      return {w, {{k, m}}};
    }
    throw domain_error("block_decompose: failed to split a matrix factor");
  }

  // non-trivial centre: split along a random central hermitian element
  const auto zherm = hermitian_basis_of(zspan);
  for (int attempt = 0; attempt < 24; ++attempt) {
    const CMatrix z = random_hermitian_element(zherm, rng);
    const HermEig e = herm_eig(z, 1e-6);
    const auto ranges = spectral_clusters(e.eigenvalues);
    if (ranges.size() < 2) continue;
    bool ok = true;
    CMatrix u(s, s);
    std::vector<std::pair<std::size_t, std::size_t>> blocks;
    std::size_t colu = 0;
    for (auto [lo, hi] : ranges) {
      const CMatrix v = column_slice(e.u, lo, hi);
      const CMatrix p = v * v.adjoint();
      // the spectral projection must commute with the algebra
      double comm = 0.0;
      for (const auto& b : alg.basis())
        comm = std::max(comm, fro_norm(p * b - b * p));
      if (comm > 1e-7 * (1.0 + fro_norm(z))) {
        ok = false;
        break;
      }
      MatSubspace compressed(hi - lo, hi - lo, tol);
      const CMatrix va = v.adjoint();
      for (const auto& b : alg.basis()) compressed.grow(va * b * v);
      auto [w, sub] = wedderburn_rec(compressed, rng, depth + 1);
      const CMatrix vw = v * w;
      for (std::size_t j = 0; j < vw.cols(); ++j, ++colu)
        for (std::size_t i = 0; i < s; ++i) u(i, colu) = vw(i, j);
      for (auto b : sub) blocks.push_back(b);
    }
    if (!ok) continue;
    return {u, blocks};
  }
  throw domain_error("block_decompose: failed to split along the centre");
}

}  // namespace detail

/// Numerical Artin-Wedderburn: unitary + (d_j, m_j) list realizing
/// a ~ (+)_j M_{d_j} (x) I_{m_j}.  Blocks are ordered by descending d_j,
/// then descending m_j, then by first support column.
inline BlockDecomposition block_decompose(const StarAlgebra& a) {
  if (!a.unital())
    throw domain_error("block_decompose: algebra must be unital");
  Rng rng(a.tol().seed * 0x9e3779b97f4a7c15ULL + 0x1234567ULL);
  auto [u, blocks] = detail::wedderburn_rec(a.space(), rng);

  // stable canonical order of blocks, permuting column groups alongside
  std::vector<std::size_t> offs(blocks.size() + 1, 0);
  for (std::size_t i = 0; i < blocks.size(); ++i)
    offs[i + 1] = offs[i] + blocks[i].first * blocks[i].second;
  std::vector<std::size_t> order(blocks.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (blocks[x].first != blocks[y].first)
      return blocks[x].first > blocks[y].first;
    if (blocks[x].second != blocks[y].second)
      return blocks[x].second > blocks[y].second;
    return offs[x] < offs[y];
  });

  BlockDecomposition bd;
  bd.u = CMatrix(u.rows(), u.cols());
  std::size_t col = 0;
  for (std::size_t idx : order) {
    bd.blocks.push_back(blocks[idx]);
    for (std::size_t j = offs[idx]; j < offs[idx + 1]; ++j, ++col)
      for (std::size_t i = 0; i < u.rows(); ++i) bd.u(i, col) = u(i, j);
  }

  if (bd.total_dim() != a.ambient_dim() || bd.algebra_dim() != a.dim())
    throw domain_error("block_decompose: dimension bookkeeping failed");
  const double res = block_pattern_residual(a, bd);
  if (res > 1e-6 * (1.0 + double(a.ambient_dim())))
    throw domain_error("block_decompose: pattern residual too large");
  return bd;
}

// ---------------------------------------------------------------------------
// irreducible-action probe
// ---------------------------------------------------------------------------

struct ProbeVerdict {
  enum class Kind { Irreducible, Reducible, Unknown } kind;
  int level = 0;  // highest matrix level exercised
  std::vector<std::size_t> witness_blocks;  // sub-multiplicities for Reducible
  std::string detail;
};

namespace detail {

/// max over restarts of lambda_min(X|_L) - lambda_min(X) for Hermitian
/// X in M_n(s); a positive value exhibits a positivity separation.
inline double separation_search(const std::vector<CMatrix>& herm,
                                const CMatrix& viso, std::size_t n, Rng& rng,
                                int restarts = 20, int iters = 50) {
  std::vector<CMatrix> herm_l;
  const CMatrix va = viso.adjoint();
  for (const auto& h : herm) herm_l.push_back(va * h * viso);

  auto assemble = [&](const std::vector<CMatrix>& coef,
                      const std::vector<CMatrix>& hb) {
    CMatrix x(n * hb.front().rows(), n * hb.front().rows());
    for (std::size_t a = 0; a < coef.size(); ++a) x += kron(coef[a], hb[a]);
    return x;
  };
  auto grad_block = [&](const CMatrix& bottom, const std::vector<CMatrix>& hb,
                        std::vector<CMatrix>& g) {
    const std::size_t dd = hb.front().rows();
    for (std::size_t al = 0; al < hb.size(); ++al) {
      CMatrix& ga = g[al];
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          cdouble v = 0.0;
          for (std::size_t r = 0; r < dd; ++r)
            for (std::size_t c = 0; c < dd; ++c)
              v += std::conj(bottom(a * dd + r, 0)) * hb[al](r, c) *
                   bottom(b * dd + c, 0);
          ga(a, b) = v;
        }
    }
  };
  auto bottom_vec = [&](const CMatrix& x) {
    const HermEig e = herm_eig(x, 1e-6);
    CMatrix v(x.rows(), 1);
    for (std::size_t i = 0; i < x.rows(); ++i) v(i, 0) = e.u(i, 0);
    return std::make_pair(e.eigenvalues.front(), v);
  };

  double best = -1e300;
  for (int restart = 0; restart < restarts; ++restart) {
    std::vector<CMatrix> coef(herm.size());
    for (auto& c : coef) {
      CMatrix g(n, n);
      for (auto& z : g.data()) z = rng.cgauss();
      c = (g + g.adjoint()) * cdouble{0.5, 0.0};
    }
    for (int it = 0; it < iters; ++it) {
      double norm2 = 0.0;
      for (const auto& c : coef) norm2 += fro_norm(c) * fro_norm(c);
      const double nrm = std::sqrt(std::max(norm2, 1e-30));
      for (auto& c : coef) c *= cdouble{1.0 / nrm, 0.0};

      const CMatrix x = assemble(coef, herm);
      const CMatrix xl = assemble(coef, herm_l);
      auto [lmin, v] = bottom_vec(x);
      auto [lminl, w] = bottom_vec(xl);
      best = std::max(best, lminl - lmin);

      // ascend lambda_min(X_L) - lambda_min(X)
      CMatrix what = kron(CMatrix::identity(n), viso) * w;
      std::vector<CMatrix> gl(herm.size(), CMatrix(n, n)),
          gf(herm.size(), CMatrix(n, n));
      grad_block(what, herm, gl);
      grad_block(v, herm, gf);
      const double step = 0.4 / (1.0 + 0.15 * it);
      for (std::size_t a = 0; a < coef.size(); ++a) {
        CMatrix d0 = gl[a] - gf[a];
        d0 = (d0 + d0.adjoint()) * cdouble{0.5, 0.0};
        d0 *= cdouble{step, 0.0};
        coef[a] += d0;
      }
    }
  }
  return best;
}

}  // namespace detail

/// Semidecision of irreducible action.  Enumerates the reducing subspaces of
/// C*(s) up to unitary equivalence (sub-multiplicity vectors of the
/// Wedderburn blocks) and, for each, either certifies the compression as a
/// complete order embedding (it restricts to a *-isomorphism of C*(s)), or
/// searches for a Hermitian positivity-separation witness at matrix levels
/// up to level_cap.
inline ProbeVerdict irreducibility_probe(const OperatorSystem& s,
                                         int level_cap) {
  if (level_cap < 1) throw domain_error("irreducibility_probe: level_cap < 1");
  const StarAlgebra cs = generated_algebra(s);
  const BlockDecomposition bd = block_decompose(cs);
  const std::size_t nb = bd.blocks.size();

  // enumerate sub-multiplicity vectors 0 <= v_j <= m_j, v != 0, v != m
  std::vector<std::vector<std::size_t>> candidates;
  std::vector<std::size_t> v(nb, 0);
  while (true) {
    bool nonzero = false, full = true;
    for (std::size_t j = 0; j < nb; ++j) {
      if (v[j] != 0) nonzero = true;
      if (v[j] != bd.blocks[j].second) full = false;
    }
    if (nonzero && !full) candidates.push_back(v);
    std::size_t j = 0;
    for (; j < nb; ++j) {
      if (v[j] < bd.blocks[j].second) {
        ++v[j];
        break;
      }
      v[j] = 0;
    }
    if (j == nb) break;
  }
  if (candidates.empty())
    return {ProbeVerdict::Kind::Irreducible, 0, {},
            "single block of multiplicity one; no proper reducing subspace"};

  // the isometry onto the reducing subspace selected by v
  auto iso_for = [&](const std::vector<std::size_t>& sub) {
    std::size_t cols = 0;
    for (std::size_t j = 0; j < nb; ++j) cols += bd.blocks[j].first * sub[j];
    CMatrix viso(s.ambient_dim(), cols);
    std::size_t col = 0, off = 0;
    for (std::size_t j = 0; j < nb; ++j) {
      const auto [dj, mj] = bd.blocks[j];
      for (std::size_t i = 0; i < dj; ++i)
        for (std::size_t t = 0; t < sub[j]; ++t, ++col)
          for (std::size_t r = 0; r < s.ambient_dim(); ++r)
            viso(r, col) = bd.u(r, off + i * mj + t);
      off += dj * mj;
    }
    return viso;
  };

  // certified reducible: all v_j >= 1 makes the compression injective on
  // C*(s), hence a *-isomorphism onto its image
  for (const auto& cand : candidates) {
    if (std::all_of(cand.begin(), cand.end(),
                    [](std::size_t x) { return x >= 1; })) {
      const CMatrix viso = iso_for(cand);
      const CMatrix va = viso.adjoint();
      MatSubspace compressed(viso.cols(), viso.cols(), s.tol());
      for (const auto& b : s.space().basis()) compressed.grow(va * b * viso);
      if (compressed.dim() == s.dim())
        return {ProbeVerdict::Kind::Reducible, level_cap, cand,
                "compression restricts a *-isomorphism of the generated "
                "algebra"};
    }
  }

  const auto herm = s.hermitian_basis();
  Rng rng(s.tol().seed * 0x9e3779b97f4a7c15ULL + 0xabcdefULL);
  int max_level = 1;
  bool all_separated = true;
  std::string pending;
  for (const auto& cand : candidates) {
    const CMatrix viso = iso_for(cand);
    const CMatrix va = viso.adjoint();
    MatSubspace compressed(viso.cols(), viso.cols(), s.tol());
    for (const auto& b : s.space().basis()) compressed.grow(va * b * viso);
    if (compressed.dim() < s.dim()) continue;  // exact level-1 witness:
    // a nonzero hermitian element of s compresses to 0, and its negative is
    // a non-PSD element with PSD compression

    bool separated = false;
    for (int level = 1; level <= level_cap && !separated; ++level) {
      const double gap = detail::separation_search(herm, viso,
                                                   std::size_t(level), rng);
      if (gap > 1e-6) {
        separated = true;
        max_level = std::max(max_level, level);
      }
    }
    if (!separated) {
      all_separated = false;
      pending = "no separation witness found for a reducing subspace at "
                "levels up to the cap";
    }
  }
  if (all_separated)
    return {ProbeVerdict::Kind::Irreducible, max_level, {},
            "every proper reducing subspace admits a positivity-separation "
            "witness"};
  return {ProbeVerdict::Kind::Unknown, level_cap, {}, pending};
}

}  // namespace troeq
