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

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "troeq/tro.hpp"

namespace troeq {

/// Trilinear map data for a context.  Conjugation evaluates in the ambient
/// matrices ([m*, t, n] = m* t n); tensor mode carries explicit values on
/// basis triples and exists for adversarial bundles.
struct TrilinearMaps {
  enum class Mode { Conjugation, Tensor } mode = Mode::Conjugation;
  // left[(i*dimT + k)*dimM + j] = S-coordinates of [m_i*, t_k, m_j]
  std::vector<std::vector<cdouble>> left;
  // right[(i*dimS + k)*dimM + j] = T-coordinates of (m_i, s_k, m_j*)
  std::vector<std::vector<cdouble>> right;
};

/// Quintuple (S, T, carrier, [.,.,.], (.,.,.)) with a positivity level cap.
struct ContextBundle {
  OperatorSystem s;
  OperatorSystem t;
  MatSubspace carrier;  // inside M_{dT, dS}
  TrilinearMaps maps;
  int level_cap = 3;

  void require_shapes() const {
    if (carrier.rows() != t.ambient_dim() || carrier.cols() != s.ambient_dim())
      throw shape_error("ContextBundle: carrier must map the S side to the T side");
  }
};

/// Builds the canonical conjugation context induced by a TRO-equivalence.
inline ContextBundle context_from_tro(const OperatorSystem& s,
                                      const OperatorSystem& t, const TRO& m,
                                      int level_cap = 3) {
  ContextBundle b{s, t, m.space(), {}, level_cap};
  b.require_shapes();
  return b;
}

/// Fills in explicit tensors matching the conjugation values, so individual
/// entries can be perturbed for defect-injection tests.
inline void tensorize(ContextBundle& b) {
  b.require_shapes();
  const auto& mb = b.carrier.basis();
  const auto& tb = b.t.space().basis();
  const auto& sb = b.s.space().basis();
  b.maps.mode = TrilinearMaps::Mode::Tensor;
  b.maps.left.assign(mb.size() * tb.size() * mb.size(), {});
  b.maps.right.assign(mb.size() * sb.size() * mb.size(), {});
  for (std::size_t i = 0; i < mb.size(); ++i)
    for (std::size_t k = 0; k < tb.size(); ++k)
      for (std::size_t j = 0; j < mb.size(); ++j)
        b.maps.left[(i * tb.size() + k) * mb.size() + j] =
            b.s.space().coords(mb[i].adjoint() * tb[k] * mb[j]);
  for (std::size_t i = 0; i < mb.size(); ++i)
    for (std::size_t k = 0; k < sb.size(); ++k)
      for (std::size_t j = 0; j < mb.size(); ++j)
        b.maps.right[(i * sb.size() + k) * mb.size() + j] =
            b.t.space().coords(mb[i] * sb[k] * mb[j].adjoint());
}

/// Evaluates the two trilinear maps of a bundle on arbitrary carrier/system
/// elements (conjugation in the ambient, or tensor contraction).
class ContextEval {
 public:
  explicit ContextEval(const ContextBundle& b) : b_(b) { b_.require_shapes(); }

  /// [m1*, t, m2] in S.
  CMatrix left(const CMatrix& m1, const CMatrix& t, const CMatrix& m2) const {
    if (b_.maps.mode == TrilinearMaps::Mode::Conjugation)
      return m1.adjoint() * t * m2;
    const auto c1 = b_.carrier.coords(m1);
    const auto c2 = b_.carrier.coords(m2);
    const auto ct = b_.t.space().coords(t);
    const std::size_t dm = b_.carrier.dim(), dt = b_.t.dim();
    std::vector<cdouble> acc(b_.s.dim(), cdouble{0, 0});
    for (std::size_t i = 0; i < dm; ++i) {
      const cdouble a = std::conj(c1[i]);  // the first slot enters adjointed
      if (a == cdouble{0, 0}) continue;
      for (std::size_t k = 0; k < dt; ++k) {
        const cdouble at = a * ct[k];
        if (at == cdouble{0, 0}) continue;
        for (std::size_t j = 0; j < dm; ++j) {
          const cdouble f = at * c2[j];
          if (f == cdouble{0, 0}) continue;
          const auto& val = b_.maps.left[(i * dt + k) * dm + j];
          for (std::size_t u = 0; u < acc.size(); ++u) acc[u] += f * val[u];
        }
      }
    }
    return b_.s.space().from_coords(acc);
  }

  /// (m1, s, m2*) in T.
  CMatrix right(const CMatrix& m1, const CMatrix& s, const CMatrix& m2) const {
    if (b_.maps.mode == TrilinearMaps::Mode::Conjugation)
      return m1 * s * m2.adjoint();
    const auto c1 = b_.carrier.coords(m1);
    const auto c2 = b_.carrier.coords(m2);
    const auto cs = b_.s.space().coords(s);
    const std::size_t dm = b_.carrier.dim(), ds = b_.s.dim();
    std::vector<cdouble> acc(b_.t.dim(), cdouble{0, 0});
    for (std::size_t i = 0; i < dm; ++i) {
      if (c1[i] == cdouble{0, 0}) continue;
      for (std::size_t k = 0; k < ds; ++k) {
        const cdouble at = c1[i] * cs[k];
        if (at == cdouble{0, 0}) continue;
        for (std::size_t j = 0; j < dm; ++j) {
          const cdouble f = at * std::conj(c2[j]);  // third slot adjointed
          if (f == cdouble{0, 0}) continue;
          const auto& val = b_.maps.right[(i * ds + k) * dm + j];
          for (std::size_t u = 0; u < acc.size(); ++u) acc[u] += f * val[u];
        }
      }
    }
    return b_.t.space().from_coords(acc);
  }

  /// Lifted [A*, P, B] at entry level: A, B are grids of carrier elements
  /// (m rows, n cols), P an m x m grid of T elements.
  CMatrix left_lifted(const std::vector<std::vector<CMatrix>>& a,
                      const std::vector<std::vector<CMatrix>>& p,
                      const std::vector<std::vector<CMatrix>>& bgrid) const {
    const std::size_t m = a.size(), n = a.front().size();
    const std::size_t ds = b_.s.ambient_dim();
    CMatrix out(n * ds, n * ds);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        CMatrix cell(ds, ds);
        for (std::size_t k = 0; k < m; ++k)
          for (std::size_t l = 0; l < m; ++l)
            cell += left(a[k][i], p[k][l], bgrid[l][j]);
        for (std::size_t r = 0; r < ds; ++r)
          for (std::size_t c = 0; c < ds; ++c)
            out(i * ds + r, j * ds + c) = cell(r, c);
      }
    return out;
  }

  CMatrix right_lifted(const std::vector<std::vector<CMatrix>>& a,
                       const std::vector<std::vector<CMatrix>>& p,
                       const std::vector<std::vector<CMatrix>>& bgrid) const {
    const std::size_t m = a.size(), n = a.front().size();
    const std::size_t dt = b_.t.ambient_dim();
    CMatrix out(n * dt, n * dt);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        CMatrix cell(dt, dt);
        for (std::size_t k = 0; k < m; ++k)
          for (std::size_t l = 0; l < m; ++l)
            cell += right(a[k][i], p[k][l], bgrid[l][j]);
        for (std::size_t r = 0; r < dt; ++r)
          for (std::size_t c = 0; c < dt; ++c)
            out(i * dt + r, j * dt + c) = cell(r, c);
      }
    return out;
  }

 private:
  const ContextBundle& b_;
};

namespace detail {

inline CMatrix random_element(const MatSubspace& sp, Rng& rng) {
  CMatrix out(sp.rows(), sp.cols());
  for (const auto& b : sp.basis()) {
    CMatrix t = b;
    t *= rng.cgauss() * cdouble{0.5, 0.0};
    out += t;
  }
  return out;
}

/// Random Hermitian element of M_n(V) shifted to be PSD, returned as a grid
/// of V elements.
inline std::vector<std::vector<CMatrix>> random_psd_grid(
    const MatSubspace& v, std::size_t n, Rng& rng) {
  std::vector<std::vector<CMatrix>> grid(n, std::vector<CMatrix>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) grid[i][j] = random_element(v, rng);
  // hermitize blockwise
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const CMatrix h = (grid[i][j] + grid[j][i].adjoint()) * cdouble{0.5, 0};
      grid[i][j] = h;
      grid[j][i] = h.adjoint();
    }
  // assemble, shift by the bottom eigenvalue
  const std::size_t d = v.rows();
  CMatrix big(n * d, n * d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
          big(i * d + r, j * d + c) = grid[i][j](r, c);
  const double lm = lambda_min(big, 1e-6);
  if (lm < 0.0) {
    const CMatrix id = CMatrix::identity(d);
    for (std::size_t i = 0; i < n; ++i) grid[i][i] += id * cdouble{-lm, 0.0};
  }
  return grid;
}

inline std::vector<std::vector<CMatrix>> random_grid(const MatSubspace& v,
                                                     std::size_t rows,
                                                     std::size_t cols,
                                                     Rng& rng) {
  std::vector<std::vector<CMatrix>> grid(rows, std::vector<CMatrix>(cols));
  for (auto& row : grid)
    for (auto& cell : row) cell = random_element(v, rng);
  return grid;
}

inline double op_norm(const CMatrix& x) {
  if (x.rows() == 0 || x.cols() == 0) return 0.0;
  const HermEig e = herm_eig(x.adjoint() * x, 1e-6);
  return std::sqrt(std::max(0.0, e.eigenvalues.back()));
}

/// Distance-to-PSD proxy: hermiticity defect plus the negative part of the
/// hermitian component.  Stays finite on arbitrary (defective) outputs.
inline double psd_defect(const CMatrix& x) {
  const CMatrix h = (x + x.adjoint()) * cdouble{0.5, 0.0};
  const double hd = fro_norm(x - h);
  double neg = 0.0;
  if (h.rows() > 0)
    neg = std::max(0.0, -herm_eig(h, 1e30).eigenvalues.front());
  return std::max(hd, neg);
}

/// Deterministic tuple source: all basis tuples when the basis is small,
/// otherwise seeded random combinations.
class TupleSource {
 public:
  TupleSource(const MatSubspace& sp, Rng& rng, std::size_t samples)
      : sp_(sp), rng_(rng), samples_(samples) {}

  template <typename F>
  void for_pairs(F&& f) const {
    if (sp_.dim() * sp_.dim() <= samples_) {
      for (const auto& a : sp_.basis())
        for (const auto& b : sp_.basis()) f(a, b);
    } else {
      for (std::size_t i = 0; i < samples_; ++i)
        f(random_element(sp_, rng_), random_element(sp_, rng_));
    }
  }

 private:
  const MatSubspace& sp_;
  Rng& rng_;
  std::size_t samples_;
};

}  // namespace detail

/// Axiom-by-axiom verification of a Delta-context.
///
/// Conjugation maps are completely positive and contractive by construction,
/// so those entries verify exactly; tensor-mode maps are sampled at matrix
/// levels up to the cap (200 seeded PSD samples per level).
inline VerificationReport verify_delta_context(const ContextBundle& b) {
  b.require_shapes();
  const ContextEval ev(b);
  const Tolerance tol = b.carrier.tol();
  const double gate = tol.rank_gate(1.0);
  Rng rng(tol.seed * 0x9e3779b97f4a7c15ULL + 0x5eedULL);
  VerificationReport rep;

  // axiom (i): carrier is a TRO with unital linked algebras
  const TroReport tro = verify_tro(b.carrier);
  rep.add("carrier_tro", tro.report.find("tro_closure")->pass,
          tro.report.find("tro_closure")->residual,
          tro.report.find("tro_closure")->pass ? "" : "M M* M escapes M");
  rep.add("side_algebras_unital",
          tro.report.find("nondegenerate_right")->pass &&
              tro.report.find("nondegenerate_left")->pass,
          std::max(tro.report.find("nondegenerate_right")->residual,
                   tro.report.find("nondegenerate_left")->residual),
          "a linked algebra misses its unit");

  // axiom (ii): bimodule inclusions
  {
    const MatSubspace& rs = tro.right_algebra;
    const MatSubspace& ls = tro.left_algebra;
    const double r1 = std::max(
        b.s.space().containment_residual(product_span(rs, b.s.space())),
        b.s.space().containment_residual(product_span(b.s.space(), rs)));
    rep.add_residual("s_bimodule", r1, gate, "[M*M] S or S [M*M] escapes S");
    const double r2 = std::max(
        b.t.space().containment_residual(product_span(ls, b.t.space())),
        b.t.space().containment_residual(product_span(b.t.space(), ls)));
    rep.add_residual("t_bimodule", r2, gate, "[MM*] T or T [MM*] escapes T");
  }

  // ranges of the trilinear maps
  {
    double worst = 0.0;
    for (const auto& m1 : b.carrier.basis())
      for (const auto& tb : b.t.space().basis())
        for (const auto& m2 : b.carrier.basis())
          worst = std::max(
              worst, b.s.space().contains(ev.left(m1, tb, m2)).residual);
    rep.add_residual("left_range", worst, gate, "[M*, T, M] escapes S");
    worst = 0.0;
    for (const auto& m1 : b.carrier.basis())
      for (const auto& sb : b.s.space().basis())
        for (const auto& m2 : b.carrier.basis())
          worst = std::max(
              worst, b.t.space().contains(ev.right(m1, sb, m2)).residual);
    rep.add_residual("right_range", worst, gate, "(M, S, M*) escapes T");
  }

  // axiom (iii): complete positivity and contractivity at tested levels
  if (b.maps.mode == TrilinearMaps::Mode::Conjugation) {
    rep.add("left_cp", true, 0.0, "");
    rep.add("right_cp", true, 0.0, "");
    rep.add("left_contractive", true, 0.0, "");
    rep.add("right_contractive", true, 0.0, "");
  } else {
    double worst_cp_l = 0.0, worst_cp_r = 0.0;
    double worst_con_l = 0.0, worst_con_r = 0.0;
    for (int level = 1; level <= b.level_cap; ++level) {
      for (int sample = 0; sample < 200; ++sample) {
        const auto a = detail::random_grid(b.carrier, level, level, rng);
        const auto pt = detail::random_psd_grid(b.t.space(), level, rng);
        const CMatrix outl = ev.left_lifted(a, pt, a);
        worst_cp_l = std::max(worst_cp_l, detail::psd_defect(outl));
        const auto ps = detail::random_psd_grid(b.s.space(), level, rng);
        const CMatrix outr = ev.right_lifted(a, ps, a);
        worst_cp_r = std::max(worst_cp_r, detail::psd_defect(outr));
        if (sample < 20) {
          // contractivity on the same draws
          auto big = [&](const std::vector<std::vector<CMatrix>>& grid) {
            const std::size_t rr = grid.size(), cc = grid.front().size();
            const std::size_t dr = grid.front().front().rows();
            const std::size_t dc = grid.front().front().cols();
            CMatrix out(rr * dr, cc * dc);
            for (std::size_t i = 0; i < rr; ++i)
              for (std::size_t j = 0; j < cc; ++j)
                for (std::size_t r = 0; r < dr; ++r)
                  for (std::size_t c = 0; c < dc; ++c)
                    out(i * dr + r, j * dc + c) = grid[i][j](r, c);
            return out;
          };
          const double na = detail::op_norm(big(a));
          const double bound_l = na * na * detail::op_norm(big(pt));
          worst_con_l =
              std::max(worst_con_l, detail::op_norm(outl) - bound_l);
          const double bound_r = na * na * detail::op_norm(big(ps));
          worst_con_r =
              std::max(worst_con_r, detail::op_norm(outr) - bound_r);
        }
      }
    }
    const double cp_gate = 1e-7;
    rep.add_residual("left_cp", worst_cp_l, cp_gate,
                     "a sampled PSD input maps to a non-PSD output");
    rep.add_residual("right_cp", worst_cp_r, cp_gate,
                     "a sampled PSD input maps to a non-PSD output");
    rep.add_residual("left_contractive", worst_con_l, cp_gate,
                     "norm bound violated at a tested level");
    rep.add_residual("right_contractive", worst_con_r, cp_gate,
                     "norm bound violated at a tested level");
  }

  const detail::TupleSource pairs(b.carrier, rng, 144);

  // axiom (iii): modularity on the outer variables
  {
    double worst = 0.0;
    const auto& rs = tro.right_algebra;
    const auto& ls = tro.left_algebra;
    std::size_t budget = 0;
    pairs.for_pairs([&](const CMatrix& m1, const CMatrix& m2) {
      if (budget++ > 64) return;
      for (const auto& a : rs.basis())
        for (const auto& tb : b.t.space().basis()) {
          const CMatrix lhs = ev.left(m1 * a.adjoint(), tb, m2);
          const CMatrix rhs = a * ev.left(m1, tb, m2);
          worst = std::max(worst, fro_norm(lhs - rhs) /
                                      (1.0 + fro_norm(lhs) + fro_norm(rhs)));
          const CMatrix lhs2 = ev.left(m1, tb, m2 * a);
          const CMatrix rhs2 = ev.left(m1, tb, m2) * a;
          worst = std::max(worst, fro_norm(lhs2 - rhs2) /
                                      (1.0 + fro_norm(lhs2) + fro_norm(rhs2)));
        }
      for (const auto& c : ls.basis())
        for (const auto& sb : b.s.space().basis()) {
          const CMatrix lhs = ev.right(c * m1, sb, m2);
          const CMatrix rhs = c * ev.right(m1, sb, m2);
          worst = std::max(worst, fro_norm(lhs - rhs) /
                                      (1.0 + fro_norm(lhs) + fro_norm(rhs)));
          const CMatrix lhs2 = ev.right(m1, sb, c.adjoint() * m2);
          const CMatrix rhs2 = ev.right(m1, sb, m2) * c;
          worst = std::max(worst, fro_norm(lhs2 - rhs2) /
                                      (1.0 + fro_norm(lhs2) + fro_norm(rhs2)));
        }
    });
    rep.add_residual("outer_modularity", worst, gate,
                     "a module action does not pull out of the outer slot");
  }

  // axiom (iv): associativity
  {
    double worst = 0.0;
    for (int trial = 0; trial < 40; ++trial) {
      const CMatrix m1 = detail::random_element(b.carrier, rng);
      const CMatrix m2 = detail::random_element(b.carrier, rng);
      const CMatrix m3 = detail::random_element(b.carrier, rng);
      const CMatrix m4 = detail::random_element(b.carrier, rng);
      const CMatrix tb = detail::random_element(b.t.space(), rng);
      const CMatrix sb = detail::random_element(b.s.space(), rng);
      const CMatrix lhs1 = ev.right(m1, ev.left(m2, tb, m3), m4);
      const CMatrix rhs1 = (m1 * m2.adjoint()) * tb * (m3 * m4.adjoint());
      worst = std::max(worst, fro_norm(lhs1 - rhs1) /
                                  (1.0 + fro_norm(lhs1) + fro_norm(rhs1)));
      const CMatrix lhs2 = ev.left(m1, ev.right(m2, sb, m3), m4);
      const CMatrix rhs2 = (m1.adjoint() * m2) * sb * (m3.adjoint() * m4);
      worst = std::max(worst, fro_norm(lhs2 - rhs2) /
                                  (1.0 + fro_norm(lhs2) + fro_norm(rhs2)));
    }
    rep.add_residual("associativity", worst, gate,
                     "the associativity relations fail on sampled tuples");
  }

  // unit relations
  {
    const CMatrix is = CMatrix::identity(b.s.ambient_dim());
    const CMatrix it = CMatrix::identity(b.t.ambient_dim());
    double worst_r = 0.0, worst_l = 0.0;
    std::string wit_r, wit_l;
    std::size_t idx = 0;
    pairs.for_pairs([&](const CMatrix& m1, const CMatrix& m2) {
      const CMatrix lhs = ev.right(m1, is, m2);
      const CMatrix rhs = m1 * m2.adjoint();
      const double r =
          fro_norm(lhs - rhs) / (1.0 + fro_norm(lhs) + fro_norm(rhs));
      if (r > worst_r) {
        worst_r = r;
        wit_r = "(m, 1_S, n*) != m n* at carrier pair " + std::to_string(idx);
      }
      const CMatrix lhs2 = ev.left(m1, it, m2);
      const CMatrix rhs2 = m1.adjoint() * m2;
      const double r2 =
          fro_norm(lhs2 - rhs2) / (1.0 + fro_norm(lhs2) + fro_norm(rhs2));
      if (r2 > worst_l) {
        worst_l = r2;
        wit_l = "[m*, 1_T, n] != m* n at carrier pair " + std::to_string(idx);
      }
      ++idx;
    });
    rep.add_residual("eq_move_right", worst_r, gate, wit_r);
    rep.add_residual("eq_move_left", worst_l, gate, wit_l);
  }

  // the six derived identities
  {
    const CMatrix is = CMatrix::identity(b.s.ambient_dim());
    const CMatrix it = CMatrix::identity(b.t.ambient_dim());
    double worst = 0.0;
    for (int trial = 0; trial < 24; ++trial) {
      const CMatrix m1 = detail::random_element(b.carrier, rng);
      const CMatrix m2 = detail::random_element(b.carrier, rng);
      const CMatrix m3 = detail::random_element(b.carrier, rng);
      const CMatrix n1 = detail::random_element(b.carrier, rng);
      const CMatrix n2 = detail::random_element(b.carrier, rng);
      const CMatrix n3 = detail::random_element(b.carrier, rng);
      const CMatrix tb = detail::random_element(b.t.space(), rng);
      const CMatrix sb = detail::random_element(b.s.space(), rng);
      auto rel = [&](const CMatrix& lhs, const CMatrix& rhs) {
        worst = std::max(worst, fro_norm(lhs - rhs) /
                                    (1.0 + fro_norm(lhs) + fro_norm(rhs)));
      };
      // (i)
      rel(ev.left(m1, ev.right(m2, ev.left(m3, tb, n3), n2), n1),
          ev.left(m3 * m2.adjoint() * m1, tb, n3 * n2.adjoint() * n1));
      // (ii)
      rel(ev.right(m1, ev.left(m2, ev.right(m3, sb, n3), n2), n1),
          ev.right(m1 * m2.adjoint() * m3, sb, n1 * n2.adjoint() * n3));
      // (iii)
      rel(ev.right(m1, is, m2), it * m1 * m2.adjoint());
      // (iv)
      rel(ev.left(m1, it, m2), is * m1.adjoint() * m2);
      // (v)
      rel(ev.left(m1, ev.right(m2, is, n2), n1),
          ev.left(m1, it, m2 * n2.adjoint() * n1));
      rel(ev.left(m1, ev.right(m2, is, n2), n1),
          ev.left(n2 * m2.adjoint() * m1, it, n1));
      // (vi)
      rel(ev.right(m1, ev.left(m2, it, n2), n1),
          ev.right(m1, is, n1 * n2.adjoint() * m2));
      rel(ev.right(m1, ev.left(m2, it, n2), n1),
          ev.right(m1 * m2.adjoint() * n2, is, n1));
    }
    rep.add_residual("derived_identities", worst, gate,
                     "a derived unit identity fails on sampled tuples");
  }

  return rep;
}

/// Axiom-by-axiom verification of a bihomomorphism context, including exact
/// finite semi-units realized inside the carrier.
inline VerificationReport verify_bihom_context(const ContextBundle& b) {
  b.require_shapes();
  const ContextEval ev(b);
  const Tolerance tol = b.carrier.tol();
  const double gate = tol.rank_gate(1.0);
  Rng rng(tol.seed * 0x9e3779b97f4a7c15ULL + 0xb1f0ULL);
  VerificationReport rep;

  const MatSubspace xadj = adjoint_space(b.carrier);
  const MatSubspace xx = product_span(xadj, b.carrier);
  const MatSubspace xxa = product_span(b.carrier, xadj);
  const bool nd_right = xx.contains(CMatrix::identity(b.carrier.cols())).inside;
  const bool nd_left = xxa.contains(CMatrix::identity(b.carrier.rows())).inside;
  rep.add("nondegenerate", nd_right && nd_left,
          std::max(xx.contains(CMatrix::identity(b.carrier.cols())).residual,
                   xxa.contains(CMatrix::identity(b.carrier.rows())).residual),
          nd_right ? (nd_left ? "" : "identity not in [X X*]")
                   : "identity not in [X* X]");

  // axiom (ii): cp maps whose unit slices land in the multiplier algebras
  const StarAlgebra as = multiplier_algebra(b.s);
  const StarAlgebra at = multiplier_algebra(b.t);
  {
    const CMatrix is = CMatrix::identity(b.s.ambient_dim());
    const CMatrix it = CMatrix::identity(b.t.ambient_dim());
    double worst_l = 0.0, worst_r = 0.0;
    for (const auto& x1 : b.carrier.basis())
      for (const auto& x2 : b.carrier.basis()) {
        worst_l = std::max(worst_l,
                           as.space().contains(ev.left(x1, it, x2)).residual);
        worst_r = std::max(worst_r,
                           at.space().contains(ev.right(x1, is, x2)).residual);
      }
    rep.add_residual("left_multiplier_range", worst_l, gate,
                     "[X*, 1_T, X] escapes A_S");
    rep.add_residual("right_multiplier_range", worst_r, gate,
                     "(X, 1_S, X*) escapes A_T");
  }

  if (b.maps.mode == TrilinearMaps::Mode::Conjugation) {
    rep.add("left_cp", true, 0.0, "");
    rep.add("right_cp", true, 0.0, "");
    rep.add("contractive", true, 0.0, "");
  } else {
    double worst_cp_l = 0.0, worst_cp_r = 0.0, worst_con = 0.0;
    auto big = [&](const std::vector<std::vector<CMatrix>>& grid) {
      const std::size_t rr = grid.size(), cc = grid.front().size();
      const std::size_t dr = grid.front().front().rows();
      const std::size_t dc = grid.front().front().cols();
      CMatrix out(rr * dr, cc * dc);
      for (std::size_t i = 0; i < rr; ++i)
        for (std::size_t j = 0; j < cc; ++j)
          for (std::size_t r = 0; r < dr; ++r)
            for (std::size_t c = 0; c < dc; ++c)
              out(i * dr + r, j * dc + c) = grid[i][j](r, c);
      return out;
    };
    for (int level = 1; level <= b.level_cap; ++level)
      for (int sample = 0; sample < 100; ++sample) {
        const auto a = detail::random_grid(b.carrier, level, level, rng);
        const auto pt = detail::random_psd_grid(b.t.space(), level, rng);
        const CMatrix outl = ev.left_lifted(a, pt, a);
        worst_cp_l = std::max(worst_cp_l, detail::psd_defect(outl));
        const auto ps = detail::random_psd_grid(b.s.space(), level, rng);
        const CMatrix outr = ev.right_lifted(a, ps, a);
        worst_cp_r = std::max(worst_cp_r, detail::psd_defect(outr));
        if (sample < 10) {
          const double na = detail::op_norm(big(a));
          worst_con = std::max(
              worst_con,
              detail::op_norm(outl) - na * na * detail::op_norm(big(pt)));
          worst_con = std::max(
              worst_con,
              detail::op_norm(outr) - na * na * detail::op_norm(big(ps)));
        }
      }
    rep.add_residual("left_cp", worst_cp_l, 1e-7,
                     "a sampled PSD input maps to a non-PSD output");
    rep.add_residual("right_cp", worst_cp_r, 1e-7,
                     "a sampled PSD input maps to a non-PSD output");
    rep.add_residual("contractive", worst_con, 1e-7,
                     "norm bound violated at a tested level");
  }

  // axiom (iii): associativity through the unit slices
  {
    const CMatrix is = CMatrix::identity(b.s.ambient_dim());
    const CMatrix it = CMatrix::identity(b.t.ambient_dim());
    double worst = 0.0;
    for (int trial = 0; trial < 40; ++trial) {
      const CMatrix x1 = detail::random_element(b.carrier, rng);
      const CMatrix x2 = detail::random_element(b.carrier, rng);
      const CMatrix x3 = detail::random_element(b.carrier, rng);
      const CMatrix x4 = detail::random_element(b.carrier, rng);
      const CMatrix sb = detail::random_element(b.s.space(), rng);
      const CMatrix tb = detail::random_element(b.t.space(), rng);
      const CMatrix lhs1 = ev.left(x1, ev.right(x2, sb, x3), x4);
      const CMatrix rhs1 = ev.left(x1, it, x2) * sb * ev.left(x3, it, x4);
      worst = std::max(worst, fro_norm(lhs1 - rhs1) /
                                  (1.0 + fro_norm(lhs1) + fro_norm(rhs1)));
      const CMatrix lhs2 = ev.right(x1, ev.left(x2, tb, x3), x4);
      const CMatrix rhs2 = ev.right(x1, is, x2) * tb * ev.right(x3, is, x4);
      worst = std::max(worst, fro_norm(lhs2 - rhs2) /
                                  (1.0 + fro_norm(lhs2) + fro_norm(rhs2)));
    }
    rep.add_residual("associativity", worst, gate,
                     "an associativity relation fails on sampled tuples");
  }

  // exact finite semi-units: columns over X with sum [x_i*, 1_T, y_i] = 1_S
  // and rows over X with sum (z_i, 1_S, w_i*) = 1_T
  {
    const CMatrix is = CMatrix::identity(b.s.ambient_dim());
    const CMatrix it = CMatrix::identity(b.t.ambient_dim());
    bool built = false;
    double res_l = 1.0, res_r = 1.0;
    try {
      std::vector<std::pair<CMatrix, CMatrix>> lpairs, rpairs;
      const MatSubspace triple =
          conj_span(b.carrier, adjoint_space(b.carrier), b.carrier);
      if (b.carrier.contains_space(triple)) {
        // the carrier is a TRO: quasi-units give one-sided exact families
        const TRO m(b.carrier, false);
        for (const auto& q : quasi_unit(m, QuasiUnitSide::Right))
          lpairs.emplace_back(q, q);
        for (const auto& q : quasi_unit(m, QuasiUnitSide::Left))
          rpairs.emplace_back(q, q);
      } else {
        // linear solve inside the carrier for sum x_i* y_i = I
        const KrausWitness kw = kraus_witness_from_space(b.carrier, b.t, b.s);
        for (std::size_t i = 0; i < kw.a.size(); ++i)
          lpairs.emplace_back(kw.a[i], kw.b[i]);
        const KrausWitness kw2 = kraus_witness_from_space(
            adjoint_space(b.carrier), b.s, b.t);
        for (std::size_t i = 0; i < kw2.a.size(); ++i)
          rpairs.emplace_back(kw2.a[i].adjoint(), kw2.b[i].adjoint());
      }
      CMatrix suml(b.s.ambient_dim(), b.s.ambient_dim());
      for (const auto& [x, y] : lpairs) suml += ev.left(x, it, y);
      res_l = fro_norm(suml - is);
      CMatrix sumr(b.t.ambient_dim(), b.t.ambient_dim());
      for (const auto& [z, w] : rpairs) sumr += ev.right(z, is, w);
      res_r = fro_norm(sumr - it);
      built = true;
    } catch (const error&) {
      built = false;
    }
    rep.add("semi_unit_left", built && res_l <= gate, built ? res_l : 1.0,
            built ? "" : "no finite semi-unit could be constructed");
    rep.add("semi_unit_right", built && res_r <= gate, built ? res_r : 1.0,
            built ? "" : "no finite semi-unit could be constructed");
  }

  return rep;
}

}  // namespace troeq
