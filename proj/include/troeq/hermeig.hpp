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
#include <vector>

#include "troeq/matrix.hpp"

namespace troeq {

struct HermEig {
  std::vector<double> eigenvalues;  // ascending
  CMatrix u;                        // columns are eigenvectors, h = u diag u*
};

/// Eigendecomposition of a complex Hermitian matrix by cyclic Jacobi.
///
/// Each rotation zeroes h(p,q): the phase of h(p,q) is absorbed first, then
/// a real Jacobi rotation eliminates the remaining symmetric 2x2 block.
/// Deterministic; eigenvalues ascending; each eigenvector's largest-modulus
/// entry is made real positive.
inline HermEig herm_eig(const CMatrix& h, double herm_tol = 1e-9) {
  if (!h.square()) throw shape_error("herm_eig: matrix not square");
  const std::size_t n = h.rows();
  const double scale = fro_norm(h);
  if (herm_defect(h) > herm_tol * (1.0 + scale))
    throw domain_error("herm_eig: matrix not Hermitian within tolerance");

  // Work on the Hermitian average to kill roundoff asymmetry.
  CMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
  CMatrix v = CMatrix::identity(n);

  const double stop = 1e-15 * (scale > 0.0 ? scale : 1.0);
  const int max_sweeps = 64;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (std::sqrt(2.0 * off) <= stop) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cdouble apq = a(p, q);
        const double g = std::abs(apq);
        if (g <= stop / (n * n + 1.0)) continue;
        const cdouble w = apq / g;  // phase
        const double alpha = a(p, p).real();
        const double beta = a(q, q).real();
        const double tau = (beta - alpha) / (2.0 * g);
        const double t =
            (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const cdouble sw = s * w;
        const cdouble swc = s * std::conj(w);

        // Column update a <- a R with R(p,p)=c, R(p,q)=s, R(q,p)=-s conj(w),
        // R(q,q)=c conj(w), then the matching row update a <- R* a.
        for (std::size_t k = 0; k < n; ++k) {
          const cdouble akp = a(k, p);
          const cdouble akq = a(k, q);
          a(k, p) = akp * c - akq * swc;
          a(k, q) = akp * s + akq * c * std::conj(w);
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cdouble apk = a(p, k);
          const cdouble aqk = a(q, k);
          a(p, k) = c * apk - sw * aqk;
          a(q, k) = s * apk + c * w * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = cdouble{a(p, p).real(), 0.0};
        a(q, q) = cdouble{a(q, q).real(), 0.0};

        for (std::size_t k = 0; k < n; ++k) {
          const cdouble vkp = v(k, p);
          const cdouble vkq = v(k, q);
          v(k, p) = vkp * c - vkq * swc;
          v(k, q) = vkp * s + vkq * c * std::conj(w);
        }
      }
    }
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i).real();

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return eig[x] < eig[y]; });

  HermEig out;
  out.eigenvalues.resize(n);
  out.u = CMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t src = order[j];
    out.eigenvalues[j] = eig[src];
    // phase convention: largest-modulus entry real positive
    std::size_t imax = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double m = std::abs(v(i, src));
      if (m > best + 1e-15) {
        best = m;
        imax = i;
      }
    }
    cdouble phase{1.0, 0.0};
    if (best > 0.0) phase = std::conj(v(imax, src)) / best;
    for (std::size_t i = 0; i < n; ++i) out.u(i, j) = v(i, src) * phase;
  }
  return out;
}

/// Smallest eigenvalue of a Hermitian matrix.
inline double lambda_min(const CMatrix& h, double herm_tol = 1e-9) {
  if (h.rows() == 0) return 0.0;
  return herm_eig(h, herm_tol).eigenvalues.front();
}

/// f(h) for Hermitian h through the eigendecomposition.
template <typename F>
CMatrix herm_apply(const CMatrix& h, F&& f, double herm_tol = 1e-9) {
  const HermEig e = herm_eig(h, herm_tol);
  const std::size_t n = h.rows();
  CMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = f(e.eigenvalues[i]);
  return e.u * d * e.u.adjoint();
}

/// Positive-power functions with an eigenvalue floor: eigenvalues below
/// `floor` are treated as zero (pseudo-inverse behaviour).
inline CMatrix psd_inv_sqrt(const CMatrix& h, double floor) {
  return herm_apply(h, [floor](double x) {
    return x > floor ? 1.0 / std::sqrt(x) : 0.0;
  });
}

inline CMatrix psd_sqrt(const CMatrix& h, double floor) {
  return herm_apply(h, [floor](double x) {
    return x > floor ? std::sqrt(x) : 0.0;
  });
}

}  // namespace troeq
