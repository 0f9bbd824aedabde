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

#include "troeq/graph.hpp"
#include "troeq/systems.hpp"
#include "troeq/tro.hpp"

namespace troeq {

/// S_G = span{E_{i,j} : i ~= j}, dimension n + 2|E|.
inline OperatorSystem graph_system(const Graph& g, Tolerance tol = {}) {
  const std::size_t n = g.vertices();
  if (n == 0) throw domain_error("graph_system: empty vertex set");
  MatSubspace s(n, n, tol);
  for (int i = 0; i < int(n); ++i)
    for (int j = 0; j < int(n); ++j)
      if (g.closed_adjacent(i, j))
        s.grow(CMatrix::unit(n, n, std::size_t(i), std::size_t(j)));
  return OperatorSystem(std::move(s));
}

/// Inverse of graph_system on matrix-unit spans; throws not_a_graph_system
/// when the space is not spanned by a reflexive symmetric unit pattern.
inline Graph system_graph(const OperatorSystem& s) {
  const std::size_t n = s.ambient_dim();
  Graph g(n);
  std::size_t pattern_count = 0;
  for (int i = 0; i < int(n); ++i)
    for (int j = 0; j < int(n); ++j) {
      const CMatrix e = CMatrix::unit(n, n, std::size_t(i), std::size_t(j));
      if (s.space().contains(e).inside) {
        ++pattern_count;
        if (i < j) g.add_edge(i, j);
      } else if (i == j) {
        throw not_a_graph_system(
            "system_graph: diagonal unit missing at vertex " +
            std::to_string(i));
      }
    }
  if (pattern_count != s.dim())
    throw not_a_graph_system(
        "system_graph: space is not spanned by matrix units");
  return g;
}

/// M = span{E_{i,j} : f(i) = g(j)} in M_{l,r} from two surjective label
/// maps onto a common codomain.  [M* M] and [M M*] are the block-diagonal
/// algebras over the fibers of g and f.
inline TRO pattern_tro(const VertexMap& f, const VertexMap& g,
                       Tolerance tol = {}) {
  f.validate();
  g.validate();
  if (f.codomain != g.codomain)
    throw shape_error("pattern_tro: codomains differ");
  if (!f.surjective() || !g.surjective())
    throw domain_error("pattern_tro: label maps must be surjective");
  MatSubspace m(f.domain, g.domain, tol);
  for (std::size_t i = 0; i < f.domain; ++i)
    for (std::size_t j = 0; j < g.domain; ++j)
      if (f.values[i] == g.values[j]) m.grow(CMatrix::unit(f.domain, g.domain, i, j));
  return TRO(std::move(m), false);  // pattern spans are TROs by construction
}

/// Certificate that G and H are pullbacks of isomorphic graphs.
struct PullbackWitness {
  Graph quotient_g;
  Graph quotient_h;
  VertexMap map_g;  // V(G) -> V(quotient_g)
  VertexMap map_f;  // V(H) -> V(quotient_h)
  VertexMap iso;    // quotient_g -> quotient_h, bijective

  void verify(const Graph& g, const Graph& h) const {
    if (!verify_pullback(g, quotient_g, map_g))
      throw domain_error("PullbackWitness: map_g is not a pullback");
    if (!verify_pullback(h, quotient_h, map_f))
      throw domain_error("PullbackWitness: map_f is not a pullback");
    if (quotient_g.vertices() != quotient_h.vertices() ||
        !verify_pullback(quotient_g, quotient_h, iso))
      throw domain_error("PullbackWitness: iso is not an isomorphism");
    std::vector<bool> hit(quotient_h.vertices(), false);
    for (int v : iso.values) {
      if (hit[std::size_t(v)])
        throw domain_error("PullbackWitness: iso is not injective");
      hit[std::size_t(v)] = true;
    }
  }

  PullbackWitness transposed() const {
    PullbackWitness w;
    w.quotient_g = quotient_h;
    w.quotient_h = quotient_g;
    w.map_g = map_f;
    w.map_f = map_g;
    w.iso = VertexMap{iso.codomain, iso.domain,
                      std::vector<int>(iso.codomain)};
    for (std::size_t v = 0; v < iso.domain; ++v)
      w.iso.values[std::size_t(iso.values[v])] = int(v);
    return w;
  }
};

struct DeltaDecision {
  std::optional<PullbackWitness> witness;  // present iff equivalent
  Graph canonical_quotient_g;  // canonical certificates on a negative verdict
  Graph canonical_quotient_h;

  bool equivalent() const { return witness.has_value(); }
};

/// Decides Delta-equivalence of graph systems: the twin quotients are
/// computed and matched by exact isomorphism search.  A positive witness
/// always re-verifies; a negative verdict carries both canonical quotients.
inline DeltaDecision decide_delta_graphs(const Graph& g, const Graph& h) {
  auto [qg, fg] = twin_quotient(g);
  auto [qh, fh] = twin_quotient(h);
  DeltaDecision out;
  out.canonical_quotient_g = canonical_form(qg);
  out.canonical_quotient_h = canonical_form(qh);
  const auto iso = graph_isomorphism(qg, qh);
  if (!iso.has_value()) return out;
  PullbackWitness w;
  w.quotient_g = std::move(qg);
  w.quotient_h = std::move(qh);
  w.map_g = std::move(fg);
  w.map_f = std::move(fh);
  w.iso = *iso;
  w.verify(g, h);
  out.witness = std::move(w);
  return out;
}

/// The pattern TRO of a verified witness: M lives in M_{|V(H)|, |V(G)|} and
/// satisfies [M* S_H M] = S_G and [M S_G M*] = S_H.
inline TRO synthesize_graph_tro(const PullbackWitness& w, const Graph& g,
                                const Graph& h, Tolerance tol = {}) {
  w.verify(g, h);
  const VertexMap g_label = VertexMap::compose(w.iso, w.map_g);
  return pattern_tro(w.map_f, g_label, tol);
}

/// Component subsets of h whose union is Delta-equivalent to g.
struct EnvEmbedding {
  bool embeddable = false;
  std::vector<int> components;  // indices of chosen components of h
  std::vector<int> vertices;    // the vertices those components span
};

/// Searches the 2^c - 1 nonempty component subsets of h for one whose
/// induced subgraph is Delta-equivalent to g.
inline EnvEmbedding graph_env_embedding(const Graph& g, const Graph& h) {
  const std::vector<int> label = h.component_labels();
  const std::size_t ncomp = h.component_count();
  if (ncomp > 20)
    throw limit_error("graph_env_embedding: too many components");
  EnvEmbedding out;
  for (std::uint64_t mask = 1; mask < (1ULL << ncomp); ++mask) {
    std::vector<int> verts;
    for (std::size_t v = 0; v < h.vertices(); ++v)
      if (mask & (1ULL << label[v])) verts.push_back(int(v));
    if (verts.empty()) continue;
    if (decide_delta_graphs(g, h.induced(verts)).equivalent()) {
      out.embeddable = true;
      for (std::size_t c = 0; c < ncomp; ++c)
        if (mask & (1ULL << c)) out.components.push_back(int(c));
      out.vertices = std::move(verts);
      return out;
    }
  }
  return out;
}

}  // namespace troeq
