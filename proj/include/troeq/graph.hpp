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
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "troeq/errors.hpp"

namespace troeq {

/// Finite simple undirected graph on vertices 0..n-1.  The derived relation
/// of interest is adjacency-or-equality; loops are never stored.
class Graph {
 public:
  Graph() = default;

  explicit Graph(std::size_t n) : n_(n), adj_(n * n, false) {}

  static Graph from_edges(std::size_t n,
                          const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [i, j] : edges) g.add_edge(i, j);
    return g;
  }

  static Graph complete(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) g.add_edge(int(i), int(j));
    return g;
  }

  static Graph cycle(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 0; i < n; ++i)
      g.add_edge(int(i), int((i + 1) % n));
    return g;
  }

  static Graph path(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(int(i), int(i + 1));
    return g;
  }

  std::size_t vertices() const { return n_; }

  void add_edge(int i, int j) {
    check_vertex(i);
    check_vertex(j);
    if (i == j) throw domain_error("Graph: loops are not allowed");
    adj_[std::size_t(i) * n_ + std::size_t(j)] = true;
    adj_[std::size_t(j) * n_ + std::size_t(i)] = true;
  }

  bool adjacent(int i, int j) const {
    check_vertex(i);
    check_vertex(j);
    return adj_[std::size_t(i) * n_ + std::size_t(j)];
  }

  /// i ~= j: adjacent or equal.
  bool closed_adjacent(int i, int j) const {
    return i == j || adjacent(i, j);
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < int(n_); ++i)
      for (int j = i + 1; j < int(n_); ++j)
        if (adjacent(i, j)) out.emplace_back(i, j);
    return out;
  }

  std::size_t edge_count() const { return edges().size(); }

  std::size_t degree(int i) const {
    std::size_t d = 0;
    for (int j = 0; j < int(n_); ++j)
      if (adjacent(i, j)) ++d;
    return d;
  }

  /// Closed neighborhood N[i] as a sorted vertex list.
  std::vector<int> closed_neighborhood(int i) const {
    std::vector<int> out;
    for (int j = 0; j < int(n_); ++j)
      if (closed_adjacent(i, j)) out.push_back(j);
    return out;
  }

  /// Component index per vertex, components numbered by first vertex.
  std::vector<int> component_labels() const {
    std::vector<int> label(n_, -1);
    int next = 0;
    for (int start = 0; start < int(n_); ++start) {
      if (label[start] >= 0) continue;
      std::vector<int> stack{start};
      label[start] = next;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < int(n_); ++w)
          if (adjacent(v, w) && label[w] < 0) {
            label[w] = next;
            stack.push_back(w);
          }
      }
      ++next;
    }
    return label;
  }

  std::size_t component_count() const {
    const auto l = component_labels();
    return l.empty() ? 0 : std::size_t(*std::max_element(l.begin(), l.end())) + 1;
  }

  /// Induced subgraph on the given (sorted or not) vertex list.
  Graph induced(const std::vector<int>& verts) const {
    Graph g(verts.size());
    for (std::size_t a = 0; a < verts.size(); ++a)
      for (std::size_t b = a + 1; b < verts.size(); ++b)
        if (adjacent(verts[a], verts[b])) g.add_edge(int(a), int(b));
    return g;
  }

  Graph relabel(const std::vector<int>& perm) const {
    // perm[old] = new
    Graph g(n_);
    for (auto [i, j] : edges()) g.add_edge(perm[i], perm[j]);
    return g;
  }

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && adj_ == o.adj_;
  }

 private:
  void check_vertex(int i) const {
    if (i < 0 || std::size_t(i) >= n_)
      throw shape_error("Graph: vertex out of range");
  }

  std::size_t n_ = 0;
  std::vector<bool> adj_;
};

/// Total map between vertex sets.
struct VertexMap {
  std::size_t domain = 0;
  std::size_t codomain = 0;
  std::vector<int> values;  // values[x] in [0, codomain)

  static VertexMap identity(std::size_t n) {
    VertexMap f{n, n, std::vector<int>(n)};
    std::iota(f.values.begin(), f.values.end(), 0);
    return f;
  }

  int operator()(int x) const {
    if (x < 0 || std::size_t(x) >= domain)
      throw shape_error("VertexMap: argument out of range");
    return values[std::size_t(x)];
  }

  void validate() const {
    if (values.size() != domain)
      throw shape_error("VertexMap: wrong number of values");
    for (int v : values)
      if (v < 0 || std::size_t(v) >= codomain)
        throw shape_error("VertexMap: value out of range");
  }

  bool surjective() const {
    std::vector<bool> hit(codomain, false);
    for (int v : values) hit[std::size_t(v)] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
  }

  /// g o f, with f applied first.
  static VertexMap compose(const VertexMap& g, const VertexMap& f) {
    if (f.codomain != g.domain)
      throw shape_error("VertexMap: composition mismatch");
    VertexMap h{f.domain, g.codomain, std::vector<int>(f.domain)};
    for (std::size_t x = 0; x < f.domain; ++x)
      h.values[x] = g.values[std::size_t(f.values[x])];
    return h;
  }
};

/// True iff x ~= x' in g exactly when f(x) ~= f(x') in k.
inline bool verify_pullback(const Graph& g, const Graph& k,
                            const VertexMap& f) {
  f.validate();
  if (f.domain != g.vertices() || f.codomain != k.vertices())
    throw shape_error("verify_pullback: map does not match the graphs");
  for (int x = 0; x < int(g.vertices()); ++x)
    for (int y = 0; y < int(g.vertices()); ++y)
      if (g.closed_adjacent(x, y) != k.closed_adjacent(f(x), f(y)))
        return false;
  return true;
}

/// Collapses classes of equal closed neighborhoods (true twins).  Returns
/// the quotient and the class map; the input is a pullback of the quotient
/// via that map, and the quotient is twin-free.
inline std::pair<Graph, VertexMap> twin_quotient(const Graph& g) {
  const std::size_t n = g.vertices();
  std::vector<int> cls(n, -1);
  std::vector<int> reps;
  for (int v = 0; v < int(n); ++v) {
    const auto nv = g.closed_neighborhood(v);
    bool found = false;
    for (std::size_t c = 0; c < reps.size() && !found; ++c)
      if (g.closed_neighborhood(reps[c]) == nv) {
        cls[std::size_t(v)] = int(c);
        found = true;
      }
    if (!found) {
      cls[std::size_t(v)] = int(reps.size());
      reps.push_back(v);
    }
  }
  Graph q(reps.size());
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = a + 1; b < reps.size(); ++b)
      if (g.adjacent(reps[a], reps[b])) q.add_edge(int(a), int(b));
  VertexMap f{n, reps.size(), cls};
  return {q, f};
}

// ---------------------------------------------------------------------------
// canonical labeling by individualization-refinement
// ---------------------------------------------------------------------------

namespace detail {

/// Iterated neighborhood refinement of a coloring; colors are renumbered
/// 0..k-1 in order of (old color, neighbor color multiset).
inline std::vector<int> refine_colors(const Graph& g, std::vector<int> color) {
  const std::size_t n = g.vertices();
  while (true) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<int> nb;
      nb.push_back(color[v]);
      std::vector<int> ncol;
      for (std::size_t w = 0; w < n; ++w)
        if (g.adjacent(int(v), int(w))) ncol.push_back(color[w]);
      std::sort(ncol.begin(), ncol.end());
      nb.insert(nb.end(), ncol.begin(), ncol.end());
      sig[v] = {std::move(nb), int(v)};
    }
    std::map<std::vector<int>, int> renum;
    for (const auto& s : sig) renum.emplace(s.first, 0);
    int next = 0;
    for (auto& kv : renum) kv.second = next++;
    std::vector<int> fresh(n);
    for (std::size_t v = 0; v < n; ++v) fresh[v] = renum[sig[v].first];
    if (fresh == color) return color;
    color = std::move(fresh);
  }
}

struct CanonState {
  const Graph* g = nullptr;
  std::vector<int> best_perm;      // old -> new
  std::vector<std::uint8_t> best;  // adjacency string of the best labeling
  bool have_best = false;
  long nodes = 0;
  long node_budget = 2000000;
};

inline std::vector<std::uint8_t> adjacency_string(const Graph& g,
                                                  const std::vector<int>& perm) {
  const std::size_t n = g.vertices();
  std::vector<int> inv(n);
  for (std::size_t v = 0; v < n; ++v) inv[std::size_t(perm[v])] = int(v);
  std::vector<std::uint8_t> s;
  s.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      s.push_back(g.adjacent(inv[i], inv[j]) ? 1 : 0);
  return s;
}

inline void canon_search(CanonState& st, const std::vector<int>& color) {
  if (++st.nodes > st.node_budget)
    throw limit_error("canonical_labeling: search budget exceeded");
  const Graph& g = *st.g;
  const std::size_t n = g.vertices();

  // find the first smallest non-singleton color class
  int target_color = -1;
  std::size_t target_size = n + 1;
  std::vector<std::size_t> count(n, 0);
  for (int c : color) ++count[std::size_t(c)];
  for (std::size_t c = 0; c < n; ++c)
    if (count[c] >= 2 && count[c] < target_size) {
      target_size = count[c];
      target_color = int(c);
    }

  if (target_color < 0) {
    // discrete: the coloring is a labeling
    std::vector<int> perm(n);
    for (std::size_t v = 0; v < n; ++v) perm[v] = color[v];
    auto s = adjacency_string(g, perm);
    if (!st.have_best || s < st.best) {
      st.best = std::move(s);
      st.best_perm = std::move(perm);
      st.have_best = true;
    }
    return;
  }

  for (std::size_t v = 0; v < n; ++v) {
    if (color[v] != target_color) continue;
    std::vector<int> child = color;
    // individualize v: give it a fresh color below its class
    for (std::size_t w = 0; w < n; ++w)
      if (child[w] >= target_color) ++child[w];
    child[v] = target_color;
    canon_search(st, refine_colors(g, child));
  }
}

}  // namespace detail

/// Canonical labeling (old -> new permutation); two graphs are isomorphic
/// iff their canonically relabeled copies are equal.
inline std::vector<int> canonical_labeling(const Graph& g) {
  detail::CanonState st;
  st.g = &g;
  const std::vector<int> color =
      detail::refine_colors(g, std::vector<int>(g.vertices(), 0));
  if (g.vertices() == 0) return {};
  detail::canon_search(st, color);
  return st.best_perm;
}

inline Graph canonical_form(const Graph& g) {
  return g.relabel(canonical_labeling(g));
}

/// Exact isomorphism via canonical labelings; returns the vertex bijection
/// g -> h when the graphs are isomorphic.
inline std::optional<VertexMap> graph_isomorphism(const Graph& g,
                                                  const Graph& h) {
  if (g.vertices() != h.vertices() || g.edge_count() != h.edge_count())
    return std::nullopt;
  const auto pg = canonical_labeling(g);
  const auto ph = canonical_labeling(h);
  if (!(g.relabel(pg) == h.relabel(ph))) return std::nullopt;
  // iso = ph^{-1} o pg
  std::vector<int> inv(h.vertices());
  for (std::size_t v = 0; v < h.vertices(); ++v)
    inv[std::size_t(ph[v])] = int(v);
  VertexMap iso{g.vertices(), h.vertices(), std::vector<int>(g.vertices())};
  for (std::size_t v = 0; v < g.vertices(); ++v)
    iso.values[v] = inv[std::size_t(pg[v])];
  return iso;
}

}  // namespace troeq
