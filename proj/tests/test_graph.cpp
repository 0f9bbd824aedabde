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

#include <catch2/catch_amalgamated.hpp>

#include "troeq/graph.hpp"
#include "troeq/rng.hpp"

using namespace troeq;

namespace {

/// All labeled graphs on n vertices (n <= 5).
std::vector<Graph> all_graphs(std::size_t n) {
  const std::size_t m = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < int(n); ++i)
    for (int j = i + 1; j < int(n); ++j) slots.emplace_back(i, j);
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
    Graph g(n);
    for (std::size_t b = 0; b < m; ++b)
      if (mask & (1ULL << b)) g.add_edge(slots[b].first, slots[b].second);
    out.push_back(g);
  }
  return out;
}

bool is_twin_free(const Graph& g) {
  for (int a = 0; a < int(g.vertices()); ++a)
    for (int b = a + 1; b < int(g.vertices()); ++b)
      if (g.closed_neighborhood(a) == g.closed_neighborhood(b)) return false;
  return true;
}

Graph random_graph(std::size_t n, double p, Rng& rng) {
  Graph g(n);
  for (int i = 0; i < int(n); ++i)
    for (int j = i + 1; j < int(n); ++j)
      if (rng.uniform() < p) g.add_edge(i, j);
  return g;
}

}  // namespace

TEST_CASE("graph basics") {
  Graph g = Graph::from_edges(3, {{0, 1}});
  REQUIRE(g.adjacent(0, 1));
  REQUIRE(g.adjacent(1, 0));
  REQUIRE_FALSE(g.adjacent(0, 2));
  REQUIRE(g.closed_adjacent(2, 2));
  REQUIRE(g.edge_count() == 1);
  REQUIRE(g.component_count() == 2);
  REQUIRE_THROWS_AS(g.add_edge(0, 0), domain_error);
  REQUIRE_THROWS_AS(g.add_edge(0, 7), shape_error);
}

TEST_CASE("twin quotient of a complete graph is a point") {
  // brute force: all vertices of K_d share N[.] = [d]
  for (std::size_t d : {2, 3, 4, 5}) {
    const auto [q, f] = twin_quotient(Graph::complete(d));
    REQUIRE(q.vertices() == 1);
    REQUIRE(f.surjective());
    REQUIRE(verify_pullback(Graph::complete(d), q, f));
  }
}

TEST_CASE("twin quotient of C5 is trivial") {
  const Graph c5 = Graph::cycle(5);
  const auto [q, f] = twin_quotient(c5);
  REQUIRE(q.vertices() == 5);
  REQUIRE(q == c5);
  REQUIRE(f.values == VertexMap::identity(5).values);
}

TEST_CASE("twin quotient of edge plus isolated vertex") {
  const Graph g = Graph::from_edges(3, {{0, 1}});
  const auto [q, f] = twin_quotient(g);
  REQUIRE(q.vertices() == 2);
  REQUIRE(q.edge_count() == 0);
  REQUIRE(f.values[0] == f.values[1]);
  REQUIRE(f.values[2] != f.values[0]);
}

TEST_CASE("verify_pullback") {
  const Graph p3 = Graph::path(3);
  REQUIRE(verify_pullback(p3, p3, VertexMap::identity(3)));

  const Graph k1(1);
  VertexMap constant{4, 1, {0, 0, 0, 0}};
  REQUIRE(verify_pullback(Graph::complete(4), k1, constant));

  VertexMap c3{3, 1, {0, 0, 0}};
  REQUIRE_FALSE(verify_pullback(p3, k1, c3));  // endpoints are not adjacent
}

TEST_CASE("twin quotients are twin-free pullback targets, exhaustively") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const Graph& g : all_graphs(n)) {
      const auto [q, f] = twin_quotient(g);
      REQUIRE(is_twin_free(q));
      REQUIRE(f.surjective());
      REQUIRE(verify_pullback(g, q, f));
    }
  }
}

TEST_CASE("twin quotients are twin-free pullback targets, randomized 6-8") {
  Rng rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 6 + rng.below(3);
    const Graph g = random_graph(n, 0.2 + 0.6 * rng.uniform(), rng);
    const auto [q, f] = twin_quotient(g);
    REQUIRE(is_twin_free(q));
    REQUIRE(verify_pullback(g, q, f));
  }
}

TEST_CASE("canonical labeling identifies isomorphic copies") {
  Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng.below(8);
    const Graph g = random_graph(n, rng.uniform(), rng);
    // random relabeling
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = n; i > 1; --i)
      std::swap(perm[i - 1], perm[rng.below(i)]);
    const Graph h = g.relabel(perm);
    REQUIRE(canonical_form(g) == canonical_form(h));
    const auto iso = graph_isomorphism(g, h);
    REQUIRE(iso.has_value());
    REQUIRE(verify_pullback(g, h, *iso));  // a bijective pullback is an iso
  }
}

TEST_CASE("non-isomorphic graphs are separated") {
  REQUIRE_FALSE(
      graph_isomorphism(Graph::cycle(5), Graph::cycle(4)).has_value());
  REQUIRE_FALSE(
      graph_isomorphism(Graph::path(4),
                        Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}}))
          .has_value());
  // same degree sequence, different graphs: C6 vs two triangles
  const Graph c6 = Graph::cycle(6);
  const Graph tt =
      Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  REQUIRE_FALSE(graph_isomorphism(c6, tt).has_value());
  REQUIRE(graph_isomorphism(c6, c6).has_value());
}

TEST_CASE("canonical labeling handles symmetric graphs") {
  REQUIRE(canonical_form(Graph::complete(8)) == Graph::complete(8));
  const Graph c8 = Graph::cycle(8);
  REQUIRE(canonical_form(c8).edge_count() == 8);
}
