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

#include <sstream>
#include <string>

#include <json.hpp>

#include "troeq/context.hpp"
#include "troeq/cstar.hpp"
#include "troeq/graph.hpp"
#include "troeq/morita.hpp"
#include "troeq/ncgraph.hpp"
#include "troeq/report.hpp"

namespace troeq {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// matrices and subspaces
// ---------------------------------------------------------------------------

inline json matrix_to_json(const CMatrix& m) {
  json entries = json::array();
  for (const auto& z : m.data())
    entries.push_back(json::array({z.real(), z.imag()}));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

inline CMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
      !j.contains("entries"))
    throw shape_error("matrix: expected {rows, cols, entries}");
  const std::size_t rows = j.at("rows").get<std::size_t>();
  const std::size_t cols = j.at("cols").get<std::size_t>();
  const auto& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != rows * cols)
    throw shape_error("matrix: wrong entry count");
  std::vector<cdouble> data;
  data.reserve(rows * cols);
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 2)
      throw shape_error("matrix: entries must be [re, im] pairs");
    data.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
  }
  CMatrix m(rows, cols, std::move(data));
  if (!m.all_finite()) throw shape_error("matrix: non-finite entries");
  return m;
}

inline json subspace_to_json(const MatSubspace& s) {
  json basis = json::array();
  for (const auto& b : s.basis()) basis.push_back(matrix_to_json(b));
  return json{{"ambient", json::array({s.rows(), s.cols()})},
              {"basis", basis}};
}

inline MatSubspace subspace_from_json(const json& j, Tolerance tol) {
  if (!j.is_object() || !j.contains("ambient") || !j.contains("basis"))
    throw shape_error("subspace: expected {ambient, basis}");
  const auto& amb = j.at("ambient");
  if (!amb.is_array() || amb.size() != 2)
    throw shape_error("subspace: ambient must be [rows, cols]");
  std::vector<CMatrix> mats;
  for (const auto& b : j.at("basis")) mats.push_back(matrix_from_json(b));
  return MatSubspace::span(amb.at(0).get<std::size_t>(),
                           amb.at(1).get<std::size_t>(), mats, tol);
}

// ---------------------------------------------------------------------------
// graphs and maps
// ---------------------------------------------------------------------------

inline json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [i, j] : g.edges()) edges.push_back(json::array({i, j}));
  return json{{"vertices", g.vertices()}, {"edges", edges}};
}

inline Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
    throw shape_error("graph: expected {vertices, edges}");
  Graph g(j.at("vertices").get<std::size_t>());
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw shape_error("graph: edges must be [i, j] pairs");
    g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
  }
  return g;
}

/// Plain text edge list: first line n, then one "i j" pair per line.
inline Graph graph_from_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::size_t n = 0;
  if (!(in >> n)) throw shape_error("edge list: missing vertex count");
  Graph g(n);
  int i, j;
  while (in >> i >> j) g.add_edge(i, j);
  if (!in.eof() && in.fail()) {
    in.clear();
    std::string rest;
    in >> rest;
    if (!rest.empty()) throw shape_error("edge list: trailing junk: " + rest);
  }
  return g;
}

inline json vertex_map_to_json(const VertexMap& f) {
  return json{{"domain", f.domain},
              {"codomain", f.codomain},
              {"values", f.values}};
}

inline VertexMap vertex_map_from_json(const json& j) {
  VertexMap f{j.at("domain").get<std::size_t>(),
              j.at("codomain").get<std::size_t>(),
              j.at("values").get<std::vector<int>>()};
  f.validate();
  return f;
}

inline json witness_to_json(const PullbackWitness& w) {
  return json{{"quotient_g", graph_to_json(w.quotient_g)},
              {"quotient_h", graph_to_json(w.quotient_h)},
              {"map_g", vertex_map_to_json(w.map_g)},
              {"map_f", vertex_map_to_json(w.map_f)},
              {"iso", vertex_map_to_json(w.iso)}};
}

inline PullbackWitness witness_from_json(const json& j) {
  PullbackWitness w;
  w.quotient_g = graph_from_json(j.at("quotient_g"));
  w.quotient_h = graph_from_json(j.at("quotient_h"));
  w.map_g = vertex_map_from_json(j.at("map_g"));
  w.map_f = vertex_map_from_json(j.at("map_f"));
  w.iso = vertex_map_from_json(j.at("iso"));
  return w;
}

// ---------------------------------------------------------------------------
// reports, decompositions, representations, contexts
// ---------------------------------------------------------------------------

inline json report_to_json(const VerificationReport& r) {
  json axioms = json::array();
  for (const auto& e : r.entries) {
    json entry{{"axiom", e.axiom}, {"pass", e.pass}, {"residual", e.residual}};
    if (!e.witness.empty()) entry["witness"] = e.witness;
    axioms.push_back(entry);
  }
  return json{{"pass", r.pass()}, {"axioms", axioms}};
}

inline json blocks_to_json(const BlockDecomposition& bd) {
  json blocks = json::array();
  for (auto [d, m] : bd.blocks) blocks.push_back(json::array({d, m}));
  return json{{"blocks", blocks}, {"unitary", matrix_to_json(bd.u)}};
}

inline json representation_to_json(const Representation& r) {
  json images = json::array();
  for (const auto& im : r.images()) images.push_back(matrix_to_json(im));
  return json{{"system", subspace_to_json(r.system().space())},
              {"dim", r.hilbert_dim()},
              {"images", images}};
}

inline Representation representation_from_json(const json& j, Tolerance tol) {
  const OperatorSystem sys(subspace_from_json(j.at("system"), tol));
  std::vector<CMatrix> images;
  for (const auto& im : j.at("images")) images.push_back(matrix_from_json(im));
  return Representation(sys, j.at("dim").get<std::size_t>(),
                        std::move(images));
}

inline json context_to_json(const ContextBundle& b) {
  json out{{"s", subspace_to_json(b.s.space())},
           {"t", subspace_to_json(b.t.space())},
           {"carrier", subspace_to_json(b.carrier)},
           {"level_cap", b.level_cap}};
  if (b.maps.mode == TrilinearMaps::Mode::Conjugation) {
    out["maps"] = "conjugation";
  } else {
    auto dump = [](const std::vector<std::vector<cdouble>>& vals) {
      json arr = json::array();
      for (const auto& v : vals) {
        json row = json::array();
        for (const auto& z : v) row.push_back(json::array({z.real(), z.imag()}));
        arr.push_back(row);
      }
      return arr;
    };
    out["maps"] =
        json{{"left", dump(b.maps.left)}, {"right", dump(b.maps.right)}};
  }
  return out;
}

inline ContextBundle context_from_json(const json& j, Tolerance tol) {
  ContextBundle b{OperatorSystem(subspace_from_json(j.at("s"), tol)),
                  OperatorSystem(subspace_from_json(j.at("t"), tol)),
                  subspace_from_json(j.at("carrier"), tol),
                  {},
                  j.value("level_cap", 3)};
  const auto& maps = j.at("maps");
  if (maps.is_string() && maps.get<std::string>() == "conjugation") {
    b.maps.mode = TrilinearMaps::Mode::Conjugation;
  } else if (maps.is_object()) {
    b.maps.mode = TrilinearMaps::Mode::Tensor;
    auto load = [](const json& arr) {
      std::vector<std::vector<cdouble>> vals;
      for (const auto& row : arr) {
        std::vector<cdouble> v;
        for (const auto& z : row)
          v.emplace_back(z.at(0).get<double>(), z.at(1).get<double>());
        vals.push_back(std::move(v));
      }
      return vals;
    };
    b.maps.left = load(maps.at("left"));
    b.maps.right = load(maps.at("right"));
    const std::size_t dm = b.carrier.dim();
    if (b.maps.left.size() != dm * b.t.dim() * dm ||
        b.maps.right.size() != dm * b.s.dim() * dm)
      throw shape_error("context: tensor block count mismatch");
  } else {
    throw shape_error("context: maps must be \"conjugation\" or tensors");
  }
  b.require_shapes();
  return b;
}

inline json kraus_to_json(const KrausFamily& k) {
  json ops = json::array();
  for (const auto& a : k.ops) ops.push_back(matrix_to_json(a));
  return json{{"ops", ops}};
}

inline KrausFamily kraus_from_json(const json& j) {
  KrausFamily k;
  for (const auto& a : j.at("ops")) k.ops.push_back(matrix_from_json(a));
  k.require_uniform_shape();
  return k;
}

}  // namespace troeq
