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

#include <chrono>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "troeq/funcsys.hpp"
#include "troeq/json_io.hpp"
#include "troeq/version.hpp"

namespace {

using troeq::json;

constexpr std::size_t kMaxAmbient = 64;
constexpr std::size_t kMaxVertices = 32;

struct Session {
  troeq::Tolerance tol;
  int level_cap = 3;
  std::string out_path;
  std::uint64_t digest = 0xcbf29ce484222325ULL;  // FNV-1a offset basis
  std::string command_line;

  void absorb(const std::string& bytes) {
    for (unsigned char c : bytes) {
      digest ^= c;
      digest *= 0x100000001b3ULL;
    }
  }

  std::string digest_hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(digest));
    return buf;
  }
};

std::string read_input(Session& s, const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw troeq::shape_error("cannot open input: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  s.absorb(text);
  return text;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw troeq::shape_error(std::string("json parse error: ") + e.what());
  }
}

/// Strips certificate envelopes so emitted outputs can be piped back in.
json unwrap(json j) {
  while (j.is_object() && j.contains("witness") && j.contains("command"))
    j = j.at("witness");
  return j;
}

troeq::Graph load_graph(Session& s, const std::string& path) {
  const std::string text = read_input(s, path);
  troeq::Graph g;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json j = unwrap(parse_json(text));
    if (j.contains("quotient")) j = j.at("quotient");
    g = troeq::graph_from_json(j);
  } else {
    g = troeq::graph_from_edge_list(text);
  }
  if (g.vertices() > kMaxVertices)
    throw troeq::limit_error("graph exceeds the vertex cap");
  return g;
}

troeq::MatSubspace load_subspace(Session& s, const std::string& path,
                                 const char* key) {
  json j = unwrap(parse_json(read_input(s, path)));
  if (j.contains(key)) j = j.at(key);
  const troeq::MatSubspace sp = troeq::subspace_from_json(j, s.tol);
  if (sp.rows() > kMaxAmbient || sp.cols() > kMaxAmbient)
    throw troeq::limit_error("subspace exceeds the ambient cap");
  return sp;
}

troeq::OperatorSystem load_system(Session& s, const std::string& path) {
  return troeq::OperatorSystem(load_subspace(s, path, "system"));
}

troeq::Representation load_representation(Session& s,
                                          const std::string& path) {
  json j = unwrap(parse_json(read_input(s, path)));
  if (j.contains("representation")) j = j.at("representation");
  return troeq::representation_from_json(j, s.tol);
}

std::string timestamp_utc() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

int emit(const Session& s, const std::string& verdict, json witness,
         json residuals, int exit_code) {
  json cert{{"command", s.command_line},
            {"inputs_digest", s.digest_hex()},
            {"verdict", verdict},
            {"witness", std::move(witness)},
            {"residuals", std::move(residuals)},
            {"tolerance", s.tol.eps},
            {"seed", s.tol.seed},
            {"level_cap", s.level_cap},
            {"tool_version", troeq::kVersion},
            {"timestamp", timestamp_utc()}};
  const std::string text = cert.dump(2) + "\n";
  if (s.out_path.empty() || s.out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(s.out_path, std::ios::binary);
    if (!out) throw troeq::shape_error("cannot open output: " + s.out_path);
    out << text;
  }
  return exit_code;
}

int emit_report(const Session& s, const troeq::VerificationReport& rep,
                json extra = json::object()) {
  json witness = troeq::report_to_json(rep);
  for (auto& [k, v] : extra.items()) witness[k] = v;
  return emit(s, rep.pass() ? "Verified" : "Failed", witness,
              json{{"worst", rep.worst_residual()}}, rep.pass() ? 0 : 1);
}

int run_cli(const std::vector<std::string>& args);

// -------------------------------------------------------------------------
// subcommand bodies
// -------------------------------------------------------------------------

int cmd_graph_quotient(Session& s, const std::string& path) {
  const troeq::Graph g = load_graph(s, path);
  const auto [q, f] = troeq::twin_quotient(g);
  return emit(s, "Computed",
              json{{"quotient", troeq::graph_to_json(q)},
                   {"map", troeq::vertex_map_to_json(f)}},
              json::object(), 0);
}

int cmd_graph_delta_eq(Session& s, const std::string& pg,
                       const std::string& ph, bool with_tro) {
  const troeq::Graph g = load_graph(s, pg);
  const troeq::Graph h = load_graph(s, ph);
  const troeq::DeltaDecision d = troeq::decide_delta_graphs(g, h);
  if (!d.equivalent()) {
    return emit(s, "NotEquivalent",
                json{{"canonical_quotient_g",
                      troeq::graph_to_json(d.canonical_quotient_g)},
                     {"canonical_quotient_h",
                      troeq::graph_to_json(d.canonical_quotient_h)}},
                json::object(), 0);
  }
  json witness = troeq::witness_to_json(*d.witness);
  json residuals = json::object();
  if (with_tro) {
    const troeq::TRO m = troeq::synthesize_graph_tro(*d.witness, g, h, s.tol);
    const troeq::OperatorSystem sg = troeq::graph_system(g, s.tol);
    const troeq::OperatorSystem sh = troeq::graph_system(h, s.tol);
    const troeq::VerificationReport rep =
        troeq::verify_tro_equivalence(sg, sh, m);
    witness["tro"] = troeq::subspace_to_json(m.space());
    witness["s_system"] = troeq::subspace_to_json(sg.space());
    witness["t_system"] = troeq::subspace_to_json(sh.space());
    witness["verification"] = troeq::report_to_json(rep);
    residuals["worst"] = rep.worst_residual();
    if (!rep.pass()) return emit(s, "Failed", witness, residuals, 1);
  }
  return emit(s, "Equivalent", witness, residuals, 0);
}

int cmd_graph_embed_env(Session& s, const std::string& pg,
                        const std::string& ph) {
  const troeq::Graph g = load_graph(s, pg);
  const troeq::Graph h = load_graph(s, ph);
  const troeq::EnvEmbedding e = troeq::graph_env_embedding(g, h);
  return emit(s, e.embeddable ? "Embeddable" : "NotEmbeddable",
              json{{"components", e.components}, {"vertices", e.vertices}},
              json::object(), 0);
}

int cmd_graph_system(Session& s, const std::string& path) {
  const troeq::Graph g = load_graph(s, path);
  const troeq::OperatorSystem sys = troeq::graph_system(g, s.tol);
  return emit(s, "Computed",
              json{{"system", troeq::subspace_to_json(sys.space())}},
              json::object(), 0);
}

int cmd_sys_algebra(Session& s, const std::string& path) {
  const troeq::OperatorSystem sys = load_system(s, path);
  const troeq::StarAlgebra a = troeq::generated_algebra(sys);
  const troeq::BlockDecomposition bd = troeq::block_decompose(a);
  return emit(s, "Computed",
              json{{"algebra", troeq::subspace_to_json(a.space())},
                   {"dim", a.dim()},
                   {"decomposition", troeq::blocks_to_json(bd)}},
              json{{"pattern", troeq::block_pattern_residual(a, bd)}}, 0);
}

int cmd_sys_multiplier(Session& s, const std::string& path) {
  const troeq::OperatorSystem sys = load_system(s, path);
  const troeq::StarAlgebra a = troeq::multiplier_algebra(sys);
  const troeq::BlockDecomposition bd = troeq::block_decompose(a);
  return emit(s, "Computed",
              json{{"multiplier", troeq::subspace_to_json(a.space())},
                   {"dim", a.dim()},
                   {"decomposition", troeq::blocks_to_json(bd)},
                   {"assumption",
                    "computed inside the generated algebra; exact for "
                    "irreducibly acting systems"}},
              json{{"pattern", troeq::block_pattern_residual(a, bd)}}, 0);
}

int cmd_sys_center(Session& s, const std::string& path) {
  const troeq::OperatorSystem sys = load_system(s, path);
  const troeq::CentreCertificate c = troeq::centre_system(sys);
  return emit(s, "Computed",
              json{{"centre", troeq::subspace_to_json(c.basis)},
                   {"dim", c.basis.dim()},
                   {"commutator_residuals", c.commutator_residuals},
                   {"assumption", c.assumption}},
              json{{"worst_commutator", c.worst_commutator}}, 0);
}

int cmd_sys_rigid(Session& s, const std::string& path) {
  const troeq::OperatorSystem sys = load_system(s, path);
  const troeq::StarAlgebra a = troeq::multiplier_algebra(sys);
  const bool rigid = a.dim() == 1;
  return emit(s, "Computed",
              json{{"rigid", rigid}, {"multiplier_dim", a.dim()}},
              json::object(), 0);
}

int cmd_sys_irreducible(Session& s, const std::string& path) {
  const troeq::OperatorSystem sys = load_system(s, path);
  const troeq::ProbeVerdict v = troeq::irreducibility_probe(sys, s.level_cap);
  const char* names[] = {"Irreducible", "Reducible", "Unknown"};
  return emit(s, names[static_cast<int>(v.kind)],
              json{{"level", v.level},
                   {"witness_blocks", v.witness_blocks},
                   {"detail", v.detail}},
              json::object(), 0);
}

int cmd_verify_tro_eq(Session& s, const std::string& ps,
                      const std::string& pt, const std::string& pm) {
  const troeq::OperatorSystem sys_s = load_system(s, ps);
  const troeq::OperatorSystem sys_t = load_system(s, pt);
  const troeq::MatSubspace msp = load_subspace(s, pm, "tro");
  // closure is part of the verification, so skip the constructor check
  const troeq::TRO m(msp, false);
  return emit_report(s, troeq::verify_tro_equivalence(sys_s, sys_t, m));
}

int cmd_verify_cohom(Session& s, const std::string& pk, const std::string& pt,
                     const std::string& ps) {
  json jk = unwrap(parse_json(read_input(s, pk)));
  if (jk.contains("kraus")) jk = jk.at("kraus");
  const troeq::KrausFamily k = troeq::kraus_from_json(jk);
  const troeq::OperatorSystem sys_t = load_system(s, pt);
  const troeq::OperatorSystem sys_s = load_system(s, ps);
  return emit_report(s, troeq::verify_cohomomorphism(k, sys_t, sys_s));
}

int cmd_verify_context(Session& s, const std::string& pb, bool bihom) {
  json j = unwrap(parse_json(read_input(s, pb)));
  troeq::ContextBundle b = troeq::context_from_json(j, s.tol);
  if (!j.contains("level_cap")) b.level_cap = s.level_cap;
  const troeq::VerificationReport rep =
      bihom ? troeq::verify_bihom_context(b) : troeq::verify_delta_context(b);
  return emit_report(s, rep);
}

int cmd_induce(Session& s, const std::string& pm, const std::string& pr) {
  const troeq::TRO m(load_subspace(s, pm, "tro"));
  const troeq::Representation rep = load_representation(s, pr);
  const troeq::Induction ind = troeq::induce_rep(m, rep);
  return emit(s, "Computed",
              json{{"representation", troeq::representation_to_json(ind.rep)},
                   {"gram_rank", ind.gram_rank},
                   {"gram_eigenvalues", ind.gram_eigenvalues}},
              json::object(), 0);
}

int cmd_roundtrip(Session& s, const std::string& pm, const std::string& pr) {
  const troeq::TRO m(load_subspace(s, pm, "tro"));
  const troeq::Representation rep = load_representation(s, pr);
  const troeq::Roundtrip rt = troeq::roundtrip_unitary(m, rep);
  return emit(s, "Computed", json{{"unitary", troeq::matrix_to_json(rt.u)}},
              json{{"residual", rt.residual},
                   {"unitary_defect", rt.unitary_defect}},
              0);
}

int cmd_toeplitz(Session& s, std::size_t n) {
  if (n > kMaxAmbient) throw troeq::limit_error("toeplitz: n exceeds the cap");
  const troeq::OperatorSystem sys = troeq::toeplitz_system(n, s.tol);
  return emit(s, "Computed",
              json{{"system", troeq::subspace_to_json(sys.space())},
                   {"dim", sys.dim()}},
              json::object(), 0);
}

int cmd_batch(Session& s, const std::string& path) {
  const json manifest = parse_json(read_input(s, path));
  if (!manifest.contains("jobs") || !manifest.at("jobs").is_array())
    throw troeq::shape_error("batch manifest: expected {jobs: [...]}");
  int worst = 0;
  json results = json::array();
  for (const auto& job : manifest.at("jobs")) {
    const auto args = job.at("args").get<std::vector<std::string>>();
    const int code = run_cli(args);
    worst = std::max(worst, code);
    results.push_back(json{{"args", args}, {"exit", code}});
  }
  const std::string text =
      json{{"jobs", results}, {"exit", worst}}.dump(2) + "\n";
  if (s.out_path.empty() || s.out_path == "-")
    std::cerr << text;
  else {
    std::ofstream out(s.out_path, std::ios::binary);
    out << text;
  }
  return worst;
}

int run_cli(const std::vector<std::string>& args) {
  Session session;
  for (const auto& a : args) session.command_line += a + " ";
  if (!session.command_line.empty()) session.command_line.pop_back();

  CLI::App app{"Morita-type equivalence of operator systems and graphs"};
  app.fallthrough();
  double tol_eps = 1e-9;
  std::uint64_t seed = 0;
  std::string batch_path;
  app.add_option("--tol", tol_eps, "numerical tolerance")
      ->capture_default_str();
  app.add_option("--seed", seed, "seed for randomized subroutines")
      ->capture_default_str();
  app.add_option("--level-cap", session.level_cap,
                 "matrix level cap for positivity tests")
      ->capture_default_str();
  app.add_option("--out", session.out_path, "output file (default stdout)");
  app.add_option("--batch", batch_path, "run a manifest of jobs");

  std::string in1, in2, in3;
  std::size_t toeplitz_n = 1;

  auto* graph = app.add_subcommand("graph", "graph-level decisions");
  auto* gq = graph->add_subcommand("quotient", "twin quotient");
  gq->add_option("graph", in1)->required();
  auto* gd = graph->add_subcommand("delta-eq", "decide Delta-equivalence");
  gd->add_option("graph_g", in1)->required();
  gd->add_option("graph_h", in2)->required();
  auto* gw = graph->add_subcommand("tro-witness",
                                   "decide and synthesize the pattern TRO");
  gw->add_option("graph_g", in1)->required();
  gw->add_option("graph_h", in2)->required();
  auto* ge = graph->add_subcommand("embed-env", "component-subset embedding");
  ge->add_option("graph_g", in1)->required();
  ge->add_option("graph_h", in2)->required();
  auto* gs = graph->add_subcommand("system", "emit the graph operator system");
  gs->add_option("graph", in1)->required();

  auto* sys = app.add_subcommand("sys", "operator-system computations");
  auto* sa = sys->add_subcommand("algebra", "generated C*-algebra and blocks");
  sa->add_option("system", in1)->required();
  auto* sm = sys->add_subcommand("multiplier", "multiplier algebra");
  sm->add_option("system", in1)->required();
  auto* sc = sys->add_subcommand("center", "centre of the system");
  sc->add_option("system", in1)->required();
  auto* sr = sys->add_subcommand("rigid", "rigidity flag");
  sr->add_option("system", in1)->required();
  auto* si = sys->add_subcommand("irreducible", "irreducible-action probe");
  si->add_option("system", in1)->required();

  auto* verify = app.add_subcommand("verify", "verification of certificates");
  auto* vt = verify->add_subcommand("tro-eq", "TRO-equivalence axioms");
  vt->add_option("sys_s", in1)->required();
  vt->add_option("sys_t", in2)->required();
  vt->add_option("tro_m", in3)->required();
  auto* vc = verify->add_subcommand("cohom", "Kraus cohomomorphism");
  vc->add_option("kraus", in1)->required();
  vc->add_option("sys_t", in2)->required();
  vc->add_option("sys_s", in3)->required();
  auto* vd = verify->add_subcommand("delta-context", "Delta-context axioms");
  vd->add_option("bundle", in1)->required();
  auto* vb = verify->add_subcommand("bihom-context",
                                    "bihomomorphism-context axioms");
  vb->add_option("bundle", in1)->required();

  auto* ind = app.add_subcommand("induce", "induce a representation");
  ind->add_option("tro", in1)->required();
  ind->add_option("rep", in2)->required();
  auto* rt = app.add_subcommand("roundtrip", "double-induction unitary");
  rt->add_option("tro", in1)->required();
  rt->add_option("rep", in2)->required();
  auto* tp = app.add_subcommand("toeplitz", "emit a Toeplitz system");
  tp->add_option("--n", toeplitz_n, "matrix size")->required();

  try {
    std::vector<const char*> argv;
    argv.push_back("troeq");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  session.tol = troeq::Tolerance{tol_eps, seed};

  try {
    if (!batch_path.empty()) return cmd_batch(session, batch_path);
    if (gq->parsed()) return cmd_graph_quotient(session, in1);
    if (gd->parsed()) return cmd_graph_delta_eq(session, in1, in2, false);
    if (gw->parsed()) return cmd_graph_delta_eq(session, in1, in2, true);
    if (ge->parsed()) return cmd_graph_embed_env(session, in1, in2);
    if (gs->parsed()) return cmd_graph_system(session, in1);
    if (sa->parsed()) return cmd_sys_algebra(session, in1);
    if (sm->parsed()) return cmd_sys_multiplier(session, in1);
    if (sc->parsed()) return cmd_sys_center(session, in1);
    if (sr->parsed()) return cmd_sys_rigid(session, in1);
    if (si->parsed()) return cmd_sys_irreducible(session, in1);
    if (vt->parsed()) return cmd_verify_tro_eq(session, in1, in2, in3);
    if (vc->parsed()) return cmd_verify_cohom(session, in1, in2, in3);
    if (vd->parsed()) return cmd_verify_context(session, in1, false);
    if (vb->parsed()) return cmd_verify_context(session, in1, true);
    if (ind->parsed()) return cmd_induce(session, in1, in2);
    if (rt->parsed()) return cmd_roundtrip(session, in1, in2);
    if (tp->parsed()) return cmd_toeplitz(session, toeplitz_n);
    std::cerr << app.help() << std::endl;
    return 2;
  } catch (const troeq::limit_error& e) {
    std::cerr << "limit exceeded: " << e.what() << std::endl;
    return 3;
  } catch (const troeq::error& e) {
    std::cerr << "invalid input: " << e.what() << std::endl;
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "invalid input: " << e.what() << std::endl;
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_cli(args);
}
