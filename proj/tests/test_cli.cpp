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

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "troeq/json_io.hpp"

using namespace troeq;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(TROEQ_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.exit_code = WEXITSTATUS(status);
  return r;
}

std::string shell(const std::string& cmd) {
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  pclose(pipe);
  return out;
}

std::string tmp_file(const std::string& name, const std::string& content) {
  const std::string path = "/tmp/troeq_cli_" + name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

std::string strip_timestamp(std::string text) {
  const auto pos = text.find("\"timestamp\"");
  if (pos == std::string::npos) return text;
  const auto end = text.find('\n', pos);
  return text.erase(pos, end - pos);
}

}  // namespace

TEST_CASE("cli: toeplitz pipes into sys rigid") {
  const std::string out =
      shell(std::string(TROEQ_CLI_PATH) + " toeplitz --n 3 | " +
            TROEQ_CLI_PATH + " sys rigid -");
  const json j = json::parse(out);
  REQUIRE(j.at("witness").at("rigid").get<bool>());
  REQUIRE(j.at("verdict") == "Computed");
}

TEST_CASE("cli: delta-eq on graph files") {
  const std::string k2 = tmp_file("k2.json", graph_to_json(Graph::complete(2)).dump());
  const std::string k3 = tmp_file("k3.txt", "3\n0 1\n0 2\n1 2\n");
  const CliResult r = run_cli("graph delta-eq " + k2 + " " + k3);
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j.at("verdict") == "Equivalent");
  REQUIRE(j.at("witness").at("quotient_g").at("vertices") == 1);

  const std::string c5 = tmp_file("c5.json", graph_to_json(Graph::cycle(5)).dump());
  const CliResult neg = run_cli("graph delta-eq " + k2 + " " + c5);
  REQUIRE(neg.exit_code == 0);
  REQUIRE(json::parse(neg.out).at("verdict") == "NotEquivalent");
}

TEST_CASE("cli: emitted tro witness re-verifies") {
  const std::string g = tmp_file("ep.json",
      graph_to_json(Graph::from_edges(3, {{0, 1}})).dump());
  const std::string h = tmp_file("e2.json", graph_to_json(Graph(2)).dump());
  const CliResult wit = run_cli("graph tro-witness " + g + " " + h);
  REQUIRE(wit.exit_code == 0);
  const json j = json::parse(wit.out);
  REQUIRE(j.at("witness").at("verification").at("pass").get<bool>());

  const std::string sfile =
      tmp_file("s.json", j.at("witness").at("s_system").dump());
  const std::string tfile =
      tmp_file("t.json", j.at("witness").at("t_system").dump());
  const std::string mfile =
      tmp_file("m.json", json{{"tro", j.at("witness").at("tro")}}.dump());
  const CliResult ver =
      run_cli("verify tro-eq " + sfile + " " + tfile + " " + mfile);
  REQUIRE(ver.exit_code == 0);
  REQUIRE(json::parse(ver.out).at("verdict") == "Verified");

  // corrupt the TRO: drop a basis element so the spans no longer match
  json broken = j.at("witness").at("tro");
  broken.at("basis").erase(0);
  const std::string bfile =
      tmp_file("mbad.json", json{{"tro", broken}}.dump());
  const CliResult bad =
      run_cli("verify tro-eq " + sfile + " " + tfile + " " + bfile);
  REQUIRE(bad.exit_code == 1);
  REQUIRE(json::parse(bad.out).at("verdict") == "Failed");
}

TEST_CASE("cli: exit codes for invalid input and caps") {
  const std::string junk = tmp_file("junk.json", "{not json");
  REQUIRE(run_cli("sys rigid " + junk).exit_code == 2);

  std::string big = "33\n";
  const std::string bigfile = tmp_file("big.txt", big);
  REQUIRE(run_cli("graph quotient " + bigfile).exit_code == 3);

  REQUIRE(run_cli("graph quotient /nonexistent.json").exit_code == 2);
}

TEST_CASE("cli: determinism modulo timestamp") {
  const std::string g = tmp_file("det.json",
      graph_to_json(Graph::from_edges(4, {{0, 1}, {2, 3}})).dump());
  const CliResult a = run_cli("--seed 5 graph tro-witness " + g + " " + g);
  const CliResult b = run_cli("--seed 5 graph tro-witness " + g + " " + g);
  REQUIRE(a.exit_code == 0);
  REQUIRE(strip_timestamp(a.out) == strip_timestamp(b.out));
}

TEST_CASE("cli: context bundle verification and level-cap flag") {
  const Graph k2 = Graph::complete(2);
  const DeltaDecision d = decide_delta_graphs(k2, Graph::complete(3));
  const TRO m = synthesize_graph_tro(*d.witness, k2, Graph::complete(3));
  const ContextBundle b = context_from_tro(
      graph_system(k2), graph_system(Graph::complete(3)), m);
  const std::string bundle = tmp_file("bundle.json", context_to_json(b).dump());
  REQUIRE(run_cli("verify delta-context " + bundle).exit_code == 0);
  REQUIRE(run_cli("verify bihom-context " + bundle).exit_code == 0);
}

TEST_CASE("cli: induce and roundtrip subcommands") {
  const Graph g = Graph::from_edges(3, {{0, 1}});
  const DeltaDecision d = decide_delta_graphs(g, Graph(2));
  const TRO m = synthesize_graph_tro(*d.witness, g, Graph(2));
  const std::string mfile = tmp_file(
      "ind_m.json", json{{"tro", subspace_to_json(m.space())}}.dump());
  const Representation rep = Representation::identity(graph_system(g));
  const std::string rfile =
      tmp_file("ind_r.json", representation_to_json(rep).dump());

  const CliResult ind = run_cli("induce " + mfile + " " + rfile);
  REQUIRE(ind.exit_code == 0);
  REQUIRE(json::parse(ind.out).at("witness").at("gram_rank") == 2);

  const CliResult rt = run_cli("roundtrip " + mfile + " " + rfile);
  REQUIRE(rt.exit_code == 0);
  REQUIRE(json::parse(rt.out).at("residuals").at("residual").get<double>() <
          1e-8);
}

TEST_CASE("cli: batch manifest") {
  const std::string k2 = tmp_file("bk2.json", graph_to_json(Graph::complete(2)).dump());
  const std::string out1 = "/tmp/troeq_cli_batch1.json";
  const json manifest{
      {"jobs",
       json::array(
           {json{{"args", {"graph", "quotient", k2, "--out", out1}}},
            json{{"args", {"toeplitz", "--n", "2", "--out",
                           "/tmp/troeq_cli_batch2.json"}}}})}};
  const std::string mf = tmp_file("manifest.json", manifest.dump());
  const CliResult r = run_cli("--batch " + mf);
  REQUIRE(r.exit_code == 0);
  std::ifstream check(out1);
  REQUIRE(check.good());
  json j;
  check >> j;
  REQUIRE(j.at("witness").at("quotient").at("vertices") == 1);
}
