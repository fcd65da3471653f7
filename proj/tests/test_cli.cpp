/* Copyright 2026 The qgeom Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "oracles.hpp"
#include "qgeom/cli.hpp"

namespace fs = std::filesystem;
using namespace qgeom::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run qgeom_run(std::vector<std::string> args)
{
  args.insert(args.begin(), "qgeom");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string config(const std::string& name) { return std::string(QGEOM_CONFIG_DIR) + "/" + name; }

fs::path scratch(const std::string& name)
{
  const auto dir = fs::temp_directory_path() / "qgeom_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p)
{
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool contains(const std::string& haystack, const std::string& needle)
{
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("field summary and tables")
{
  const auto path = scratch("gf4.json").string();
  const auto r = qgeom_run({"field", "--field", config("gf4.json"), "--out", path});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "GF(4) = GF(2^2)"));
  CHECK(contains(r.out, "conjugation: yes"));
  const auto j = nlohmann::json::parse(slurp(path));
  const oracle::PolyField o{2, 2, {1, 1, 1}};
  for (unsigned a = 0; a < 4; ++a)
    for (unsigned b = 0; b < 4; ++b) {
      CHECK(j["add"][a][b] == o.add(a, b));
      CHECK(j["mul"][a][b] == o.mul(a, b));
    }
}

TEST_CASE("grassmann summary and exports")
{
  const auto g6 = scratch("g42.g6").string();
  const auto csv = scratch("g42.csv").string();
  const auto r = qgeom_run({"grassmann", "--field", config("gf2.json"), "--n", "4", "--k", "2", "--intersection-array",
                            "--export", "g6:" + g6, "--export", "csv:" + csv});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "35 vertices"));
  CHECK(contains(r.out, "{18, 8; 1, 9}"));
  const auto adj = oracle::decode_graph6(slurp(g6));
  CHECK(adj.size() == 35);
  std::size_t edges = 0;
  for (std::size_t u = 0; u < 35; ++u)
    for (std::size_t v = u + 1; v < 35; ++v) edges += adj[u][v];
  CHECK(edges == 315);
  const auto text = slurp(csv);
  CHECK(std::count(text.begin(), text.end(), '\n') == 315);
}

TEST_CASE("polar summaries")
{
  auto r = qgeom_run({"polar", "--polar", config("h3_4.json"), "--n", "4", "--intersection-array"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "{10, 8; 1, 5}"));
  r = qgeom_run({"polar", "--polar", config("q5_2.json"), "--n", "5", "--intersection-array"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "{6, 4; 1, 3}"));
}

TEST_CASE("usage errors exit 64")
{
  CHECK(qgeom_run({"frobnicate"}).code == kExitUsage);
  CHECK(qgeom_run({"grassmann", "--field", config("gf2.json"), "--n", "4"}).code == kExitUsage);
  CHECK(qgeom_run({"grassmann", "--field", config("gf2.json"), "--n", "four", "--k", "2"}).code == kExitUsage);
  CHECK(qgeom_run({}).code == kExitUsage);
  CHECK(qgeom_run({"embed"}).code == kExitUsage);
  CHECK(qgeom_run({"--help"}).code == kExitOk);
}

TEST_CASE("configuration errors exit 65")
{
  CHECK(qgeom_run({"field", "--field", "/nonexistent/gf.json"}).code == kExitConfig);
  const auto bad = scratch("bad.json");
  std::ofstream(bad) << "{ not json";
  CHECK(qgeom_run({"field", "--field", bad.string()}).code == kExitConfig);
  const auto reducible = scratch("reducible.json");
  std::ofstream(reducible) << R"({"p": 2, "e": 2, "modulus": [1, 0, 1]})";
  const auto r = qgeom_run({"field", "--field", reducible.string()});
  CHECK(r.code == kExitConfig);
  CHECK(contains(r.out, "ReducibleModulus"));
  CHECK(qgeom_run({"grassmann", "--field", config("gf2.json"), "--n", "4", "--k", "1"}).code == kExitConfig);
  CHECK(qgeom_run({"grassmann", "--field", config("gf2.json"), "--n", "4", "--k", "2", "--export", "png:x"}).code ==
        kExitConfig);
}

TEST_CASE("embedding commands")
{
  auto r = qgeom_run({"embed", "canonical", "--polar", config("w32.json"), "--n", "4", "--k", "3"});
  CHECK(r.code == kExitViolation);
  CHECK(contains(r.out, "NoValidU"));

  r = qgeom_run({"embed", "canonical", "--polar", config("w32.json"), "--n", "5", "--k", "3"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "U of dimension 1"));

  r = qgeom_run({"embed", "analyze", "--polar", config("w32.json"), "--n", "5", "--k", "3"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "W' dim 4, V' dim 4"));

  r = qgeom_run({"embed", "search", "--polar", config("w32.json"), "--n", "4", "--k", "2", "--anchor", "--budget", "10"});
  CHECK(r.code == kExitBudget);

  const auto emb = scratch("emb.json").string();
  r = qgeom_run({"embed", "search", "--polar", config("w32.json"), "--n", "4", "--k", "2", "--anchor",
                 "--write-embedding", "5:" + emb});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "576 embeddings"));
  r = qgeom_run({"embed", "verify", "--polar", config("w32.json"), "--n", "4", "--k", "2", "--embedding", emb});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "isometric: yes"));

  auto j = nlohmann::json::parse(slurp(emb));
  j[1]["image_basis"] = j[0]["image_basis"];
  const auto broken = scratch("broken.json");
  std::ofstream(broken) << j.dump();
  r = qgeom_run({"embed", "verify", "--polar", config("w32.json"), "--n", "4", "--k", "2", "--embedding",
                 broken.string()});
  CHECK(r.code == kExitViolation);
  CHECK(contains(r.out, "NotInjective"));
}

TEST_CASE("classification exit code reflects the number of classes")
{
  auto r = qgeom_run({"embed", "classify", "--polar", config("w32.json"), "--n", "4", "--k", "2", "--anchor"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "equivalence classes: 1"));
}

TEST_CASE("outputs do not depend on the worker count")
{
  const std::vector<std::vector<std::string>> commands{
      {"grassmann", "--field", config("gf3.json"), "--n", "4", "--k", "2", "--intersection-array"},
      {"polar", "--polar", config("h3_4.json"), "--n", "4", "--intersection-array"},
      {"embed", "search", "--polar", config("w32.json"), "--n", "4", "--k", "2"},
      {"embed", "classify", "--polar", config("w32.json"), "--n", "4", "--k", "2", "--anchor"},
  };
  int idx = 0;
  for (const auto& base : commands) {
    std::vector<std::vector<std::string>> outputs;
    for (const char* workers : {"1", "4"}) {
      const std::string tag = std::to_string(idx) + "_" + workers;
      const auto report = scratch("report_" + tag + ".json");
      const auto exported = scratch("export_" + tag + ".json");
      auto args = base;
      args.insert(args.end(), {"--workers", workers, "--out", report.string()});
      if (base[0] != "embed") args.insert(args.end(), {"--export", "json:" + exported.string()});
      const auto r = qgeom_run(args);
      CHECK(r.code == kExitOk);
      outputs.push_back({r.out, slurp(report), base[0] != "embed" ? slurp(exported) : ""});
    }
    CHECK(!outputs[0][1].empty());
    CHECK(outputs[0] == outputs[1]);
    ++idx;
  }
}
