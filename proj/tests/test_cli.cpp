#include "mqm/error.hpp"
#include "mqm/report.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

using namespace mqm;
using nlohmann::json;

namespace {

const std::filesystem::path models = MQM_MODELS;

RunConfig config(const std::string& command, const std::string& model) {
  RunConfig c;
  c.command = command;
  c.model_path = (models / model).string();
  c.model_doc = read_model_file(c.model_path);
  return c;
}

// Exit status of the CLI, with stdout and stderr discarded.
int run_cli(const std::string& args) {
  const std::string cmd = std::string(MQM_CLI) + " " + args + " >/dev/null 2>&1";
  const int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

std::filesystem::path scratch(const std::string& name, const std::string& body) {
  auto p = std::filesystem::temp_directory_path() / ("mqm_test_" + name);
  std::ofstream(p) << body;
  return p;
}

} // namespace

TEST_CASE("model loading") {
  auto lm = load_model(read_model_file(models / "cycle4.json"));
  CHECK(lm.kind == "raag");
  CHECK(lm.sigma() == 1);
  CHECK(lm.sigma_source == "declared");
  CHECK(lm.dim() == 2);
  CHECK(load_model(read_model_file(models / "f2.json")).sigma_source == "edgeless");
  CHECK(load_model(read_model_file(models / "path3.json")).sigma_source == "scanned");
  CHECK(load_model(json{{"kind", "staircase"}}).dim() == 2);
  CHECK(load_model(json{{"kind", "wedge"}, {"n", 3}}).dim() == 3);
  CHECK_FALSE(load_model(json{{"kind", "wedge"}, {"n", 3}}).sigma());

  CHECK_THROWS_AS(load_model(json::array()), ParseError);
  CHECK_THROWS_AS(load_model(json{{"kind", "torus"}}), ParseError);
  CHECK_THROWS_AS(load_model(json{{"kind", "raag"}}), ParseError);
  CHECK_THROWS_AS(load_model(json{{"kind", "wedge"}}), ParseError);
  CHECK_THROWS_AS(load_model(json::parse(
                      R"({"kind":"raag","graph":{"vertices":["a"],"edges":[]},"sigma":0})")),
                  ParseError);
  CHECK_THROWS_AS(read_model_file(scratch("bad.json", "{\"kind\": ")), ParseError);
  CHECK_THROWS_AS(read_model_file(models / "missing.json"), Error);

  auto gfile = scratch("graph.json", R"({"vertices":["a","b"],"edges":[["a","b"]]})");
  auto mfile = scratch("model.json", R"({"kind":"raag","graph":")" +
                                         gfile.filename().string() + R"("})");
  auto doc = read_model_file(mfile);
  CHECK(doc["graph"].is_object());
  CHECK(load_model(doc).graph->edge_count() == 1);
}

TEST_CASE("reports are deterministic") {
  auto a = config("defect", "cycle4.json");
  a.segment = "a,c";
  a.radius = 2;
  auto b = a;
  b.workers = 3;
  b.out = "elsewhere.json";
  const auto ra = run_command(a), rb = run_command(b);
  CHECK(ra.config_hash == rb.config_hash);
  CHECK(ra.config_hash.size() == 16);
  CHECK(ra.results.dump() == rb.results.dump());
  CHECK(ra.verdicts.dump() == rb.verdicts.dump());
  auto c = a;
  c.radius = 1;
  CHECK(config_hash(c) != config_hash(a));
  const json j = to_json(ra);
  for (const char* k : {"config", "config_hash", "model", "results", "verdicts", "timing", "versions"})
    CHECK(j.contains(k));
}

TEST_CASE("report contents") {
  auto br = config("brooks", "f2.json");
  br.segment = "a,b";
  br.radius = 2;
  br.elements = {"a,b,a,b", "b^-1,a^-1"};
  const auto rb = run_command(br);
  CHECK(rb.verdicts_ok());
  CHECK(rb.results["elements"][0]["H"] == 2);
  CHECK(rb.results["elements"][1]["H"] == -1);

  const auto w = run_command(config("defect", "wedge3.json"));
  CHECK(w.results["value"] == -9);
  CHECK(w.verdicts_ok());

  auto st = config("defect", "staircase.json");
  st.radius = 3;
  const auto rs = run_command(st);
  REQUIRE(rs.results["series"].size() == 3);
  CHECK(rs.results["series"][2]["value_side_n"] == -3);

  auto budget = config("defect", "cycle4.json");
  budget.segment = "a,c";
  budget.budget = 10;
  const auto rb2 = run_command(budget);
  CHECK_FALSE(rb2.complete);
  CHECK_FALSE(rb2.error.empty());

  auto bad = config("brooks", "cycle4.json");
  bad.segment = "a";
  CHECK_THROWS_AS(run_command(bad), DomainError);
}

TEST_CASE("exit codes") {
  const std::string m = models.string() + "/";
  CHECK(run_cli("brooks --model " + m + "f2.json --segment a,b --radius 2") == 0);
  CHECK(run_cli("defect --model " + m + "wedge3.json") == 0);
  // The label hypothesis fails for s = (a,c), r = (b,d) on the 4-cycle.
  CHECK(run_cli("cup --model " + m + "cycle4.json --segment a,c --segment2 b,d") == 2);
  CHECK(run_cli("defect --model " + m + "cycle4.json --segment a,c --budget 5") == 1);
  CHECK(run_cli("defect --model " + m + "nope.json --segment a") == 1);
  CHECK(run_cli("defect --model " + m + "cycle4.json --segment a,b") == 1);
  CHECK(run_cli("") != 0);

  auto out = std::filesystem::temp_directory_path() / "mqm_test_out.json";
  std::filesystem::remove(out);
  REQUIRE(run_cli("staircase --model " + m + "staircase.json --radius 3 --out " +
                  out.string()) == 0);
  std::ifstream in(out);
  const json j = json::parse(in);
  CHECK(j["results"]["length"] == 3);
}
